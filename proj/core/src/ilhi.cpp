#include "ricefn/ilhi.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "ricefn/compensated_sum.hpp"
#include "ricefn/errors.hpp"
#include "ricefn/special.hpp"

namespace ricefn {
namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();
constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();
constexpr long double kSqrtPi = 1.77245385090551602729816748334114518L;
constexpr long long kMaxSeriesTerms = 1'000'000;

// Below this (a - 1) z the (a - 1) channel of the closed form switches to its
// ascending series.
constexpr long double kSmallChannelArgument = 1e-6L;

std::string describe(const IlhiParams& p) {
    std::ostringstream out;
    out << "(m = " << p.m << ", n = " << p.n << ", a = " << p.a << ", z = " << p.z << ")";
    return out.str();
}

void check_base(const IlhiParams& p) {
    if (!(p.z >= 0.0)) throw DomainError("Ie_{m,n}(a, z) requires z ≥ 0, got " + describe(p));
    if (!(p.n >= 0.0)) throw DomainError("Ie_{m,n}(a, z) requires n ≥ 0, got " + describe(p));
    if (!(p.m + p.n > -1.0)) {
        throw DomainError("Ie_{m,n}(a, z) requires m + n > -1, got " + describe(p));
    }
    if (!std::isfinite(p.a)) throw DomainError("Ie_{m,n}(a, z) requires finite a, got " + describe(p));
}

void check_series(const IlhiParams& p) {
    check_base(p);
    if (!(p.a > 1.0)) {
        throw DomainError("Ie_{m,n}(a, z) series and closed forms require a > 1, got " + describe(p));
    }
}

bool is_half_odd(double n) {
    const double doubled = 2.0 * n;
    return n >= 0.5 && doubled == std::floor(doubled) && std::fmod(doubled, 2.0) == 1.0;
}

// int_0^z t^(A-1) e^(-beta t) dt = gamma(A, beta z) / beta^A.
long double gamma_channel(long double shape, long double beta, long double z, std::int64_t& work) {
    const long double u = beta * z;
    if (u < kSmallChannelArgument) {
        // gamma(A, u) / u^A = sum_j (-u)^j / (j! (A + j)).
        long double sum = 0.0L;
        long double power = 1.0L;
        for (int j = 0; j < 10; ++j) {
            sum += power / (shape + j);
            power *= -u / (j + 1);
        }
        work += 10;
        return std::exp(shape * std::log(z)) * sum;
    }
    return std::exp(ext::lower_gamma_log(shape, u, &work) - shape * std::log(beta));
}

// Sums exp(ln_coefficient_l + ln gamma(m + n + 2l + 1, a z)).
class TermSum {
public:
    TermSum(const IlhiParams& p) : shape0_(static_cast<long double>(p.m) + p.n + 1.0L),
                                   az_(static_cast<long double>(p.a) * p.z) {}

    long double add(int l, long double ln_coefficient) {
        const long double ln_term =
            ln_coefficient + ext::lower_gamma_log(shape0_ + 2.0L * l, az_, &work_);
        const long double term = std::exp(ln_term);
        sum_ += term;
        error_ += term * kEps * (16.0L + 4.0L * l + std::abs(ln_term));
        return term;
    }

    EvalResult result(std::int64_t terms) const {
        const double value = static_cast<double>(sum_.value());
        if (!std::isfinite(value)) throw OverflowError("Ie_{m,n}(a, z) sum exceeds double range");
        return {value, static_cast<double>(error_) + std::abs(value) * kDoubleEps, terms};
    }

private:
    long double shape0_;
    long double az_;
    CompensatedSum<long double> sum_;
    long double error_ = 0.0L;
    std::int64_t work_ = 0;
};

// ln of 1 / (Gamma(n+1) 2^n a^(m+n+1)), the l = 0 coefficient shared by both
// series (the Gross factor is 1 at l = 0).
long double ln_first_coefficient(const IlhiParams& p) {
    const long double n = p.n;
    return -ext::ln_gamma(n + 1.0L) - n * std::log(2.0L) -
           (static_cast<long double>(p.m) + n + 1.0L) * std::log(static_cast<long double>(p.a));
}

long double plain_step(const IlhiParams& p, int l) {
    return -std::log(static_cast<long double>(l)) - std::log(static_cast<long double>(p.n) + l) -
           2.0L * std::log(2.0L) - 2.0L * std::log(static_cast<long double>(p.a));
}

}  // namespace

double ilhi_substituted_order(double n) { return std::floor(n - 0.5) + 0.5; }

EvalResult ilhi_closed_half(const IlhiParams& p) {
    check_series(p);
    if (!is_half_odd(p.n)) {
        throw DomainError("ilhi_closed_half requires n + 1/2 to be a positive integer, got " + describe(p));
    }
    const int order = static_cast<int>(p.n - 0.5);
    for (int k = 0; k <= order; ++k) {
        if (!(p.m - k + 0.5 > 0.0)) {
            throw DomainError("ilhi_closed_half requires A = m - k + 1/2 > 0, violated at k = " +
                              std::to_string(k) + " for " + describe(p));
        }
    }
    if (p.z == 0.0) return {0.0, 0.0, order + 1};

    const long double a = p.a;
    const long double z = p.z;
    const long double second_sign = (order % 2 == 0) ? -1.0L : 1.0L;  // (-1)^(n + 1/2)
    CompensatedSum<long double> sum;
    long double magnitude = 0.0L;
    std::int64_t work = 0;
    long double binomial = 1.0L;  // (N+k)! / (k! (N-k)!)
    for (int k = 0; k <= order; ++k) {
        if (k > 0) binomial *= static_cast<long double>(order + k) * (order - k + 1) / k;
        const long double coefficient = binomial / (kSqrtPi * std::exp2(k + 0.5L));
        const long double shape = static_cast<long double>(p.m) - k + 0.5L;
        const long double lower = gamma_channel(shape, a - 1.0L, z, work);
        const long double upper = gamma_channel(shape, a + 1.0L, z, work);
        const long double first_sign = (k % 2 == 0) ? 1.0L : -1.0L;
        sum += coefficient * first_sign * lower;
        sum += coefficient * second_sign * upper;
        magnitude += coefficient * (lower + upper);
    }
    const double value = static_cast<double>(sum.value());
    if (!std::isfinite(value)) throw OverflowError("ilhi_closed_half exceeds double range at " + describe(p));
    const double error = static_cast<double>(magnitude * kEps * 64.0L) + std::abs(value) * kDoubleEps;
    return {value, error, order + 1};
}

EvalResult ilhi_poly(const IlhiParams& p, int terms) {
    check_series(p);
    if (terms < 1) throw DomainError("number of terms L must be >= 1");
    if (p.z == 0.0) return {0.0, 0.0, terms + 1};

    const long double big_l = terms;
    const long double ln_big_l = std::log(big_l);
    TermSum sum(p);
    long double ln_coefficient = ln_first_coefficient(p);
    for (int l = 0; l <= terms; ++l) {
        if (l > 0) {
            ln_coefficient += std::log(big_l + l - 1.0L) + std::log(big_l - l + 1.0L) -
                              2.0L * ln_big_l + plain_step(p, l);
        }
        sum.add(l, ln_coefficient);
    }
    return sum.result(terms + 1);
}

EvalResult ilhi_series_partial(const IlhiParams& p, int terms) {
    check_series(p);
    if (terms < 0) throw DomainError("number of terms L must be >= 0");
    if (p.z == 0.0) return {0.0, 0.0, terms + 1};
    TermSum sum(p);
    long double ln_coefficient = ln_first_coefficient(p);
    for (int l = 0; l <= terms; ++l) {
        if (l > 0) ln_coefficient += plain_step(p, l);
        sum.add(l, ln_coefficient);
    }
    return sum.result(terms + 1);
}

EvalResult ilhi_series(const IlhiParams& p, double rel_tol) {
    check_series(p);
    if (!(rel_tol > 0.0)) throw DomainError("ilhi_series requires rel_tol > 0");
    if (p.z == 0.0) return {0.0, 0.0, 1};
    TermSum sum(p);
    long double ln_coefficient = ln_first_coefficient(p);
    long double partial = 0.0L;
    int small_run = 0;
    for (long long l = 0; l < kMaxSeriesTerms; ++l) {
        if (l > 0) ln_coefficient += plain_step(p, static_cast<int>(l));
        const long double term = sum.add(static_cast<int>(l), ln_coefficient);
        partial += term;
        small_run = (term < rel_tol * partial) ? small_run + 1 : 0;
        if (small_run == 3) return sum.result(l + 1);
    }
    throw ConvergenceError("ilhi_series did not converge within 10^6 terms at " + describe(p),
                           sum.result(kMaxSeriesTerms));
}

double ilhi_upper_bound(const IlhiParams& p) {
    check_series(p);
    if (!(p.n >= 0.5)) {
        throw DomainError("ilhi_upper_bound requires n ≥ 1/2 (no half-odd order lies below), got " +
                          describe(p));
    }
    IlhiParams substituted = p;
    substituted.n = ilhi_substituted_order(p.n);
    return ilhi_closed_half(substituted).value;
}

double ilhi_truncation_bound(const IlhiParams& p, int terms, TruncationVariant variant) {
    if (terms < 1) throw DomainError("number of terms L must be >= 1");
    const double bound = ilhi_upper_bound(p);
    const double truncated = variant == TruncationVariant::gross ? ilhi_poly(p, terms).value
                                                                 : ilhi_series_partial(p, terms).value;
    return bound - truncated;
}

}  // namespace ricefn
