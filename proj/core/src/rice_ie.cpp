#include "ricefn/rice_ie.hpp"

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
constexpr long long kMaxSeriesTerms = 1'000'000;

std::string describe(const IeParams& p) {
    std::ostringstream out;
    out << "(k = " << p.k << ", x = " << p.x << ")";
    return out.str();
}

void check_params(const IeParams& p, bool allow_unit_k) {
    if (!(p.k >= 0.0 && p.k <= 1.0)) {
        throw DomainError("Ie(k, x) requires 0 ≤ k ≤ 1, got " + describe(p));
    }
    if (!(p.x >= 0.0)) throw DomainError("Ie(k, x) requires x ≥ 0, got " + describe(p));
    if (!allow_unit_k && p.k == 1.0) {
        throw DomainError("this Ie(k, x) route requires k < 1 (1/sqrt(1-k^2) is singular), got " +
                          describe(p));
    }
}

void check_terms(int terms) {
    if (terms < 1) throw DomainError("number of terms L must be >= 1");
}

// Accumulates sum_l exp(ln_coefficient_l + ln gamma(1 + 2l, x)).
class TermSum {
public:
    explicit TermSum(long double x) : x_(x) {}

    long double add(int l, long double ln_coefficient) {
        const long double ln_gamma = ext::lower_gamma_log(1.0L + 2.0L * l, x_, &work_);
        const long double ln_term = ln_coefficient + ln_gamma;
        const long double term = std::exp(ln_term);
        sum_ += term;
        error_ += term * kEps * (16.0L + 4.0L * l + std::abs(ln_term));
        return term;
    }

    EvalResult result(std::int64_t terms) const {
        const long double total = sum_.value();
        const double value = static_cast<double>(total);
        return {value, static_cast<double>(error_) + std::abs(value) * kDoubleEps, terms};
    }

private:
    long double x_;
    CompensatedSum<long double> sum_;
    long double error_ = 0.0L;
    std::int64_t work_ = 0;
};

// ln of k^(2l) / ((l!)^2 4^l) from its value at l - 1.
long double plain_step(long double ln_k, int l) {
    return 2.0L * ln_k - 2.0L * std::log(static_cast<long double>(l)) - std::log(4.0L);
}

}  // namespace

MarcumArgs ie_marcum_args(const IeParams& p) {
    check_params(p, false);
    const double s = std::sqrt((1.0 - p.k) * (1.0 + p.k));
    const double root_x = std::sqrt(p.x);
    const double a = root_x * std::sqrt(1.0 + s);
    // 1 - s = k^2 / (1 + s), so b = k sqrt(x) / sqrt(1 + s) = k x / a without
    // the cancellation in 1 - s.
    const double b = p.k * root_x / std::sqrt(1.0 + s);
    return {a, b};
}

EvalResult ie_poly(const IeParams& p, int terms) {
    check_params(p, true);
    check_terms(terms);
    if (p.x == 0.0) return {0.0, 0.0, terms + 1};

    const long double big_l = terms;
    const long double ln_big_l = std::log(big_l);
    const long double ln_k = std::log(static_cast<long double>(p.k));
    TermSum sum(p.x);
    long double ln_coefficient = 0.0L;  // Gamma(L) L / Gamma(L + 1) = 1 at l = 0
    for (int l = 0; l <= terms; ++l) {
        if (l > 0) {
            if (p.k == 0.0) break;
            ln_coefficient += std::log(big_l + l - 1.0L) + std::log(big_l - l + 1.0L) -
                              2.0L * ln_big_l + plain_step(ln_k, l);
        }
        sum.add(l, ln_coefficient);
    }
    return sum.result(terms + 1);
}

EvalResult ie_series_partial(const IeParams& p, int terms) {
    check_params(p, true);
    if (terms < 0) throw DomainError("number of terms L must be >= 0");
    if (p.x == 0.0) return {0.0, 0.0, terms + 1};
    const long double ln_k = std::log(static_cast<long double>(p.k));
    TermSum sum(p.x);
    long double ln_coefficient = 0.0L;
    for (int l = 0; l <= terms; ++l) {
        if (l > 0) {
            if (p.k == 0.0) break;
            ln_coefficient += plain_step(ln_k, l);
        }
        sum.add(l, ln_coefficient);
    }
    return sum.result(terms + 1);
}

EvalResult ie_series(const IeParams& p, double rel_tol) {
    check_params(p, true);
    if (!(rel_tol > 0.0)) throw DomainError("ie_series requires rel_tol > 0");
    if (p.x == 0.0) return {0.0, 0.0, 1};

    TermSum sum(p.x);
    if (p.k == 0.0) {
        sum.add(0, 0.0L);
        return sum.result(1);
    }
    const long double ln_k = std::log(static_cast<long double>(p.k));
    long double ln_coefficient = 0.0L;
    long double partial = 0.0L;
    int small_run = 0;
    for (long long l = 0; l < kMaxSeriesTerms; ++l) {
        if (l > 0) ln_coefficient += plain_step(ln_k, static_cast<int>(l));
        const long double term = sum.add(static_cast<int>(l), ln_coefficient);
        partial += term;
        small_run = (term < rel_tol * partial) ? small_run + 1 : 0;
        if (small_run == 3) return sum.result(l + 1);
    }
    throw ConvergenceError("ie_series did not converge within 10^6 terms at " + describe(p),
                           sum.result(kMaxSeriesTerms));
}

double ie_upper_bound(const IeParams& p) {
    check_params(p, false);
    const long double k = p.k;
    const long double x = p.x;
    // 1 - e^-x I_0(kx) = 1 - e^(-x(1-k)) s, with s = e^-kx I_0(kx) <= 1.
    const long double s = ext::bessel_i_scaled(0.0L, k * x);
    const long double decay = std::exp(-x * (1.0L - k));
    const long double one_minus = -std::expm1(-x * (1.0L - k)) + decay * (1.0L - s);

    const double c = std::sqrt(1.0 - p.k);
    const double d = std::sqrt(1.0 + p.k);
    const double root_x = std::sqrt(p.x);
    const double bracket = erf(root_x * c) / c - erf(root_x * d) / d;
    return static_cast<double>(one_minus) + std::sqrt(0.5 * p.k) * bracket;
}

double ie_truncation_bound(const IeParams& p, int terms, TruncationVariant variant) {
    check_params(p, false);
    check_terms(terms);
    const double truncated = variant == TruncationVariant::gross ? ie_poly(p, terms).value
                                                                 : ie_series_partial(p, terms).value;
    return ie_upper_bound(p) - truncated;
}

EvalResult ie_from_marcum(const IeParams& p, MarcumRoute route, const MarcumEvaluator& marcum) {
    check_params(p, false);
    if (!marcum) throw DomainError("ie_from_marcum needs a Marcum Q evaluator");
    const MarcumArgs args = ie_marcum_args(p);
    const double scale = 1.0 / std::sqrt((1.0 - p.k) * (1.0 + p.k));
    const EvalResult q_ab = marcum(args.a, args.b);

    if (route == MarcumRoute::two_q) {
        const long double e_i0 = std::exp(-static_cast<long double>(p.x) * (1.0L - p.k)) *
                                 ext::bessel_i_scaled(0.0L, static_cast<long double>(p.k) * p.x);
        const long double inner = 2.0L * q_ab.value - e_i0 - 1.0L;
        const double value = static_cast<double>(inner) * scale;
        const double error = scale * (2.0 * q_ab.error_estimate + 4.0 * kDoubleEps);
        return {value, error, q_ab.work + 1};
    }
    const EvalResult q_ba = marcum(args.b, args.a);
    const double value = (q_ab.value - q_ba.value) * scale;
    const double error = scale * (q_ab.error_estimate + q_ba.error_estimate + 2.0 * kDoubleEps);
    return {value, error, q_ab.work + q_ba.work};
}

}  // namespace ricefn
