#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ricefn/compensated_sum.hpp"
#include "ricefn/errors.hpp"
#include "ricefn/special.hpp"

namespace ricefn {
namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();
constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kSqrtPi = 1.77245385090551602729816748334114518L;

// Above this argument the Hankel expansion is tried first.
constexpr long double kAsymptoticThreshold = 25.0L;

long double scaled_series(long double nu, long double x) {
    const long double q = 0.25L * x * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 1'000'000; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (term < sum * kEps) break;
    }
    const long double ln_prefactor = nu * std::log(0.5L * x) - x - ext::ln_gamma(nu + 1.0L);
    return std::exp(ln_prefactor + std::log(sum));
}

// e^-x I_nu(x) ~ (2 pi x)^(-1/2) sum_k (-1)^k a_k(nu) / x^k. Returns false
// when the terms start growing before reaching working precision.
bool scaled_hankel(long double nu, long double x, long double& out) {
    const long double mu = 4.0L * nu * nu;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double previous = std::numeric_limits<long double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        term *= -(mu - odd * odd) / (8.0L * k * x);
        const long double magnitude = std::abs(term);
        if (magnitude == 0.0L) break;  // half-odd order: the expansion terminates
        if (magnitude > previous) return false;
        sum += term;
        if (k >= 10 && magnitude < kEps * std::abs(sum)) break;
        previous = magnitude;
    }
    out = sum / std::sqrt(2.0L * kPi * x);
    return true;
}

void check_bessel_args(double nu, double x) {
    if (!(nu >= 0.0)) throw DomainError("modified Bessel order must be >= 0");
    if (!(x >= 0.0)) throw DomainError("modified Bessel argument requires x >= 0");
}

}  // namespace

namespace ext {

long double bessel_i_scaled(long double nu, long double x) {
    if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
    if (x > kAsymptoticThreshold && nu * nu < 0.5L * x) {
        long double value;
        if (scaled_hankel(nu, x, value)) return value;
    }
    return scaled_series(nu, x);
}

}  // namespace ext

double bessel_i_scaled_real(double nu, double x) {
    check_bessel_args(nu, x);
    return static_cast<double>(ext::bessel_i_scaled(nu, x));
}

double bessel_i_scaled(int order, double x) {
    if (order < 0) throw DomainError("bessel_i_scaled requires order >= 0");
    return bessel_i_scaled_real(order, x);
}

double bessel_i_gross(int n, double x, int terms) {
    if (n < 0) throw DomainError("bessel_i_gross requires n >= 0");
    if (terms < 1) throw DomainError("bessel_i_gross requires L >= 1");
    if (!(x >= 0.0)) throw DomainError("bessel_i_gross requires x >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;

    const long double big_l = terms;
    const long double ln_half_x = std::log(0.5L * static_cast<long double>(x));
    const long double ln_l = std::log(big_l);
    std::vector<long double> ln_terms;
    ln_terms.reserve(terms + 1);
    long double peak = -std::numeric_limits<long double>::infinity();
    for (int l = 0; l <= terms; ++l) {
        const long double ln_term = ext::ln_gamma(big_l + l) + (1.0L - 2.0L * l) * ln_l -
                                    ext::ln_gamma(l + 1.0L) - ext::ln_gamma(big_l - l + 1.0L) -
                                    ext::ln_gamma(n + l + 1.0L) + (n + 2.0L * l) * ln_half_x;
        ln_terms.push_back(ln_term);
        peak = std::max(peak, ln_term);
    }
    long double scaled = 0.0L;
    for (const long double t : ln_terms) scaled += std::exp(t - peak);
    const double value = static_cast<double>(std::exp(peak + std::log(scaled)));
    if (!std::isfinite(value)) {
        throw OverflowError("bessel_i_gross: result exceeds double range at x = " + std::to_string(x));
    }
    return value;
}

EvalResult bessel_i_half(double half_order, double x) {
    const double doubled = 2.0 * half_order;
    if (!(half_order >= 0.5) || doubled != std::floor(doubled) ||
        static_cast<long long>(doubled) % 2 == 0) {
        throw DomainError("bessel_i_half requires a half-odd order >= 1/2");
    }
    if (!(x > 0.0)) throw DomainError("bessel_i_half requires x > 0");

    const int n = static_cast<int>(half_order - 0.5);
    const long double lx = x;
    // Everything below is e^-x times the closed form.
    const long double decay = std::exp(-2.0L * lx);
    const long double one_minus_decay = -std::expm1(-2.0L * lx);
    CompensatedSum<long double> sum;
    long double magnitude = 0.0L;
    long double coefficient = 1.0L;  // (n+k)! / (k! (n-k)!)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) coefficient *= static_cast<long double>(n + k) * (n - k + 1) / k;
        // (-1)^k + (-1)^(n+1) e^-2x, with 1 - e^-2x taken from expm1.
        const long double first = (k % 2 == 0) ? 1.0L : -1.0L;
        const bool same_sign = (k % 2) == ((n + 1) % 2);
        const long double bracket = same_sign ? first * (1.0L + decay) : first * one_minus_decay;
        const long double scale = coefficient / (kSqrtPi * std::pow(2.0L * lx, k + 0.5L));
        sum += scale * bracket;
        magnitude += scale * (1.0L + decay);
    }
    const long double scaled = sum.value();
    const double value = static_cast<double>(std::exp(lx) * scaled);
    if (!std::isfinite(value)) {
        throw OverflowError("bessel_i_half: result exceeds double range at x = " + std::to_string(x));
    }
    const double error = static_cast<double>(std::exp(lx) * magnitude * kEps * (n + 2)) +
                         std::abs(value) * std::numeric_limits<double>::epsilon();
    return {value, error, n + 1};
}

}  // namespace ricefn
