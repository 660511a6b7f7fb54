#include <cmath>
#include <limits>

#include "ricefn/special.hpp"

namespace ricefn {
namespace {

constexpr long double kTwoOverSqrtPi = 1.12837916709551257389615890312154517L;

// erf(x) = 2x/sqrt(pi) e^(-x^2) sum_k (2x^2)^k / (1*3*...*(2k+1)).
// All terms are positive, so nothing cancels.
long double erf_series(long double x) {
    const long double two_x2 = 2.0L * x * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 500; ++k) {
        term *= two_x2 / (2.0L * k + 1.0L);
        sum += term;
        if (term < sum * std::numeric_limits<long double>::epsilon()) break;
    }
    return kTwoOverSqrtPi * x * std::exp(-x * x) * sum;
}

// 1 - erf(x) = Q(1/2, x^2), x > 0.
long double erfc_from_gamma(long double x) {
    const long double x2 = x * x;
    const long double ln_lower = ext::lower_gamma_log(0.5L, x2);
    const long double ln_complete = ext::ln_gamma(0.5L);
    return -std::expm1(ln_lower - ln_complete);
}

}  // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const long double ax = std::abs(static_cast<long double>(x));
    long double value;
    if (ax <= 2.5L) {
        value = erf_series(ax);
    } else if (ax < 30.0L) {
        value = 1.0L - erfc_from_gamma(ax);
    } else {
        value = 1.0L;
    }
    return static_cast<double>(x < 0 ? -value : value);
}

}  // namespace ricefn
