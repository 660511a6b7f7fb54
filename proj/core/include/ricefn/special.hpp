#pragma once

#include <cstdint>

#include "ricefn/eval_result.hpp"
#include "ricefn/log_value.hpp"

namespace ricefn {

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Lower incomplete gamma function gamma(a, x) = int_0^x t^(a-1) e^-t dt.
/// Series for x < a + 1, modified-Lentz continued fraction otherwise.
EvalResult lower_incomplete_gamma(double a, double x);

/// Same as lower_incomplete_gamma, returned in log form so that values far
/// outside the double range (a ~ 1400) stay usable.
LogValue lower_incomplete_gamma_log(double a, double x);

double erf(double x);

/// e^-x I_order(x).
double bessel_i_scaled(int order, double x);

/// e^-x I_nu(x) for real nu >= 0. Ascending series, or the Hankel expansion
/// once x > 25 and the order is small enough for it to converge.
double bessel_i_scaled_real(double nu, double x);

/// Gross-weighted truncation of the I_n ascending series:
///   sum_{l=0}^{L} Gamma(L+l) L^(1-2l) / (l! Gamma(L-l+1) Gamma(n+l+1)) (x/2)^(n+2l)
/// It is not e^-x scaled. Throws OverflowError if the sum itself overflows.
double bessel_i_gross(int n, double x, int terms);

/// I_nu(x) for half-odd nu from the elementary closed form
///   sum_{k=0}^{n} (n+k)! [(-1)^k e^x + (-1)^(n+1) e^-x] / (sqrt(pi) k! (n-k)! (2x)^(k+1/2)),
/// with n = nu - 1/2. The error estimate reflects cancellation between the
/// exponential branches, which is severe for small x and large n.
EvalResult bessel_i_half(double half_order, double x);

/// Extended-precision kernels shared by the composite routines. These do no
/// argument checking beyond what the public wrappers above do.
namespace ext {

long double ln_gamma(long double x);

/// ln gamma(a, x); -inf when x == 0. Adds the number of terms or continued
/// fraction steps to *work when work is non-null.
long double lower_gamma_log(long double a, long double x, std::int64_t* work = nullptr);

/// e^-x I_nu(x).
long double bessel_i_scaled(long double nu, long double x);

}  // namespace ext

}  // namespace ricefn
