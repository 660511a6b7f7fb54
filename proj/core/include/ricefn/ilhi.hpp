#pragma once

#include "ricefn/eval_result.hpp"
#include "ricefn/rice_ie.hpp"

namespace ricefn {

/// A point of the incomplete Lipschitz-Hankel integral of the first-kind
/// modified Bessel function, Ie_{m,n}(a, z) = int_0^z t^m e^(-a t) I_n(t) dt.
///
/// Always z >= 0, n >= 0 and m + n > -1. The series routes need a > 1; the
/// half-odd closed form also needs n + 1/2 to be a positive integer and
/// m - n + 1 > 0 so that every incomplete gamma argument is positive.
struct IlhiParams {
    double m = 0.0;
    double n = 0.0;
    double a = 0.0;
    double z = 0.0;
};

/// Closed form for half-odd n:
///   sum_{k=0}^{n-1/2} (n+k-1/2)! / (sqrt(pi) k! (n-k-1/2)! 2^(k+1/2))
///     * [(-1)^k gamma(A, (a-1)z) / (a-1)^A + (-1)^(n+1/2) gamma(A, (a+1)z) / (a+1)^A],
/// with A = m - k + 1/2. Evaluated in extended precision with compensated
/// summation; for small z the two channels cancel and the error estimate
/// grows accordingly.
EvalResult ilhi_closed_half(const IlhiParams& p);

/// Gross-weighted polynomial with terms l = 0..L:
///   sum Gamma(L+l) L^(1-2l) gamma(m+n+2l+1, az) / (l! (L-l)! Gamma(n+l+1) 2^(n+2l) a^(m+n+2l+1)).
EvalResult ilhi_poly(const IlhiParams& p, int terms);

/// Exact series sum_l gamma(m+n+2l+1, az) / (l! Gamma(n+l+1) 2^(n+2l) a^(m+n+2l+1)),
/// stopped after three consecutive terms below rel_tol times the partial sum.
EvalResult ilhi_series(const IlhiParams& p, double rel_tol = 1e-15);

/// The exact series cut after term l = L.
EvalResult ilhi_series_partial(const IlhiParams& p, int terms);

/// The closed form evaluated at the largest half-odd order not above n,
/// floor(n - 1/2) + 1/2. Since Ie_{m,n} decreases in n this bounds
/// Ie_{m,n}(a, z) from above. Needs n >= 1/2.
double ilhi_upper_bound(const IlhiParams& p);

/// ilhi_upper_bound minus the L-term truncation (Gross polynomial or plain
/// partial sum); an upper bound on the signed truncation error.
double ilhi_truncation_bound(const IlhiParams& p, int terms, TruncationVariant variant);

/// floor(n - 1/2) + 1/2.
double ilhi_substituted_order(double n);

}  // namespace ricefn
