#pragma once

#include <functional>

#include "ricefn/eval_result.hpp"

namespace ricefn {

/// A point (k, x) of the Rice Ie-function Ie(k, x) = int_0^x e^-t I_0(k t) dt.
/// Valid when 0 <= k <= 1 and x >= 0; routes carrying a 1/sqrt(1 - k^2)
/// factor additionally need k < 1.
struct IeParams {
    double k = 0.0;
    double x = 0.0;
};

/// Arguments of the Marcum Q-function equivalent to an Ie point:
/// a = sqrt(x) sqrt(1 + sqrt(1-k^2)), b = sqrt(x) sqrt(1 - sqrt(1-k^2)).
/// a >= b >= 0, a b = k x, a^2 + b^2 = 2x.
struct MarcumArgs {
    double a = 0.0;
    double b = 0.0;
};

/// Which truncated sum a truncation bound subtracts: the Gross-weighted
/// polynomial, or the plain partial sum of the exact series.
enum class TruncationVariant { gross, plain };

enum class MarcumRoute {
    two_q,         ///< [2 Q(a,b) - e^-x I_0(kx) - 1] / sqrt(1-k^2)
    q_difference,  ///< [Q(a,b) - Q(b,a)] / sqrt(1-k^2)
};

/// Any Q_1(a, b) evaluator; must be free of side effects.
using MarcumEvaluator = std::function<EvalResult(double a, double b)>;

MarcumArgs ie_marcum_args(const IeParams& p);

/// Gross-weighted polynomial approximation with terms l = 0..L:
///   sum Gamma(L+l) L^(1-2l) k^(2l) gamma(1+2l, x) / (l! Gamma(L-l+1) Gamma(l+1) 4^l).
EvalResult ie_poly(const IeParams& p, int terms);

/// Exact series sum_l k^(2l) gamma(1+2l, x) / ((l!)^2 4^l). Stops once three
/// consecutive terms fall below rel_tol times the partial sum.
EvalResult ie_series(const IeParams& p, double rel_tol = 1e-15);

/// The exact series cut after term l = L.
EvalResult ie_series_partial(const IeParams& p, int terms);

/// Closed-form upper bound on Ie(k, x) built from erf; k < 1.
double ie_upper_bound(const IeParams& p);

/// Upper bound on the signed truncation error Ie(k, x) - S_L, where S_L is
/// ie_poly (gross) or ie_series_partial (plain). k < 1.
double ie_truncation_bound(const IeParams& p, int terms,
                           TruncationVariant variant = TruncationVariant::gross);

/// Ie(k, x) through one of the two Marcum-Q identities; k < 1.
EvalResult ie_from_marcum(const IeParams& p, MarcumRoute route, const MarcumEvaluator& marcum);

}  // namespace ricefn
