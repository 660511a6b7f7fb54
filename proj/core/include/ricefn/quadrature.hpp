#pragma once

#include <functional>
#include <span>

#include "ricefn/eval_result.hpp"

namespace ricefn {

struct QuadratureSpec {
    double abs_tol = 1e-14;
    double rel_tol = 1e-13;
    int max_subdivisions = 2000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7-point Gauss / 15-point Kronrod quadrature on [lo, hi].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate is at most max(abs_tol, rel_tol * |value|). The integrand is only
/// sampled at interior nodes, so integrable endpoint singularities are fine.
///
/// Throws ConvergenceError (carrying the best result) if max_subdivisions
/// intervals are in use and the tolerance is still not met, and DomainError
/// if lo > hi or the integrand returns a non-finite value.
EvalResult integrate_adaptive(const Integrand& f, double lo, double hi,
                              const QuadratureSpec& spec = {});

/// As above, starting from the panels given by consecutive breakpoints
/// (which must be non-decreasing). Useful when the integrand has a known
/// narrow feature the initial rule could step over.
EvalResult integrate_adaptive(const Integrand& f, std::span<const double> breakpoints,
                              const QuadratureSpec& spec = {});

namespace gauss_kronrod {

/// Non-negative abscissae of the 15-point Kronrod rule on [-1, 1], descending;
/// odd indices (1, 3, 5) are the 7-point Gauss nodes, the last entry is 0.
extern const double kNodes[8];
extern const double kKronrodWeights[8];
/// Gauss weights for nodes kNodes[1], kNodes[3], kNodes[5] and the centre.
extern const double kGaussWeights[4];

}  // namespace gauss_kronrod

}  // namespace ricefn
