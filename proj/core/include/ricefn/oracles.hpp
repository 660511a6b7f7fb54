#pragma once

#include "ricefn/eval_result.hpp"
#include "ricefn/quadrature.hpp"

namespace ricefn {

// Direct quadrature of the defining integrals. Every integrand is written in
// exponentially scaled form so nothing overflows for arguments in the
// hundreds. These are the reference values the series and closed forms are
// tested against.

/// Ie(k, x) = int_0^x e^-t I_0(k t) dt, 0 <= k <= 1, x >= 0.
EvalResult rice_ie_quad(double k, double x, const QuadratureSpec& spec = {});

/// Ie(k, x) = 1/sqrt(1-k^2) - (1/pi) int_0^pi e^(-x(1 - k cos t)) / (1 - k cos t) dt,
/// 0 <= k < 1. Note the k inside the exponent; without it the identity fails
/// for every k > 0.
EvalResult rice_ie_quad_alt(double k, double x, const QuadratureSpec& spec = {});

/// First-order Marcum Q, int_b^inf t e^(-(t^2+a^2)/2) I_0(a t) dt.
/// The upper limit is cut at max(a, b) + 40; the Gaussian tail bound beyond
/// it is folded into the error estimate.
EvalResult marcum_q1_quad(double a, double b, const QuadratureSpec& spec = {});

/// int_0^z t^m e^(-a t) I_n(t) dt for z >= 0, n >= 0, m + n > -1.
EvalResult ilhi_quad(double m, double n, double a, double z, const QuadratureSpec& spec = {});

}  // namespace ricefn
