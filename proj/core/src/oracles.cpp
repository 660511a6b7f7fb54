#include "ricefn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ricefn/errors.hpp"
#include "ricefn/special.hpp"

namespace ricefn {
namespace {

// Breakpoints lo, lo + width, ..., hi.
std::vector<double> panels(double lo, double hi, double width) {
    const int count = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    std::vector<double> points(count + 1);
    for (int i = 0; i <= count; ++i) points[i] = lo + (hi - lo) * i / count;
    points.back() = hi;
    return points;
}

}  // namespace

EvalResult rice_ie_quad(double k, double x, const QuadratureSpec& spec) {
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("rice_ie_quad requires 0 <= k <= 1");
    if (!(x >= 0.0)) throw DomainError("rice_ie_quad requires x >= 0");
    if (x == 0.0) return {0.0, 0.0, 0};
    const auto integrand = [k](double t) {
        return std::exp(-t * (1.0 - k)) * bessel_i_scaled_real(0.0, k * t);
    };
    const auto points = panels(0.0, x, 5.0);
    return integrate_adaptive(integrand, points, spec);
}

EvalResult rice_ie_quad_alt(double k, double x, const QuadratureSpec& spec) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("rice_ie_quad_alt requires 0 <= k < 1");
    if (!(x >= 0.0)) throw DomainError("rice_ie_quad_alt requires x >= 0");
    const auto integrand = [k, x](double theta) {
        // 1 - k cos t = (1 - k) + 2k sin^2(t/2) avoids cancellation near t = 0.
        const double s = std::sin(0.5 * theta);
        const double denominator = (1.0 - k) + 2.0 * k * s * s;
        return std::exp(-x * denominator) / denominator;
    };
    const double pi = std::numbers::pi;
    const double points[] = {0.0, pi / 16, pi / 8, pi / 4, pi / 2, pi};
    const EvalResult integral = integrate_adaptive(integrand, points, spec);
    const double prefactor = 1.0 / std::sqrt((1.0 - k) * (1.0 + k));
    return {prefactor - integral.value / pi, integral.error_estimate / pi, integral.work};
}

EvalResult marcum_q1_quad(double a, double b, const QuadratureSpec& spec) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw DomainError("marcum_q1_quad requires a, b >= 0");
    // t e^(-(t^2+a^2)/2) I_0(a t) = t e^(-(t-a)^2/2) [e^(-a t) I_0(a t)].
    const auto integrand = [a](double t) {
        const double d = t - a;
        return t * std::exp(-0.5 * d * d) * bessel_i_scaled_real(0.0, a * t);
    };
    const double upper = std::max(a, b) + 40.0;
    std::vector<double> points{b};
    for (const double p : {a - 10.0, a - 3.0, a, a + 3.0, a + 10.0}) {
        if (p > b && p < upper) points.push_back(p);
    }
    points.push_back(upper);
    EvalResult result = integrate_adaptive(integrand, points, spec);

    // For t > upper the scaled Bessel factor is <= 1, so the tail is at most
    // int_upper^inf t e^(-(t-a)^2/2) dt = e^(-d^2/2) + a sqrt(pi/2) erfc(d/sqrt 2),
    // and erfc(d/sqrt 2) <= e^(-d^2/2).
    const double d = upper - a;
    const double tail = std::exp(-0.5 * d * d) * (1.0 + a * std::sqrt(std::numbers::pi / 2));
    result.error_estimate += tail;
    return result;
}

EvalResult ilhi_quad(double m, double n, double a, double z, const QuadratureSpec& spec) {
    if (!(z >= 0.0)) throw DomainError("ilhi_quad requires z >= 0");
    if (!(n >= 0.0)) throw DomainError("ilhi_quad requires n >= 0");
    if (!(m + n > -1.0)) throw DomainError("ilhi_quad requires m + n > -1");
    if (z == 0.0) return {0.0, 0.0, 0};
    const auto integrand = [m, n, a](double t) {
        return std::pow(t, m) * std::exp(-(a - 1.0) * t) * bessel_i_scaled_real(n, t);
    };
    const auto points = panels(0.0, z, 2.0);
    return integrate_adaptive(integrand, points, spec);
}

}  // namespace ricefn
