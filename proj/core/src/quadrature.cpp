#include "ricefn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ricefn/compensated_sum.hpp"
#include "ricefn/errors.hpp"

namespace ricefn {

namespace gauss_kronrod {

// QUADPACK qk15 tables.
const double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};

const double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

const double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

}  // namespace gauss_kronrod

namespace {

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    bool splittable;
};

double checked(const Integrand& f, double t) {
    const double v = f(t);
    if (!std::isfinite(v)) {
        throw DomainError("integrand is not finite at t = " + std::to_string(t));
    }
    return v;
}

Panel apply_rule(const Integrand& f, double lo, double hi) {
    using namespace gauss_kronrod;
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = checked(f, centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double pair = checked(f, centre - dx) + checked(f, centre + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;

    // Bisection is pointless once the midpoint no longer separates the ends.
    const bool splittable = centre > lo && centre < hi && half > 0.0;
    return {lo, hi, kronrod, std::abs(kronrod - gauss), splittable};
}

struct Totals {
    double value;
    double error;
};

Totals sum_panels(const std::vector<Panel>& panels) {
    CompensatedSum<double> value;
    double error = 0.0;
    for (const auto& p : panels) {
        value += p.value;
        error += p.error;
    }
    return {value.value(), error};
}

}  // namespace

EvalResult integrate_adaptive(const Integrand& f, std::span<const double> breakpoints,
                              const QuadratureSpec& spec) {
    if (breakpoints.size() < 2) throw DomainError("integrate_adaptive needs at least two breakpoints");
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions <= 0) {
        throw DomainError("quadrature tolerances and max_subdivisions must be positive");
    }

    std::vector<Panel> panels;
    std::int64_t evaluations = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double lo = breakpoints[i];
        const double hi = breakpoints[i + 1];
        if (!(lo <= hi)) throw DomainError("integrate_adaptive requires lo <= hi");
        if (lo == hi) continue;
        panels.push_back(apply_rule(f, lo, hi));
        evaluations += 15;
    }
    if (panels.empty()) return {0.0, 0.0, 0};

    const auto by_error = [](const Panel& a, const Panel& b) {
        // Unsplittable panels sink to the bottom of the heap.
        if (a.splittable != b.splittable) return !a.splittable;
        return a.error < b.error;
    };
    std::make_heap(panels.begin(), panels.end(), by_error);

    Totals totals = sum_panels(panels);
    const auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(totals.value)); };

    while (totals.error > tolerance()) {
        if (static_cast<int>(panels.size()) >= spec.max_subdivisions || !panels.front().splittable) {
            throw ConvergenceError("adaptive quadrature did not reach tolerance after " +
                                       std::to_string(panels.size()) + " subintervals",
                                   {totals.value, totals.error, evaluations});
        }
        std::pop_heap(panels.begin(), panels.end(), by_error);
        const Panel worst = panels.back();
        panels.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        panels.push_back(apply_rule(f, worst.lo, mid));
        std::push_heap(panels.begin(), panels.end(), by_error);
        panels.push_back(apply_rule(f, mid, worst.hi));
        std::push_heap(panels.begin(), panels.end(), by_error);
        evaluations += 30;
        totals = sum_panels(panels);
    }
    return {totals.value, totals.error, evaluations};
}

EvalResult integrate_adaptive(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
    const double ends[2] = {lo, hi};
    return integrate_adaptive(f, std::span<const double>(ends), spec);
}

}  // namespace ricefn
