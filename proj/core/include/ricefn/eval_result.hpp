#pragma once

#include <cstdint>

namespace ricefn {

/// A computed quantity together with the producing algorithm's own estimate
/// of its absolute error and the work spent (terms summed or integrand calls).
struct EvalResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t work = 0;
};

}  // namespace ricefn
