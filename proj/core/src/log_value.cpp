#include "ricefn/log_value.hpp"

#include <cmath>
#include <utility>

namespace ricefn {

LogValue LogValue::from_log(double ln_magnitude, int sign) {
    if (sign == 0 || ln_magnitude == -std::numeric_limits<double>::infinity()) return zero();
    return {ln_magnitude, sign > 0 ? 1 : -1};
}

LogValue LogValue::from_value(double value) {
    if (value == 0.0) return zero();
    return {std::log(std::abs(value)), value > 0 ? 1 : -1};
}

double LogValue::materialize() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(ln_magnitude);
}

LogValue& LogValue::operator*=(const LogValue& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = zero();
    ln_magnitude += rhs.ln_magnitude;
    sign *= rhs.sign;
    return *this;
}

LogValue& LogValue::operator/=(const LogValue& rhs) {
    if (rhs.is_zero()) {
        ln_magnitude = std::numeric_limits<double>::infinity();
        return *this;
    }
    if (is_zero()) return *this;
    ln_magnitude -= rhs.ln_magnitude;
    sign *= rhs.sign;
    return *this;
}

LogValue& LogValue::operator+=(const LogValue& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    LogValue big = *this;
    LogValue small = rhs;
    if (small.ln_magnitude > big.ln_magnitude) std::swap(big, small);
    const double ratio = std::exp(small.ln_magnitude - big.ln_magnitude);
    if (big.sign == small.sign) {
        big.ln_magnitude += std::log1p(ratio);
    } else {
        if (ratio == 1.0) return *this = zero();
        big.ln_magnitude += std::log1p(-ratio);
    }
    return *this = big;
}

}  // namespace ricefn
