#pragma once

#include <limits>

namespace ricefn {

/// A real number stored as (ln|v|, sign). Used wherever intermediate
/// magnitudes such as Gamma(L + l) at L = 700 leave the double range.
///
/// sign == 0 encodes an exact zero; ln_magnitude is then ignored.
struct LogValue {
    double ln_magnitude = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogValue zero() { return {}; }
    static LogValue from_log(double ln_magnitude, int sign = 1);
    static LogValue from_value(double value);

    bool is_zero() const { return sign == 0; }

    /// exp(ln_magnitude) with the sign applied; may round to 0 or +-inf.
    double materialize() const;

    LogValue operator-() const { return {ln_magnitude, -sign}; }
    LogValue& operator*=(const LogValue& rhs);
    LogValue& operator/=(const LogValue& rhs);
    LogValue& operator+=(const LogValue& rhs);
    LogValue& operator-=(const LogValue& rhs) { return *this += -rhs; }
};

inline LogValue operator*(LogValue lhs, const LogValue& rhs) { return lhs *= rhs; }
inline LogValue operator/(LogValue lhs, const LogValue& rhs) { return lhs /= rhs; }
inline LogValue operator+(LogValue lhs, const LogValue& rhs) { return lhs += rhs; }
inline LogValue operator-(LogValue lhs, const LogValue& rhs) { return lhs -= rhs; }

}  // namespace ricefn
