#pragma once

#include <cmath>

namespace ricefn {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
/// when an addend is larger in magnitude than the running sum, which is the
/// common case when alternating terms cancel.
template <typename Value>
class CompensatedSum {
public:
    CompensatedSum& operator+=(Value value) {
        const Value t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    Value value() const { return sum_ + compensation_; }

private:
    Value sum_{0};
    Value compensation_{0};
};

}  // namespace ricefn
