#pragma once

#include <stdexcept>
#include <string>

#include "ricefn/eval_result.hpp"

namespace ricefn {

/// Thrown when an argument violates a function's mathematical domain.
/// The message names the violated precondition.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an iterative algorithm exhausts its budget before meeting its
/// tolerance. Carries the best result reached so callers can still inspect it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, EvalResult best)
        : std::runtime_error(what), best_(best) {}

    const EvalResult& best() const noexcept { return best_; }

private:
    EvalResult best_;
};

/// Thrown when a final result is outside the representable double range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace ricefn
