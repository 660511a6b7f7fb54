#pragma once

#include <map>
#include <string>
#include <vector>

#include "ricefn/eval_result.hpp"
#include "ricefn/quadrature.hpp"

namespace ricefn::cli {

enum class Function { rice_ie, ilhi };

/// "rice-ie"/"rice_ie" or "ilhi"; throws std::invalid_argument otherwise.
Function parse_function(const std::string& name);
std::string function_name(Function f);

/// Parameter names in canonical order: k, x or m, n, a, z.
const std::vector<std::string>& parameter_names(Function f);

/// Methods accepted by evaluate() for this function.
const std::vector<std::string>& method_names(Function f);

using ParamMap = std::map<std::string, double>;

struct MethodOptions {
    int terms = 20;
    double rel_tol = 1e-15;
    QuadratureSpec quadrature{};
};

/// Evaluates one method at one parameter point. Library exceptions
/// (DomainError, ConvergenceError, OverflowError) propagate unchanged;
/// unknown methods or missing parameters raise std::invalid_argument.
EvalResult evaluate(Function f, const std::string& method, const ParamMap& params,
                    const MethodOptions& options);

}  // namespace ricefn::cli
