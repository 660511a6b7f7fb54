#include "cli/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

#include "ricefn/ilhi.hpp"
#include "ricefn/oracles.hpp"
#include "ricefn/rice_ie.hpp"

namespace ricefn::cli {
namespace {

double require(const ParamMap& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter '" + name + "'");
    return it->second;
}

EvalResult from_value(double value) { return {value, 0.0, 1}; }

EvalResult evaluate_rice(const std::string& method, const ParamMap& params, const MethodOptions& options) {
    const IeParams p{require(params, "k"), require(params, "x")};
    const auto marcum = [&options](double a, double b) { return marcum_q1_quad(a, b, options.quadrature); };
    if (method == "poly") return ie_poly(p, options.terms);
    if (method == "series") return ie_series(p, options.rel_tol);
    if (method == "quad") return rice_ie_quad(p.k, p.x, options.quadrature);
    if (method == "quad-alt") return rice_ie_quad_alt(p.k, p.x, options.quadrature);
    if (method == "marcum-two-q") return ie_from_marcum(p, MarcumRoute::two_q, marcum);
    if (method == "marcum-diff") return ie_from_marcum(p, MarcumRoute::q_difference, marcum);
    if (method == "upper-bound") return from_value(ie_upper_bound(p));
    throw std::invalid_argument("unknown rice-ie method '" + method + "'");
}

EvalResult evaluate_ilhi(const std::string& method, const ParamMap& params, const MethodOptions& options) {
    const IlhiParams p{require(params, "m"), require(params, "n"), require(params, "a"), require(params, "z")};
    if (method == "closed") return ilhi_closed_half(p);
    if (method == "poly") return ilhi_poly(p, options.terms);
    if (method == "series") return ilhi_series(p, options.rel_tol);
    if (method == "quad") return ilhi_quad(p.m, p.n, p.a, p.z, options.quadrature);
    if (method == "upper-bound") return from_value(ilhi_upper_bound(p));
    throw std::invalid_argument("unknown ilhi method '" + method + "'");
}

}  // namespace

Function parse_function(const std::string& name) {
    if (name == "rice-ie" || name == "rice_ie") return Function::rice_ie;
    if (name == "ilhi") return Function::ilhi;
    throw std::invalid_argument("unknown function '" + name + "' (expected rice_ie or ilhi)");
}

std::string function_name(Function f) { return f == Function::rice_ie ? "rice_ie" : "ilhi"; }

const std::vector<std::string>& parameter_names(Function f) {
    static const std::vector<std::string> rice{"k", "x"};
    static const std::vector<std::string> ilhi{"m", "n", "a", "z"};
    return f == Function::rice_ie ? rice : ilhi;
}

const std::vector<std::string>& method_names(Function f) {
    static const std::vector<std::string> rice{"poly",     "series",       "quad",       "quad-alt",
                                               "marcum-two-q", "marcum-diff", "upper-bound"};
    static const std::vector<std::string> ilhi{"closed", "poly", "series", "quad", "upper-bound"};
    return f == Function::rice_ie ? rice : ilhi;
}

EvalResult evaluate(Function f, const std::string& method, const ParamMap& params,
                    const MethodOptions& options) {
    return f == Function::rice_ie ? evaluate_rice(method, params, options)
                                  : evaluate_ilhi(method, params, options);
}

}  // namespace ricefn::cli
