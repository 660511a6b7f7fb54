#include "cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "ricefn/errors.hpp"
#include "ricefn/version.hpp"

namespace ricefn::cli {
namespace {

std::string format_compact(double value) { return fmt::format("{:.15g}", value); }

ParamMap base_params(const SweepSpec& spec) {
    ParamMap params;
    for (const auto& b : spec.fixed) params[b.name] = b.value;
    return params;
}

std::string describe_point(const ParamMap& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ", ";
        out += name + " = " + format_compact(value);
    }
    return out;
}

std::vector<std::optional<double>> curve_values(const SweepSpec& spec) {
    if (!spec.curve) return {std::nullopt};
    std::vector<std::optional<double>> values;
    for (const double v : spec.curve->values) values.emplace_back(v);
    return values;
}

std::string render_row(const SweepSpec& spec, const SweepOptions& options, int index) {
    ParamMap params = base_params(spec);
    const double x = spec.varying.at(index);
    params[spec.varying.name] = x;
    MethodOptions method_options = options.method;
    method_options.terms = spec.terms;

    std::string row = format_number(x);
    for (const auto& curve_value : curve_values(spec)) {
        if (curve_value) params[spec.curve->name] = *curve_value;
        for (const auto& method : spec.methods) {
            row += ',';
            try {
                row += format_number(evaluate(spec.function, method, params, method_options).value);
            } catch (const DomainError& e) {
                if (!options.skip_invalid) {
                    throw DomainError(std::string(e.what()) + " [sweep point " + describe_point(params) +
                                      ", method " + method + "]");
                }
            }
        }
    }
    return row;
}

}  // namespace

double GridAxis::at(int i) const {
    if (i == count - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / (count - 1);
}

std::string format_number(double value) { return fmt::format("{:.14e}", value); }

std::string column_name(const SweepSpec& spec, const std::string& method, std::optional<double> curve_value) {
    if (!curve_value) return method;
    return fmt::format("{}[{}={}]", method, spec.curve->name, format_compact(*curve_value));
}

void validate(const SweepSpec& spec) {
    if (spec.varying.count < 2) throw DomainError("sweep grid needs count ≥ 2");
    if (!(spec.varying.start < spec.varying.stop)) throw DomainError("sweep grid needs start < stop");
    if (spec.methods.empty()) throw DomainError("sweep needs at least one method");
    if (spec.terms < 1) throw DomainError("sweep needs L ≥ 1");
    if (spec.curve && spec.curve->values.empty()) throw DomainError("curve parameter needs values");

    std::multiset<std::string> bound;
    for (const auto& b : spec.fixed) bound.insert(b.name);
    bound.insert(spec.varying.name);
    if (spec.curve) bound.insert(spec.curve->name);
    const auto& names = parameter_names(spec.function);
    for (const auto& name : bound) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw DomainError("'" + name + "' is not a parameter of " + function_name(spec.function));
        }
    }
    for (const auto& name : names) {
        const auto times = bound.count(name);
        if (times != 1) {
            throw DomainError("parameter '" + name + "' must be bound exactly once, bound " +
                              std::to_string(times) + " times");
        }
    }
    const auto& methods = method_names(spec.function);
    for (const auto& m : spec.methods) {
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
            throw DomainError("unknown method '" + m + "' for " + function_name(spec.function));
        }
    }
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
    return names;
}

SweepSpec preset(const std::string& name) {
    SweepSpec s;
    s.preset = name;
    if (name == "fig1") {
        // Polynomial approximation against k, truncated after 20 terms.
        s.function = Function::rice_ie;
        s.varying = {"k", 0.0, 1.0, 21};
        s.curve = CurveAxis{"x", {1.0, 2.0, 5.0, 10.0}};
        s.methods = {"poly", "series", "quad"};
        s.terms = 20;
    } else if (name == "fig2") {
        s.function = Function::rice_ie;
        s.varying = {"x", 0.0, 10.0, 41};
        s.curve = CurveAxis{"k", {0.1, 0.5, 0.9}};
        s.methods = {"poly", "series", "quad"};
        s.terms = 20;
    } else if (name == "fig3") {
        // Closed form against m at z = 4, a = 1.8. m starts where
        // m - n + 1 > 0 holds for every listed n.
        s.function = Function::ilhi;
        s.fixed = {{"z", 4.0}, {"a", 1.8}};
        s.varying = {"m", 1.6, 5.0, 35};
        s.curve = CurveAxis{"n", {0.5, 1.5, 2.5}};
        s.methods = {"closed", "quad"};
        s.terms = 20;
    } else if (name == "fig4") {
        // m = 1.2 admits the half-odd orders 1/2 and 3/2.
        s.function = Function::ilhi;
        s.fixed = {{"a", 1.8}, {"m", 1.2}};
        s.varying = {"z", 0.0, 10.0, 41};
        s.curve = CurveAxis{"n", {0.5, 1.5}};
        s.methods = {"closed", "quad"};
        s.terms = 20;
    } else if (name == "fig5") {
        s.function = Function::ilhi;
        s.fixed = {{"a", 2.2}, {"z", 5.0}};
        s.varying = {"m", 0.0, 4.0, 41};
        s.curve = CurveAxis{"n", {0.5, 1.0, 1.5}};
        s.methods = {"poly", "quad"};
        s.terms = 700;
    } else if (name == "fig6") {
        s.function = Function::ilhi;
        s.fixed = {{"a", 1.4}, {"m", 2.2}};
        s.varying = {"z", 0.5, 10.0, 39};
        s.curve = CurveAxis{"n", {0.5, 1.0, 1.5}};
        s.methods = {"poly", "quad"};
        s.terms = 700;
        s.notes.push_back("a = 1.4 follows the figure caption; the accompanying text states a = 1.2");
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (expected fig1 ... fig6)");
    }
    s.output = name + ".csv";
    return s;
}

std::string render_csv(const SweepSpec& spec, const SweepOptions& options) {
    validate(spec);

    std::string out;
    out += fmt::format("# ricefn sweep {}\n", kVersion);
    out += fmt::format("# function: {}\n", function_name(spec.function));
    if (!spec.preset.empty()) out += fmt::format("# preset: {}\n", spec.preset);
    for (const auto& b : spec.fixed) out += fmt::format("# fixed: {} = {}\n", b.name, format_compact(b.value));
    out += fmt::format("# varying: {} from {} to {} ({} points)\n", spec.varying.name,
                       format_compact(spec.varying.start), format_compact(spec.varying.stop), spec.varying.count);
    if (spec.curve) {
        std::string values;
        for (const double v : spec.curve->values) values += (values.empty() ? "" : " ") + format_compact(v);
        out += fmt::format("# curves: {} = {}\n", spec.curve->name, values);
    }
    out += fmt::format("# L: {}\n", spec.terms);
    for (const auto& note : spec.notes) out += fmt::format("# note: {}\n", note);

    out += spec.varying.name;
    for (const auto& curve_value : curve_values(spec)) {
        for (const auto& method : spec.methods) out += ',' + column_name(spec, method, curve_value);
    }
    out += '\n';

    const int count = spec.varying.count;
    std::vector<std::string> rows(count);
    std::vector<std::exception_ptr> failures(count);
    std::atomic<int> next{0};
    const auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                rows[i] = render_row(spec, options, i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, count);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    for (const auto& row : rows) out += row + '\n';
    return out;
}

}  // namespace ricefn::cli
