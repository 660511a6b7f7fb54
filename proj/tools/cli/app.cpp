#include "cli/app.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/audit.hpp"
#include "cli/evaluate.hpp"
#include "cli/sweep.hpp"
#include "ricefn/errors.hpp"
#include "ricefn/version.hpp"

namespace ricefn::cli {
namespace {

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, separator)) parts.push_back(part);
    return parts;
}

double to_double(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
    return value;
}

Binding parse_binding(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + text + "'");
    return {text.substr(0, eq), to_double(text.substr(eq + 1))};
}

GridAxis parse_axis(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw std::invalid_argument("expected name:start:stop:count, got '" + text + "'");
    return {parts[0], to_double(parts[1]), to_double(parts[2]), static_cast<int>(to_double(parts[3]))};
}

CurveAxis parse_curve(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=v1,v2,..., got '" + text + "'");
    CurveAxis curve{text.substr(0, eq), {}};
    for (const auto& v : split(text.substr(eq + 1), ',')) curve.values.push_back(to_double(v));
    return curve;
}

std::vector<TruncationVariant> parse_variants(const std::string& text) {
    if (text == "gross") return {TruncationVariant::gross};
    if (text == "plain") return {TruncationVariant::plain};
    if (text == "both") return {TruncationVariant::gross, TruncationVariant::plain};
    throw std::invalid_argument("variant must be gross, plain or both");
}

struct EvalArgs {
    double k = 0.0, x = 0.0;
    double m = 0.0, n = 0.0, a = 0.0, z = 0.0;
    std::string method;
    MethodOptions options;
};

struct SweepArgs {
    std::string preset;
    std::string function = "rice_ie";
    std::vector<std::string> fixed;
    std::string vary;
    std::string curve;
    std::vector<std::string> methods;
    int terms = 20;
    std::string output;
    bool skip_invalid = false;
    unsigned threads = 0;
};

struct AuditArgs {
    RiceAuditGrid rice;
    IlhiAuditGrid ilhi;
    std::string variant = "both";
    bool skip_invalid = false;
};

int run_eval(Function f, const EvalArgs& args, std::ostream& out) {
    ParamMap params;
    if (f == Function::rice_ie) {
        params = {{"k", args.k}, {"x", args.x}};
    } else {
        params = {{"m", args.m}, {"n", args.n}, {"a", args.a}, {"z", args.z}};
    }
    const EvalResult r = evaluate(f, args.method, params, args.options);
    out << fmt::format("value = {: .15e}  error = {:.3e}  work = {:>8}\n", r.value, r.error_estimate, r.work);
    return kOk;
}

int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    SweepSpec spec;
    if (!args.preset.empty()) {
        spec = preset(args.preset);
    } else {
        spec.function = parse_function(args.function);
        for (const auto& b : args.fixed) spec.fixed.push_back(parse_binding(b));
        if (args.vary.empty()) throw std::invalid_argument("--vary is required without --preset");
        spec.varying = parse_axis(args.vary);
        if (!args.curve.empty()) spec.curve = parse_curve(args.curve);
        spec.methods = args.methods;
        spec.terms = args.terms;
    }
    if (!args.output.empty()) spec.output = args.output;
    if (spec.output.empty()) throw std::invalid_argument("--output is required without --preset");

    SweepOptions options;
    options.skip_invalid = args.skip_invalid;
    options.threads = args.threads;
    const std::string csv = render_csv(spec, options);
    if (spec.output == "-") {
        out << csv;
        return kOk;
    }
    std::ofstream file(spec.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + spec.output + "' for writing");
    file << csv;
    err << "wrote " << spec.output << '\n';
    return kOk;
}

int report_audit(const std::vector<std::string>& names, const std::vector<AuditRow>& rows, std::ostream& out) {
    out << render_audit(names, rows);
    for (const auto& row : rows) {
        if (row.violated()) return kBoundViolation;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rice Ie-function and incomplete Lipschitz-Hankel integral evaluator", "ricefn"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // eval
    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    eval->require_subcommand(1);
    auto* eval_rice = eval->add_subcommand("rice-ie", "Ie(k, x)");
    eval_rice->add_option("--k", eval_args.k, "k in [0, 1]")->required();
    eval_rice->add_option("--x", eval_args.x, "x >= 0")->required();
    eval_rice->add_option("--method", eval_args.method,
                          "poly | series | quad | quad-alt | marcum-two-q | marcum-diff | upper-bound")
        ->default_val("series");
    eval_rice->add_option("--terms,-L", eval_args.options.terms, "Number of terms L")->capture_default_str();
    eval_rice->add_option("--tol", eval_args.options.rel_tol, "Relative stopping tolerance for series")
        ->capture_default_str();

    auto* eval_ilhi = eval->add_subcommand("ilhi", "Ie_{m,n}(a, z)");
    eval_ilhi->add_option("--m", eval_args.m, "power m")->required();
    eval_ilhi->add_option("--n", eval_args.n, "Bessel order n >= 0")->required();
    eval_ilhi->add_option("--a", eval_args.a, "exponential rate a")->required();
    eval_ilhi->add_option("--z", eval_args.z, "upper limit z >= 0")->required();
    eval_ilhi->add_option("--method", eval_args.method, "closed | poly | series | quad | upper-bound")
        ->default_val("series");
    eval_ilhi->add_option("--terms,-L", eval_args.options.terms, "Number of terms L")->capture_default_str();
    eval_ilhi->add_option("--tol", eval_args.options.rel_tol, "Relative stopping tolerance for series")
        ->capture_default_str();

    // sweep
    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Write a parameter sweep as CSV");
    sweep->add_option("--preset", sweep_args.preset, "fig1 ... fig6");
    sweep->add_option("--function", sweep_args.function, "rice_ie | ilhi")->capture_default_str();
    sweep->add_option("--fixed", sweep_args.fixed, "name=value (repeatable)");
    sweep->add_option("--vary", sweep_args.vary, "name:start:stop:count");
    sweep->add_option("--curve", sweep_args.curve, "name=v1,v2,... (one column group per value)");
    sweep->add_option("--methods", sweep_args.methods, "comma-separated methods")->delimiter(',');
    sweep->add_option("--terms,-L", sweep_args.terms, "Number of terms L")->capture_default_str();
    sweep->add_option("--output,-o", sweep_args.output, "CSV path, or - for stdout");
    sweep->add_flag("--skip-invalid", sweep_args.skip_invalid, "Leave cells empty at invalid grid points");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)")->capture_default_str();

    // audit
    AuditArgs audit_args;
    std::vector<int> terms;
    auto* audit = app.add_subcommand("audit", "Check truncation-error bounds against the quadrature oracle");
    audit->require_subcommand(1);
    auto* audit_rice_cmd = audit->add_subcommand("rice-ie", "Audit the Ie(k, x) truncation bounds");
    audit_rice_cmd->add_option("--k", audit_args.rice.k, "k values")->delimiter(',');
    audit_rice_cmd->add_option("--x", audit_args.rice.x, "x values")->delimiter(',');
    audit_rice_cmd->add_option("--terms,-L", terms, "L values")->delimiter(',');
    audit_rice_cmd->add_option("--variant", audit_args.variant, "gross | plain | both")->capture_default_str();
    audit_rice_cmd->add_flag("--skip-invalid", audit_args.skip_invalid, "Skip points outside the bound's domain");
    auto* audit_ilhi_cmd = audit->add_subcommand("ilhi", "Audit the Ie_{m,n}(a, z) truncation bounds");
    audit_ilhi_cmd->add_option("--m", audit_args.ilhi.m, "m values")->delimiter(',');
    audit_ilhi_cmd->add_option("--n", audit_args.ilhi.n, "n values")->delimiter(',');
    audit_ilhi_cmd->add_option("--a", audit_args.ilhi.a, "a values")->delimiter(',');
    audit_ilhi_cmd->add_option("--z", audit_args.ilhi.z, "z values")->delimiter(',');
    audit_ilhi_cmd->add_option("--terms,-L", terms, "L values")->delimiter(',');
    audit_ilhi_cmd->add_option("--variant", audit_args.variant, "gross | plain | both")->capture_default_str();
    audit_ilhi_cmd->add_flag("--skip-invalid", audit_args.skip_invalid,
                             "Skip points outside the bound's domain (always on for the default grid)");

    std::vector<const char*> argv{"ricefn"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (eval_rice->parsed()) return run_eval(Function::rice_ie, eval_args, out);
        if (eval_ilhi->parsed()) return run_eval(Function::ilhi, eval_args, out);
        if (sweep->parsed()) return run_sweep(sweep_args, out, err);
        if (audit_rice_cmd->parsed()) {
            if (!terms.empty()) audit_args.rice.terms = terms;
            audit_args.rice.variants = parse_variants(audit_args.variant);
            const bool default_grid = audit_rice_cmd->count("--k") == 0 && audit_rice_cmd->count("--x") == 0;
            const auto rows = audit_rice(audit_args.rice, audit_args.skip_invalid || default_grid);
            return report_audit({"k", "x"}, rows, out);
        }
        if (audit_ilhi_cmd->parsed()) {
            if (!terms.empty()) audit_args.ilhi.terms = terms;
            audit_args.ilhi.variants = parse_variants(audit_args.variant);
            const bool default_grid = audit_ilhi_cmd->count("--m") + audit_ilhi_cmd->count("--n") +
                                          audit_ilhi_cmd->count("--a") + audit_ilhi_cmd->count("--z") ==
                                      0;
            const auto rows = audit_ilhi(audit_args.ilhi, audit_args.skip_invalid || default_grid);
            return report_audit({"m", "n", "a", "z"}, rows, out);
        }
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const ConvergenceError& e) {
        err << "non-convergence: " << e.what() << '\n';
        return kNumerical;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ricefn::cli
