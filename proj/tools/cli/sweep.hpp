#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/evaluate.hpp"

namespace ricefn::cli {

struct Binding {
    std::string name;
    double value = 0.0;
};

/// Linear grid start, ..., stop with count points.
struct GridAxis {
    std::string name;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    double at(int i) const;
};

/// A parameter taking a short list of values, one CSV column group each
/// (the separate curves of a figure).
struct CurveAxis {
    std::string name;
    std::vector<double> values;
};

struct SweepSpec {
    Function function = Function::rice_ie;
    std::vector<Binding> fixed;
    GridAxis varying;
    std::optional<CurveAxis> curve;
    std::vector<std::string> methods;
    int terms = 20;
    std::string output;
    std::string preset;               ///< empty for ad-hoc sweeps
    std::vector<std::string> notes;   ///< extra metadata lines
};

struct SweepOptions {
    bool skip_invalid = false;
    unsigned threads = 0;  ///< 0: hardware concurrency
    MethodOptions method{};
};

/// Throws DomainError when count < 2, start >= stop, a parameter is bound
/// twice or not at all, or a method is unknown.
void validate(const SweepSpec& spec);

/// Built-in presets fig1 ... fig6. Throws std::invalid_argument for others.
SweepSpec preset(const std::string& name);
const std::vector<std::string>& preset_names();

/// Renders the full CSV (metadata preamble, header, rows). Grid points are
/// evaluated concurrently; rows always come out in grid order.
///
/// A DomainError at any point is rethrown naming the point unless
/// options.skip_invalid is set, in which case the cell is left empty.
std::string render_csv(const SweepSpec& spec, const SweepOptions& options);

/// Column header for one (method, curve value) pair.
std::string column_name(const SweepSpec& spec, const std::string& method, std::optional<double> curve_value);

/// Fixed 15-significant-digit rendering used for every number in the CSV.
std::string format_number(double value);

}  // namespace ricefn::cli
