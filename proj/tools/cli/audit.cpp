#include "cli/audit.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "ricefn/errors.hpp"
#include "ricefn/ilhi.hpp"
#include "ricefn/oracles.hpp"

namespace ricefn::cli {
namespace {

const char* variant_name(TruncationVariant v) { return v == TruncationVariant::gross ? "gross" : "plain"; }

AuditRow make_row(std::vector<double> params, int terms, TruncationVariant variant, double truncated,
                  double oracle, double bound) {
    AuditRow row;
    row.params = std::move(params);
    row.terms = terms;
    row.variant = variant;
    row.truncated = truncated;
    row.oracle = oracle;
    row.signed_error = oracle - truncated;
    row.bound = bound;
    row.margin = bound - row.signed_error;
    return row;
}

}  // namespace

std::vector<AuditRow> audit_rice(const RiceAuditGrid& grid, bool skip_invalid, const QuadratureSpec& quadrature) {
    std::vector<AuditRow> rows;
    for (const double k : grid.k) {
        for (const double x : grid.x) {
            const IeParams p{k, x};
            double upper;
            try {
                upper = ie_upper_bound(p);
            } catch (const DomainError&) {
                if (skip_invalid) continue;
                throw;
            }
            const double oracle = rice_ie_quad(k, x, quadrature).value;
            for (const int terms : grid.terms) {
                for (const auto variant : grid.variants) {
                    const double truncated = variant == TruncationVariant::gross
                                                 ? ie_poly(p, terms).value
                                                 : ie_series_partial(p, terms).value;
                    rows.push_back(make_row({k, x}, terms, variant, truncated, oracle, upper - truncated));
                }
            }
        }
    }
    return rows;
}

std::vector<AuditRow> audit_ilhi(const IlhiAuditGrid& grid, bool skip_invalid, const QuadratureSpec& quadrature) {
    std::vector<AuditRow> rows;
    for (const double m : grid.m) {
        for (const double n : grid.n) {
            for (const double a : grid.a) {
                for (const double z : grid.z) {
                    const IlhiParams p{m, n, a, z};
                    double upper;
                    try {
                        upper = ilhi_upper_bound(p);
                    } catch (const DomainError&) {
                        if (skip_invalid) continue;
                        throw;
                    }
                    const double oracle = ilhi_quad(m, n, a, z, quadrature).value;
                    for (const int terms : grid.terms) {
                        for (const auto variant : grid.variants) {
                            const double truncated = variant == TruncationVariant::gross
                                                         ? ilhi_poly(p, terms).value
                                                         : ilhi_series_partial(p, terms).value;
                            rows.push_back(
                                make_row({m, n, a, z}, terms, variant, truncated, oracle, upper - truncated));
                        }
                    }
                }
            }
        }
    }
    return rows;
}

std::string render_audit(const std::vector<std::string>& param_names, const std::vector<AuditRow>& rows) {
    std::string out;
    for (const auto& name : param_names) out += fmt::format("{:>8} ", name);
    out += fmt::format("{:>5} {:>7} {:>23} {:>23} {:>23} {:>23} {:>23}\n", "L", "variant", "truncated", "oracle",
                       "signed_error", "bound", "margin");
    double min_margin = std::numeric_limits<double>::infinity();
    int violations = 0;
    for (const auto& row : rows) {
        for (const double v : row.params) out += fmt::format("{:>8.4g} ", v);
        out += fmt::format("{:>5} {:>7} {:>23.15e} {:>23.15e} {:>23.15e} {:>23.15e} {:>23.15e}{}\n", row.terms,
                           variant_name(row.variant), row.truncated, row.oracle, row.signed_error, row.bound,
                           row.margin, row.violated() ? "  VIOLATION" : "");
        min_margin = std::min(min_margin, row.margin);
        violations += row.violated() ? 1 : 0;
    }
    out += fmt::format("# rows: {}  min margin: {:.3e}  violations (margin < {:g}): {}\n", rows.size(),
                       rows.empty() ? 0.0 : min_margin, kMarginFloor, violations);
    return out;
}

}  // namespace ricefn::cli
