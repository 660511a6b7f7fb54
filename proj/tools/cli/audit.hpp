#pragma once

#include <string>
#include <vector>

#include "ricefn/quadrature.hpp"
#include "ricefn/rice_ie.hpp"

namespace ricefn::cli {

/// Margins below this count as a violated truncation bound.
inline constexpr double kMarginFloor = -1e-12;

struct AuditRow {
    std::vector<double> params;  ///< k, x or m, n, a, z
    int terms = 0;
    TruncationVariant variant = TruncationVariant::gross;
    double truncated = 0.0;
    double oracle = 0.0;
    double signed_error = 0.0;  ///< oracle - truncated
    double bound = 0.0;
    double margin = 0.0;        ///< bound - signed_error

    bool violated() const { return margin < kMarginFloor; }
};

struct RiceAuditGrid {
    std::vector<double> k{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    std::vector<double> x{0.01, 0.1, 1.0, 2.0, 5.0, 10.0, 20.0};
    std::vector<int> terms{1, 2, 5, 10, 20};
    std::vector<TruncationVariant> variants{TruncationVariant::gross, TruncationVariant::plain};
};

struct IlhiAuditGrid {
    std::vector<double> m{0.0, 0.5, 1.2, 3.0};
    std::vector<double> n{0.5, 0.7, 1.0, 1.5, 1.9, 2.5, 3.5};
    std::vector<double> a{1.1, 1.8, 2.2, 5.0};
    std::vector<double> z{0.5, 4.0, 10.0};
    std::vector<int> terms{10, 50, 200, 700};
    std::vector<TruncationVariant> variants{TruncationVariant::gross, TruncationVariant::plain};
};

/// One row per (point, L, variant); the oracle is the adaptive quadrature of
/// the defining integral. Points outside the bound's domain are skipped when
/// skip_invalid is set and raise DomainError otherwise.
std::vector<AuditRow> audit_rice(const RiceAuditGrid& grid, bool skip_invalid,
                                 const QuadratureSpec& quadrature = {});
std::vector<AuditRow> audit_ilhi(const IlhiAuditGrid& grid, bool skip_invalid,
                                 const QuadratureSpec& quadrature = {});

/// Fixed-width table with a header and a trailing summary line.
std::string render_audit(const std::vector<std::string>& param_names, const std::vector<AuditRow>& rows);

}  // namespace ricefn::cli
