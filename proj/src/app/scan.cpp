#include "pairabs/app.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace pairabs::app {

std::vector<SuperpositionCoefficients> angle_a_grid(int points) {
    if (points < 1) throw std::invalid_argument("a-grid needs at least one point");
    std::vector<SuperpositionCoefficients> out;
    for (int k = 0; k < points; ++k) {
        const double frac = points == 1 ? 0.0 : 1.0 - static_cast<double>(k) / (points - 1);
        const double theta = std::numbers::pi / 2 * frac;
        out.emplace_back(std::cos(theta), std::sin(theta));
    }
    return out;
}

std::vector<SuperpositionCoefficients> explicit_a_grid(const std::vector<double>& a_values) {
    std::vector<SuperpositionCoefficients> out;
    for (double a : a_values) {
        if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("a-values must lie in [0, 1]");
        out.push_back(SuperpositionCoefficients::unit(a));
    }
    return out;
}

std::vector<ScanRow> run_exclusion_scan(const std::vector<SuperpositionCoefficients>& a_grid,
                                        const std::vector<double>& c_grid, double alpha0) {
    if (a_grid.empty() || c_grid.empty()) throw std::invalid_argument("exclusion scan grids must be nonempty");
    const RecoilModel model(alpha0);

    std::vector<std::pair<ExclusionFamily, OverlapTable>> families;
    families.reserve(c_grid.size());
    for (double c : c_grid) {
        auto fam = ExclusionFamily::perpendicular_construction(c);
        auto table = build_family_table(fam, model);
        families.emplace_back(std::move(fam), std::move(table));
    }

    std::vector<ScanRow> rows;
    rows.reserve(a_grid.size() * c_grid.size());
    for (const auto& coeffs : a_grid) {
        for (std::size_t k = 0; k < c_grid.size(); ++k) {
            const auto& [fam, table] = families[k];
            const double coef = std::abs(family_exclusion_coefficient(coeffs, fam));
            rows.push_back({coeffs, c_grid[k], coef, exclusion_check(coeffs, table, Statistics::fermion),
                            coef < kFormulaExclusionThreshold});
        }
    }
    return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << kScanHeader << '\n';
    for (const auto& r : rows)
        out << format_number(r.coeffs.a.real()) << ',' << format_number(r.c) << ',' << format_number(r.abs_coefficient)
            << ',' << (r.excluded_by_norm ? 1 : 0) << ',' << (r.excluded_by_formula ? 1 : 0) << '\n';
}

}  // namespace pairabs::app
