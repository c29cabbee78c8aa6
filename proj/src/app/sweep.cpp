#include "pairabs/app.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pairabs::app {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    if (steps < 1) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    if (steps == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int k = 0; k < steps; ++k) grid[k] = lo + (hi - lo) * k / (steps - 1);
    grid.back() = hi;
    return grid;
}

void SweepConfig::validate() const {
    if (!(c_min >= 0.0 && c_min <= c_max && c_max <= 1.0))
        throw std::invalid_argument("need 0 <= c-min <= c-max <= 1");
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    if (!(alpha0 > 0.0 && alpha0 <= 1.0)) throw std::invalid_argument("alpha0 must lie in (0, 1]");
    if (statistics.empty()) throw std::invalid_argument("no statistics selected");
    if (cases.empty()) throw std::invalid_argument("no coefficient cases");
    if (!family && scenario.choice == Choice::custom && !scenario.swept_pair && steps > 1 && c_min != c_max)
        throw std::invalid_argument("custom sweep needs a swept pair");
}

std::string SweepConfig::scenario_name() const { return family ? "family" : to_string(scenario.choice); }

OverlapTable scenario_table(const SweepConfig& cfg, double c) {
    const RecoilModel model(cfg.alpha0);
    if (cfg.family) return build_family_table(ExclusionFamily::perpendicular_construction(c), model);
    return build_choice_table(cfg.scenario, c, model);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const auto grid = linear_grid(cfg.c_min, cfg.c_max, cfg.steps);

    std::vector<OverlapTable> tables;
    tables.reserve(grid.size());
    for (double c : grid) tables.push_back(scenario_table(cfg, c));

    std::vector<SweepRow> rows;
    rows.reserve(cfg.cases.size() * cfg.statistics.size() * grid.size());
    for (const auto& coeffs : cfg.cases)
        for (Statistics stats : cfg.statistics)
            for (std::size_t k = 0; k < grid.size(); ++k)
                rows.push_back({cfg.scenario_name(), stats, coeffs, grid[k], cfg.alpha0,
                                relative_rate(coeffs, tables[k], stats)});
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const auto& row : rows) {
        const auto& r = row.result;
        out << row.scenario << ',' << to_string(row.stats) << ',' << format_number(row.coeffs.a.real()) << ','
            << format_number(row.coeffs.a.imag()) << ',' << format_number(row.coeffs.b.real()) << ','
            << format_number(row.coeffs.b.imag()) << ',' << format_number(row.c) << ','
            << format_number(row.alpha0) << ',' << format_number(r.n0) << ',' << format_number(r.nf) << ','
            << format_number(r.m.real()) << ',' << format_number(r.m.imag()) << ',' << format_number(r.r) << ','
            << (r.excluded ? 1 : 0) << '\n';
    }
}

}  // namespace pairabs::app
