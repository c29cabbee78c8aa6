#include "pairabs/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pairabs::app {

namespace {

std::vector<SuperpositionCoefficients> unit_cases(std::initializer_list<double> as) {
    std::vector<SuperpositionCoefficients> out;
    for (double a : as) out.push_back(SuperpositionCoefficients::unit(a));
    return out;
}

const std::vector<SuperpositionCoefficients>& standard_cases() {
    static const auto cases = unit_cases({1.0, 0.8, kInvSqrt2});
    return cases;
}

std::string sweep_csv(const SweepConfig& cfg) {
    std::ostringstream os;
    write_sweep_csv(os, run_sweep(cfg));
    return os.str();
}

SweepConfig choice_config(Choice choice, std::vector<SuperpositionCoefficients> cases, int steps, double alpha0) {
    SweepConfig cfg;
    cfg.scenario.choice = choice;
    cfg.cases = std::move(cases);
    cfg.steps = steps;
    cfg.alpha0 = alpha0;
    return cfg;
}

std::string case_label(const SuperpositionCoefficients& k) {
    return "a=" + format_number(k.a.real()) + " b=" + format_number(k.b.real());
}

std::string flatness_report(int steps, double alpha0) {
    std::ostringstream os;
    os << "choice ii, fermions: spread over c in [0,1], " << steps << " points, alpha0=" << format_number(alpha0)
       << "\n";
    for (const auto& e : choice_ii_flatness(steps, alpha0)) {
        os << case_label(e.coeffs) << ": norm_sq_spread=" << format_number(e.norm_spread)
           << " bracket_spread=" << format_number(e.bracket_spread)
           << " nf_relative_spread=" << format_number(e.nf_relative_spread)
           << " r_relative_spread=" << format_number(e.r_relative_spread) << "\n";
    }
    os << "initial norm and bracket sum are constant in c; the residual variation of R comes from N_f\n";
    return os.str();
}

std::string coincidence_report(int steps, double alpha0) {
    std::ostringstream os;
    os << "choice iii, fermions: deviation from the a=1 curve, " << steps << " points, alpha0="
       << format_number(alpha0) << "\n";
    for (const auto& e : choice_iii_coincidence(steps, alpha0)) {
        os << case_label(e.coeffs) << ": max_relative_deviation=" << format_number(e.max_relative_deviation)
           << " exclusion_pattern=" << (e.exclusion_pattern_matches ? "same" : "different")
           << " within_3pct=" << (e.max_relative_deviation <= 0.03 ? "yes" : "no") << "\n";
    }
    return os.str();
}

}  // namespace

std::vector<FlatnessEntry> choice_ii_flatness(int steps, double alpha0) {
    const RecoilModel model(alpha0);
    ScenarioSpec spec;
    spec.choice = Choice::ii;
    const auto grid = linear_grid(0.0, 1.0, steps);

    std::vector<FlatnessEntry> out;
    for (const auto& coeffs : standard_cases()) {
        std::vector<double> norms, nfs, rs;
        std::vector<Amplitude> brackets;
        for (double c : grid) {
            const auto table = build_choice_table(spec, c, model);
            norms.push_back(initial_norm_sq(coeffs, table, Statistics::fermion));
            brackets.push_back(absorption_bracket(coeffs, table, Statistics::fermion));
            const auto res = relative_rate(coeffs, table, Statistics::fermion);
            nfs.push_back(res.nf);
            rs.push_back(res.r);
        }
        auto [nlo, nhi] = std::minmax_element(norms.begin(), norms.end());
        auto [flo, fhi] = std::minmax_element(nfs.begin(), nfs.end());
        auto [rlo, rhi] = std::minmax_element(rs.begin(), rs.end());
        double bspread = 0.0;
        for (const auto& b : brackets) bspread = std::max(bspread, std::abs(b - brackets.front()));
        out.push_back({coeffs, *nhi - *nlo, bspread, (*fhi - *flo) / *flo, (*rhi - *rlo) / *rlo});
    }
    return out;
}

std::vector<CoincidenceEntry> choice_iii_coincidence(int steps, double alpha0) {
    const RecoilModel model(alpha0);
    ScenarioSpec spec;
    spec.choice = Choice::iii;
    const auto grid = linear_grid(0.0, 1.0, steps);
    const SuperpositionCoefficients reference{1.0, 0.0};

    std::vector<CoincidenceEntry> out;
    for (const auto& coeffs : unit_cases({0.8, kInvSqrt2})) {
        CoincidenceEntry entry{coeffs, 0.0, true};
        for (double c : grid) {
            const auto table = build_choice_table(spec, c, model);
            const auto ref = relative_rate(reference, table, Statistics::fermion);
            const auto cur = relative_rate(coeffs, table, Statistics::fermion);
            if (ref.excluded != cur.excluded) {
                entry.exclusion_pattern_matches = false;
                continue;
            }
            if (ref.excluded) continue;
            entry.max_relative_deviation = std::max(entry.max_relative_deviation, std::abs(cur.r - ref.r) / ref.r);
        }
        out.push_back(entry);
    }
    return out;
}

std::vector<FigureFile> build_figures(FigureTarget target, int steps, double alpha0) {
    std::vector<FigureFile> files;
    const bool all = target == FigureTarget::all;

    if (all || target == FigureTarget::fig2) {
        files.push_back({"fig2_i.csv", sweep_csv(choice_config(Choice::i, standard_cases(), steps, alpha0))});
        files.push_back({"fig2_ii.csv", sweep_csv(choice_config(Choice::ii, standard_cases(), steps, alpha0))});
        files.push_back({"fig2_ii_flatness.txt", flatness_report(steps, alpha0)});
    }
    if (all || target == FigureTarget::fig3) {
        // (iii) is emitted with the captioned, unnormalized pairs
        const std::vector<SuperpositionCoefficients> captioned{{1.0, 0.0}, {0.8, 0.2}, {0.5, 0.5}};
        files.push_back({"fig3_iii.csv", sweep_csv(choice_config(Choice::iii, captioned, steps, alpha0))});
        files.push_back({"fig3_iv.csv", sweep_csv(choice_config(Choice::iv, standard_cases(), steps, alpha0))});
        files.push_back({"fig3_iii_coincidence.txt", coincidence_report(steps, alpha0)});
    }
    if (all || target == FigureTarget::fig4) {
        SweepConfig cfg;
        cfg.family = true;
        cfg.statistics = {Statistics::fermion};
        cfg.cases = unit_cases({0.64, 0.67, kInvSqrt2});
        cfg.steps = steps;
        cfg.alpha0 = alpha0;
        files.push_back({"fig4.csv", sweep_csv(cfg)});
    }
    return files;
}

void write_figures(const std::vector<FigureFile>& files, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& f : files) {
        std::ofstream os(dir / f.name, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + (dir / f.name).string() + " for writing");
        os << f.content;
        if (!os) throw std::runtime_error("failed writing " + (dir / f.name).string());
    }
}

}  // namespace pairabs::app
