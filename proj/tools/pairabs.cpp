// pairabs: relative single-photon absorption rates of identical atom pairs.

#include "pairabs/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace {

using namespace pairabs;
using namespace pairabs::app;

struct Options {
    std::string choice = "i";
    bool family = false;
    std::string statistics = "both";
    double a_re = 1.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
    std::vector<std::string> cases;
    std::vector<std::string> overlaps;
    std::string sweep_pair;
    double alpha0 = 0.9;
    double c = 0.0;
    double c_min = 0.0, c_max = 1.0;
    int steps = 101;
    std::string out;
    std::string config;

    std::vector<double> a_values;
    int a_steps = 51;

    std::string target;

    std::uint64_t seed = 42;
    std::int64_t trials = 1000;
    double tolerance = 1e-10;
};

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + item + "' in " + what);
        }
        if (used != item.size()) throw std::invalid_argument("bad number '" + item + "' in " + what);
        out.push_back(v);
    }
    if (expected && out.size() != expected)
        throw std::invalid_argument(what + " needs " + std::to_string(expected) + " comma-separated numbers");
    return out;
}

std::pair<CmLabel, CmLabel> parse_pair(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw std::invalid_argument("expected label pair x:y, got '" + text + "'");
    return {CmLabel{text.substr(0, colon)}, CmLabel{text.substr(colon + 1)}};
}

std::vector<Statistics> parse_statistics(const std::string& s) {
    if (s == "boson") return {Statistics::boson};
    if (s == "fermion") return {Statistics::fermion};
    if (s == "both") return {Statistics::boson, Statistics::fermion};
    throw std::invalid_argument("statistics must be boson, fermion or both");
}

SweepConfig make_sweep_config(const Options& o, const CLI::App& sub) {
    SweepConfig cfg;
    cfg.family = o.family;
    cfg.statistics = parse_statistics(o.statistics);
    cfg.alpha0 = o.alpha0;
    cfg.c_min = o.c_min;
    cfg.c_max = o.c_max;
    cfg.steps = o.steps;

    if (!o.overlaps.empty() || !o.sweep_pair.empty()) {
        if (sub.count("--choice") && o.choice != "custom")
            throw std::invalid_argument("--overlap/--sweep-pair only apply to custom scenarios");
        cfg.scenario.choice = Choice::custom;
        for (const auto& item : o.overlaps) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("--overlap expects x:y=re[,im]");
            const auto pair = parse_pair(item.substr(0, eq));
            const auto v = split_numbers(item.substr(eq + 1), 0, "--overlap");
            if (v.empty() || v.size() > 2) throw std::invalid_argument("--overlap expects x:y=re[,im]");
            cfg.scenario.fixed_overlaps[pair] = Amplitude{v[0], v.size() == 2 ? v[1] : 0.0};
        }
        if (!o.sweep_pair.empty()) cfg.scenario.swept_pair = parse_pair(o.sweep_pair);
    } else {
        auto choice = parse_choice(o.choice);
        if (!choice || *choice == Choice::custom)
            throw std::invalid_argument("choice must be one of i, ii, iii, iv (custom needs --overlap)");
        cfg.scenario.choice = *choice;
    }
    if (o.family && (sub.count("--choice") || cfg.scenario.choice == Choice::custom))
        throw std::invalid_argument("--family cannot be combined with --choice or --overlap");

    const bool explicit_ab = sub.count("--a-re") || sub.count("--a-im") || sub.count("--b-re") || sub.count("--b-im");
    if (explicit_ab && !o.cases.empty()) throw std::invalid_argument("use either --a-re/... or --case, not both");
    if (!o.cases.empty()) {
        cfg.cases.clear();
        for (const auto& k : o.cases) {
            const auto v = split_numbers(k, 4, "--case");
            cfg.cases.emplace_back(Amplitude{v[0], v[1]}, Amplitude{v[2], v[3]});
        }
    } else {
        cfg.cases = {SuperpositionCoefficients{{o.a_re, o.a_im}, {o.b_re, o.b_im}}};
    }
    return cfg;
}

template <class Fn>
int with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") return fn(std::cout);
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitInvalid;
    }
    const int rc = fn(os);
    if (!os) {
        std::cerr << "error: failed writing " << path << "\n";
        return kExitInvalid;
    }
    return rc;
}

void add_scenario_options(CLI::App& sub, Options& o) {
    sub.add_option("--choice", o.choice, "Overlap choice: i, ii, iii, iv");
    sub.add_flag("--family", o.family, "Use the two-state exclusion family instead of a choice");
    sub.add_option("--statistics", o.statistics, "boson, fermion or both");
    sub.add_option("--a-re", o.a_re, "Re(a)");
    sub.add_option("--a-im", o.a_im, "Im(a)");
    sub.add_option("--b-re", o.b_re, "Re(b)");
    sub.add_option("--b-im", o.b_im, "Im(b)");
    sub.add_option("--overlap", o.overlaps, "Custom overlap x:y=re[,im] (repeatable)");
    sub.add_option("--alpha0", o.alpha0, "One-recoil coefficient");
    sub.add_option("--out", o.out, "Output file (default standard output)");
    sub.add_option("--config", o.config, "key = value config file; flags override it");
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    // --config is resolved before CLI11 sees the arguments so that
    // file entries can be placed behind the explicit flags.
    std::string config_path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config" && it + 1 != args.end()) {
            config_path = *(it + 1);
            it = args.erase(it, it + 2);
        } else if (it->rfind("--config=", 0) == 0) {
            config_path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (!config_path.empty() && !args.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read config " << config_path << "\n";
            return kExitInvalid;
        }
        try {
            const auto entries = parse_config(in);
            std::vector<std::string> rest(args.begin() + 1, args.end());
            rest = splice_config(entries, rest, {"family"});
            rest.insert(rest.begin(), args.front());
            args = std::move(rest);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInvalid;
        }
    }

    Options o;
    CLI::App app{"Relative single-photon absorption rates of identical atom pairs"};
    app.require_subcommand(1);

    auto* rate = app.add_subcommand("rate", "Evaluate one overlap value");
    add_scenario_options(*rate, o);
    rate->add_option("--c", o.c, "Swept overlap value")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Sweep the overlap parameter and emit CSV");
    add_scenario_options(*sweep, o);
    sweep->add_option("--case", o.cases, "Coefficient case a_re,a_im,b_re,b_im (repeatable)");
    sweep->add_option("--sweep-pair", o.sweep_pair, "Custom scenario: pair x:y set to the swept value");
    sweep->add_option("--c-min", o.c_min, "Lower end of the c grid")->capture_default_str();
    sweep->add_option("--c-max", o.c_max, "Upper end of the c grid")->capture_default_str();
    sweep->add_option("--steps", o.steps, "Grid points, inclusive of both ends")->capture_default_str();

    auto* figures = app.add_subcommand("figures", "Write the rate-curve CSV panels and reports");
    figures->add_option("target", o.target, "fig2, fig3, fig4 or all")->required()->check(
        CLI::IsMember({"fig2", "fig3", "fig4", "all"}));
    figures->add_option("--out", o.out, "Output directory (default .)");
    figures->add_option("--steps", o.steps, "Grid points per curve")->capture_default_str();
    figures->add_option("--alpha0", o.alpha0, "One-recoil coefficient")->capture_default_str();
    figures->add_option("--config", o.config, "key = value config file; flags override it");

    auto* scan = app.add_subcommand("exclusion-scan", "Compare norm- and formula-based exclusion on a grid");
    scan->add_option("--a-values", o.a_values, "Explicit a values (b = sqrt(1-a^2))")->delimiter(',');
    scan->add_option("--a-steps", o.a_steps, "Angle grid size when --a-values is absent")->capture_default_str();
    scan->add_option("--c-min", o.c_min, "Lower end of the c grid")->capture_default_str();
    scan->add_option("--c-max", o.c_max, "Upper end of the c grid")->capture_default_str();
    scan->add_option("--steps", o.steps, "c grid points")->capture_default_str();
    scan->add_option("--alpha0", o.alpha0, "One-recoil coefficient")->capture_default_str();
    scan->add_option("--out", o.out, "Output file (default standard output)");
    scan->add_option("--config", o.config, "key = value config file; flags override it");

    auto* verify = app.add_subcommand("verify", "Check the closed form against the formal oracle");
    verify->add_option("--seed", o.seed, "Random stream seed")->capture_default_str();
    verify->add_option("--trials", o.trials, "Number of sampled configurations")->capture_default_str();
    verify->add_option("--tolerance", o.tolerance, "Maximum allowed |closed - oracle|")->capture_default_str();
    verify->add_option("--alpha0", o.alpha0, "One-recoil coefficient")->capture_default_str();
    verify->add_option("--out", o.out, "Output file (default standard output)");
    verify->add_option("--config", o.config, "key = value config file; flags override it");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (rate->parsed()) {
            Options single = o;
            single.c_min = single.c_max = o.c;
            single.steps = 1;
            auto cfg = make_sweep_config(single, *rate);
            if (cfg.scenario.choice == Choice::custom && !cfg.scenario.swept_pair && rate->count("--c"))
                throw std::invalid_argument("--c has no effect on a custom scenario without a swept pair");
            const auto rows = run_sweep(cfg);
            return with_output(o.out, [&](std::ostream& os) {
                write_sweep_csv(os, rows);
                return kExitOk;
            });
        }
        if (sweep->parsed()) {
            const auto rows = run_sweep(make_sweep_config(o, *sweep));
            return with_output(o.out, [&](std::ostream& os) {
                write_sweep_csv(os, rows);
                return kExitOk;
            });
        }
        if (figures->parsed()) {
            const FigureTarget target = o.target == "fig2"   ? FigureTarget::fig2
                                      : o.target == "fig3" ? FigureTarget::fig3
                                      : o.target == "fig4" ? FigureTarget::fig4
                                                           : FigureTarget::all;
            if (o.steps < 1) throw std::invalid_argument("steps must be positive");
            const auto files = build_figures(target, o.steps, o.alpha0);
            const std::filesystem::path dir = o.out.empty() ? "." : o.out;
            write_figures(files, dir);
            for (const auto& f : files) std::cout << (dir / f.name).string() << "\n";
            return kExitOk;
        }
        if (scan->parsed()) {
            if (!(o.c_min >= 0.0 && o.c_min <= o.c_max && o.c_max <= 1.0))
                throw std::invalid_argument("need 0 <= c-min <= c-max <= 1");
            const auto a_grid = o.a_values.empty() ? angle_a_grid(o.a_steps) : explicit_a_grid(o.a_values);
            const auto rows = run_exclusion_scan(a_grid, linear_grid(o.c_min, o.c_max, o.steps), o.alpha0);
            const int rc = with_output(o.out, [&](std::ostream& os) {
                write_scan_csv(os, rows);
                return kExitOk;
            });
            if (rc != kExitOk) return rc;
            const auto disagree = std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) {
                return r.excluded_by_norm != r.excluded_by_formula;
            });
            if (disagree) {
                std::cerr << "error: norm- and formula-based exclusion disagree on " << disagree << " rows\n";
                return kExitFailure;
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            return with_output(o.out, [&](std::ostream& os) {
                return run_verify(o.seed, o.trials, o.tolerance, o.alpha0, os);
            });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
