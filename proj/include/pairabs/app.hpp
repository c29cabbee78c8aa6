// Sweep, figure, exclusion-scan and verification drivers behind the
// `pairabs` command-line tool. Everything here returns data or writes to a
// stream so it can be exercised without spawning the binary.

#pragma once

#include "pairabs/oracle.hpp"
#include "pairabs/rates.hpp"
#include "pairabs/scenarios.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pairabs::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFailure = 2;

inline constexpr const char* kSweepHeader =
    "scenario,statistics,a_re,a_im,b_re,b_im,c,alpha0,n0,nf,m_re,m_im,r,excluded";
inline constexpr const char* kScanHeader = "a,c,abs_coefficient,excluded_by_norm,excluded_by_formula";

/// Shortest decimal string that parses back to exactly `x`; NaN is "nan".
std::string format_number(double x);

/// Inclusive uniform grid; steps == 1 gives {lo}. The last point is exactly `hi`.
std::vector<double> linear_grid(double lo, double hi, int steps);

struct SweepConfig {
    ScenarioSpec scenario;
    bool family = false;  // perpendicular-construction exclusion family instead of `scenario`
    std::vector<Statistics> statistics{Statistics::boson, Statistics::fermion};
    std::vector<SuperpositionCoefficients> cases{{1.0, 0.0}};
    double c_min = 0.0;
    double c_max = 1.0;
    int steps = 101;
    double alpha0 = 0.9;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
    std::string scenario_name() const;
};

struct SweepRow {
    std::string scenario;
    Statistics stats;
    SuperpositionCoefficients coeffs;
    double c;
    double alpha0;
    RateResult result;
};

/// Overlap table for one grid point of the configured scenario.
OverlapTable scenario_table(const SweepConfig& cfg, double c);

/// Rows ordered by (case index, statistics, c ascending).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------

enum class FigureTarget { fig2, fig3, fig4, all };

struct FigureFile {
    std::string name;
    std::string content;
};

/// Per-panel CSVs plus the choice (ii) flatness and choice (iii)
/// coincidence reports, in memory.
std::vector<FigureFile> build_figures(FigureTarget target, int steps, double alpha0);
void write_figures(const std::vector<FigureFile>& files, const std::filesystem::path& dir);

/// Choice (ii), fermions: spread of N0^-2, of the bracket sum, of N_f and of R over c.
struct FlatnessEntry {
    SuperpositionCoefficients coeffs;
    double norm_spread;
    double bracket_spread;
    double nf_relative_spread;
    double r_relative_spread;  // (max - min) / min
};
std::vector<FlatnessEntry> choice_ii_flatness(int steps, double alpha0);

/// Choice (iii), fermions: max |R(a) - R(a=1)| / R(a=1) over non-excluded points.
struct CoincidenceEntry {
    SuperpositionCoefficients coeffs;
    double max_relative_deviation;
    bool exclusion_pattern_matches;
};
std::vector<CoincidenceEntry> choice_iii_coincidence(int steps, double alpha0);

// ---------------------------------------------------------------------------

struct ScanRow {
    SuperpositionCoefficients coeffs;
    double c;
    double abs_coefficient;
    bool excluded_by_norm;
    bool excluded_by_formula;
};

inline constexpr double kFormulaExclusionThreshold = 1e-10;

/// a = cos(theta), b = sin(theta) with theta uniform on [0, pi/2], a ascending.
/// An odd point count puts theta = pi/4 (a = b) on the grid.
std::vector<SuperpositionCoefficients> angle_a_grid(int points);
/// b = sqrt(1 - a^2) for each a.
std::vector<SuperpositionCoefficients> explicit_a_grid(const std::vector<double>& a_values);

std::vector<ScanRow> run_exclusion_scan(const std::vector<SuperpositionCoefficients>& a_grid,
                                        const std::vector<double>& c_grid, double alpha0);
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// ---------------------------------------------------------------------------

/// Prints the verification summary and returns an exit code.
int run_verify(std::uint64_t seed, std::int64_t trials, double tolerance, double alpha0, std::ostream& out,
               const oracle::MatrixElementFn& closed_form = matrix_element);

// ---------------------------------------------------------------------------

/// `key = value` lines, `#` comments, blank lines ignored. Order preserved.
std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in);

/// Turns config entries into command-line tokens and places them ahead of
/// `args` (which start after the subcommand name), skipping any key that
/// `args` already sets. `flag_keys` are boolean switches.
std::vector<std::string> splice_config(const std::vector<std::pair<std::string, std::string>>& entries,
                                       const std::vector<std::string>& args,
                                       const std::vector<std::string>& flag_keys);

}  // namespace pairabs::app
