// Brute-force matrix element: the initial and final states are built as
// formal tensor monomials, the single-absorption operator is applied
// symbolically and the bracket is evaluated term by term.
//
// Absorption convention, per atom: |x>|g> -> |x>|e>, |x>|e> -> 0. The CM
// label is untouched; recoil lives only in the starred labels of the final
// state.

#pragma once

#include "pairabs/algebra.hpp"
#include "pairabs/scenarios.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace pairabs::oracle {

/// a(psi,phi +- phi,psi) + b(varphi,chi +- chi,varphi), both atoms in g. Unnormalized.
FormalState build_initial(const SuperpositionCoefficients& coeffs, Statistics stats);

/// a(|I> + |II>) + b(|III> + |IV>), unnormalized, 8 monomials.
FormalState build_final(const SuperpositionCoefficients& coeffs, Statistics stats);

/// (A (x) 1 + 1 (x) A)|state>.
FormalState apply_absorption(const FormalState& state);

enum class NormMode {
    closed_form,  // N0, N_f from the closed-form expressions
    formal,       // N0, N_f from formal inner products of the built states
};

double formal_initial_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);
double formal_final_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);

/// N0 N_f <final|A|initial>. Throws ExcludedStateError on a null initial state.
Amplitude oracle_matrix_element(const SuperpositionCoefficients& coeffs, const OverlapTable& table,
                                Statistics stats, NormMode mode = NormMode::closed_form);

// ---------------------------------------------------------------------------
// Randomized equivalence harness

struct RandomConfig {
    SuperpositionCoefficients coeffs{1.0, 0.0};
    OverlapTable table;
    Statistics stats = Statistics::boson;
};

/// Deterministic sample `index` of stream `seed`: four random real unit
/// vectors in R^4 define the unstarred overlaps, (a, b) is uniform on the
/// complex unit sphere, statistics alternate with the index parity.
RandomConfig random_config(std::uint64_t seed, std::uint64_t index, const RecoilModel& model);

using MatrixElementFn = std::function<Amplitude(const SuperpositionCoefficients&, const OverlapTable&, Statistics)>;

struct VerifyReport {
    std::uint64_t trials = 0;
    std::uint64_t skipped_excluded = 0;
    double max_dev_m = 0.0;         // closed form vs oracle, closed-form norms
    double max_dev_m_formal = 0.0;  // closed form vs oracle, formal norms
    double max_dev_n0 = 0.0;        // closed vs formal N0
    double max_dev_nf = 0.0;        // closed vs formal N_f
    std::optional<std::uint64_t> first_violation;
    bool ok() const { return !first_violation; }
};

/// Compares `closed_form` against the oracle on `trials` samples. The
/// closed-form function is injectable so harness sanity can be tested.
VerifyReport verify_equivalence(std::uint64_t seed, std::uint64_t trials, double tolerance,
                                const RecoilModel& model, const MatrixElementFn& closed_form);

}  // namespace pairabs::oracle
