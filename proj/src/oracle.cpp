#include "pairabs/oracle.hpp"

#include "pairabs/rates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

namespace pairabs::oracle {

namespace {

using labels::chi;
using labels::phi;
using labels::psi;
using labels::varphi;
using Internal::e;
using Internal::g;

void check_not_excluded(double norm_sq, const SuperpositionCoefficients& coeffs, Statistics stats) {
    const double scale = 2.0 * (std::norm(coeffs.a) + std::norm(coeffs.b));
    if (norm_sq < kExclusionEpsilon * scale)
        throw ExcludedStateError(std::string("initial ") + to_string(stats) + " state is null (excluded)");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// std distributions are implementation-defined; these are not.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (spare_) {
            double v = *spare_;
            spare_.reset();
            return v;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        spare_ = rad * std::sin(2.0 * std::numbers::pi * u2);
        return rad * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 gen_;
    std::optional<double> spare_;
};

}  // namespace

FormalState build_initial(const SuperpositionCoefficients& coeffs, Statistics stats) {
    return combine({{coeffs.a, symmetrize(psi, g, phi, g, stats)}, {coeffs.b, symmetrize(varphi, g, chi, g, stats)}});
}

FormalState build_final(const SuperpositionCoefficients& coeffs, Statistics stats) {
    const FormalState one = symmetrize(psi.star(), e, phi, g, stats);
    const FormalState two = symmetrize(psi, g, phi.star(), e, stats);
    const FormalState three = symmetrize(varphi.star(), e, chi, g, stats);
    const FormalState four = symmetrize(varphi, g, chi.star(), e, stats);
    return combine({{coeffs.a, one}, {coeffs.a, two}, {coeffs.b, three}, {coeffs.b, four}});
}

FormalState apply_absorption(const FormalState& state) {
    FormalState out;
    for (const auto& t : state.terms()) {
        if (t.int1 == g) out.add({t.weight, t.cm1, e, t.cm2, t.int2});
        if (t.int2 == g) out.add({t.weight, t.cm1, t.int1, t.cm2, e});
    }
    return out;
}

double formal_initial_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    const FormalState s = build_initial(coeffs, stats);
    return inner_product(s, s, table).real();
}

double formal_final_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    const FormalState s = build_final(coeffs, stats);
    return inner_product(s, s, table).real();
}

Amplitude oracle_matrix_element(const SuperpositionCoefficients& coeffs, const OverlapTable& table,
                                Statistics stats, NormMode mode) {
    double n0_sq = 0.0, nf_sq = 0.0;
    if (mode == NormMode::closed_form) {
        n0_sq = initial_norm_sq(coeffs, table, stats);
        nf_sq = final_norm_sq(coeffs, table, stats);
    } else {
        n0_sq = formal_initial_norm_sq(coeffs, table, stats);
        nf_sq = formal_final_norm_sq(coeffs, table, stats);
    }
    check_not_excluded(n0_sq, coeffs, stats);

    const FormalState bra = build_final(coeffs, stats);
    const FormalState ket = apply_absorption(build_initial(coeffs, stats));
    return inner_product(bra, ket, table) / std::sqrt(n0_sq * nf_sq);
}

RandomConfig random_config(std::uint64_t seed, std::uint64_t index, const RecoilModel& model) {
    Sampler rng(splitmix64(seed ^ splitmix64(index)));

    std::array<std::array<double, 4>, 4> vecs{};
    for (auto& v : vecs) {
        double n2 = 0.0;
        while (n2 < 1e-6) {
            n2 = 0.0;
            for (auto& x : v) {
                x = rng.normal();
                n2 += x * x;
            }
        }
        for (auto& x : v) x /= std::sqrt(n2);
    }

    std::array<double, 4> ab{};
    double n2 = 0.0;
    while (n2 < 1e-6) {
        n2 = 0.0;
        for (auto& x : ab) {
            x = rng.normal();
            n2 += x * x;
        }
    }
    for (auto& x : ab) x /= std::sqrt(n2);

    const std::array<CmLabel, 4> names{psi, phi, varphi, chi};
    OverlapTable table;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < 4; ++k) dot += vecs[i][k] * vecs[j][k];
            table.set(names[i], names[j], std::clamp(dot, -1.0, 1.0));
        }
    }
    add_recoil_entries(table, {names.begin(), names.end()}, model);

    return RandomConfig{SuperpositionCoefficients{{ab[0], ab[1]}, {ab[2], ab[3]}}, std::move(table),
                        index % 2 == 0 ? Statistics::boson : Statistics::fermion};
}

VerifyReport verify_equivalence(std::uint64_t seed, std::uint64_t trials, double tolerance,
                                const RecoilModel& model, const MatrixElementFn& closed_form) {
    VerifyReport rep;
    rep.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const RandomConfig cfg = random_config(seed, i, model);
        if (exclusion_check(cfg.coeffs, cfg.table, cfg.stats)) {
            ++rep.skipped_excluded;
            continue;
        }
        const Amplitude closed = closed_form(cfg.coeffs, cfg.table, cfg.stats);
        const Amplitude brute = oracle_matrix_element(cfg.coeffs, cfg.table, cfg.stats, NormMode::closed_form);
        const Amplitude formal = oracle_matrix_element(cfg.coeffs, cfg.table, cfg.stats, NormMode::formal);

        const double n0 = 1.0 / std::sqrt(initial_norm_sq(cfg.coeffs, cfg.table, cfg.stats));
        const double n0_formal = 1.0 / std::sqrt(formal_initial_norm_sq(cfg.coeffs, cfg.table, cfg.stats));
        const double nf = 1.0 / std::sqrt(final_norm_sq(cfg.coeffs, cfg.table, cfg.stats));
        const double nf_formal = 1.0 / std::sqrt(formal_final_norm_sq(cfg.coeffs, cfg.table, cfg.stats));

        const double dm = std::abs(closed - brute);
        const double dmf = std::abs(closed - formal);
        const double dn0 = std::abs(n0 - n0_formal);
        const double dnf = std::abs(nf - nf_formal);
        rep.max_dev_m = std::max(rep.max_dev_m, dm);
        rep.max_dev_m_formal = std::max(rep.max_dev_m_formal, dmf);
        rep.max_dev_n0 = std::max(rep.max_dev_n0, dn0);
        rep.max_dev_nf = std::max(rep.max_dev_nf, dnf);

        // NaN deviations count as violations
        const bool bad = !(dm < tolerance && dmf < tolerance && dn0 < tolerance && dnf < tolerance);
        if (bad && !rep.first_violation) rep.first_violation = i;
    }
    return rep;
}

}  // namespace pairabs::oracle
