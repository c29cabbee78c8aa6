// Closed-form normalizations, absorption matrix element and relative rate
// for the (anti)symmetrized two-term superposition
//
//   |Phi> = N0 [a(|psi,phi> +- |phi,psi>) + b(|varphi,chi> +- |chi,varphi>)] |g,g>
//
// The dipole/field constant D is set to 1; it cancels in the relative rate.

#pragma once

#include "pairabs/algebra.hpp"
#include "pairabs/scenarios.hpp"

#include <stdexcept>

namespace pairabs {

class ExcludedStateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Relative exclusion threshold on <Phi|Phi> / (2(|a|^2 + |b|^2)).
inline constexpr double kExclusionEpsilon = 1e-10;

struct RateResult {
    double n0;      // NaN when excluded
    double nf;
    Amplitude m;    // NaN when excluded
    Amplitude m_pro;
    double r;       // NaN when excluded
    bool excluded;
};

/// <Phi|Phi> of the unnormalized initial state, i.e. N0^-2.
double initial_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);

/// N_f^-2 for the final state a(|I> + |II>) + b(|III> + |IV>).
double final_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);

/// The bracket sum M / (2 N0 N_f D): four direct |a|^2,|b|^2 terms, four
/// direct cross terms and eight exchange terms carrying the statistics sign.
Amplitude absorption_bracket(const SuperpositionCoefficients& coeffs, const OverlapTable& table,
                             Statistics stats);

/// Throws ExcludedStateError when the initial state is null.
Amplitude matrix_element(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);

/// (<eta*|eta> + <mu*|mu>) / sqrt2 for the product state |eta,g>|mu,g>.
Amplitude matrix_element_product(const CmLabel& eta, const CmLabel& mu, const OverlapTable& table);

bool exclusion_check(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);

RateResult relative_rate(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats);

}  // namespace pairabs
