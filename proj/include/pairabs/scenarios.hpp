// Overlap-table builders for the four standard overlap choices, the
// two-state exclusion family and user-defined configurations.
//
// Every builder also adds the recoil entries:
//   one recoil   <x*|y>  = alpha0 <x|y>           (so <x*|x> = alpha0)
//   two recoils  <x*|y*> = alpha(x,y)^2 <x|y>,    alpha = alpha0 + (1-alpha0) Re<x|y>
// with <x*|x*> = 1, and the product-reference labels eta, mu with
// <eta*|eta> = <mu*|mu> = alpha0.

#pragma once

#include "pairabs/algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairabs {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

struct RecoilModel {
    double alpha0 = 0.9;

    RecoilModel() = default;
    explicit RecoilModel(double a0);
};

enum class Choice { i, ii, iii, iv, custom };

const char* to_string(Choice c);
std::optional<Choice> parse_choice(const std::string& s);

struct ScenarioSpec {
    Choice choice = Choice::i;
    /// Unstarred overlaps for Choice::custom.
    std::map<std::pair<CmLabel, CmLabel>, Amplitude> fixed_overlaps;
    /// For Choice::custom: the entry set to the swept parameter c, if any.
    std::optional<std::pair<CmLabel, CmLabel>> swept_pair;
    std::string sweep_parameter_name = "c";
};

/// phi = c psi + d zeta, varphi = e psi + f zeta, chi = g psi + h zeta,
/// with <zeta|psi> = 0.
class ExclusionFamily {
public:
    ExclusionFamily(Amplitude c, Amplitude d, Amplitude e, Amplitude f, Amplitude g, Amplitude h);

    /// e = f = 1/sqrt2 and chi = c varphi + d varphi_perp with
    /// varphi_perp = (psi - zeta)/sqrt2 and d = +sqrt(1 - c^2).
    static ExclusionFamily perpendicular_construction(double c);

    Amplitude c, d, e, f, g, h;
};

struct SuperpositionCoefficients {
    SuperpositionCoefficients(Amplitude a_, Amplitude b_);
    /// a real, b = sqrt(1 - a^2) real.
    static SuperpositionCoefficients unit(double a);

    Amplitude a;
    Amplitude b;
};

/// Per-pair two-recoil coefficient alpha0 + (1 - alpha0) Re(base_overlap).
double alpha_pair(const RecoilModel& model, Amplitude base_overlap);

/// Adds one- and two-recoil entries for every label in `base` plus the
/// product-reference labels. `base` must hold all pairwise unstarred overlaps.
void add_recoil_entries(OverlapTable& table, const std::vector<CmLabel>& base, const RecoilModel& model);

OverlapTable build_choice_table(const ScenarioSpec& spec, double c, const RecoilModel& model);
OverlapTable build_family_table(const ExclusionFamily& fam, const RecoilModel& model);

/// a d + b (e h - f g); the antisymmetrized family state is null iff this vanishes.
Amplitude family_exclusion_coefficient(const SuperpositionCoefficients& coeffs, const ExclusionFamily& fam);

}  // namespace pairabs
