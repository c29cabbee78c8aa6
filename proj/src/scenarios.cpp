#include "pairabs/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pairabs {

namespace {

constexpr double kNormTolerance = 1e-12;

const std::vector<CmLabel>& standard_labels() {
    static const std::vector<CmLabel> l{labels::psi, labels::phi, labels::varphi, labels::chi};
    return l;
}

void check_unit(Amplitude x, Amplitude y, const char* what) {
    if (std::abs(std::norm(x) + std::norm(y) - 1.0) > kNormTolerance)
        throw std::invalid_argument(std::string("exclusion family coefficients ") + what + " are not normalized");
}

}  // namespace

RecoilModel::RecoilModel(double a0) : alpha0(a0) {
    if (!(a0 > 0.0 && a0 <= 1.0)) throw std::invalid_argument("alpha0 must lie in (0, 1]");
}

const char* to_string(Choice c) {
    switch (c) {
        case Choice::i: return "i";
        case Choice::ii: return "ii";
        case Choice::iii: return "iii";
        case Choice::iv: return "iv";
        case Choice::custom: return "custom";
    }
    return "?";
}

std::optional<Choice> parse_choice(const std::string& s) {
    if (s == "i") return Choice::i;
    if (s == "ii") return Choice::ii;
    if (s == "iii") return Choice::iii;
    if (s == "iv") return Choice::iv;
    if (s == "custom") return Choice::custom;
    return std::nullopt;
}

ExclusionFamily::ExclusionFamily(Amplitude c_, Amplitude d_, Amplitude e_, Amplitude f_, Amplitude g_,
                                 Amplitude h_)
    : c(c_), d(d_), e(e_), f(f_), g(g_), h(h_) {
    check_unit(c, d, "(c, d)");
    check_unit(e, f, "(e, f)");
    check_unit(g, h, "(g, h)");
}

ExclusionFamily ExclusionFamily::perpendicular_construction(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("overlap c must lie in [0, 1]");
    const double d = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double s = kInvSqrt2;
    return {c, d, s, s, (c + d) * s, (c - d) * s};
}

SuperpositionCoefficients::SuperpositionCoefficients(Amplitude a_, Amplitude b_) : a(a_), b(b_) {
    if (a == Amplitude{0.0} && b == Amplitude{0.0})
        throw std::invalid_argument("superposition coefficients a and b are both zero");
    for (double v : {a.real(), a.imag(), b.real(), b.imag()})
        if (!std::isfinite(v)) throw std::invalid_argument("superposition coefficients must be finite");
}

SuperpositionCoefficients SuperpositionCoefficients::unit(double a) {
    return {a, std::sqrt(std::max(0.0, 1.0 - a * a))};
}

double alpha_pair(const RecoilModel& model, Amplitude base_overlap) {
    return model.alpha0 + (1.0 - model.alpha0) * base_overlap.real();
}

void add_recoil_entries(OverlapTable& table, const std::vector<CmLabel>& base, const RecoilModel& model) {
    for (const auto& x : base) {
        table.set(x.star(), x, model.alpha0);
        for (const auto& y : base) {
            if (x == y) continue;
            const Amplitude xy = table.get(x, y);
            table.set(x.star(), y, model.alpha0 * xy);
            const double alpha = alpha_pair(model, xy);
            table.set(x.star(), y.star(), alpha * alpha * xy);
        }
    }
    for (const auto& ref : {labels::eta, labels::mu}) table.set(ref.star(), ref, model.alpha0);
}

OverlapTable build_choice_table(const ScenarioSpec& spec, double c, const RecoilModel& model) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("overlap c must lie in [0, 1]");
    using namespace labels;
    OverlapTable t;

    if (spec.choice == Choice::custom) {
        std::vector<CmLabel> base = standard_labels();
        auto note = [&](const CmLabel& l) {
            if (l.starred) throw std::invalid_argument("custom overlaps must use unstarred labels");
            if (std::find(base.begin(), base.end(), l) == base.end()) base.push_back(l);
        };
        for (const auto& [pair, v] : spec.fixed_overlaps) {
            note(pair.first);
            note(pair.second);
            t.set(pair.first, pair.second, v);
        }
        if (spec.swept_pair) {
            note(spec.swept_pair->first);
            note(spec.swept_pair->second);
            t.set(spec.swept_pair->first, spec.swept_pair->second, c);
        }
        // unlisted pairs are orthogonal
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                if (!t.contains(base[i], base[j])) t.set(base[i], base[j], 0.0);
        add_recoil_entries(t, base, model);
        return t;
    }

    double psi_phi = 0, psi_varphi = 0, varphi_chi = 0;
    switch (spec.choice) {
        case Choice::i: psi_phi = c, psi_varphi = c, varphi_chi = 0.9; break;
        case Choice::ii: psi_phi = 0.8, psi_varphi = c, varphi_chi = 0.9; break;
        case Choice::iii: psi_phi = c, psi_varphi = 0.9, varphi_chi = c; break;
        case Choice::iv: psi_phi = 0.8, psi_varphi = 0.9, varphi_chi = c; break;
        case Choice::custom: break;
    }
    t.set(psi, phi, psi_phi);
    t.set(psi, varphi, psi_varphi);
    t.set(varphi, chi, varphi_chi);
    t.set(psi, chi, t.get(psi, varphi) * t.get(varphi, chi));
    t.set(phi, varphi, t.get(phi, psi) * t.get(psi, varphi));
    t.set(phi, chi, t.get(phi, varphi) * t.get(varphi, chi));
    add_recoil_entries(t, standard_labels(), model);
    return t;
}

OverlapTable build_family_table(const ExclusionFamily& fam, const RecoilModel& model) {
    using namespace labels;
    struct Expansion {
        CmLabel label;
        Amplitude on_psi, on_zeta;
    };
    const std::vector<Expansion> states{
        {psi, 1.0, 0.0}, {zeta, 0.0, 1.0}, {phi, fam.c, fam.d}, {varphi, fam.e, fam.f}, {chi, fam.g, fam.h}};

    OverlapTable t;
    std::vector<CmLabel> base;
    for (std::size_t i = 0; i < states.size(); ++i) {
        base.push_back(states[i].label);
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const auto& x = states[i];
            const auto& y = states[j];
            t.set(x.label, y.label, std::conj(x.on_psi) * y.on_psi + std::conj(x.on_zeta) * y.on_zeta);
        }
    }
    add_recoil_entries(t, base, model);
    return t;
}

Amplitude family_exclusion_coefficient(const SuperpositionCoefficients& coeffs, const ExclusionFamily& fam) {
    return coeffs.a * fam.d + coeffs.b * (fam.e * fam.h - fam.f * fam.g);
}

}  // namespace pairabs
