#include "pairabs/rates.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pairabs {

namespace {

// Bracket accessor bound to one table. Starred labels are spelled with a
// trailing call to star() so each line reads like the bracket it computes.
struct Brackets {
    const OverlapTable& t;
    Amplitude operator()(const CmLabel& x, const CmLabel& y) const { return t.get(x, y); }
};

}  // namespace

double initial_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    using namespace labels;
    const Brackets br{table};
    const double s = sign_of(stats);
    const Amplitude a = coeffs.a, b = coeffs.b;
    const Amplitude ab = std::conj(a) * b;

    return 2.0 * std::norm(a) * (1.0 + s * std::norm(br(psi, phi)))
         + 2.0 * std::norm(b) * (1.0 + s * std::norm(br(varphi, chi)))
         + 4.0 * (ab * br(psi, varphi) * br(phi, chi)).real()
         + s * 4.0 * (ab * br(psi, chi) * br(phi, varphi)).real();
}

double final_norm_sq(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    using namespace labels;
    const Brackets br{table};
    const double s = sign_of(stats);
    const Amplitude a = coeffs.a, b = coeffs.b;
    const Amplitude ab = std::conj(a) * b;
    const Amplitude ba = a * std::conj(b);

    return 4.0 * (std::norm(a) + std::norm(b))
         + 4.0 * (ab * br(psi.star(), varphi.star()) * br(phi, chi)).real()
         + 4.0 * (ba * br(chi.star(), phi.star()) * br(varphi, psi)).real()
         + s * 4.0 * std::norm(a) * (br(psi.star(), phi.star()) * br(phi, psi)).real()
         + s * 4.0 * (ab * br(psi.star(), chi.star()) * br(phi, varphi)).real()
         + s * 4.0 * (ba * br(varphi.star(), phi.star()) * br(chi, psi)).real()
         + s * 4.0 * std::norm(b) * (br(varphi.star(), chi.star()) * br(chi, varphi)).real();
}

Amplitude absorption_bracket(const SuperpositionCoefficients& coeffs, const OverlapTable& table,
                             Statistics stats) {
    using namespace labels;
    const Brackets br{table};
    const double s = sign_of(stats);
    const Amplitude a = coeffs.a, b = coeffs.b;
    const double aa = std::norm(a), bb = std::norm(b);
    const Amplitude ab = std::conj(a) * b;
    const Amplitude ba = a * std::conj(b);

    const Amplitude direct = aa * (br(psi.star(), psi) + br(phi.star(), phi))
                           + bb * (br(varphi.star(), varphi) + br(chi.star(), chi))
                           + ab * br(psi.star(), varphi) * br(phi, chi)
                           + ab * br(phi.star(), chi) * br(psi, varphi)
                           + ba * br(varphi.star(), psi) * br(chi, phi)
                           + ba * br(chi.star(), phi) * br(varphi, psi);

    const Amplitude exchange = ab * br(psi.star(), chi) * br(phi, varphi)
                             + ba * br(varphi.star(), phi) * br(chi, psi)
                             + ab * br(phi.star(), varphi) * br(psi, chi)
                             + ba * br(chi.star(), psi) * br(varphi, phi)
                             + aa * br(psi.star(), phi) * br(phi, psi)
                             + aa * br(phi.star(), psi) * br(psi, phi)
                             + bb * br(varphi.star(), chi) * br(chi, varphi)
                             + bb * br(chi.star(), varphi) * br(varphi, chi);

    return direct + s * exchange;
}

bool exclusion_check(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    const double scale = 2.0 * (std::norm(coeffs.a) + std::norm(coeffs.b));
    return initial_norm_sq(coeffs, table, stats) < kExclusionEpsilon * scale;
}

Amplitude matrix_element(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    if (exclusion_check(coeffs, table, stats))
        throw ExcludedStateError(std::string("initial ") + to_string(stats) + " state is null (excluded)");
    const double n0 = 1.0 / std::sqrt(initial_norm_sq(coeffs, table, stats));
    const double nf = 1.0 / std::sqrt(final_norm_sq(coeffs, table, stats));
    return 2.0 * n0 * nf * absorption_bracket(coeffs, table, stats);
}

Amplitude matrix_element_product(const CmLabel& eta, const CmLabel& mu, const OverlapTable& table) {
    return (table.get(eta.star(), eta) + table.get(mu.star(), mu)) / std::numbers::sqrt2;
}

RateResult relative_rate(const SuperpositionCoefficients& coeffs, const OverlapTable& table, Statistics stats) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    RateResult res{};
    res.m_pro = matrix_element_product(labels::eta, labels::mu, table);
    const double nf_sq = final_norm_sq(coeffs, table, stats);
    const double scale = 4.0 * (std::norm(coeffs.a) + std::norm(coeffs.b));
    res.nf = nf_sq < kExclusionEpsilon * scale ? nan : 1.0 / std::sqrt(nf_sq);
    res.excluded = exclusion_check(coeffs, table, stats);
    if (res.excluded) {
        res.n0 = nan;
        res.m = {nan, nan};
        res.r = nan;
        return res;
    }
    res.n0 = 1.0 / std::sqrt(initial_norm_sq(coeffs, table, stats));
    res.m = 2.0 * res.n0 * res.nf * absorption_bracket(coeffs, table, stats);
    res.r = std::norm(res.m) / std::norm(res.m_pro);
    return res;
}

}  // namespace pairabs
