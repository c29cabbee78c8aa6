#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "pairabs/rates.hpp"

#include <numbers>

using namespace pairabs;
using namespace pairabs::labels;
using pairabs::testing::Gen;

namespace {

constexpr auto B = Statistics::boson;
constexpr auto F = Statistics::fermion;

ScenarioSpec spec_of(Choice c) {
    ScenarioSpec s;
    s.choice = c;
    return s;
}

OverlapTable orthogonal_table(const RecoilModel& model = {}) { return build_choice_table(ScenarioSpec{Choice::custom}, 0.0, model); }

OverlapTable psi_phi_table(double c, const RecoilModel& model = {}) {
    ScenarioSpec s;
    s.choice = Choice::custom;
    s.swept_pair = std::pair{psi, phi};
    return build_choice_table(s, c, model);
}

// Hand reductions of the general expressions for choice (i) with b = 0.
double r_boson_i(double c) {
    const double alpha = 0.9 + 0.1 * c;
    return (1 + c * c) / (1 + alpha * alpha * c * c);
}
double r_fermion_i(double c) {
    const double alpha = 0.9 + 0.1 * c;
    return (1 - c * c) / (1 - alpha * alpha * c * c);
}

}  // namespace

TEST_CASE("initial_norm_sq examples") {
    CHECK(initial_norm_sq({1.0, 0.0}, orthogonal_table(), B) == doctest::Approx(2.0));
    for (double c : {0.1, 0.5, 0.9}) CHECK(initial_norm_sq({1.0, 0.0}, psi_phi_table(c), B) == doctest::Approx(2 + 2 * c * c));
    CHECK(initial_norm_sq({1.0, 0.0}, psi_phi_table(1.0), F) == 0.0);
}

TEST_CASE("initial_norm_sq uses <varphi|chi> in the |b|^2 term") {
    ScenarioSpec s;
    s.choice = Choice::custom;
    s.fixed_overlaps[{varphi, chi}] = 0.5;
    s.fixed_overlaps[{psi, phi}] = 0.2;
    const auto t = build_choice_table(s, 0.0, RecoilModel{});
    // 2|b|^2 (1 + |<varphi|chi>|^2), cross terms vanish
    CHECK(initial_norm_sq({0.0, 1.0}, t, B) == doctest::Approx(2 * (1 + 0.25)).epsilon(1e-15));
}

TEST_CASE("final_norm_sq examples") {
    CHECK(final_norm_sq({1.0, 0.0}, orthogonal_table(), B) == doctest::Approx(4.0));
    for (double c : {0.2, 0.5, 0.8}) {
        const double alpha = 0.9 + 0.1 * c;
        const auto t = build_choice_table(spec_of(Choice::i), c, RecoilModel{});
        CHECK(final_norm_sq({1.0, 0.0}, t, B) == doctest::Approx(4 * (1 + alpha * alpha * c * c)).epsilon(1e-14));
    }
    const double s = kInvSqrt2;
    CHECK(final_norm_sq({s, s}, orthogonal_table(), B) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(final_norm_sq({s, s}, orthogonal_table(), F) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("matrix_element examples") {
    CHECK_CLOSE(matrix_element({1.0, 0.0}, orthogonal_table(), B), std::numbers::sqrt2 * 0.9, 1e-14);
    CHECK_CLOSE(matrix_element({1.0, 0.0}, orthogonal_table(), B), 1.2727922061357857, 1e-14);

    const auto t = build_choice_table(spec_of(Choice::i), 0.5, RecoilModel{});
    const double c = 0.5, alpha = 0.95;
    const double expected = std::numbers::sqrt2 * 0.9 * std::sqrt(1 + c * c) / std::sqrt(1 + alpha * alpha * c * c);
    CHECK_CLOSE(matrix_element({1.0, 0.0}, t, B), expected, 1e-14);
    CHECK_CLOSE(matrix_element({1.0, 0.0}, t, B), 1.28539, 5e-6);

    CHECK_THROWS_AS(matrix_element({1.0, 0.0}, psi_phi_table(1.0), F), ExcludedStateError);
}

TEST_CASE("matrix_element_product") {
    CHECK_CLOSE(matrix_element_product(eta, mu, orthogonal_table()), 1.2727922061357857, 1e-15);
    CHECK_CLOSE(matrix_element_product(eta, mu, orthogonal_table(RecoilModel{1.0})), std::numbers::sqrt2, 1e-15);
    CHECK_CLOSE(matrix_element_product(eta, mu, orthogonal_table(RecoilModel{0.5})), 0.7071067811865476, 1e-15);
    CHECK_THROWS_AS(matrix_element_product(eta, mu, OverlapTable{}), MissingOverlapError);
}

TEST_CASE("relative_rate examples") {
    const auto orth = relative_rate({1.0, 0.0}, orthogonal_table(), B);
    CHECK_FALSE(orth.excluded);
    CHECK(orth.r == doctest::Approx(1.0).epsilon(1e-14));

    for (int k = 0; k <= 10; ++k) {
        const double c = k / 10.0;
        const auto t = build_choice_table(spec_of(Choice::i), c, RecoilModel{});
        CHECK(relative_rate({1.0, 0.0}, t, B).r == doctest::Approx(r_boson_i(c)).epsilon(1e-12));
        if (k < 10) CHECK(relative_rate({1.0, 0.0}, t, F).r == doctest::Approx(r_fermion_i(c)).epsilon(1e-12));
    }
    const auto t05 = build_choice_table(spec_of(Choice::i), 0.5, RecoilModel{});
    CHECK(relative_rate({1.0, 0.0}, t05, B).r == doctest::Approx(1.0199).epsilon(5e-4));
    CHECK(relative_rate({1.0, 0.0}, t05, F).r == doctest::Approx(0.9685).epsilon(5e-4));

    const auto t1 = build_choice_table(spec_of(Choice::i), 1.0, RecoilModel{});
    CHECK(relative_rate({1.0, 0.0}, t1, B).r == doctest::Approx(1.0).epsilon(1e-12));
    const auto ex = relative_rate({1.0, 0.0}, t1, F);
    CHECK(ex.excluded);
    CHECK(std::isnan(ex.r));
    CHECK(std::isnan(ex.n0));
    CHECK_FALSE(std::isinf(ex.nf));
}

TEST_CASE("exclusion_check") {
    CHECK(exclusion_check({1.0, 0.0}, psi_phi_table(1.0), F));
    CHECK_FALSE(exclusion_check({1.0, 0.0}, psi_phi_table(1.0), B));

    const double s = kInvSqrt2;
    for (double c : {0.0, 0.3, 0.9}) {
        const auto t = build_family_table(ExclusionFamily::perpendicular_construction(c), RecoilModel{});
        CHECK(exclusion_check({s, s}, t, F));
        CHECK_FALSE(exclusion_check({0.6, 0.8}, t, F));
    }
}

TEST_CASE("property: b = 0 makes varphi/chi brackets irrelevant") {
    Gen gen(3);
    for (int i = 0; i < 50; ++i) {
        ScenarioSpec s;
        s.choice = Choice::custom;
        s.fixed_overlaps[{psi, phi}] = gen.uniform(0, 0.95);
        const double other = gen.uniform(0, 0.95);
        auto s2 = s;
        s.fixed_overlaps[{varphi, chi}] = other;
        s2.fixed_overlaps[{varphi, chi}] = gen.uniform(0, 0.95);
        const auto t1 = build_choice_table(s, 0.0, RecoilModel{});
        const auto t2 = build_choice_table(s2, 0.0, RecoilModel{});
        const SuperpositionCoefficients k{gen.amplitude(), 0.0};
        for (auto st : {B, F}) {
            CHECK(matrix_element(k, t1, st) == matrix_element(k, t2, st));
            CHECK(relative_rate(k, t1, st).r == relative_rate(k, t2, st).r);
        }
    }
}

TEST_CASE("property: zero overlaps make bosons and fermions coincide") {
    Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        const SuperpositionCoefficients k{gen.amplitude(), gen.amplitude()};
        const auto t = orthogonal_table(RecoilModel{gen.uniform(0.3, 1.0)});
        const auto rb = relative_rate(k, t, B);
        const auto rf = relative_rate(k, t, F);
        CHECK(rb.r == doctest::Approx(rf.r).epsilon(1e-12));
    }
    CHECK(relative_rate({1.0, 0.0}, orthogonal_table(), F).r == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("choice (i): boson interior maximum and b != 0 exchange at c = 0") {
    const auto at = [](double c) { return build_choice_table(spec_of(Choice::i), c, RecoilModel{}); };
    const double r0 = relative_rate({1.0, 0.0}, at(0.0), B).r;
    const double rh = relative_rate({1.0, 0.0}, at(0.5), B).r;
    const double r1 = relative_rate({1.0, 0.0}, at(1.0), B).r;
    CHECK(r0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rh > 1.0);

    const auto k = SuperpositionCoefficients::unit(0.8);
    CHECK(std::abs(relative_rate(k, at(0.0), B).r - relative_rate(k, at(0.0), F).r) > 1e-3);
}

TEST_CASE("property: exclusion biconditional on the perpendicular family") {
    for (int ia = 0; ia <= 50; ++ia) {
        const double theta = std::numbers::pi / 2 * (1.0 - ia / 50.0);
        const SuperpositionCoefficients k{std::cos(theta), std::sin(theta)};
        for (int ic = 0; ic <= 50; ++ic) {
            const double c = ic / 50.0;
            const auto fam = ExclusionFamily::perpendicular_construction(c);
            const auto t = build_family_table(fam, RecoilModel{});
            const bool by_norm = exclusion_check(k, t, F);
            const bool by_formula = std::abs(family_exclusion_coefficient(k, fam)) < 1e-10;
            INFO("a=" << k.a.real() << " c=" << c);
            CHECK(by_norm == by_formula);
        }
    }
}

TEST_CASE("property: |M| is invariant under a global phase") {
    Gen gen(17);
    for (int i = 0; i < 200; ++i) {
        const auto t = build_choice_table(spec_of(static_cast<Choice>(gen.integer(0, 3))), gen.uniform(0, 0.99),
                                          RecoilModel{});
        const SuperpositionCoefficients k{gen.amplitude(), gen.amplitude()};
        const Amplitude phase = std::polar(1.0, gen.uniform(0, 2 * std::numbers::pi));
        const SuperpositionCoefficients kp{phase * k.a, phase * k.b};
        for (auto st : {B, F}) {
            if (exclusion_check(k, t, st)) continue;
            CHECK(std::abs(matrix_element(kp, t, st)) == doctest::Approx(std::abs(matrix_element(k, t, st))).epsilon(1e-12));
        }
    }
}

TEST_CASE("RateResult invariant: r = |m|^2 / |m_pro|^2") {
    Gen gen(23);
    for (int i = 0; i < 100; ++i) {
        const auto t = build_choice_table(spec_of(static_cast<Choice>(gen.integer(0, 3))), gen.uniform(0, 1), RecoilModel{});
        const SuperpositionCoefficients k{gen.amplitude(), gen.amplitude()};
        for (auto st : {B, F}) {
            const auto res = relative_rate(k, t, st);
            if (res.excluded) {
                CHECK(std::isnan(res.r));
                continue;
            }
            CHECK(res.r == doctest::Approx(std::norm(res.m) / std::norm(res.m_pro)).epsilon(1e-12));
            CHECK(res.r >= 0.0);
        }
    }
}
