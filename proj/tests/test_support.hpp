#pragma once

#include "pairabs/algebra.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

namespace pairabs::testing {

inline bool close(Amplitude x, Amplitude y, double tol) { return std::abs(x - y) <= tol; }

#define CHECK_CLOSE(x, y, tol)                                                              \
    do {                                                                                    \
        const ::pairabs::Amplitude cc_x_ = (x), cc_y_ = (y);                                \
        INFO("lhs=" << cc_x_ << " rhs=" << cc_y_ << " |diff|=" << std::abs(cc_x_ - cc_y_)); \
        CHECK(::pairabs::testing::close(cc_x_, cc_y_, (tol)));                              \
    } while (0)

/// Small random generator for hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double normal() { return std::normal_distribution<double>()(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Amplitude amplitude() { return {normal(), normal()}; }

    /// Random unit vector of dimension n.
    std::vector<Amplitude> unit_vector(std::size_t n, bool real) {
        std::vector<Amplitude> v(n);
        double n2 = 0.0;
        for (auto& x : v) {
            x = real ? Amplitude{normal(), 0.0} : amplitude();
            n2 += std::norm(x);
        }
        for (auto& x : v) x /= std::sqrt(n2);
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Amplitude dot(const std::vector<Amplitude>& x, const std::vector<Amplitude>& y) {
    Amplitude s{0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

/// Table over labels whose overlaps come from random unit vectors.
inline OverlapTable random_realizable_table(Gen& gen, const std::vector<CmLabel>& labels, bool real = false) {
    std::vector<std::vector<Amplitude>> vecs;
    for (std::size_t i = 0; i < labels.size(); ++i) vecs.push_back(gen.unit_vector(labels.size(), real));
    OverlapTable t;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            Amplitude v = dot(vecs[i], vecs[j]);
            if (std::abs(v) > 1.0) v /= std::abs(v);
            t.set(labels[i], labels[j], v);
        }
    return t;
}

}  // namespace pairabs::testing
