#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "penta/penta.hpp"

namespace test {

using penta::PentaComplex;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

/// Fixed-seed source of random 5-complex numbers.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    PentaComplex number(double lo = -10.0, double hi = 10.0) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }
    /// v+ in [vlo, vhi], plane radii in [rlo, rhi], any azimuth.
    PentaComplex with_canonical(double vlo, double vhi, double rlo, double rhi) {
        return penta::from_canonical(penta::CanonicalForm::from_parts(
            uniform(vlo, vhi), std::polar(uniform(rlo, rhi), uniform(0.0, kTau)), std::polar(uniform(rlo, rhi), uniform(0.0, kTau))));
    }

private:
    std::mt19937_64 rng_;
};

inline ::testing::AssertionResult Near(const PentaComplex& a, const PentaComplex& b, double tol) {
    const double d = penta::max_abs_diff(a, b);
    if (d <= tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << penta::to_text(a) << " vs " << penta::to_text(b) << " differ by " << d
                                         << " > " << tol;
}

/// Expects `stmt` to throw penta::Error of the given kind.
#define EXPECT_PENTA_ERROR(stmt, expected_kind)                                       \
    do {                                                                              \
        try {                                                                         \
            (void)(stmt);                                                             \
            ADD_FAILURE() << "expected " << penta::to_string(expected_kind);          \
        } catch (const penta::Error& e) {                                             \
            EXPECT_EQ(e.kind(), expected_kind) << e.what();                           \
        }                                                                             \
    } while (0)

inline PentaComplex h(std::size_t k) { return PentaComplex::basis(k); }

}  // namespace test
