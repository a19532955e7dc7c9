#include "support.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace {

using namespace test;
using penta::BigInt;
using penta::ErrorKind;
using penta::PowerFamily;

TEST(Series, Examples) {
    for (int n : {1, 5, 60}) {
        EXPECT_EQ(penta::g5_series(0, 0.0, n), 1.0);
        for (int k = 1; k < 5; ++k) EXPECT_EQ(penta::g5_series(k, 0.0, n), 0.0);
    }
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) sum += penta::g5_series(k, 1.0, 40);
    EXPECT_NEAR(sum, std::numbers::e, 1e-15);
    EXPECT_PENTA_ERROR(penta::g5_series(0, 50.5, 10), ErrorKind::domain_too_large);
    EXPECT_PENTA_ERROR(penta::g5_series(5, 1.0, 10), ErrorKind::invalid_argument);
}

TEST(Series, InterleavesTheExponentialSeries) {
    // Term-by-term oracle with explicit factorials.
    for (double y : {-2.5, 0.3, 1.7}) {
        for (int k = 0; k < 5; ++k) {
            double want = 0.0;
            for (int p = 0; p < 6; ++p) want += std::pow(y, k + 5 * p) / std::tgamma(k + 5 * p + 1.0);
            EXPECT_NEAR(penta::g5_series(k, y, 6), want, 1e-14);
        }
    }
}

TEST(Closed, AgreesWithSeries) {
    EXPECT_EQ(penta::g5_closed(0, 0.0), 1.0);
    for (int i = -50; i <= 50; ++i) {
        const double y = 0.1 * i;
        for (int k = 0; k < 5; ++k) {
            const double s = penta::g5_series(k, y, 60);
            EXPECT_NEAR(penta::g5_closed(k, y), s, 1e-12 * std::max(1.0, std::fabs(s))) << k << " " << y;
        }
    }
}

TEST(Closed, HasNoDefiniteParity) {
    const double a = penta::g5_closed(1, 1.0), b = penta::g5_closed(1, -1.0);
    EXPECT_GT(std::fabs(a - b), 1e-3);
    EXPECT_GT(std::fabs(a + b), 1e-3);
}

TEST(Radical, Constants) {
    using R = penta::RadicalConstants;
    EXPECT_NEAR(R::a * R::a + R::a - 1, 0.0, 1e-15);
    EXPECT_NEAR(R::b * R::b + 5 * R::b + 5, 0.0, 1e-14);
    EXPECT_NEAR(R::a / 2, std::cos(kTau / 5), 1e-16);
    EXPECT_NEAR(-R::b / 4, std::pow(std::sin(kTau / 5), 2), 1e-15);
}

TEST(Radical, AgreesWithClosedAndSeries) {
    EXPECT_NEAR(penta::g5_closed_radical(0, 0.0), 1.0, 1e-15);
    for (int i = -50; i <= 50; ++i) {
        const double y = 0.1 * i;
        for (int k = 0; k < 5; ++k) {
            const double c = penta::g5_closed(k, y);
            EXPECT_NEAR(penta::g5_closed_radical(k, y), c, 1e-11 * std::max(1.0, std::fabs(c))) << k << " " << y;
        }
    }
    EXPECT_NEAR(penta::g5_closed_radical(2, 1.0), penta::g5_series(2, 1.0, 60), 1e-15);
}

TEST(Identities, SumAndSumOfSquares) {
    const double s5 = std::sqrt(5.0);
    for (int i = -50; i <= 50; ++i) {
        const double y = 0.1 * i;
        const auto g = penta::cosexp_vector(y);
        double sum = 0.0, sq = 0.0, size = 0.0;
        for (double v : g) {
            sum += v;
            sq += v * v;
            size += std::fabs(v);
        }
        // The terms alternate in sign for y < 0; error scales with their size.
        EXPECT_NEAR(sum, std::exp(y), 1e-13 * size);
        const double want = 0.2 * std::exp(2 * y) + 0.4 * std::exp((s5 - 1) * y / 2) + 0.4 * std::exp(-(s5 + 1) * y / 2);
        EXPECT_NEAR(sq, want, 1e-11 * want);
    }
}

TEST(Identities, AdditionTheorems) {
    Gen gen(31);
    for (int i = 0; i < 200; ++i) {
        const double y = gen.uniform(-3, 3), z = gen.uniform(-3, 3);
        const auto a = penta::cosexp_vector(y), b = penta::cosexp_vector(z), s = penta::cosexp_vector(y + z);
        for (std::size_t k = 0; k < 5; ++k) {
            double conv = 0.0;
            for (std::size_t j = 0; j < 5; ++j) conv += a[j] * b[(k + 5 - j) % 5];
            EXPECT_NEAR(conv, s[k], 1e-11 * std::max(1.0, std::fabs(s[k])));
        }
    }
}

TEST(Identities, DerivativeChain) {
    const double step = 1e-6;
    for (int i = -50; i <= 50; ++i) {
        const double y = 0.1 * i;
        for (int k = 0; k < 5; ++k) {
            const double d = (penta::g5_closed(k, y + step) - penta::g5_closed(k, y - step)) / (2 * step);
            EXPECT_NEAR(d, penta::g5_closed((k + 4) % 5, y), 1e-6);
        }
    }
}

TEST(ExpBasis, Examples) {
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(penta::exp_basis(k, 0.0), PentaComplex::one());
    const double y = 0.83;
    EXPECT_EQ(penta::exp_basis(1, y)[2], penta::g5_closed(2, y));
    EXPECT_EQ(penta::exp_basis(2, y)[2], penta::g5_closed(1, y));
    EXPECT_PENTA_ERROR(penta::exp_basis(0, y), ErrorKind::invalid_argument);
}

TEST(ExpBasis, MatchesRingExponential) {
    Gen gen(32);
    for (int i = 0; i < 100; ++i) {
        const double y = gen.uniform(-4, 4);
        for (int k = 1; k <= 4; ++k) {
            const PentaComplex want = penta::exp(h(static_cast<std::size_t>(k)) * y);
            EXPECT_TRUE(Near(penta::exp_basis(k, y), want, 1e-12 * std::max(1.0, penta::modulus(want))));
        }
    }
}

TEST(ExpBasis, ProductOfSymmetricAndAntisymmetricParts) {
    for (int i = -30; i <= 30; ++i) {
        const double y = 0.1 * i;
        const PentaComplex want = penta::exp_basis(1, 2 * y);
        EXPECT_TRUE(Near(penta::exp_h1_plus_h4(y) * penta::exp_h1_minus_h4(y), want,
                         1e-10 * std::max(1.0, penta::modulus(want))));
        EXPECT_TRUE(Near(penta::exp_h1_plus_h4(y), penta::exp((h(1) + h(4)) * y), 1e-12 * 500));
        EXPECT_TRUE(Near(penta::exp_h1_minus_h4(y), penta::exp((h(1) - h(4)) * y), 1e-12 * 10));
    }
}

TEST(CosexpPower, Examples) {
    EXPECT_EQ(penta::cosexp_power(1, 0.7, 0), PentaComplex::one());
    EXPECT_EQ(penta::cosexp_power(1, 0.7, 1), penta::exp_basis(1, 0.7));
    const PentaComplex v = penta::exp_basis(1, 0.7);
    EXPECT_TRUE(Near(v * v * v, penta::exp_basis(1, 2.1), 1e-11));
    for (int perm = 1; perm <= 4; ++perm)
        for (unsigned l = 0; l <= 5; ++l)
            EXPECT_TRUE(Near(penta::cosexp_power(perm, -0.9, l), penta::exp_basis(perm, -0.9 * l), 1e-10));
}

/// Exact integer powers of a combination of h's by cyclic convolution.
std::array<BigInt, 5> integer_power(const std::array<int, 5>& base, unsigned n) {
    std::array<BigInt, 5> acc{1, 0, 0, 0, 0};
    for (unsigned i = 0; i < n; ++i) {
        std::array<BigInt, 5> next{};
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 5; ++k) next[(j + k) % 5] += acc[j] * base[k];
        acc = next;
    }
    return acc;
}

TEST(PowerCoefficients, PrintedSeeds) {
    const auto a3 = penta::power_coeffs(PowerFamily::APlus, 3);
    EXPECT_EQ(a3.recurrence[0], 3);
    EXPECT_EQ(a3.recurrence[1], 1);
    EXPECT_EQ(a3.recurrence[2], 0);
    const auto d2 = penta::power_coeffs(PowerFamily::DMinus, 2);
    EXPECT_EQ(d2.recurrence[0], 10);
    EXPECT_EQ(d2.recurrence[1], 5);
    const auto f2 = penta::power_coeffs(PowerFamily::FMinus, 2);
    EXPECT_EQ(f2.recurrence[0], 1);
    EXPECT_EQ(f2.recurrence[1], -4);
    EXPECT_EQ(f2.recurrence[2], 6);
}

TEST(PowerCoefficients, RecurrenceAndClosedFormMatchExactPowers) {
    const std::array<int, 5> plus{0, 1, 0, 0, 1}, minus{0, 1, 0, 0, -1};
    for (unsigned m = 1; m <= 40; ++m) {
        const auto a = penta::power_coeffs(PowerFamily::APlus, m);
        const auto pa = integer_power(plus, m);
        EXPECT_EQ(a.recurrence[0], pa[1]) << m;
        EXPECT_EQ(a.recurrence[0], pa[4]) << m;
        EXPECT_EQ(a.recurrence[1], pa[2]) << m;
        EXPECT_EQ(a.recurrence[2], pa[0]) << m;

        const auto d = penta::power_coeffs(PowerFamily::DMinus, m);
        const auto pd = integer_power(minus, 2 * m + 1);
        EXPECT_EQ(d.recurrence[0], pd[1]) << m;
        EXPECT_EQ(-d.recurrence[0], pd[4]) << m;
        EXPECT_EQ(d.recurrence[1], pd[2]) << m;
        EXPECT_EQ(pd[0], 0) << m;

        const auto f = penta::power_coeffs(PowerFamily::FMinus, m);
        const auto pf = integer_power(minus, 2 * m);
        EXPECT_EQ(f.recurrence[0], pf[1]) << m;
        EXPECT_EQ(f.recurrence[1], pf[2]) << m;
        EXPECT_EQ(f.recurrence[2], pf[0]) << m;

        for (const auto* pc : {&a, &d, &f}) {
            EXPECT_TRUE(pc->agree()) << m;
            for (std::size_t i = 0; i < pc->count; ++i) {
                EXPECT_EQ(pc->closed[i].has_value(), m >= penta::closed_form_start(pc->family, i)) << m << " " << i;
            }
        }
    }
}

}  // namespace
