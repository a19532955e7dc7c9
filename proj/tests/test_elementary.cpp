#include "support.hpp"

namespace {

using namespace test;
using penta::ErrorKind;

/// sum_{n <= terms} u^n / n! by ring multiplication.
PentaComplex exp_by_series(const PentaComplex& u, int terms = 40) {
    PentaComplex sum = PentaComplex::one(), term = PentaComplex::one();
    for (int n = 1; n <= terms; ++n) {
        term = term * u / static_cast<double>(n);
        sum += term;
    }
    return sum;
}

/// Positive v+, nonzero plane radii.
PentaComplex in_log_domain(Gen& g) { return g.with_canonical(0.1, 3.0, 0.1, 3.0); }

TEST(Exp, Examples) {
    EXPECT_TRUE(Near(penta::exp(PentaComplex{}), PentaComplex::one(), 1e-15));
    for (double y : {-1.5, 0.4, 2.2}) {
        for (int k = 1; k <= 4; ++k) {
            EXPECT_TRUE(Near(penta::exp(h(static_cast<std::size_t>(k)) * y), penta::exp_basis(k, y), 1e-12 * 10));
        }
    }
}

TEST(Exp, MatchesTruncatedSeries) {
    Gen g(41);
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = g.number(-0.5, 0.5);
        EXPECT_TRUE(Near(penta::exp(u), exp_by_series(u), 1e-11));
    }
}

TEST(Exp, IsAHomomorphism) {
    Gen g(42);
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = g.number(-1, 1), v = g.number(-1, 1);
        const PentaComplex want = penta::exp(u + v);
        EXPECT_TRUE(Near(penta::exp(u) * penta::exp(v), want, 1e-11 * std::max(1.0, penta::modulus(want))));
    }
}

TEST(Exp, OverflowIsAnError) { EXPECT_PENTA_ERROR(penta::exp(PentaComplex::real(1000.0)), ErrorKind::overflow); }

TEST(Log, Examples) {
    EXPECT_TRUE(Near(penta::log(PentaComplex::one()), PentaComplex{}, 1e-15));
    EXPECT_PENTA_ERROR(penta::log(penta::canonical_basis().eplus), ErrorKind::log_domain);
    EXPECT_PENTA_ERROR(penta::log(-PentaComplex::one()), ErrorKind::log_domain);
}

TEST(Log, InvertsExp) {
    Gen g(43);
    for (int i = 0; i < 500; ++i) {
        const PentaComplex u = in_log_domain(g);
        EXPECT_TRUE(Near(penta::exp(penta::log(u)), u, 1e-10 * std::max(1.0, penta::modulus(u))));
        const PentaComplex w = penta::from_canonical(
            {g.uniform(-2, 2), g.uniform(-2, 2), g.uniform(0.05, kTau - 0.05), g.uniform(-2, 2), g.uniform(0.05, kTau - 0.05)});
        EXPECT_TRUE(Near(penta::log(penta::exp(w)), w, 1e-10 * std::max(1.0, penta::modulus(w))));
    }
}

TEST(Log, AgreesWithCanonicalLogarithms) {
    Gen g(44);
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = in_log_domain(g);
        const auto c = penta::to_canonical(u);
        auto principal = [](std::complex<double> z) {
            const double arg = std::arg(z);
            return std::complex<double>(std::log(std::abs(z)), arg < 0 ? arg + kTau : arg);
        };
        const PentaComplex want = penta::from_canonical(
            penta::CanonicalForm::from_parts(std::log(c.vplus), principal(c.plane(1)), principal(c.plane(2))));
        EXPECT_TRUE(Near(penta::log(u), want, 1e-12 * 10));
    }
}

TEST(Pow, Examples) {
    Gen g(45);
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = g.number(-2, 2);
        EXPECT_TRUE(Near(penta::pow_real(u, 2), u * u, 1e-12 * penta::modulus(u * u)));
        EXPECT_TRUE(Near(penta::pow_real(u, 3), u * u * u, 1e-12 * std::max(1.0, penta::modulus(u * u * u)) * 5));
        if (penta::is_invertible(u, 1e-2)) {
            EXPECT_EQ(penta::pow_real(u, 0), PentaComplex::one());
            EXPECT_TRUE(Near(penta::pow_real(u, -1), penta::inverse(u), 1e-10 * penta::modulus(penta::inverse(u))));
        }
    }
    EXPECT_TRUE(Near(penta::pow_real(h(1), 5), PentaComplex::one(), 1e-14));
}

TEST(Pow, RealExponents) {
    Gen g(46);
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = in_log_domain(g);
        const PentaComplex r = penta::pow_real(u, 0.5);
        EXPECT_TRUE(Near(r * r, u, 1e-12 * 10));
        const double m = g.uniform(-2, 2);
        const PentaComplex want = penta::exp(penta::log(u) * m);
        EXPECT_TRUE(Near(penta::pow_real(u, m), want, 1e-10 * std::max(1.0, penta::modulus(want))));
    }
}

TEST(Pow, Domains) {
    const PentaComplex zd = penta::canonical_basis().eplus + penta::canonical_basis().e1;  // rho2 = 0
    EXPECT_PENTA_ERROR(penta::pow_real(zd, 0.5), ErrorKind::pow_domain);
    EXPECT_PENTA_ERROR(penta::pow_real(zd, -2), ErrorKind::non_invertible);
    EXPECT_TRUE(Near(penta::pow_real(zd, 3), zd * zd * zd, 1e-14));
    EXPECT_PENTA_ERROR(penta::pow_real(-PentaComplex::one(), 0.5), ErrorKind::pow_domain);
    EXPECT_TRUE(Near(penta::pow_real(-PentaComplex::one(), 101), -PentaComplex::one(), 1e-12));
}

TEST(Trig, AtZero) {
    const PentaComplex z;
    EXPECT_TRUE(Near(penta::cos(z), PentaComplex::one(), 1e-15));
    EXPECT_TRUE(Near(penta::sin(z), z, 1e-15));
    EXPECT_TRUE(Near(penta::cosh(z), PentaComplex::one(), 1e-15));
    EXPECT_TRUE(Near(penta::sinh(z), z, 1e-15));
}

TEST(Trig, PythagoreanIdentities) {
    Gen g(47);
    for (int i = 0; i < 500; ++i) {
        const PentaComplex u = g.number(-1, 1);
        const PentaComplex c = penta::cos(u), s = penta::sin(u), ch = penta::cosh(u), sh = penta::sinh(u);
        EXPECT_TRUE(Near(s * s + c * c, PentaComplex::one(), 1e-11 * std::max(1.0, penta::modulus(c * c))));
        EXPECT_TRUE(Near(ch * ch - sh * sh, PentaComplex::one(), 1e-11 * std::max(1.0, penta::modulus(ch * ch))));
    }
}

TEST(Trig, MatchExponentialDefinitions) {
    Gen g(48);
    const auto& b = penta::canonical_basis();
    const PentaComplex i_unit = b.te1 + b.te2;  // squares to -(e1 + e2)
    for (int n = 0; n < 100; ++n) {
        const PentaComplex u = g.number(-1, 1);
        EXPECT_TRUE(Near(penta::cosh(u), (penta::exp(u) + penta::exp(-u)) * 0.5, 1e-12 * 10));
        EXPECT_TRUE(Near(penta::sinh(u), (penta::exp(u) - penta::exp(-u)) * 0.5, 1e-12 * 10));
        // On the planes, cos u = (e^{iu} + e^{-iu}) / 2 with i = te1 + te2.
        const PentaComplex planes = b.e1 + b.e2;
        const PentaComplex want = (penta::exp(i_unit * u) + penta::exp(-(i_unit * u))) * 0.5 * planes;
        EXPECT_TRUE(Near(penta::cos(u) * planes, want, 1e-11 * 10));
    }
}

TEST(ExponentialForm, One) {
    const auto f = penta::exponential_form(PentaComplex::one());
    EXPECT_NEAR(f.amplitude, 1.0, 1e-15);
    EXPECT_NEAR(f.log_tan_theta, 0.0, 1e-15);
    EXPECT_NEAR(f.log_tan_psi, 0.0, 1e-15);
    EXPECT_NEAR(f.phi1, 0.0, 1e-15);
    EXPECT_NEAR(f.phi2, 0.0, 1e-15);
    EXPECT_TRUE(Near(f.exponent(), PentaComplex{}, 1e-15));
    EXPECT_TRUE(Near(f.reconstruct(), PentaComplex::one(), 1e-15));
    EXPECT_PENTA_ERROR(penta::exponential_form(-PentaComplex::one()), ErrorKind::form_domain);
}

TEST(ExponentialForm, Reconstructs) {
    Gen g(49);
    for (int i = 0; i < 500; ++i) {
        const PentaComplex u = in_log_domain(g);
        EXPECT_TRUE(Near(penta::exponential_form(u).reconstruct(), u, 1e-10 * std::max(1.0, penta::modulus(u))));
    }
}

TEST(TrigonometricForm, Reconstructs) {
    EXPECT_TRUE(Near(penta::trigonometric_form(PentaComplex::one()), PentaComplex::one(), 1e-14));
    Gen g(50);
    for (int i = 0; i < 500; ++i) {
        // Any sign of v+ is admissible here.
        const PentaComplex u = g.with_canonical(-3.0, 3.0, 0.1, 3.0);
        EXPECT_TRUE(Near(penta::trigonometric_form(u), u, 1e-10 * std::max(1.0, penta::modulus(u))));
    }
    EXPECT_PENTA_ERROR(penta::trigonometric_form(penta::canonical_basis().eplus), ErrorKind::form_domain);
}

TEST(TrigonometricForm, ModulusFromAmplitude) {
    Gen g(51);
    for (int i = 0; i < 500; ++i) {
        const auto f = penta::polar_form(in_log_domain(g));
        const double d = penta::modulus_from_amplitude(f.rho, f.get(penta::AngleId::thetaplus), f.get(penta::AngleId::psi1));
        EXPECT_NEAR(d, f.d, 1e-10 * f.d);
    }
}

}  // namespace
