#include "support.hpp"

namespace {

using namespace test;
using penta::ErrorKind;
using penta::Path;

const double kS = std::sqrt(2.5);

/// Point with rotated coordinates (xi+, xi1, eta1, xi2, eta2).
PentaComplex at(double xp, double x1, double y1, double x2, double y2) {
    return penta::from_canonical(penta::CanonicalForm::from_parts(std::sqrt(5.0) * xp, {kS * x1, kS * y1}, {kS * x2, kS * y2}));
}

TEST(PathShape, Validation) {
    const PentaComplex a = h(1), b = h(2);
    EXPECT_PENTA_ERROR(Path({a}, false), ErrorKind::invalid_path);
    EXPECT_PENTA_ERROR(Path({a, a, b}, false), ErrorKind::invalid_path);
    EXPECT_PENTA_ERROR(Path({a, b, a}, true), ErrorKind::invalid_path);
    EXPECT_NO_THROW(Path({a, b, a}, false));
    EXPECT_EQ(Path({a, b, h(3)}, true).segment_count(), 3u);
    EXPECT_EQ(Path({a, b, h(3)}, false).segment_count(), 2u);
}

TEST(Projection, CircleInPlaneOne) {
    const PentaComplex c = at(0.4, -0.2, 0.1, 0.7, 0.3);
    const Path loop = penta::circle_path(c, 1, 1.0, 64);
    const auto p1 = penta::project(loop, 1);
    const auto p2 = penta::project(loop, 2);
    for (std::size_t i = 0; i < 64; ++i) {
        const double t = kTau * static_cast<double>(i) / 64.0;
        EXPECT_NEAR(p1.points[i][0], -0.2 + std::cos(t), 1e-14);
        EXPECT_NEAR(p1.points[i][1], 0.1 + std::sin(t), 1e-14);
        EXPECT_NEAR(p2.points[i][0], 0.7, 1e-14);
        EXPECT_NEAR(p2.points[i][1], 0.3, 1e-14);
    }
    EXPECT_PENTA_ERROR(penta::project(loop, 3), ErrorKind::invalid_argument);
}

TEST(Projection, Linear) {
    Gen g(71);
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = g.number(), v = g.number();
        const double a = g.uniform(-3, 3), b = g.uniform(-3, 3);
        for (int k : {1, 2}) {
            const auto pu = penta::project_point(u, k), pv = penta::project_point(v, k);
            const auto pw = penta::project_point(u * a + v * b, k);
            for (int c = 0; c < 2; ++c) EXPECT_NEAR(pw[c], a * pu[c] + b * pv[c], 1e-12 * 30);
        }
    }
}

TEST(Winding, SquareAndCircles) {
    const Path square({at(0, 1, 1, 0, 0), at(0, -1, 1, 0, 0), at(0, -1, -1, 0, 0), at(0, 1, -1, 0, 0)}, true);
    const auto proj = penta::project(square, 1);
    EXPECT_EQ(penta::winding({0.0, 0.0}, proj), 1);
    EXPECT_EQ(penta::winding({0.5, -0.9}, proj), 1);
    EXPECT_EQ(penta::winding({3.0, 0.0}, proj), 0);
    EXPECT_PENTA_ERROR(penta::winding({1.0, 0.0}, proj), ErrorKind::on_boundary);
    const Path reversed({at(0, 1, -1, 0, 0), at(0, -1, -1, 0, 0), at(0, -1, 1, 0, 0), at(0, 1, 1, 0, 0)}, true);
    EXPECT_EQ(penta::winding({0.0, 0.0}, penta::project(reversed, 1)), -1);
    const Path twice = penta::circle_path(PentaComplex{}, 2, 1.0, 32, 2);
    EXPECT_EQ(penta::winding({0.1, 0.2}, penta::project(twice, 2)), 2);
    EXPECT_EQ(penta::winding({1.5, 0.0}, penta::project(twice, 2)), 0);
}

TEST(Integrate, ConstantsAndLinear) {
    Gen g(72);
    const auto one = [](const PentaComplex&) { return PentaComplex::one(); };
    const auto id = [](const PentaComplex& u) { return u; };
    for (int i = 0; i < 50; ++i) {
        std::vector<PentaComplex> v{g.number(-2, 2), g.number(-2, 2), g.number(-2, 2), g.number(-2, 2)};
        const Path closed(v, true), open(v, false);
        EXPECT_TRUE(Near(penta::integrate(one, closed, 3), PentaComplex{}, 1e-12 * 10));
        EXPECT_TRUE(Near(penta::integrate(one, open, 3), v.back() - v.front(), 1e-12 * 10));
        // The midpoint rule is exact for a linear integrand.
        EXPECT_TRUE(Near(penta::integrate(id, closed, 1), PentaComplex{}, 1e-8));
        const PentaComplex exact = (v.back() * v.back() - v.front() * v.front()) * 0.5;
        EXPECT_TRUE(Near(penta::integrate(id, open, 1), exact, 1e-12 * 100));
    }
}

TEST(Integrate, PathIndependence) {
    const PentaComplex a = at(0.1, 0.2, -0.3, 0.1, 0.0), b = at(-0.2, 0.5, 0.4, -0.3, 0.2);
    const Path direct({a, b}, false);
    const Path detour({a, at(0.4, -0.4, 0.3, 0.2, 0.6), at(-0.5, 0.1, -0.2, 0.3, -0.1), b}, false);
    const auto sq = [](const PentaComplex& u) { return u * u; };
    const PentaComplex exact_sq = (b * b * b - a * a * a) * (1.0 / 3.0);
    EXPECT_TRUE(Near(penta::integrate(sq, direct, 2000), exact_sq, 1e-7));
    EXPECT_TRUE(Near(penta::integrate(sq, detour, 2000), exact_sq, 1e-7));
    const auto ex = [](const PentaComplex& u) { return penta::exp(u); };
    const PentaComplex exact_exp = penta::exp(b) - penta::exp(a);
    EXPECT_TRUE(Near(penta::integrate(ex, direct, 2000), exact_exp, 1e-7));
    EXPECT_TRUE(Near(penta::integrate(ex, detour, 2000), exact_exp, 1e-7));
}

TEST(Integrate, AnalyticLoopsVanish) {
    const Path loop = penta::circle_path(at(0.2, 0, 0, 0, 0), 1, 0.8, 128, 1, 0.5);
    for (const char* name : {"square", "cube", "exp", "sin", "cosh"}) {
        EXPECT_TRUE(Near(penta::integrate(penta::builtin_function(name).fn, loop, 32), PentaComplex{}, 1e-8)) << name;
    }
}

TEST(Integrate, FailuresAreWrapped) {
    const Path p({h(0), h(1)}, false);
    const auto bad = [](const PentaComplex& u) { return penta::inverse(u - h(0) * 0.5 - h(1) * 0.5); };
    EXPECT_PENTA_ERROR(penta::integrate(bad, p, 1), ErrorKind::evaluation_failed);
    EXPECT_PENTA_ERROR(penta::integrate(bad, p, 0), ErrorKind::invalid_argument);
}

const PentaComplex kInside = at(0.7 / std::sqrt(5.0), 0.3, 0.2, 0.6 / kS, -0.4 / kS);

TEST(Residue, ConstantInPlaneOne) {
    const Path loop = penta::circle_path(PentaComplex{}, 1, 1.0);
    const auto r = penta::residue_formula([](const PentaComplex&) { return PentaComplex::one(); }, loop, kInside);
    EXPECT_EQ(r.winding1, 1);
    EXPECT_EQ(r.winding2, 0);
    EXPECT_TRUE(Near(r.lhs, penta::canonical_basis().te1 * kTau, 1e-6));
    EXPECT_TRUE(Near(r.rhs, penta::canonical_basis().te1 * kTau, 1e-14));
}

TEST(Residue, ExponentialInPlaneTwo) {
    const Path loop = penta::circle_path(PentaComplex{}, 2, 1.0);
    const PentaComplex u0 = at(0.1, 0.5, -0.3, -0.2, 0.3);
    const auto r = penta::residue_formula([](const PentaComplex& u) { return penta::exp(u); }, loop, u0);
    EXPECT_EQ(r.winding1, 0);
    EXPECT_EQ(r.winding2, 1);
    EXPECT_TRUE(Near(r.lhs, penta::exp(u0) * penta::canonical_basis().te2 * kTau, 1e-6));
}

TEST(Residue, BothPlanes) {
    const Path loop = penta::circle_path(PentaComplex{}, 1, 1.0, 256, 1, 1.0);
    const PentaComplex u0 = at(0.3, 0.2, 0.1, -0.3, 0.2);
    const auto r = penta::residue_formula([](const PentaComplex& u) { return u * u; }, loop, u0);
    EXPECT_EQ(r.winding1, 1);
    EXPECT_EQ(r.winding2, 1);
    const auto& b = penta::canonical_basis();
    EXPECT_TRUE(Near(r.lhs, u0 * u0 * (b.te1 + b.te2) * kTau, 1e-6));
}

TEST(Residue, FarPoleGivesZero) {
    const Path loop = penta::circle_path(PentaComplex{}, 1, 1.0);
    const PentaComplex u0 = at(0.7 / std::sqrt(5.0), 2.5, 0.5, 0.6 / kS, -0.4 / kS);
    const auto r = penta::residue_formula([](const PentaComplex& u) { return penta::exp(u); }, loop, u0);
    EXPECT_EQ(r.winding1, 0);
    EXPECT_TRUE(Near(r.lhs, PentaComplex{}, 1e-6));
    EXPECT_EQ(r.rhs, PentaComplex{});
}

TEST(Residue, Errors) {
    const auto one = [](const PentaComplex&) { return PentaComplex::one(); };
    const Path loop = penta::circle_path(PentaComplex{}, 1, 1.0, 64);
    EXPECT_PENTA_ERROR(penta::residue_formula(one, loop, at(0.5, 1.0, 0.0, 0.3, 0.0)), ErrorKind::pole_on_path);
    // Pole in the loop's plane-2 point: its projection sits on the (degenerate) curve.
    EXPECT_PENTA_ERROR(penta::residue_formula(one, loop, at(0.5, 0.1, 0.0, 0.0, 0.0)), ErrorKind::pole_on_path);
    // Same v+ as the loop: u - u0 is a divisor of zero everywhere.
    EXPECT_PENTA_ERROR(penta::residue_formula(one, loop, at(0.0, 0.1, 0.0, 0.3, 0.0)), ErrorKind::non_invertible_on_path);
    const Path open({h(0), h(1), h(2)}, false);
    EXPECT_PENTA_ERROR(penta::residue_formula(one, open, kInside), ErrorKind::invalid_path);
}

TEST(Residue, QuadratureErrorShrinksWithSamples) {
    const Path coarse = penta::circle_path(PentaComplex{}, 1, 1.0, 16);
    const auto fn = [](const PentaComplex& u) { return penta::exp(u); };
    double previous = INFINITY;
    for (std::size_t per : {1, 2, 4, 8}) {
        const double err = penta::residue_formula(fn, coarse, kInside, per * 16).error();
        EXPECT_LT(err, 0.5 * previous) << per << " samples per segment";
        previous = err;
    }
}

}  // namespace
