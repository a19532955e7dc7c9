#pragma once

// End-to-end checks of the library against independent oracles, one per
// acceptance criterion (1..11). Used by `penta selftest` and by the
// acceptance test binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "penta/analytic.hpp"
#include "penta/canonical.hpp"
#include "penta/contour.hpp"
#include "penta/cosexp.hpp"
#include "penta/elementary.hpp"
#include "penta/functions.hpp"
#include "penta/geometry.hpp"
#include "penta/inverse.hpp"
#include "penta/polyfactor.hpp"
#include "penta/ring.hpp"

namespace penta::selftest {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Tracks the worst error / tolerance ratio over many comparisons and keeps
/// the label of the first failure.
class Ledger {
public:
    void check(double error, double tolerance, const std::string& label) {
        ++count_;
        const double ratio = tolerance > 0.0 ? error / tolerance : (error == 0.0 ? 0.0 : INFINITY);
        if (!(ratio <= 1.0)) {
            ++failures_;
            if (first_failure_.empty()) {
                std::ostringstream os;
                os << label << ": error " << error << " > " << tolerance;
                first_failure_ = os.str();
            }
        }
        if (!(ratio <= worst_)) worst_ = ratio;
    }
    void require(bool ok, const std::string& label) { check(ok ? 0.0 : 1.0, 0.5, label); }

    [[nodiscard]] bool passed() const noexcept { return failures_ == 0; }
    [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        os << count_ << " checks, worst error/tol " << worst_;
        if (failures_ > 0) os << ", " << failures_ << " failed; first: " << first_failure_;
        return os.str();
    }

private:
    std::size_t count_ = 0, failures_ = 0;
    double worst_ = 0.0;
    std::string first_failure_;
};

/// Fixed-seed generator of test values.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    PentaComplex penta(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }
    /// v+ in [vlo, vhi], plane radii in [rlo, rhi], azimuths in [0, 2 pi).
    PentaComplex canonical(double vlo, double vhi, double rlo, double rhi) {
        const double tau = 2.0 * std::numbers::pi;
        return from_canonical(CanonicalForm::from_parts(uniform(vlo, vhi), std::polar(uniform(rlo, rhi), uniform(0, tau)),
                                                        std::polar(uniform(rlo, rhi), uniform(0, tau))));
    }

private:
    std::mt19937_64 rng_;
};

namespace oracle {

using Dense = std::array<std::array<double, 5>, 5>;

inline Dense dense(const RingMatrix& m) { return m.m; }

inline Dense mul(const Dense& a, const Dense& b) {
    Dense r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t j = 0; j < 5; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline Dense transpose(const Dense& a) {
    Dense r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r[i][j] = a[j][i];
    return r;
}

inline double max_entry(const Dense& a) {
    double m = 0.0;
    for (const auto& row : a)
        for (double v : row) m = std::max(m, std::fabs(v));
    return m;
}

/// Matrix exponential by scaling and squaring with a 24-term Taylor sum.
inline Dense expm(Dense a) {
    double norm = 0.0;
    for (const auto& row : a) {
        double s = 0.0;
        for (double v : row) s += std::fabs(v);
        norm = std::max(norm, s);
    }
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& row : a)
        for (double& v : row) v *= scale;
    Dense sum{}, term{};
    for (std::size_t i = 0; i < 5; ++i) sum[i][i] = term[i][i] = 1.0;
    for (int n = 1; n <= 24; ++n) {
        term = mul(term, a);
        for (auto& row : term)
            for (double& v : row) v /= n;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) sum[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
    return sum;
}

/// Naive convolution product written straight from the basis table.
inline PentaComplex product(const PentaComplex& u, const PentaComplex& v) {
    PentaComplex::Components x{};
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k) x[(j + k) % 5] += u[j] * v[k];
    return PentaComplex(x);
}

}  // namespace oracle

inline double rel(const PentaComplex& a, const PentaComplex& b, double scale = 1.0) {
    return max_abs_diff(a, b) / std::max(1.0, scale);
}

inline double angle_gap(double a, double b) {
    const double tau = 2.0 * std::numbers::pi;
    const double d = std::fmod(std::fabs(a - b), tau);
    return std::min(d, tau - d);
}

// ---------------------------------------------------------------------------

inline CheckResult basis_table() {
    CheckResult r{1, "basis table", false, "", 0.0};
    Ledger led;
    // The ten relations among h1..h4 as printed: {j, k, product index}.
    const int table[10][3] = {{1, 4, 0}, {2, 3, 0}, {1, 1, 2}, {2, 2, 4}, {3, 3, 1},
                              {4, 4, 3}, {1, 2, 3}, {1, 3, 4}, {2, 4, 1}, {3, 4, 2}};
    const auto start = std::chrono::steady_clock::now();
    for (const auto& t : table) {
        const auto j = static_cast<std::size_t>(t[0]), k = static_cast<std::size_t>(t[1]);
        const auto p = static_cast<std::size_t>(t[2]);
        led.require(multiply(PentaComplex::basis(j), PentaComplex::basis(k)) == PentaComplex::basis(p),
                    "h" + std::to_string(j) + " h" + std::to_string(k));
    }
    for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t k = 0; k < 5; ++k) {
            led.require(basis_product(j, k) == (j + k) % 5, "basis_product");
            led.require(multiply(PentaComplex::basis(j), PentaComplex::basis(k)) == PentaComplex::basis(basis_product(j, k)),
                        "multiply vs basis_product");
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    led.check(elapsed, 1e-3, "runtime (s)");
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult ring_axioms() {
    CheckResult r{2, "ring axioms", false, "", 0.0};
    Ledger led;
    Sampler s(2);
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 1000; ++i) {
        const PentaComplex u = s.penta(-10, 10), v = s.penta(-10, 10), w = s.penta(-10, 10);
        led.require(u * v == v * u, "commutativity");
        const double scale = 1.0 + modulus(u) * modulus(v) * modulus(w);
        led.check(max_abs_diff((u * v) * w, u * (v * w)), 1e-12 * scale, "associativity");
        led.check(max_abs_diff(u * (v + w), u * v + u * w), 1e-12 * (1.0 + modulus(u) * (modulus(v) + modulus(w))),
                  "distributivity");
        led.check(max_abs_diff(u * v, oracle::product(u, v)), 1e-12 * (1.0 + modulus(u) * modulus(v)),
                  "product vs basis-table convolution");
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    led.check(elapsed, 1.0, "runtime (s)");
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult matrix_homomorphism() {
    CheckResult r{3, "matrix homomorphism", false, "", 0.0};
    Ledger led;
    Sampler s(3);
    const oracle::Dense t = rotation_matrix();
    const oracle::Dense tt = oracle::transpose(t);
    for (int i = 0; i < 1000; ++i) {
        const PentaComplex u = s.penta(-10, 10), v = s.penta(-10, 10);
        const oracle::Dense mu = oracle::dense(to_matrix(u)), mv = oracle::dense(to_matrix(v));
        const oracle::Dense prod = oracle::mul(mu, mv);
        const oracle::Dense direct = oracle::dense(to_matrix(u * v));
        double diff = 0.0;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = 0; b < 5; ++b) diff = std::max(diff, std::fabs(prod[a][b] - direct[a][b]));
        led.check(diff, 1e-12 * (1.0 + oracle::max_entry(mu) * oracle::max_entry(mv) * 5.0), "to_matrix(uv)");
        led.require(from_matrix(to_matrix(u)) == u, "from_matrix roundtrip");

        // T U T^T against the block form.
        const oracle::Dense sim = oracle::mul(oracle::mul(t, mu), tt);
        const auto blocks = irreducible_rep(u).dense();
        const double scale = 1.0 + modulus(u) * std::sqrt(5.0);
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = 0; b < 5; ++b) {
                const bool in_block = (a == 0 && b == 0) || (a >= 1 && a <= 2 && b >= 1 && b <= 2) || (a >= 3 && b >= 3);
                if (!in_block) led.check(std::fabs(sim[a][b]), 1e-12 * scale, "off-block mass");
                led.check(std::fabs(sim[a][b] - blocks[a][b]), 1e-12 * scale, "block entries");
            }
        }
    }
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult canonical_structure() {
    CheckResult r{4, "canonical structure", false, "", 0.0};
    Ledger led;
    const auto& b = canonical_basis();
    const PentaComplex zero;
    const struct {
        PentaComplex lhs, rhs;
        const char* label;
    } rel_table[] = {
        {b.eplus * b.eplus, b.eplus, "e+ e+ = e+"},  {b.e1 * b.e1, b.e1, "e1 e1 = e1"},
        {b.e2 * b.e2, b.e2, "e2 e2 = e2"},           {b.te1 * b.te1, -b.e1, "te1 te1 = -e1"},
        {b.te2 * b.te2, -b.e2, "te2 te2 = -e2"},     {b.e1 * b.te1, b.te1, "e1 te1 = te1"},
        {b.e2 * b.te2, b.te2, "e2 te2 = te2"},       {b.eplus * b.e1, zero, "e+ e1 = 0"},
        {b.eplus * b.e2, zero, "e+ e2 = 0"},         {b.eplus * b.te1, zero, "e+ te1 = 0"},
        {b.eplus * b.te2, zero, "e+ te2 = 0"},       {b.e1 * b.e2, zero, "e1 e2 = 0"},
        {b.e1 * b.te2, zero, "e1 te2 = 0"},          {b.e2 * b.te1, zero, "e2 te1 = 0"},
        {b.te1 * b.te2, zero, "te1 te2 = 0"},
    };
    for (const auto& t : rel_table) led.check(max_abs_diff(t.lhs, t.rhs), 1e-14, t.label);
    led.check(max_abs_diff(b.eplus + b.e1 + b.e2, PentaComplex::one()), 1e-14, "e+ + e1 + e2 = 1");
    led.check(std::fabs(modulus(b.eplus) - 1.0 / std::sqrt(5.0)), 1e-15, "|e+|");
    for (const PentaComplex* e : {&b.e1, &b.te1, &b.e2, &b.te2}) {
        led.check(std::fabs(modulus(*e) - std::sqrt(0.4)), 1e-15, "|e_k|, |te_k|");
    }
    Sampler s(4);
    for (int i = 0; i < 1000; ++i) {
        const PentaComplex u = s.penta(-10, 10), v = s.penta(-10, 10);
        const auto cu = to_canonical(u), cv = to_canonical(v);
        const auto lhs = to_canonical(u * v).as_array();
        const auto rhs = canonical_multiply(cu, cv).as_array();
        const auto sum_l = to_canonical(u + v).as_array();
        const auto sum_r = canonical_add(cu, cv).as_array();
        const double scale = 1.0 + 5.0 * modulus(u) * modulus(v);
        for (std::size_t k = 0; k < 5; ++k) {
            led.check(std::fabs(lhs[k] - rhs[k]), 1e-12 * scale, "to_canonical(uv)");
            led.check(std::fabs(sum_l[k] - sum_r[k]), 1e-12 * (1.0 + modulus(u) + modulus(v)), "to_canonical(u+v)");
        }
        led.check(max_abs_diff(from_canonical(cu), u), 1e-13 * (1.0 + modulus(u)), "roundtrip");
    }
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult cosexp_agreement() {
    CheckResult r{5, "cosexponential triple agreement", false, "", 0.0};
    Ledger led;
    const auto start = std::chrono::steady_clock::now();
    for (int i = -50; i <= 50; ++i) {
        const double y = 0.1 * i;
        for (int k = 0; k < 5; ++k) {
            const double ser = g5_series(k, y, 60);
            const double clo = g5_closed(k, y);
            const double rad = g5_closed_radical(k, y);
            const double tol = 1e-10 * std::max(1.0, std::fabs(ser));
            led.check(std::fabs(ser - clo), tol, "series vs closed");
            led.check(std::fabs(ser - rad), tol, "series vs radical");
            led.check(std::fabs(clo - rad), tol, "closed vs radical");
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    led.check(elapsed, 1.0, "runtime (s)");
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult cosexp_identities() {
    CheckResult r{6, "cosexponential identities", false, "", 0.0};
    Ledger led;
    const double s5 = std::sqrt(5.0);
    for (int i = -50; i <= 50; ++i) {
        const double y = 0.1 * i;
        const CosexpVector g = cosexp_vector(y);
        double sum = 0.0, sq = 0.0;
        for (double v : g) {
            sum += v;
            sq += v * v;
        }
        led.check(std::fabs(sum - std::exp(y)), 1e-11 * std::exp(y), "sum = e^y");
        const double expect = 0.2 * std::exp(2 * y) + 0.4 * std::exp((s5 - 1) * y / 2) + 0.4 * std::exp(-(s5 + 1) * y / 2);
        led.check(std::fabs(sq - expect), 1e-11 * expect, "sum of squares");
        const double h = 1e-6;
        for (int k = 0; k < 5; ++k) {
            const double deriv = (g5_closed(k, y + h) - g5_closed(k, y - h)) / (2 * h);
            led.check(std::fabs(deriv - g5_closed((k + 4) % 5, y)), 1e-6, "derivative chain");
        }
        led.check(max_abs_diff(exp_h1_plus_h4(y) * exp_h1_minus_h4(y), exp_basis(1, 2 * y)),
                  1e-10 * std::max(1.0, modulus(exp_basis(1, 2 * y))), "exp((h1+h4)y) exp((h1-h4)y)");
    }
    Sampler s(6);
    for (int i = 0; i < 200; ++i) {
        const double y = s.uniform(-3, 3), z = s.uniform(-3, 3);
        const CosexpVector gy = cosexp_vector(y), gz = cosexp_vector(z), gs = cosexp_vector(y + z);
        for (std::size_t k = 0; k < 5; ++k) {
            double conv = 0.0;
            for (std::size_t j = 0; j < 5; ++j) conv += gy[j] * gz[(k + 5 - j) % 5];
            led.check(std::fabs(conv - gs[k]), 1e-11 * std::max(1.0, std::fabs(gs[k])), "addition theorem");
        }
    }
    for (int perm = 1; perm <= 4; ++perm) {
        for (double y : {-1.3, -0.4, 0.7, 1.1}) {
            for (unsigned l = 0; l <= 5; ++l) {
                const PentaComplex want = exp_basis(perm, l * y);
                led.check(max_abs_diff(cosexp_power(perm, y, l), want), 1e-10 * std::max(1.0, modulus(want)),
                          "power identity");
            }
        }
    }
    for (PowerFamily fam : {PowerFamily::APlus, PowerFamily::DMinus, PowerFamily::FMinus}) {
        for (unsigned m = 1; m <= 40; ++m) {
            const PowerCoefficients pc = power_coeffs(fam, m);
            led.require(pc.agree(), "recurrence vs closed form, m = " + std::to_string(m));
            for (std::size_t i = 0; i < pc.count; ++i) {
                if (m >= closed_form_start(fam, i)) led.require(pc.closed[i].has_value(), "closed form present");
            }
        }
    }
    const auto a3 = power_coeffs(PowerFamily::APlus, 3).recurrence;
    const auto d2 = power_coeffs(PowerFamily::DMinus, 2).recurrence;
    const auto f2 = power_coeffs(PowerFamily::FMinus, 2).recurrence;
    led.require(a3[0] == 3 && a3[1] == 1 && a3[2] == 0, "A3, B3, C3");
    led.require(d2[0] == 10 && d2[1] == 5, "D2, E2");
    led.require(f2[0] == 1 && f2[1] == -4 && f2[2] == 6, "F2, G2, H2");
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult elementary_functions() {
    CheckResult r{7, "elementary functions", false, "", 0.0};
    Ledger led;
    Sampler s(7);
    for (int i = 0; i < 500; ++i) {
        const PentaComplex u = s.canonical(0.1, 3.0, 0.1, 3.0);
        led.check(max_abs_diff(penta::exp(penta::log(u)), u), 1e-10 * std::max(1.0, modulus(u)), "exp(log u)");
        // log(exp w) = w needs the azimuths of w inside [0, 2 pi).
        const double tau = 2.0 * std::numbers::pi;
        const PentaComplex w = from_canonical({s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(0.05, tau - 0.05),
                                               s.uniform(-2, 2), s.uniform(0.05, tau - 0.05)});
        led.check(max_abs_diff(penta::log(penta::exp(w)), w), 1e-10 * std::max(1.0, modulus(w)), "log(exp w)");
    }
    for (int i = 0; i < 200; ++i) {
        const PentaComplex u = s.penta(-2, 2);
        const oracle::Dense e = oracle::expm(oracle::dense(to_matrix(u)));
        const PentaComplex want(e[0]);
        led.check(max_abs_diff(penta::exp(u), want), 1e-9 * std::max(1.0, modulus(want)), "exp vs matrix exponential");
        const PentaComplex c = penta::cos(u), sn = penta::sin(u), ch = penta::cosh(u), sh = penta::sinh(u);
        const PentaComplex one = PentaComplex::one();
        led.check(max_abs_diff(sn * sn + c * c, one), 1e-11 * std::max(1.0, modulus(c * c)), "sin^2 + cos^2");
        led.check(max_abs_diff(ch * ch - sh * sh, one), 1e-11 * std::max(1.0, modulus(ch * ch)), "cosh^2 - sinh^2");
    }
    for (int i = 0; i < 500; ++i) {
        const PentaComplex u = s.canonical(0.1, 3.0, 0.1, 3.0);
        const double scale = std::max(1.0, modulus(u));
        led.check(max_abs_diff(exponential_form(u).reconstruct(), u), 1e-10 * scale, "exponential form");
        led.check(max_abs_diff(trigonometric_form(u), u), 1e-10 * scale, "trigonometric form");
        const PolarForm f = polar_form(u);
        const double d = modulus_from_amplitude(f.rho, f.get(AngleId::thetaplus), f.get(AngleId::psi1));
        led.check(std::fabs(d - f.d), 1e-10 * f.d, "modulus from amplitude");
    }
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult geometry_laws() {
    CheckResult r{8, "geometry", false, "", 0.0};
    Ledger led;
    Sampler s(8);
    for (int i = 0; i < 1000; ++i) {
        const PentaComplex u = s.penta(-10, 10);
        const PolarForm f = polar_form(u);
        const double d2 = f.d * f.d;
        led.check(std::fabs(0.2 * f.vplus * f.vplus + 0.4 * (f.rho1 * f.rho1 + f.rho2 * f.rho2) - d2), 1e-12 * d2,
                  "modulus from canonical radii");
        const double amp = f.vplus * f.rho1 * f.rho1 * f.rho2 * f.rho2;
        led.check(std::fabs(std::pow(f.rho, 5) - amp), 1e-12 * std::fabs(amp), "amplitude fifth power");
    }
    std::size_t violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto [lhs, rhs] = modulus_product_bound(s.penta(-10, 10), s.penta(-10, 10));
        if (!(lhs <= rhs)) ++violations;
    }
    led.require(violations == 0, std::to_string(violations) + " modulus bound violations");
    for (int i = 0; i < 1000; ++i) {
        const PentaComplex a = s.canonical(0.2, 2.0, 0.2, 2.0), b = s.canonical(0.2, 2.0, 0.2, 2.0);
        const PolarForm fa = polar_form(a), fb = polar_form(b), fp = polar_form(a * b);
        auto relerr = [](double x, double y) { return std::fabs(x - y) / std::max(1e-300, std::fabs(y)); };
        led.check(relerr(fp.vplus, fa.vplus * fb.vplus), 1e-10, "v+ multiplies");
        led.check(relerr(fp.rho1, fa.rho1 * fb.rho1), 1e-10, "rho1 multiplies");
        led.check(relerr(fp.rho2, fa.rho2 * fb.rho2), 1e-10, "rho2 multiplies");
        led.check(relerr(std::tan(fp.get(AngleId::thetaplus)),
                         std::tan(fa.get(AngleId::thetaplus)) * std::tan(fb.get(AngleId::thetaplus)) / std::sqrt(2.0)),
                  1e-10, "tan theta+");
        led.check(relerr(std::tan(fp.get(AngleId::psi1)), std::tan(fa.get(AngleId::psi1)) * std::tan(fb.get(AngleId::psi1))),
                  1e-10, "tan psi1");
        for (int k = 1; k <= 2; ++k) {
            led.check(angle_gap(fp.phi(k), fa.phi(k) + fb.phi(k)), 1e-10, "azimuths add");
        }
        led.check(relerr(fp.rho, fa.rho * fb.rho), 1e-10, "amplitude multiplies");
    }
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult analyticity() {
    CheckResult r{9, "analyticity", false, "", 0.0};
    Ledger led;
    Sampler s(9);
    const char* analytic_names[] = {"square", "cube", "exp", "sin"};
    for (int i = 0; i < 20; ++i) {
        const PentaComplex p = s.penta(-1, 1);
        for (const char* name : analytic_names) {
            led.require(check_cr_relations(builtin_function(name).fn, p).passed, std::string("first order, ") + name);
        }
        led.require(!check_cr_relations(builtin_function("projection").fn, p).passed, "projection must fail");
    }
    std::vector<PentaComplex> points{PentaComplex{}};
    for (int i = 0; i < 5; ++i) points.push_back(s.penta(-1, 1));
    for (const auto& p : points) {
        for (const char* name : {"square", "exp"}) {
            led.require(check_second_order(builtin_function(name).fn, p).passed, std::string("second order, ") + name);
        }
    }
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

/// Loop around `u0` in plane `plane` whose projection on that plane encloses
/// the pole when `inside`; the center sits off the pole in v+ and in the
/// other plane so that u - u0 stays invertible.
inline Path residue_loop(const PentaComplex& u0, int plane, bool inside, std::size_t vertices = 256) {
    const std::complex<double> in_plane = inside ? std::complex<double>(0.3, 0.2) : std::complex<double>(2.5, 0.5);
    const std::complex<double> off_plane(0.6, -0.4);
    const PentaComplex offset = from_canonical(CanonicalForm::from_parts(
        0.7, plane == 1 ? in_plane * std::sqrt(2.5) : off_plane, plane == 1 ? off_plane : in_plane * std::sqrt(2.5)));
    return circle_path(u0 + offset, plane, 1.0, vertices);
}

inline CheckResult residues() {
    CheckResult r{10, "residues", false, "", 0.0};
    Ledger led;
    Sampler s(10);
    const auto start = std::chrono::steady_clock::now();
    const char* names[] = {"one", "identity", "exp"};
    struct Case {
        int plane;
        bool inside;
        int n1, n2;
    };
    const Case cases[] = {{1, true, 1, 0}, {2, true, 0, 1}, {1, false, 0, 0}};
    for (int trial = 0; trial < 3; ++trial) {
        const PentaComplex u0 = s.penta(-0.5, 0.5);
        for (const Case& c : cases) {
            const Path loop = residue_loop(u0, c.plane, c.inside);
            for (const char* name : names) {
                const ResidueResult res = residue_formula(builtin_function(name).fn, loop, u0, kDefaultLoopSamples);
                led.require(res.winding1 == c.n1 && res.winding2 == c.n2, "windings");
                led.check(res.error(), 1e-5, std::string("residue relation, ") + name);
            }
        }
    }
    // Halving the step: a coarse loop keeps the error above the round-off floor.
    const PentaComplex u0 = s.penta(-0.5, 0.5);
    const Path coarse = residue_loop(u0, 1, true, 16);
    for (const char* name : {"identity", "exp"}) {
        double prev = -1.0;
        for (std::size_t per = 1; per <= 16; per *= 2) {
            const double err = residue_formula(builtin_function(name).fn, coarse, u0, per * 16).error();
            if (prev > 1e-9) led.check(3.0 * err, prev, std::string("halving reduces error 3x, ") + name);
            prev = err;
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    led.check(elapsed, 5.0, "runtime (s)");
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

inline CheckResult factorization() {
    CheckResult r{11, "factorization", false, "", 0.0};
    Ledger led;
    const double s5 = std::sqrt(5.0);
    const double a = (s5 + 1.0) / 5.0, b = (s5 - 1.0) / 5.0;
    // One root of each printed factorization; the other root is its negative.
    const PentaComplex printed[4] = {
        PentaComplex::one(),
        {0.2, a, -b, -b, a},
        {0.2, -b, a, a, -b},
        {0.6, -0.4, -0.4, -0.4, -0.4},
    };
    const PentaPolynomial p{{PentaComplex{}, PentaComplex::real(-1.0)}};
    const auto all = enumerate_factorizations(p);
    led.require(all.size() == 4, "four factorizations of u^2 - 1");
    led.require(count_factorizations(p) == 4, "count_factorizations(u^2 - 1)");
    std::vector<bool> used(all.size(), false);
    for (const auto& root : printed) {
        double best = INFINITY;
        std::size_t which = all.size();
        for (std::size_t f = 0; f < all.size(); ++f) {
            const auto& r1 = std::get<LinearFactor>(all[f][0]).root;
            const auto& r2 = std::get<LinearFactor>(all[f][1]).root;
            const double e = std::min(std::max(max_abs_diff(r1, root), max_abs_diff(r2, -root)),
                                      std::max(max_abs_diff(r1, -root), max_abs_diff(r2, root)));
            if (e < best) {
                best = e;
                which = f;
            }
        }
        led.check(best, 1e-12, "printed factorization");
        if (which < all.size()) {
            led.require(!used[which], "printed factorizations are distinct");
            used[which] = true;
        }
    }
    Sampler s(11);
    for (std::size_t m = 1; m <= 6; ++m) {
        for (int trial = 0; trial < 20; ++trial) {
            PentaPolynomial q;
            for (std::size_t l = 0; l < m; ++l) q.coeffs.push_back(s.penta(-1, 1));
            const Factorization f = factor(q);
            led.check(f.residual, 1e-8, "reconstruction, degree " + std::to_string(m));
        }
    }
    const auto& basis = canonical_basis();
    for (int signs = 0; signs < 8; ++signs) {
        const PentaComplex u = basis.eplus * ((signs & 1) ? -1.0 : 1.0) + basis.e1 * ((signs & 2) ? -1.0 : 1.0) +
                               basis.e2 * ((signs & 4) ? -1.0 : 1.0);
        led.check(max_abs_diff(u * u, PentaComplex::one()), 1e-15, "(+-e+ +-e1 +-e2)^2 = 1");
    }
    r.passed = led.passed();
    r.detail = led.summary();
    return r;
}

struct Suite {
    int id;
    const char* name;
    std::function<CheckResult()> fn;
};

inline std::vector<Suite> suites() {
    return {{1, "basis table", basis_table},
            {2, "ring axioms", ring_axioms},
            {3, "matrix homomorphism", matrix_homomorphism},
            {4, "canonical structure", canonical_structure},
            {5, "cosexponential triple agreement", cosexp_agreement},
            {6, "cosexponential identities", cosexp_identities},
            {7, "elementary functions", elementary_functions},
            {8, "geometry", geometry_laws},
            {9, "analyticity", analyticity},
            {10, "residues", residues},
            {11, "factorization", factorization}};
}

/// Runs a suite, timing it and turning escaped exceptions into failures.
inline CheckResult run(const Suite& suite) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{suite.id, suite.name, false, "", 0.0};
    try {
        r = suite.fn();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    for (const auto& suite : suites()) out.push_back(run(suite));
    return out;
}

}  // namespace penta::selftest
