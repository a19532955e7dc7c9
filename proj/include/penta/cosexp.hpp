#pragma once

// Polar 5-dimensional cosexponential functions g5k(y), k = 0..4: the five
// interleaved sub-series of exp(y) taking every fifth term.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "penta/ring.hpp"

namespace penta {

inline constexpr double kSeriesMaxArgument = 50.0;

namespace detail {
inline void check_index(int k) {
    if (k < 0 || k > 4) throw Error(ErrorKind::invalid_argument, "cosexponential index must be in 0..4");
}
}  // namespace detail

/// Partial sum of y^(k+5p)/(k+5p)! over p < nterms. Terms are built
/// incrementally; summation stops early once a term falls below 1e-18 of the
/// running sum past the peak of the series.
inline double g5_series(int k, double y, int nterms) {
    detail::check_index(k);
    if (nterms < 1) throw Error(ErrorKind::invalid_argument, "nterms must be >= 1");
    if (!(std::fabs(y) <= kSeriesMaxArgument)) {
        throw Error(ErrorKind::domain_too_large, "|y| must not exceed 50 for the series");
    }
    double term = 1.0;
    for (int n = 1; n <= k; ++n) term *= y / n;
    double sum = term;
    int n = k;
    for (int p = 1; p < nterms; ++p) {
        for (int s = 0; s < 5; ++s) {
            ++n;
            term *= y / n;
        }
        sum += term;
        if (n > std::fabs(y) && std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

/// (1/5) sum_l exp(y cos(2 pi l/5)) cos(y sin(2 pi l/5) - 2 pi k l/5).
/// Exact at y = 0, where the sum would leave round-off in place of zero.
inline double g5_closed(int k, double y) {
    detail::check_index(k);
    if (y == 0.0) return k == 0 ? 1.0 : 0.0;
    double sum = 0.0;
    for (int l = 0; l < 5; ++l) {
        const double a = 2.0 * std::numbers::pi * l / 5.0;
        sum += std::exp(y * std::cos(a)) * std::cos(y * std::sin(a) - a * k);
    }
    return sum / 5.0;
}

/// Roots a of a^2 + a - 1 = 0 and b of b^2 + 5b + 5 = 0 used by the radical
/// closed forms and the power-coefficient formulas.
struct RadicalConstants {
    static inline const double a = (std::sqrt(5.0) - 1.0) / 2.0;
    static inline const double b = -(5.0 + std::sqrt(5.0)) / 2.0;
};

/// g5k(y) from the closed forms written in terms of a and b. Those forms are
/// stated for the argument 2s, so they are evaluated at s = y/2 here.
inline double g5_closed_radical(int k, double y) {
    detail::check_index(k);
    const double a = RadicalConstants::a;
    const double b = RadicalConstants::b;
    const double s5 = std::sqrt(5.0);
    const double w1 = std::sqrt(-b);
    const double w2 = std::sqrt(5.0 + b);
    const double s = y / 2.0;

    const double grow = std::exp(2.0 * s) / 5.0;
    const double e1 = std::exp(a * s) / 5.0;
    const double e2 = std::exp(-(1.0 + a) * s) / 5.0;
    const double c1 = std::cos(w1 * s), sn1 = std::sin(w1 * s);
    const double c2 = std::cos(w2 * s), sn2 = std::sin(w2 * s);

    const double half_m = (s5 - 1.0) / 2.0;  // (-1 + sqrt5)/2
    const double half_p = (1.0 + s5) / 2.0;  // (1 + sqrt5)/2
    const double r1 = (5.0 + s5) / (2.0 * w1);
    const double r2 = std::sqrt(5.0 / -b);

    switch (k) {
        case 0: return grow + 2.0 * e1 * c1 + 2.0 * e2 * c2;
        case 1: return grow + e1 * (half_m * c1 + r1 * sn1) + e2 * (-half_p * c2 + r2 * sn2);
        case 2: return grow + e1 * (-half_p * c1 + r2 * sn1) + e2 * (half_m * c2 - r1 * sn2);
        case 3: return grow + e1 * (-half_p * c1 - r2 * sn1) + e2 * (half_m * c2 + r1 * sn2);
        default: return grow + e1 * (half_m * c1 - r1 * sn1) + e2 * (-half_p * c2 - r2 * sn2);
    }
}

using CosexpVector = std::array<double, 5>;

/// (g50(y), ..., g54(y)).
inline CosexpVector cosexp_vector(double y) {
    CosexpVector g{};
    for (int k = 0; k < 5; ++k) g[static_cast<std::size_t>(k)] = g5_closed(k, y);
    return g;
}

/// For exp(h_k y): which g5 index sits on basis element h_j.
inline constexpr std::array<std::array<int, 5>, 5> kExpBasisIndex{{
    {0, 0, 0, 0, 0},  // unused row (k = 0)
    {0, 1, 2, 3, 4},
    {0, 3, 1, 4, 2},
    {0, 2, 4, 1, 3},
    {0, 4, 3, 2, 1},
}};

/// exp(h_k y) written with the cosexponential functions, k = 1..4.
inline PentaComplex exp_basis(int k, double y) {
    if (k < 1 || k > 4) throw Error(ErrorKind::invalid_argument, "basis index for exp_basis must be in 1..4");
    const CosexpVector g = cosexp_vector(y);
    PentaComplex::Components x{};
    for (std::size_t j = 0; j < 5; ++j) {
        x[j] = g[static_cast<std::size_t>(kExpBasisIndex[static_cast<std::size_t>(k)][j])];
    }
    return PentaComplex(x);
}

/// exp((h1 + h4) y) grouped on 1, h1 + h4 and h2 + h3.
inline PentaComplex exp_h1_plus_h4(double y) {
    const double a = RadicalConstants::a;
    const double e0 = std::exp(2.0 * y), ea = std::exp(a * y), eb = std::exp(-(1.0 + a) * y);
    const double c0 = (e0 + 2.0 * ea + 2.0 * eb) / 5.0;
    const double c14 = (e0 + a * ea - (a + 1.0) * eb) / 5.0;
    const double c23 = (e0 - (a + 1.0) * ea + a * eb) / 5.0;
    return {c0, c14, c23, c23, c14};
}

/// exp((h1 - h4) y) grouped on 1, h1 + h4, h2 + h3, h1 - h4 and h2 - h3.
inline PentaComplex exp_h1_minus_h4(double y) {
    const double b = RadicalConstants::b;
    const double w1 = std::sqrt(-b), w2 = std::sqrt(5.0 + b);
    const double sq = std::sqrt(-5.0 * b);
    const double c1 = std::cos(w1 * y), c2 = std::cos(w2 * y);
    const double s1 = std::sin(w1 * y), s2 = std::sin(w2 * y);
    const double c0 = 0.2 + 0.4 * c1 + 0.4 * c2;
    const double c14 = 0.2 - (b + 3.0) / 5.0 * c1 + (b + 2.0) / 5.0 * c2;
    const double c23 = 0.2 + (b + 2.0) / 5.0 * c1 - (b + 3.0) / 5.0 * c2;
    const double o14 = w1 / 5.0 * s1 + s2 / sq;
    const double o23 = -(2.0 * b + 5.0) / (5.0 * w1) * s1 + (b + 2.0) / sq * s2;
    return {c0, c14 + o14, c23 + o23, c23 - o23, c14 - o14};
}

/// l-th ring power of exp(h_perm y); equals exp_basis(perm, l y).
inline PentaComplex cosexp_power(int perm, double y, unsigned l) {
    return ring_power(exp_basis(perm, y), l);
}

// ---------------------------------------------------------------------------
// Integer coefficients of powers of h1 + h4 and h1 - h4
//
//   (h1+h4)^m     = A_m (h1+h4) + B_m (h2+h3) + C_m
//   (h1-h4)^(2m+1) = D_m (h1-h4) + E_m (h2-h3)
//   (h1-h4)^(2m)   = F_m (h1+h4) + G_m (h2+h3) + H_m

enum class PowerFamily { APlus, DMinus, FMinus };

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Number of coefficients in a family (3 for A/B/C and F/G/H, 2 for D/E).
constexpr std::size_t family_size(PowerFamily f) noexcept { return f == PowerFamily::DMinus ? 2 : 3; }

/// First m at which the closed form of coefficient `index` applies.
constexpr unsigned closed_form_start(PowerFamily f, std::size_t index) noexcept {
    if (f == PowerFamily::APlus) return index == 2 ? 4 : 3;
    return 1;
}

template <class Int>
std::array<Int, 3> power_coeffs_recurrence(PowerFamily family, unsigned m) {
    if (m < 1) throw Error(ErrorKind::invalid_argument, "power index must be >= 1");
    switch (family) {
        case PowerFamily::APlus: {
            Int a = 1, b = 0, c = 0;
            for (unsigned i = 1; i < m; ++i) {
                Int na = b + c, nb = a + b, nc = 2 * a;
                a = na, b = nb, c = nc;
            }
            return {a, b, c};
        }
        case PowerFamily::DMinus: {
            Int d = 1, e = 0;  // (h1-h4)^1
            for (unsigned i = 0; i < m; ++i) {
                Int nd = -3 * d - e, ne = -d - 2 * e;
                d = nd, e = ne;
            }
            return {d, e, Int(0)};
        }
        case PowerFamily::FMinus: {
            Int f = 0, g = 1, h = -2;
            for (unsigned i = 1; i < m; ++i) {
                Int nf = -f + g, ng = f - 2 * g + h, nh = 2 * (g - h);
                f = nf, g = ng, h = nh;
            }
            return {f, g, h};
        }
    }
    return {};
}

namespace detail {
template <class Real>
Real ipow(const Real& base, int n) {
    Real r = 1;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}
inline int sign_pow(int n) { return (n % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// Closed forms in the radicals a = (sqrt5 - 1)/2 and b = -(5 + sqrt5)/2,
/// evaluated in `Real`. Entries below their applicable m are left empty.
template <class Real>
std::array<std::optional<Real>, 3> power_coeffs_closed(PowerFamily family, unsigned m) {
    using std::sqrt;
    if (m < 1) throw Error(ErrorKind::invalid_argument, "power index must be >= 1");
    const Real five = 5;
    const Real s5 = sqrt(five);
    const Real a = (s5 - 1) / 2;
    const Real b = -(five + s5) / 2;
    const int mi = static_cast<int>(m);
    std::array<std::optional<Real>, 3> out;
    using detail::ipow;
    using detail::sign_pow;
    switch (family) {
        case PowerFamily::APlus: {
            const Real two_m = ipow(Real(2), mi) / 5;
            if (m >= 3) {
                out[0] = two_m + (2 - 3 * a) / 5 * ipow(a, mi - 3) +
                         sign_pow(mi - 3) * (5 + 3 * a) / 5 * ipow(1 + a, mi - 3);
                out[1] = two_m + (a - 1) / 5 * ipow(a, mi - 3) -
                         sign_pow(mi - 3) * (a + 2) / 5 * ipow(1 + a, mi - 3);
            }
            if (m >= 4) {
                out[2] = two_m + (4 - 6 * a) / 5 * ipow(a, mi - 4) +
                         sign_pow(mi - 4) * (10 + 6 * a) / 5 * ipow(1 + a, mi - 4);
            }
            break;
        }
        case PowerFamily::DMinus: {
            const Real bm1 = ipow(b, mi - 1), cm1 = ipow(5 + b, mi - 1);
            out[0] = (b + 1) * bm1 + sign_pow(mi - 2) * (b + 4) * cm1;
            out[1] = -(b + 1) / (b + 2) * bm1 + sign_pow(mi - 2) / (b + 2) * cm1;
            break;
        }
        case PowerFamily::FMinus: {
            const Real den = 5 * (b + 2);
            const Real bm = ipow(b, mi), bm1 = ipow(b, mi - 1), cm = ipow(5 + b, mi);
            out[0] = -bm / den + sign_pow(mi - 1) * (b + 1) / den * cm;
            out[1] = (4 * b + 5) / den * bm1 + sign_pow(mi - 1) / den * cm;
            out[2] = -(6 * b + 10) / den * bm1 + sign_pow(mi) * Real(2) / 5 * cm;
            break;
        }
    }
    return out;
}

struct PowerCoefficients {
    PowerFamily family = PowerFamily::APlus;
    unsigned m = 1;
    std::size_t count = 3;
    std::array<BigInt, 3> recurrence{};
    /// Closed-form values rounded to the nearest integer; empty where the
    /// closed form does not apply yet.
    std::array<std::optional<BigInt>, 3> closed{};

    [[nodiscard]] bool agree() const {
        for (std::size_t i = 0; i < count; ++i) {
            if (closed[i] && *closed[i] != recurrence[i]) return false;
        }
        return true;
    }
};

inline PowerCoefficients power_coeffs(PowerFamily family, unsigned m) {
    PowerCoefficients pc;
    pc.family = family;
    pc.m = m;
    pc.count = family_size(family);
    pc.recurrence = power_coeffs_recurrence<BigInt>(family, m);
    const auto closed = power_coeffs_closed<BigFloat>(family, m);
    for (std::size_t i = 0; i < pc.count; ++i) {
        if (closed[i]) pc.closed[i] = static_cast<BigInt>(boost::multiprecision::round(*closed[i]));
    }
    return pc;
}

}  // namespace penta
