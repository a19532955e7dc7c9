#pragma once

// Canonical decomposition of the ring: one real line (v+) and two planes
// (v1 + i tv1, v2 + i tv2) on which multiplication acts componentwise.

#include <array>
#include <cmath>
#include <complex>

#include "penta/ring.hpp"

namespace penta {

/// p = cos(2 pi/5) and q = sin(2 pi/5), written as radicals.
struct TransformConstants {
    static inline const double sqrt5 = std::sqrt(5.0);
    static inline const double p = (sqrt5 - 1.0) / 4.0;
    static inline const double q = std::sqrt((5.0 + sqrt5) / 8.0);
    /// cos(4 pi/5) = 2p^2 - 1 and sin(4 pi/5) = 2pq.
    static inline const double c2 = 2.0 * p * p - 1.0;
    static inline const double s2 = 2.0 * p * q;
};

using Matrix5 = std::array<std::array<double, kDim>, kDim>;

/// Rows map (x0..x4) to (v+, v1, tv1, v2, tv2).
inline const Matrix5& canonical_matrix() {
    using C = TransformConstants;
    static const Matrix5 m{{
        {1.0, 1.0, 1.0, 1.0, 1.0},
        {1.0, C::p, C::c2, C::c2, C::p},
        {0.0, C::q, C::s2, -C::s2, -C::q},
        {1.0, C::c2, C::p, C::p, C::c2},
        {0.0, C::s2, -C::q, C::q, -C::s2},
    }};
    return m;
}

struct CanonicalForm {
    double vplus = 0.0;
    double v1 = 0.0, tv1 = 0.0;
    double v2 = 0.0, tv2 = 0.0;

    /// Plane k (1 or 2) as the complex number v_k + i tv_k.
    [[nodiscard]] std::complex<double> plane(int k) const {
        return k == 1 ? std::complex<double>{v1, tv1} : std::complex<double>{v2, tv2};
    }

    static CanonicalForm from_parts(double vplus, std::complex<double> w1, std::complex<double> w2) {
        return {vplus, w1.real(), w1.imag(), w2.real(), w2.imag()};
    }

    [[nodiscard]] std::array<double, kDim> as_array() const { return {vplus, v1, tv1, v2, tv2}; }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm to_canonical(const PentaComplex& u) {
    const auto& m = canonical_matrix();
    std::array<double, kDim> c{};
    for (std::size_t r = 0; r < kDim; ++r) {
        double acc = 0.0;
        for (std::size_t j = 0; j < kDim; ++j) acc += m[r][j] * u[j];
        c[r] = acc;
    }
    return {c[0], c[1], c[2], c[3], c[4]};
}

/// e+ v+ + e1 v1 + te1 tv1 + e2 v2 + te2 tv2.
inline PentaComplex from_canonical(const CanonicalForm& c) {
    const auto& m = canonical_matrix();
    const std::array<double, kDim> w{c.vplus / 5.0, 0.4 * c.v1, 0.4 * c.tv1, 0.4 * c.v2, 0.4 * c.tv2};
    PentaComplex::Components x{};
    for (std::size_t j = 0; j < kDim; ++j) {
        double acc = 0.0;
        for (std::size_t r = 0; r < kDim; ++r) acc += w[r] * m[r][j];
        x[j] = acc;
    }
    return PentaComplex(x);
}

struct CanonicalBasis {
    PentaComplex eplus, e1, te1, e2, te2;
};

/// The idempotent basis e+, e1, e2 and the imaginary units te1, te2,
/// built once from the canonical matrix.
inline const CanonicalBasis& canonical_basis() {
    static const CanonicalBasis basis = [] {
        const auto& m = canonical_matrix();
        auto row = [&](std::size_t r, double scale) {
            PentaComplex::Components x{};
            for (std::size_t j = 0; j < kDim; ++j) x[j] = scale * m[r][j];
            return PentaComplex(x);
        };
        return CanonicalBasis{row(0, 0.2), row(1, 0.4), row(2, 0.4), row(3, 0.4), row(4, 0.4)};
    }();
    return basis;
}

inline CanonicalForm canonical_one() noexcept { return {1.0, 1.0, 0.0, 1.0, 0.0}; }

inline CanonicalForm canonical_add(const CanonicalForm& a, const CanonicalForm& b) noexcept {
    return {a.vplus + b.vplus, a.v1 + b.v1, a.tv1 + b.tv1, a.v2 + b.v2, a.tv2 + b.tv2};
}

/// Real product on the line, complex product in each plane.
inline CanonicalForm canonical_multiply(const CanonicalForm& a, const CanonicalForm& b) noexcept {
    return {
        a.vplus * b.vplus,
        a.v1 * b.v1 - a.tv1 * b.tv1,
        a.v1 * b.tv1 + a.tv1 * b.v1,
        a.v2 * b.v2 - a.tv2 * b.tv2,
        a.v2 * b.tv2 + a.tv2 * b.v2,
    };
}

// ---------------------------------------------------------------------------
// Rotated orthonormal axes

struct RotatedCoords {
    double xiplus = 0.0;
    double xi1 = 0.0, eta1 = 0.0;
    double xi2 = 0.0, eta2 = 0.0;

    /// Projection on the plane (xi_k, eta_k), k = 1 or 2.
    [[nodiscard]] std::array<double, 2> plane(int k) const {
        return k == 1 ? std::array<double, 2>{xi1, eta1} : std::array<double, 2>{xi2, eta2};
    }
};

/// Orthonormal matrix T of the rotated axes: the canonical matrix with its
/// first row divided by sqrt(2), all scaled by sqrt(2/5).
inline const Matrix5& rotation_matrix() {
    static const Matrix5 t = [] {
        Matrix5 out = canonical_matrix();
        const double s = std::sqrt(0.4);
        for (std::size_t r = 0; r < kDim; ++r) {
            const double rs = r == 0 ? s / std::sqrt(2.0) : s;
            for (double& v : out[r]) v *= rs;
        }
        return out;
    }();
    return t;
}

inline RotatedCoords rotated_coords(const PentaComplex& u) {
    const auto& t = rotation_matrix();
    std::array<double, kDim> c{};
    for (std::size_t r = 0; r < kDim; ++r) {
        double acc = 0.0;
        for (std::size_t j = 0; j < kDim; ++j) acc += t[r][j] * u[j];
        c[r] = acc;
    }
    return {c[0], c[1], c[2], c[3], c[4]};
}

// ---------------------------------------------------------------------------
// Irreducible (block-diagonal) representation

using Block2 = std::array<std::array<double, 2>, 2>;

struct IrreducibleRep {
    double vplus = 0.0;
    Block2 V1{};
    Block2 V2{};

    /// 5x5 block-diagonal matrix diag(v+, V1, V2).
    [[nodiscard]] Matrix5 dense() const {
        Matrix5 out{};
        out[0][0] = vplus;
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                out[1 + i][1 + j] = V1[i][j];
                out[3 + i][3 + j] = V2[i][j];
            }
        }
        return out;
    }
};

inline Block2 plane_block(double v, double tv) noexcept { return {{{v, tv}, {-tv, v}}}; }

inline IrreducibleRep irreducible_rep(const PentaComplex& u) {
    const CanonicalForm c = to_canonical(u);
    return {c.vplus, plane_block(c.v1, c.tv1), plane_block(c.v2, c.tv2)};
}

}  // namespace penta
