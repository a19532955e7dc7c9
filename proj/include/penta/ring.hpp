#pragma once

// The commutative ring of 5-complex numbers x0 + x1 h1 + x2 h2 + x3 h3 + x4 h4
// with the basis rule h_j h_k = h_{(j+k) mod 5}.

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>

#include "penta/error.hpp"

namespace penta {

inline constexpr std::size_t kDim = 5;

/// Product of two basis elements: h_j h_k = h_{(j+k) mod 5}, with h_0 = 1.
constexpr std::size_t basis_product(std::size_t j, std::size_t k) {
    if (j >= kDim || k >= kDim) {
        throw Error(ErrorKind::invalid_argument, "basis index must be in 0..4");
    }
    return (j + k) % kDim;
}

/// An element of the ring. Components are stored as (x0, x1, x2, x3, x4) and
/// are always finite; construction from NaN or infinity throws.
class PentaComplex {
public:
    using Components = std::array<double, kDim>;

    PentaComplex() noexcept = default;

    PentaComplex(double x0, double x1, double x2, double x3, double x4)
        : PentaComplex(Components{x0, x1, x2, x3, x4}) {}

    explicit PentaComplex(const Components& x) : x_(x) {
        for (double v : x_) {
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::non_finite, "5-complex components must be finite");
            }
        }
    }

    /// The real number r embedded as r + 0 h1 + ... .
    static PentaComplex real(double r) { return PentaComplex(r, 0, 0, 0, 0); }

    static PentaComplex one() noexcept { return from_trusted({1, 0, 0, 0, 0}); }

    /// Basis element h_k (h_0 = 1).
    static PentaComplex basis(std::size_t k) {
        if (k >= kDim) throw Error(ErrorKind::invalid_argument, "basis index must be in 0..4");
        Components x{};
        x[k] = 1.0;
        return from_trusted(x);
    }

    [[nodiscard]] double operator[](std::size_t i) const { return x_[i]; }
    [[nodiscard]] const Components& components() const noexcept { return x_; }

    friend bool operator==(const PentaComplex&, const PentaComplex&) = default;

    PentaComplex operator-() const noexcept {
        return from_trusted({-x_[0], -x_[1], -x_[2], -x_[3], -x_[4]});
    }

    PentaComplex& operator+=(const PentaComplex& rhs) { return *this = *this + rhs; }
    PentaComplex& operator-=(const PentaComplex& rhs) { return *this = *this - rhs; }
    PentaComplex& operator*=(const PentaComplex& rhs) { return *this = *this * rhs; }
    PentaComplex& operator*=(double s) { return *this = *this * s; }

    friend PentaComplex operator+(const PentaComplex& a, const PentaComplex& b) {
        Components r;
        for (std::size_t i = 0; i < kDim; ++i) r[i] = a.x_[i] + b.x_[i];
        return checked(r);
    }

    friend PentaComplex operator-(const PentaComplex& a, const PentaComplex& b) {
        Components r;
        for (std::size_t i = 0; i < kDim; ++i) r[i] = a.x_[i] - b.x_[i];
        return checked(r);
    }

    // Cyclic convolution: (uv)_k = sum over i+j = k (mod 5) of x_i y_j. With
    // m = 3k mod 5 (so 2m = k), the terms pair up as x_m y_m and
    // x_{m+d} y_{m-d} + x_{m-d} y_{m+d} for d = 1, 2; each pair is symmetric
    // in (u, v), so the product commutes exactly.
    friend PentaComplex operator*(const PentaComplex& a, const PentaComplex& b) {
        Components r{};
        for (std::size_t k = 0; k < kDim; ++k) {
            const std::size_t m = (3 * k) % kDim;
            double acc = a.x_[m] * b.x_[m];
            for (std::size_t d = 1; d <= 2; ++d) {
                const std::size_t i = (m + d) % kDim, j = (m + kDim - d) % kDim;
                acc += a.x_[i] * b.x_[j] + a.x_[j] * b.x_[i];
            }
            r[k] = acc;
        }
        return checked(r);
    }

    friend PentaComplex operator*(const PentaComplex& a, double s) {
        Components r;
        for (std::size_t i = 0; i < kDim; ++i) r[i] = a.x_[i] * s;
        return checked(r);
    }
    friend PentaComplex operator*(double s, const PentaComplex& a) { return a * s; }
    friend PentaComplex operator/(const PentaComplex& a, double s) { return a * (1.0 / s); }

private:
    static PentaComplex from_trusted(const Components& x) noexcept {
        PentaComplex u;
        u.x_ = x;
        return u;
    }

    static PentaComplex checked(const Components& x) {
        for (double v : x) {
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::overflow, "5-complex arithmetic left the representable range");
            }
        }
        return from_trusted(x);
    }

    Components x_{};
};

inline PentaComplex add(const PentaComplex& u, const PentaComplex& v) { return u + v; }
inline PentaComplex multiply(const PentaComplex& u, const PentaComplex& v) { return u * v; }

/// Euclidean norm of the five components.
inline double modulus(const PentaComplex& u) noexcept {
    const auto& x = u.components();
    return std::hypot(std::hypot(x[0], x[1]), std::hypot(x[2], x[3]), x[4]);
}

/// Largest absolute componentwise difference.
inline double max_abs_diff(const PentaComplex& a, const PentaComplex& b) noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
    return m;
}

/// Non-negative integer power by repeated squaring.
inline PentaComplex ring_power(PentaComplex base, unsigned exponent) {
    PentaComplex result = PentaComplex::one();
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

/// "x0 + x1 h1 + x2 h2 + x3 h3 + x4 h4", signs folded into the separators.
inline std::string to_text(const PentaComplex& u, int precision = 17) {
    std::ostringstream os;
    os.precision(precision);
    os << u[0];
    for (std::size_t k = 1; k < kDim; ++k) {
        const double c = u[k];
        os << (std::signbit(c) ? " - " : " + ") << std::fabs(c) << " h" << k;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const PentaComplex& u) {
    return os << to_text(u, static_cast<int>(os.precision()));
}

// ---------------------------------------------------------------------------
// Matrix representation

/// 5x5 real circulant matrix; entry (r, c) equals x_{(c - r) mod 5}.
struct RingMatrix {
    using Rows = std::array<std::array<double, kDim>, kDim>;
    Rows m{};

    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
    double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

    static RingMatrix identity() noexcept {
        RingMatrix id;
        for (std::size_t i = 0; i < kDim; ++i) id.m[i][i] = 1.0;
        return id;
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) noexcept {
        RingMatrix r;
        for (std::size_t i = 0; i < kDim; ++i) {
            for (std::size_t j = 0; j < kDim; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < kDim; ++k) acc += a.m[i][k] * b.m[k][j];
                r.m[i][j] = acc;
            }
        }
        return r;
    }

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;
};

inline RingMatrix to_matrix(const PentaComplex& u) noexcept {
    RingMatrix out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) out.m[r][c] = u[(c + kDim - r) % kDim];
    }
    return out;
}

inline constexpr double kCirculantTolerance = 1e-12;

/// Reads the first row back. Every other row must match the cyclically shifted
/// first row to within `tolerance` (absolute).
inline PentaComplex from_matrix(const RingMatrix& mat, double tolerance = kCirculantTolerance) {
    for (std::size_t r = 1; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            const double expected = mat.m[0][(c + kDim - r) % kDim];
            if (!(std::fabs(mat.m[r][c] - expected) <= tolerance)) {
                throw Error(ErrorKind::not_circulant,
                            "row " + std::to_string(r) + " is not the shifted first row");
            }
        }
    }
    return PentaComplex(mat.m[0]);
}

}  // namespace penta
