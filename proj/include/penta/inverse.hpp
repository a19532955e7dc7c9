#pragma once

#include <cmath>
#include <optional>

#include "penta/canonical.hpp"

namespace penta {

inline constexpr double kInverseRelativeTolerance = 1e-13;

/// True when no canonical component of u vanishes, relative to |u|.
inline bool is_invertible(const PentaComplex& u, double rel_tol = kInverseRelativeTolerance) {
    const CanonicalForm c = to_canonical(u);
    const double tau = rel_tol * modulus(u);
    return std::fabs(c.vplus) > tau && std::hypot(c.v1, c.tv1) > tau && std::hypot(c.v2, c.tv2) > tau;
}

/// Multiplicative inverse through the canonical form: 1/v+ on the line and the
/// complex reciprocal in each plane. Zero divisors (v+ = 0 or rho_k = 0, up to
/// rel_tol |u|) throw NonInvertible.
inline PentaComplex inverse(const PentaComplex& u, double rel_tol = kInverseRelativeTolerance) {
    const CanonicalForm c = to_canonical(u);
    const double tau = rel_tol * modulus(u);
    const std::complex<double> w1 = c.plane(1);
    const std::complex<double> w2 = c.plane(2);
    if (!(std::fabs(c.vplus) > tau)) {
        throw Error(ErrorKind::non_invertible, "v+ vanishes: element is a divisor of zero");
    }
    if (!(std::abs(w1) > tau) || !(std::abs(w2) > tau)) {
        throw Error(ErrorKind::non_invertible, "a plane radius vanishes: element is a divisor of zero");
    }
    return from_canonical(CanonicalForm::from_parts(1.0 / c.vplus, 1.0 / w1, 1.0 / w2));
}

}  // namespace penta
