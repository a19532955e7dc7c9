#pragma once

// Elementary functions of a 5-complex variable, evaluated componentwise on the
// canonical form, and the exponential / trigonometric forms of a number.

#include <cmath>
#include <complex>
#include <numbers>

#include "penta/geometry.hpp"
#include "penta/inverse.hpp"

namespace penta {

namespace detail {

inline double checked_exp(double x) {
    const double r = std::exp(x);
    if (!std::isfinite(r)) throw Error(ErrorKind::overflow, "exponential exceeds the double range");
    return r;
}

inline std::complex<double> checked(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::overflow, "result exceeds the double range");
    }
    return z;
}

inline double checked(double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::overflow, "result exceeds the double range");
    return x;
}

/// Apply a real function to v+ and its complex extension to each plane.
template <class RealFn, class ComplexFn>
PentaComplex apply_componentwise(const PentaComplex& u, RealFn&& real_fn, ComplexFn&& complex_fn) {
    const CanonicalForm c = to_canonical(u);
    return from_canonical(CanonicalForm::from_parts(checked(real_fn(c.vplus)), checked(complex_fn(c.plane(1))),
                                                    checked(complex_fn(c.plane(2)))));
}

}  // namespace detail

/// e+ e^{v+} + e^{v1}(e1 cos tv1 + te1 sin tv1) + e^{v2}(e2 cos tv2 + te2 sin tv2).
inline PentaComplex exp(const PentaComplex& u) {
    const CanonicalForm c = to_canonical(u);
    const double ep = detail::checked_exp(c.vplus);
    const double r1 = detail::checked_exp(c.v1);
    const double r2 = detail::checked_exp(c.v2);
    return from_canonical({ep, r1 * std::cos(c.tv1), r1 * std::sin(c.tv1), r2 * std::cos(c.tv2),
                           r2 * std::sin(c.tv2)});
}

/// Constant multiplying ln(sqrt2 / tan theta+) in the logarithm: (h1+h2+h3+h4)/5.
inline PentaComplex log_theta_direction() { return {0.0, 0.2, 0.2, 0.2, 0.2}; }

/// Constant multiplying ln tan psi1: ((sqrt5+1)(h1+h4) - (sqrt5-1)(h2+h3))/10.
inline PentaComplex log_psi_direction() {
    const double s5 = std::sqrt(5.0);
    const double a = (s5 + 1.0) / 10.0, b = (s5 - 1.0) / 10.0;
    return {0.0, a, -b, -b, a};
}

/// Principal logarithm, assembled in the h basis from the amplitude and the
/// angles: ln rho + (h1+..+h4)/5 ln(sqrt2/tan theta+) + [...] ln tan psi1
/// + te1 phi1 + te2 phi2. Requires v+ > 0 and both plane radii nonzero.
inline PentaComplex log(const PentaComplex& u) {
    const PolarForm f = polar_form(u);
    if (!(f.vplus > 0.0)) throw Error(ErrorKind::log_domain, "logarithm requires v+ > 0");
    if (!f.phi1.defined() || !f.phi2.defined() || !(f.rho1 > 0.0) || !(f.rho2 > 0.0)) {
        throw Error(ErrorKind::log_domain, "logarithm requires nonzero plane radii");
    }
    const auto& basis = canonical_basis();
    // sqrt2 / tan theta+ = v+ / rho1 and tan psi1 = rho1 / rho2.
    const double log_theta = std::log(f.vplus) - std::log(f.rho1);
    const double log_psi = std::log(f.rho1) - std::log(f.rho2);
    const double log_rho = (std::log(f.vplus) + 2.0 * std::log(f.rho1) + 2.0 * std::log(f.rho2)) / 5.0;
    return PentaComplex::real(log_rho) + log_theta_direction() * log_theta + log_psi_direction() * log_psi +
           basis.te1 * *f.phi1.value + basis.te2 * *f.phi2.value;
}

/// u^m = e+ v+^m + rho1^m(e1 cos m phi1 + te1 sin m phi1) + rho2^m(...).
/// Integer m is defined on every u (negative m needs an invertible u);
/// non-integer m needs the logarithm's domain.
inline PentaComplex pow_real(const PentaComplex& u, double m) {
    if (!std::isfinite(m)) throw Error(ErrorKind::invalid_argument, "exponent must be finite");
    const CanonicalForm c = to_canonical(u);
    const bool integral = std::trunc(m) == m;
    if (integral) {
        if (m < 0.0 && !is_invertible(u)) {
            throw Error(ErrorKind::non_invertible, "negative power of a divisor of zero");
        }
        if (m == 0.0) return PentaComplex::one();
        if (std::fabs(m) <= 64.0) {
            const int n = static_cast<int>(m);
            // Exact repeated multiplication for small integer powers.
            auto ipow = [n](auto z) {
                using T = decltype(z);
                T base = n < 0 ? T(1) / z : z;
                T r(1);
                for (unsigned e = static_cast<unsigned>(n < 0 ? -n : n); e > 0; e >>= 1u) {
                    if (e & 1u) r *= base;
                    if (e > 1u) base *= base;
                }
                return r;
            };
            return from_canonical(CanonicalForm::from_parts(detail::checked(ipow(c.vplus)),
                                                            detail::checked(ipow(c.plane(1))),
                                                            detail::checked(ipow(c.plane(2)))));
        }
    }
    const PolarForm f = polar_form(u);
    if (integral) {
        auto plane = [m](double rho, const Angle& phi) {
            if (rho == 0.0 || !phi.defined()) return std::complex<double>{};
            return std::polar(std::pow(rho, m), m * *phi.value);
        };
        return from_canonical(CanonicalForm::from_parts(detail::checked(std::pow(f.vplus, m)),
                                                        detail::checked(plane(f.rho1, f.phi1)),
                                                        detail::checked(plane(f.rho2, f.phi2))));
    }
    if (!(f.vplus > 0.0) || !f.phi1.defined() || !f.phi2.defined()) {
        throw Error(ErrorKind::pow_domain, "non-integer power requires v+ > 0 and nonzero plane radii");
    }
    return from_canonical(CanonicalForm::from_parts(
        detail::checked(std::pow(f.vplus, m)), detail::checked(std::polar(std::pow(f.rho1, m), m * *f.phi1.value)),
        detail::checked(std::polar(std::pow(f.rho2, m), m * *f.phi2.value))));
}

/// e+ cos v+ + sum_k (e_k cos v_k cosh tv_k - te_k sin v_k sinh tv_k).
inline PentaComplex cos(const PentaComplex& u) {
    return detail::apply_componentwise(
        u, [](double x) { return std::cos(x); }, [](std::complex<double> z) { return std::cos(z); });
}

inline PentaComplex sin(const PentaComplex& u) {
    return detail::apply_componentwise(
        u, [](double x) { return std::sin(x); }, [](std::complex<double> z) { return std::sin(z); });
}

inline PentaComplex cosh(const PentaComplex& u) {
    return detail::apply_componentwise(
        u, [](double x) { return std::cosh(x); }, [](std::complex<double> z) { return std::cosh(z); });
}

inline PentaComplex sinh(const PentaComplex& u) {
    return detail::apply_componentwise(
        u, [](double x) { return std::sinh(x); }, [](std::complex<double> z) { return std::sinh(z); });
}

// ---------------------------------------------------------------------------
// Exponential and trigonometric forms

struct ExponentialForm {
    double amplitude = 0.0;    // rho > 0
    double log_tan_theta = 0.0;  // ln(sqrt2 / tan theta+)
    double log_tan_psi = 0.0;    // ln tan psi1
    double phi1 = 0.0;
    double phi2 = 0.0;

    /// The exponent multiplying rho: everything inside exp{...}.
    [[nodiscard]] PentaComplex exponent() const {
        const auto& basis = canonical_basis();
        return log_theta_direction() * log_tan_theta + log_psi_direction() * log_tan_psi + basis.te1 * phi1 +
               basis.te2 * phi2;
    }

    /// rho exp{exponent}.
    [[nodiscard]] PentaComplex reconstruct() const { return amplitude * penta::exp(exponent()); }
};

/// Defined for 0 < theta+ < pi/2 (v+ > 0) with rho1, rho2 > 0.
inline ExponentialForm exponential_form(const PentaComplex& u) {
    const PolarForm f = polar_form(u);
    if (!f.thetaplus.defined() || !(*f.thetaplus.value > 0.0) || !(*f.thetaplus.value < std::numbers::pi / 2) ||
        !(f.vplus > 0.0)) {
        throw Error(ErrorKind::form_domain, "exponential form requires 0 < theta+ < pi/2");
    }
    if (!f.phi1.defined() || !f.phi2.defined() || !(f.rho1 > 0.0) || !(f.rho2 > 0.0)) {
        throw Error(ErrorKind::form_domain, "exponential form requires nonzero plane radii");
    }
    const double tan_theta = std::tan(*f.thetaplus.value);
    const double tan_psi = std::tan(*f.psi1.value);
    return {f.rho, std::log(std::sqrt(2.0) / tan_theta), std::log(tan_psi), *f.phi1.value, *f.phi2.value};
}

/// Right-hand side of the trigonometric form
///   d (5/2)^{1/2} (cot^2 theta+ + 1 + cot^2 psi1)^{-1/2}
///     (e+ sqrt2 cot theta+ + e1 + e2 cot psi1) exp(te1 phi1 + te2 phi2).
/// Requires all angles defined, 0 < theta+ < pi and 0 < psi1 < pi/2.
inline PentaComplex trigonometric_form(const PentaComplex& u) {
    const PolarForm f = polar_form(u);
    if (!f.all_angles_defined()) throw Error(ErrorKind::form_domain, "trigonometric form needs every angle");
    const double theta = *f.thetaplus.value;
    const double psi = *f.psi1.value;
    if (!(theta > 0.0 && theta < std::numbers::pi) || !(psi > 0.0 && psi < std::numbers::pi / 2)) {
        throw Error(ErrorKind::form_domain, "trigonometric form requires 0 < theta+ < pi and 0 < psi1 < pi/2");
    }
    const auto& basis = canonical_basis();
    const double cot_theta = std::cos(theta) / std::sin(theta);
    const double cot_psi = std::cos(psi) / std::sin(psi);
    const double scale =
        f.d * std::sqrt(2.5) / std::sqrt(cot_theta * cot_theta + 1.0 + cot_psi * cot_psi);
    const PentaComplex direction = basis.eplus * (std::sqrt(2.0) * cot_theta) + basis.e1 + basis.e2 * cot_psi;
    const PentaComplex rotation = penta::exp(basis.te1 * *f.phi1.value + basis.te2 * *f.phi2.value);
    return scale * direction * rotation;
}

/// Modulus recovered from the amplitude and the two angles:
///   d = rho 2^{2/5}/sqrt5 (tan theta+ tan^2 psi1)^{1/5} (cot^2 theta+ + 1 + cot^2 psi1)^{1/2}.
inline double modulus_from_amplitude(double rho, double thetaplus, double psi1) {
    const double tt = std::tan(thetaplus), tp = std::tan(psi1);
    return rho * std::pow(2.0, 0.4) / std::sqrt(5.0) * std::pow(tt * tp * tp, 0.2) *
           std::sqrt(1.0 / (tt * tt) + 1.0 + 1.0 / (tp * tp));
}

}  // namespace penta
