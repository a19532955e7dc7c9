#pragma once

// Modulus, amplitude, plane radii and the polar / planar / azimuthal angles.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "penta/canonical.hpp"

namespace penta {

inline constexpr double kAngleRelativeTolerance = 1e-13;

enum class AngleId { phi1, phi2, psi1, thetaplus };

constexpr const char* to_string(AngleId a) noexcept {
    switch (a) {
        case AngleId::phi1: return "phi1";
        case AngleId::phi2: return "phi2";
        case AngleId::psi1: return "psi1";
        case AngleId::thetaplus: return "thetaplus";
    }
    return "?";
}

/// An angle that may be undefined because its defining radius vanished.
struct Angle {
    std::optional<double> value;
    std::string reason;  // empty when defined

    [[nodiscard]] bool defined() const noexcept { return value.has_value(); }
};

struct PolarForm {
    double d = 0.0;       // modulus
    double rho = 0.0;     // amplitude, real odd fifth root of v+ rho1^2 rho2^2
    double vplus = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
    Angle phi1, phi2;     // [0, 2 pi)
    Angle psi1;           // [0, pi/2]
    Angle thetaplus;      // [0, pi]

    [[nodiscard]] const Angle& angle(AngleId id) const {
        switch (id) {
            case AngleId::phi1: return phi1;
            case AngleId::phi2: return phi2;
            case AngleId::psi1: return psi1;
            case AngleId::thetaplus: return thetaplus;
        }
        return phi1;
    }

    /// Value of the angle, or AngleUndefined.
    [[nodiscard]] double get(AngleId id) const {
        const Angle& a = angle(id);
        if (!a.defined()) throw Error(ErrorKind::angle_undefined, std::string(to_string(id)) + ": " + a.reason);
        return *a.value;
    }

    [[nodiscard]] double phi(int k) const { return get(k == 1 ? AngleId::phi1 : AngleId::phi2); }

    [[nodiscard]] bool all_angles_defined() const noexcept {
        return phi1.defined() && phi2.defined() && psi1.defined() && thetaplus.defined();
    }
};

/// atan2 folded into [0, 2 pi).
inline double azimuth(double y, double x) noexcept {
    double a = std::atan2(y, x);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi) a = 0.0;
    return a;
}

/// Sign-preserving real fifth root.
inline double odd_fifth_root(double x) noexcept {
    return std::copysign(std::pow(std::fabs(x), 0.2), x);
}

inline PolarForm polar_form(const PentaComplex& u) {
    const CanonicalForm c = to_canonical(u);
    PolarForm f;
    f.d = modulus(u);
    f.vplus = c.vplus;
    f.rho1 = std::hypot(c.v1, c.tv1);
    f.rho2 = std::hypot(c.v2, c.tv2);
    f.rho = odd_fifth_root(c.vplus * f.rho1 * f.rho1 * f.rho2 * f.rho2);

    const double tau = kAngleRelativeTolerance * f.d;
    auto make = [tau](double radius, double value, const char* why) {
        Angle a;
        if (radius > tau) {
            a.value = value;
        } else {
            a.reason = why;
        }
        return a;
    };
    f.phi1 = make(f.rho1, azimuth(c.tv1, c.v1), "rho1 vanishes");
    f.phi2 = make(f.rho2, azimuth(c.tv2, c.v2), "rho2 vanishes");
    f.psi1 = make(std::hypot(f.rho1, f.rho2), std::atan2(f.rho1, f.rho2), "rho1 and rho2 vanish");
    f.thetaplus = make(std::hypot(c.vplus, f.rho1), std::atan2(std::sqrt(2.0) * f.rho1, c.vplus),
                       "v+ and rho1 vanish");
    return f;
}

/// Both sides of |uv| <= sqrt(5) |u| |v|.
inline std::pair<double, double> modulus_product_bound(const PentaComplex& u, const PentaComplex& v) {
    return {modulus(u * v), std::sqrt(5.0) * modulus(u) * modulus(v)};
}

}  // namespace penta
