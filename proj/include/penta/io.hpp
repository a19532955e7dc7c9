#pragma once

// JSON mapping of the library types. Numbers are arrays [x0,x1,x2,x3,x4];
// doubles are written in shortest round-trip form, so re-reading is exact.

#include "json.hpp"

#include <string>
#include <vector>

#include "penta/analytic.hpp"
#include "penta/contour.hpp"
#include "penta/geometry.hpp"
#include "penta/polyfactor.hpp"

namespace penta {

using nlohmann::json;

inline void to_json(json& j, const PentaComplex& u) { j = u.components(); }

inline void from_json(const json& j, PentaComplex& u) {
    if (!j.is_array() || j.size() != kDim) {
        throw Error(ErrorKind::invalid_argument, "a 5-complex number is an array of 5 numbers");
    }
    PentaComplex::Components x{};
    for (std::size_t i = 0; i < kDim; ++i) {
        if (!j[i].is_number()) throw Error(ErrorKind::invalid_argument, "components must be numbers");
        x[i] = j[i].get<double>();
    }
    u = PentaComplex(x);
}

inline void to_json(json& j, const CanonicalForm& c) {
    j = json{{"vplus", c.vplus}, {"v1", c.v1}, {"tv1", c.tv1}, {"v2", c.v2}, {"tv2", c.tv2}};
}

inline void from_json(const json& j, CanonicalForm& c) {
    c = {j.at("vplus").get<double>(), j.at("v1").get<double>(), j.at("tv1").get<double>(), j.at("v2").get<double>(),
         j.at("tv2").get<double>()};
}

/// Undefined angles are null, with the cause under "reasons".
inline void to_json(json& j, const PolarForm& f) {
    j = json{{"d", f.d}, {"rho", f.rho}, {"vplus", f.vplus}, {"rho1", f.rho1}, {"rho2", f.rho2}};
    json reasons = json::object();
    for (AngleId id : {AngleId::phi1, AngleId::phi2, AngleId::psi1, AngleId::thetaplus}) {
        const Angle& a = f.angle(id);
        const std::string key(to_string(id));
        if (a.defined()) {
            j[key] = *a.value;
        } else {
            j[key] = nullptr;
            reasons[key] = a.reason;
        }
    }
    if (!reasons.empty()) j["reasons"] = reasons;
}

inline void to_json(json& j, const Path& p) { j = json{{"vertices", p.vertices()}, {"closed", p.closed()}}; }

inline Path path_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices")) {
        throw Error(ErrorKind::invalid_argument, "a path is {\"vertices\": [[5 numbers]...], \"closed\": bool}");
    }
    return Path(j.at("vertices").get<std::vector<PentaComplex>>(), j.value("closed", false));
}

inline void to_json(json& j, const Factor& f) {
    if (const auto* lin = std::get_if<LinearFactor>(&f)) {
        j = json{{"type", "linear"}, {"root", lin->root}};
    } else {
        const auto& q = std::get<QuadraticFactor>(f);
        j = json{{"type", "quadratic"}, {"b", q.b}, {"c", q.c}};
    }
}

/// {"coeffs": [a_1..a_m]} for a monic polynomial, with an optional
/// "leading" coefficient that is divided out.
inline PentaPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array() || j.at("coeffs").empty()) {
        throw Error(ErrorKind::invalid_argument, "a polynomial is {\"coeffs\": [[5 numbers]...], \"leading\"?: [5 numbers]}");
    }
    auto coeffs = j.at("coeffs").get<std::vector<PentaComplex>>();
    if (j.contains("leading")) return PentaPolynomial::from_coefficients(j.at("leading").get<PentaComplex>(), coeffs);
    return PentaPolynomial{std::move(coeffs)};
}

inline void to_json(json& j, const CrReport& r) {
    json groups = json::array();
    for (const auto& g : r.groups) {
        groups.push_back({{"shift", g.shift},
                          {"derivatives", g.derivatives},
                          {"deviation", g.deviation},
                          {"threshold", g.threshold},
                          {"passed", g.passed}});
    }
    j = json{{"groups", groups}, {"step", r.step}, {"tolerance", r.tolerance}, {"passed", r.passed}};
}

inline void to_json(json& j, const SecondOrderReport& r) {
    json chains = json::array();
    for (const auto& c : r.chains) {
        json pairs = json::array();
        for (const auto& [a, b] : c.pairs) pairs.push_back({a, b});
        chains.push_back({{"component", c.component},
                          {"sum", c.sum},
                          {"pairs", pairs},
                          {"values", c.values},
                          {"deviation", c.deviation},
                          {"threshold", c.threshold},
                          {"passed", c.passed}});
    }
    j = json{{"chains", chains}, {"step", r.step}, {"tolerance", r.tolerance}, {"passed", r.passed}};
}

inline void to_json(json& j, const ResidueResult& r) {
    j = json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"winding1", r.winding1}, {"winding2", r.winding2}, {"error", r.error()}};
}

}  // namespace penta
