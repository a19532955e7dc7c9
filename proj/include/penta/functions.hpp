#pragma once

// Named functions of a 5-complex variable, for the command line and the
// residue / analyticity checks.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "penta/elementary.hpp"

namespace penta {

using RingFunction = std::function<PentaComplex(const PentaComplex&)>;

struct NamedFunction {
    RingFunction fn;
    bool analytic = true;
};

/// "one", "identity", "square", "cube", "exp", "sin", "cos", "sinh", "cosh",
/// and "projection" (u -> x0, not analytic).
inline const std::map<std::string, NamedFunction>& builtin_functions() {
    static const std::map<std::string, NamedFunction> table{
        {"one", {[](const PentaComplex&) { return PentaComplex::one(); }, true}},
        {"identity", {[](const PentaComplex& u) { return u; }, true}},
        {"square", {[](const PentaComplex& u) { return u * u; }, true}},
        {"cube", {[](const PentaComplex& u) { return u * u * u; }, true}},
        {"exp", {[](const PentaComplex& u) { return penta::exp(u); }, true}},
        {"sin", {[](const PentaComplex& u) { return penta::sin(u); }, true}},
        {"cos", {[](const PentaComplex& u) { return penta::cos(u); }, true}},
        {"sinh", {[](const PentaComplex& u) { return penta::sinh(u); }, true}},
        {"cosh", {[](const PentaComplex& u) { return penta::cosh(u); }, true}},
        {"projection", {[](const PentaComplex& u) { return PentaComplex::real(u[0]); }, false}},
    };
    return table;
}

inline std::vector<std::string> builtin_function_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : builtin_functions()) names.push_back(name);
    return names;
}

inline const NamedFunction& builtin_function(const std::string& name) {
    const auto& table = builtin_functions();
    const auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::invalid_argument, "unknown function '" + name + "'");
    return it->second;
}

}  // namespace penta
