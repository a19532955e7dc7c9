#pragma once

// Monic polynomials over the ring. Each polynomial splits into one real
// polynomial in v+ and two complex polynomials in the canonical planes; their
// roots, recombined, give factorizations into linear or quadratic factors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <variant>
#include <vector>

#include "penta/analytic.hpp"
#include "penta/inverse.hpp"

namespace penta {

/// u^m + a_1 u^{m-1} + ... + a_m; `coeffs` holds a_1..a_m.
struct PentaPolynomial {
    std::vector<PentaComplex> coeffs;

    [[nodiscard]] std::size_t degree() const noexcept { return coeffs.size(); }

    /// Normalizes leading * u^m + rest... by the inverse of the leading
    /// coefficient; throws NonInvertibleLeading for a zero-divisor leader.
    static PentaPolynomial from_coefficients(const PentaComplex& leading, const std::vector<PentaComplex>& rest) {
        PentaComplex inv;
        try {
            inv = inverse(leading);
        } catch (const Error&) {
            throw Error(ErrorKind::non_invertible_leading, "leading coefficient is a divisor of zero");
        }
        PentaPolynomial p;
        for (const auto& a : rest) p.coeffs.push_back(a * inv);
        return p;
    }

    /// Ring Horner evaluation.
    [[nodiscard]] PentaComplex operator()(const PentaComplex& u) const {
        PentaComplex acc = PentaComplex::one();
        for (const auto& a : coeffs) acc = acc * u + a;
        return acc;
    }
};

using ComplexPoly = std::vector<std::complex<double>>;  // descending, leading first

struct ComponentPolynomials {
    std::vector<double> pplus;  // descending, leading 1
    ComplexPoly p1, p2;
};

/// Scalar polynomials of the canonical components, with coefficients
/// (A_{l+}) and (A_{lk} + i tA_{lk}).
inline ComponentPolynomials decompose(const PentaPolynomial& p) {
    ComponentPolynomials cp;
    cp.pplus.push_back(1.0);
    cp.p1.emplace_back(1.0);
    cp.p2.emplace_back(1.0);
    for (const auto& a : p.coeffs) {
        const CoefficientSpectrum s = coefficient_spectrum(a);
        cp.pplus.push_back(s.Aplus);
        cp.p1.push_back(s.plane(1));
        cp.p2.push_back(s.plane(2));
    }
    return cp;
}

template <class T, class Z>
Z horner(const std::vector<T>& coeffs, Z z) {
    Z acc{};
    for (const auto& c : coeffs) acc = acc * z + Z(c);
    return acc;
}

/// Evaluates P(u) through the component polynomials.
inline PentaComplex evaluate_components(const ComponentPolynomials& cp, const PentaComplex& u) {
    const CanonicalForm c = to_canonical(u);
    return from_canonical(CanonicalForm::from_parts(horner(cp.pplus, c.vplus), horner(cp.p1, c.plane(1)),
                                                    horner(cp.p2, c.plane(2))));
}

// ---------------------------------------------------------------------------
// Scalar root finding

inline constexpr int kRootMaxIterations = 200;
inline constexpr double kRootResidualTolerance = 1e-10;

namespace detail {

/// Sum of |a_i| max(1,|z|)^{m-i}: the size of the terms that make up p(z).
inline double evaluation_scale(const ComplexPoly& p, std::complex<double> z) {
    const double r = std::max(1.0, std::abs(z));
    double acc = 0.0;
    for (const auto& c : p) acc = acc * r + std::abs(c);
    return acc;
}

inline std::pair<std::complex<double>, std::complex<double>> eval_with_derivative(const ComplexPoly& p,
                                                                                   std::complex<double> z) {
    std::complex<double> v{}, d{};
    for (const auto& c : p) {
        d = d * z + v;
        v = v * z + c;
    }
    return {v, d};
}

}  // namespace detail

/// All roots of a monic complex polynomial by Aberth simultaneous iteration,
/// started on a circle of radius 1 + max|a_i|, then polished with Newton
/// steps. Throws NoConvergence if any residual stays above
/// kRootResidualTolerance times the evaluation scale.
inline std::vector<std::complex<double>> polynomial_roots(const ComplexPoly& p, int max_iterations = kRootMaxIterations) {
    if (p.size() < 2) throw Error(ErrorKind::invalid_argument, "polynomial degree must be >= 1");
    const std::size_t m = p.size() - 1;
    ComplexPoly monic = p;
    for (auto& c : monic) c /= p.front();
    if (m == 1) return {-monic[1]};

    double bound = 0.0;
    for (std::size_t i = 1; i <= m; ++i) bound = std::max(bound, std::abs(monic[i]));
    const double radius = 1.0 + bound;
    std::vector<std::complex<double>> z(m);
    for (std::size_t j = 0; j < m; ++j) {
        z[j] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m) + 0.4);
    }

    for (int it = 0; it < max_iterations; ++it) {
        double worst = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const auto [v, d] = detail::eval_with_derivative(monic, z[j]);
            if (v == std::complex<double>{}) continue;
            std::complex<double> repulsion{};
            for (std::size_t i = 0; i < m; ++i) {
                if (i != j) repulsion += 1.0 / (z[j] - z[i]);
            }
            const std::complex<double> ratio = v / d;
            std::complex<double> step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[j] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[j])));
        }
        if (worst < 1e-16) break;
    }

    for (auto& r : z) {
        for (int k = 0; k < 3; ++k) {
            const auto [v, d] = detail::eval_with_derivative(monic, r);
            if (d == std::complex<double>{}) break;
            const std::complex<double> next = r - v / d;
            if (std::abs(detail::eval_with_derivative(monic, next).first) < std::abs(v)) {
                r = next;
            } else {
                break;
            }
        }
        const double residual = std::abs(detail::eval_with_derivative(monic, r).first);
        if (!(residual <= kRootResidualTolerance * detail::evaluation_scale(monic, r))) {
            throw Error(ErrorKind::no_convergence, "root finder did not converge");
        }
    }
    return z;
}

/// Lexicographic order on (real, imag) with a relative tie tolerance on the
/// real part.
inline bool root_less(std::complex<double> a, std::complex<double> b) {
    const double tie = 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)));
    if (std::fabs(a.real() - b.real()) > tie) return a.real() < b.real();
    return a.imag() < b.imag();
}

inline void sort_roots(std::vector<std::complex<double>>& roots) {
    std::stable_sort(roots.begin(), roots.end(), root_less);
}

inline constexpr double kRealSnapTolerance = 1e-7;

/// Roots of a real polynomial made exactly real or exactly conjugate-paired.
inline std::vector<std::complex<double>> real_polynomial_roots(const std::vector<double>& p) {
    ComplexPoly cp(p.begin(), p.end());
    std::vector<std::complex<double>> roots = polynomial_roots(cp);
    std::vector<std::complex<double>> upper, lower, out;
    for (auto r : roots) {
        if (std::fabs(r.imag()) <= kRealSnapTolerance * std::max(1.0, std::abs(r))) {
            out.emplace_back(r.real(), 0.0);
        } else if (r.imag() > 0) {
            upper.push_back(r);
        } else {
            lower.push_back(r);
        }
    }
    if (upper.size() != lower.size()) {
        throw Error(ErrorKind::no_convergence, "complex roots of a real polynomial are not conjugate-paired");
    }
    std::vector<bool> used(lower.size(), false);
    for (auto r : upper) {
        std::size_t best = lower.size();
        double dist = INFINITY;
        for (std::size_t i = 0; i < lower.size(); ++i) {
            if (!used[i] && std::abs(std::conj(lower[i]) - r) < dist) {
                dist = std::abs(std::conj(lower[i]) - r);
                best = i;
            }
        }
        used[best] = true;
        const std::complex<double> mid = 0.5 * (r + std::conj(lower[best]));
        out.push_back(mid);
        out.push_back(std::conj(mid));
    }
    return out;
}

struct RootSet {
    std::vector<std::complex<double>> vplus_roots;
    std::vector<std::complex<double>> plane1_roots;
    std::vector<std::complex<double>> plane2_roots;
};

/// Roots of the three component polynomials, each sorted by (real, imag).
inline RootSet component_roots(const ComponentPolynomials& cp) {
    if (cp.pplus.size() < 2) throw Error(ErrorKind::invalid_argument, "polynomial degree must be >= 1");
    RootSet rs;
    rs.vplus_roots = real_polynomial_roots(cp.pplus);
    rs.plane1_roots = polynomial_roots(cp.p1);
    rs.plane2_roots = polynomial_roots(cp.p2);
    sort_roots(rs.vplus_roots);
    sort_roots(rs.plane1_roots);
    sort_roots(rs.plane2_roots);
    return rs;
}

// ---------------------------------------------------------------------------
// Factors

struct LinearFactor {
    PentaComplex root;  // u - root
};

struct QuadraticFactor {
    PentaComplex b, c;  // u^2 + b u + c
};

using Factor = std::variant<LinearFactor, QuadraticFactor>;

/// Position p takes vplus_roots[vplus[p]], plane1_roots[plane1[p]] and
/// plane2_roots[plane2[p]].
struct Pairing {
    std::vector<std::size_t> vplus, plane1, plane2;

    static Pairing identity(std::size_t m) {
        Pairing p;
        p.vplus.resize(m);
        std::iota(p.vplus.begin(), p.vplus.end(), std::size_t{0});
        p.plane1 = p.plane2 = p.vplus;
        return p;
    }
};

namespace detail {
inline bool is_permutation_of_range(const std::vector<std::size_t>& v, std::size_t m) {
    if (v.size() != m) return false;
    std::vector<bool> seen(m, false);
    for (std::size_t i : v) {
        if (i >= m || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}
}  // namespace detail

/// Ring roots u_p = e+ v_p+ + (e1 v_1p + te1 tv_1p) + (e2 v_2p + te2 tv_2p).
/// A complex v+ root must be followed by its conjugate; the two positions
/// merge into one quadratic factor.
inline std::vector<Factor> assemble_roots(const RootSet& rs, const Pairing& pairing) {
    const std::size_t m = rs.vplus_roots.size();
    if (rs.plane1_roots.size() != m || rs.plane2_roots.size() != m || !detail::is_permutation_of_range(pairing.vplus, m) ||
        !detail::is_permutation_of_range(pairing.plane1, m) || !detail::is_permutation_of_range(pairing.plane2, m)) {
        throw Error(ErrorKind::invalid_pairing, "pairing must hold one permutation of the roots per component");
    }
    std::vector<Factor> out;
    for (std::size_t p = 0; p < m;) {
        const std::complex<double> r = rs.vplus_roots[pairing.vplus[p]];
        const std::complex<double> w1 = rs.plane1_roots[pairing.plane1[p]];
        const std::complex<double> w2 = rs.plane2_roots[pairing.plane2[p]];
        const double tol = 1e-10 * std::max(1.0, std::abs(r));
        if (std::fabs(r.imag()) <= tol) {
            out.emplace_back(LinearFactor{from_canonical(CanonicalForm::from_parts(r.real(), w1, w2))});
            ++p;
            continue;
        }
        if (p + 1 >= m || std::abs(rs.vplus_roots[pairing.vplus[p + 1]] - std::conj(r)) > 1e-8 * std::max(1.0, std::abs(r))) {
            throw Error(ErrorKind::invalid_pairing, "a complex v+ root must be followed by its conjugate");
        }
        const std::complex<double> w1b = rs.plane1_roots[pairing.plane1[p + 1]];
        const std::complex<double> w2b = rs.plane2_roots[pairing.plane2[p + 1]];
        QuadraticFactor q;
        q.b = from_canonical(CanonicalForm::from_parts(-2.0 * r.real(), -(w1 + w1b), -(w2 + w2b)));
        q.c = from_canonical(CanonicalForm::from_parts(std::norm(r), w1 * w1b, w2 * w2b));
        out.emplace_back(q);
        p += 2;
    }
    return out;
}

/// Ring product of the factors, as a monic polynomial.
inline PentaPolynomial expand(const std::vector<Factor>& factors) {
    std::vector<PentaComplex> poly{PentaComplex::one()};  // descending
    auto times = [&poly](const std::vector<PentaComplex>& f) {
        std::vector<PentaComplex> r(poly.size() + f.size() - 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += poly[i] * f[j];
        }
        poly = std::move(r);
    };
    for (const auto& f : factors) {
        if (const auto* lin = std::get_if<LinearFactor>(&f)) {
            times({PentaComplex::one(), -lin->root});
        } else {
            const auto& q = std::get<QuadraticFactor>(f);
            times({PentaComplex::one(), q.b, q.c});
        }
    }
    return PentaPolynomial{std::vector<PentaComplex>(poly.begin() + 1, poly.end())};
}

/// max_l |expanded a_l - a_l| / (1 + max_l |a_l|).
inline double reconstruction_residual(const PentaPolynomial& p, const std::vector<Factor>& factors) {
    const PentaPolynomial e = expand(factors);
    if (e.degree() != p.degree()) return INFINITY;
    double worst = 0.0, scale = 0.0;
    for (std::size_t l = 0; l < p.degree(); ++l) {
        worst = std::max(worst, modulus(e.coeffs[l] - p.coeffs[l]));
        scale = std::max(scale, modulus(p.coeffs[l]));
    }
    return worst / (1.0 + scale);
}

struct Factorization {
    std::vector<Factor> factors;
    RootSet roots;
    Pairing pairing;
    double residual = 0.0;
};

/// Default factorization: roots sorted per component; each conjugate pair of
/// v+ roots takes the two remaining plane roots whose moduli are closest to
/// the pair's modulus and forms a quadratic factor; the remaining roots pair
/// up in sorted order as linear factors.
inline Factorization factor(const PentaPolynomial& p) {
    if (p.degree() < 1) throw Error(ErrorKind::invalid_argument, "polynomial degree must be >= 1");
    Factorization out;
    out.roots = component_roots(decompose(p));
    const auto& rs = out.roots;
    const std::size_t m = p.degree();

    std::vector<std::size_t> real_idx, pair_idx;  // pair_idx holds the Im > 0 member
    for (std::size_t i = 0; i < m; ++i) {
        const auto r = rs.vplus_roots[i];
        if (r.imag() == 0.0) {
            real_idx.push_back(i);
        } else if (r.imag() > 0.0) {
            pair_idx.push_back(i);
        }
    }
    auto conjugate_of = [&](std::size_t i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j != i && rs.vplus_roots[j] == std::conj(rs.vplus_roots[i])) return j;
        }
        throw Error(ErrorKind::no_convergence, "unpaired complex v+ root");
    };

    std::vector<bool> used1(m, false), used2(m, false);
    auto take_closest = [m](const std::vector<std::complex<double>>& roots, std::vector<bool>& used, double target) {
        std::size_t best = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            if (best == m || std::fabs(std::abs(roots[i]) - target) < std::fabs(std::abs(roots[best]) - target)) best = i;
        }
        used[best] = true;
        return best;
    };
    auto take_next = [m](std::vector<bool>& used) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!used[i]) {
                used[i] = true;
                return i;
            }
        }
        return m;
    };

    Pairing& pr = out.pairing;
    // Plane roots for quadratic factors are chosen first, then the rest go to
    // the real v+ roots in sorted order; the final layout lists linear slots
    // before quadratic ones.
    std::vector<std::size_t> q1, q2;
    for (std::size_t i : pair_idx) {
        const double target = std::abs(rs.vplus_roots[i]);
        for (int t = 0; t < 2; ++t) {
            q1.push_back(take_closest(rs.plane1_roots, used1, target));
            q2.push_back(take_closest(rs.plane2_roots, used2, target));
        }
    }
    for (std::size_t i : real_idx) {
        pr.vplus.push_back(i);
        pr.plane1.push_back(take_next(used1));
        pr.plane2.push_back(take_next(used2));
    }
    for (std::size_t n = 0; n < pair_idx.size(); ++n) {
        pr.vplus.push_back(pair_idx[n]);
        pr.vplus.push_back(conjugate_of(pair_idx[n]));
        pr.plane1.push_back(q1[2 * n]);
        pr.plane1.push_back(q1[2 * n + 1]);
        pr.plane2.push_back(q2[2 * n]);
        pr.plane2.push_back(q2[2 * n + 1]);
    }
    out.factors = assemble_roots(rs, pr);
    out.residual = reconstruction_residual(p, out.factors);
    return out;
}

namespace detail {

inline bool has_repeated(const std::vector<std::complex<double>>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (std::abs(roots[i] - roots[j]) <= 1e-6 * (1.0 + std::abs(roots[i]))) return true;
        }
    }
    return false;
}

inline void require_real_simple(const RootSet& rs) {
    for (auto r : rs.vplus_roots) {
        if (r.imag() != 0.0) throw Error(ErrorKind::degenerate, "complex v+ roots: factorization count not defined");
    }
    if (has_repeated(rs.vplus_roots) || has_repeated(rs.plane1_roots) || has_repeated(rs.plane2_roots)) {
        throw Error(ErrorKind::degenerate, "repeated roots: factorization count not defined");
    }
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationDegree = 4;

/// Every distinct factorization into linear factors, from all pairings of the
/// plane roots against the sorted v+ roots. Requires real v+ roots and
/// degree <= kMaxEnumerationDegree.
inline std::vector<std::vector<Factor>> enumerate_factorizations(const PentaPolynomial& p) {
    const std::size_t m = p.degree();
    if (m < 1 || m > kMaxEnumerationDegree) {
        throw Error(ErrorKind::invalid_argument, "enumeration supports degrees 1..4");
    }
    const RootSet rs = component_roots(decompose(p));
    for (auto r : rs.vplus_roots) {
        if (r.imag() != 0.0) throw Error(ErrorKind::degenerate, "complex v+ roots have no linear factorization");
    }
    std::vector<std::vector<Factor>> out;
    std::map<std::vector<long long>, bool> seen;
    Pairing pr = Pairing::identity(m);
    const std::vector<std::size_t> first = pr.vplus;
    std::vector<std::size_t> perm1 = first;
    do {
        std::vector<std::size_t> perm2 = first;
        do {
            pr.plane1 = perm1;
            pr.plane2 = perm2;
            std::vector<Factor> f = assemble_roots(rs, pr);
            std::vector<std::vector<long long>> keys;
            for (const auto& fac : f) {
                const PentaComplex& u = std::get<LinearFactor>(fac).root;
                std::vector<long long> k;
                for (std::size_t i = 0; i < kDim; ++i) k.push_back(std::llround(u[i] * 1e8));
                keys.push_back(std::move(k));
            }
            std::sort(keys.begin(), keys.end());
            std::vector<long long> key;
            for (const auto& k : keys) key.insert(key.end(), k.begin(), k.end());
            if (!seen[key]) {
                seen[key] = true;
                out.push_back(std::move(f));
            }
        } while (std::next_permutation(perm2.begin(), perm2.end()));
    } while (std::next_permutation(perm1.begin(), perm1.end()));
    return out;
}

/// (m!)^2 distinct linear factorizations when every component root is simple
/// and the v+ roots are real; Degenerate otherwise.
inline std::uint64_t count_factorizations(const PentaPolynomial& p) {
    const std::size_t m = p.degree();
    if (m < 1) throw Error(ErrorKind::invalid_argument, "polynomial degree must be >= 1");
    if (m > 10) throw Error(ErrorKind::invalid_argument, "count exceeds 64 bits beyond degree 10");
    detail::require_real_simple(component_roots(decompose(p)));
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= i;
    return f * f;
}

}  // namespace penta
