#pragma once

// Power series over the ring, convergence radii from coefficient ratios,
// Taylor recentring, and finite-difference checks of the relations between
// partial derivatives of an analytic function's components.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "penta/canonical.hpp"

namespace penta {

/// a_0 + a_1 u + a_2 u^2 + ..., coefficients in ascending order.
struct PowerSeries {
    std::vector<PentaComplex> coeffs;

    [[nodiscard]] std::size_t size() const noexcept { return coeffs.size(); }
};

/// Horner evaluation over the ring.
inline PentaComplex series_eval(const PowerSeries& s, const PentaComplex& u) {
    PentaComplex acc;
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

struct CoefficientSpectrum {
    double Aplus = 0.0;
    double A1 = 0.0, At1 = 0.0;
    double A2 = 0.0, At2 = 0.0;

    [[nodiscard]] std::complex<double> plane(int k) const {
        return k == 1 ? std::complex<double>{A1, At1} : std::complex<double>{A2, At2};
    }
};

/// A+ = sum a_p, A_k = sum a_p cos(2 pi k p/5), tA_k = sum a_p sin(2 pi k p/5).
inline CoefficientSpectrum coefficient_spectrum(const PentaComplex& a) {
    CoefficientSpectrum s;
    for (std::size_t p = 0; p < kDim; ++p) {
        const double x = a[p];
        const double t1 = 2.0 * std::numbers::pi * static_cast<double>(p) / 5.0;
        const double t2 = 2.0 * t1;
        s.Aplus += x;
        s.A1 += x * std::cos(t1);
        s.At1 += x * std::sin(t1);
        s.A2 += x * std::cos(t2);
        s.At2 += x * std::sin(t2);
    }
    return s;
}

/// Evaluates the series separately on v+ and on each canonical plane and
/// reassembles the result; agrees with series_eval.
inline PentaComplex series_eval_canonical(const PowerSeries& s, const PentaComplex& u) {
    const CanonicalForm c = to_canonical(u);
    double plus = 0.0;
    std::complex<double> w1{}, w2{};
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
        const CoefficientSpectrum a = coefficient_spectrum(*it);
        plus = plus * c.vplus + a.Aplus;
        w1 = w1 * c.plane(1) + a.plane(1);
        w2 = w2 * c.plane(2) + a.plane(2);
    }
    return from_canonical(CanonicalForm::from_parts(plus, w1, w2));
}

/// Termwise derivative.
inline PowerSeries derivative(const PowerSeries& s) {
    PowerSeries d;
    for (std::size_t l = 1; l < s.coeffs.size(); ++l) d.coeffs.push_back(s.coeffs[l] * static_cast<double>(l));
    return d;
}

/// Coefficients f^(k)(u0)/k! for k = 0..kmax, by repeated synthetic division
/// of the series (taken as a polynomial) by (u - u0).
inline PowerSeries taylor_coefficients(const PowerSeries& s, const PentaComplex& u0, std::size_t kmax) {
    std::vector<PentaComplex> c = s.coeffs;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) c[j] += u0 * c[j + 1];
    }
    c.resize(std::max<std::size_t>(kmax + 1, 1));
    return PowerSeries{std::move(c)};
}

/// The exponential series sum u^l / l!, truncated to `terms` coefficients.
inline PowerSeries exp_series(std::size_t terms) {
    PowerSeries s;
    double f = 1.0;
    for (std::size_t l = 0; l < terms; ++l) {
        if (l > 0) f /= static_cast<double>(l);
        s.coeffs.push_back(PentaComplex::real(f));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Convergence radii

enum class RatioTrend { stable, increasing, decreasing };

inline const char* to_string(RatioTrend t) noexcept {
    switch (t) {
        case RatioTrend::stable: return "stable";
        case RatioTrend::increasing: return "increasing";
        case RatioTrend::decreasing: return "decreasing";
    }
    return "?";
}

struct RadiusEstimate {
    double value = 0.0;         // median of the trailing ratios
    RatioTrend trend = RatioTrend::stable;
    bool zero_tail = false;     // a trailing coefficient vanished in this component

    /// Ratios growing without bound: the radius is infinite.
    [[nodiscard]] bool unbounded() const noexcept { return trend == RatioTrend::increasing; }
};

struct ConvergenceReport {
    RadiusEstimate c;        // |u| < c
    RadiusEstimate cplus;    // |v+| < c+
    RadiusEstimate c1, c2;   // rho_k < c_k
    std::size_t window = 0;
    std::string method;
};

inline constexpr std::size_t kDefaultRatioWindow = 8;

namespace detail {

/// A component counts as vanished when it is below 1e-12 of the modulus of
/// its own coefficient (or the coefficient itself is zero).
inline RadiusEstimate estimate_from_magnitudes(const std::vector<double>& mags, const std::vector<double>& reference,
                                               std::size_t window, double scale) {
    RadiusEstimate est;
    const std::size_t n = mags.size();
    std::vector<double> ratios;
    for (std::size_t l = n - 1 - window; l + 1 < n; ++l) {
        for (std::size_t i : {l, l + 1}) {
            if (!(reference[i] > std::numeric_limits<double>::min()) || !(mags[i] > 1e-12 * reference[i])) {
                est.zero_tail = true;
                return est;
            }
        }
        ratios.push_back(mags[l] / (scale * mags[l + 1]));
    }
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        inc = inc && ratios[i] > ratios[i - 1];
        dec = dec && ratios[i] < ratios[i - 1];
    }
    const double spread = ratios.back() / ratios.front();
    if (inc && spread > 1.0 + 1e-3) {
        est.trend = RatioTrend::increasing;
    } else if (dec && spread < 1.0 - 1e-3) {
        est.trend = RatioTrend::decreasing;
    }
    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    est.value = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return est;
}

}  // namespace detail

/// Ratio estimates of the radii of absolute convergence:
///   c = lim |a_l| / (sqrt5 |a_{l+1}|), c+ = lim |A_{l+}|/|A_{l+1,+}|,
///   c_k = lim |A_lk + i tA_lk| / |A_{l+1,k} + i tA_{l+1,k}|,
/// each taken as the median of the last `window` ratios. Components whose tail
/// vanishes are flagged; a vanishing tail of the whole coefficient throws.
inline ConvergenceReport convergence_radii(const PowerSeries& s, std::size_t window = kDefaultRatioWindow) {
    if (window < 1 || s.size() < window + 2) {
        throw Error(ErrorKind::insufficient_terms, "need at least window + 2 coefficients");
    }
    std::vector<double> full, plus, p1, p2;
    for (const auto& a : s.coeffs) {
        const CoefficientSpectrum sp = coefficient_spectrum(a);
        full.push_back(modulus(a));
        plus.push_back(std::fabs(sp.Aplus));
        p1.push_back(std::abs(sp.plane(1)));
        p2.push_back(std::abs(sp.plane(2)));
    }
    ConvergenceReport r;
    r.window = window;
    r.method = "median of last " + std::to_string(window) + " consecutive coefficient ratios";
    r.c = detail::estimate_from_magnitudes(full, full, window, std::sqrt(5.0));
    if (r.c.zero_tail) throw Error(ErrorKind::zero_tail, "trailing coefficient vanishes");
    r.cplus = detail::estimate_from_magnitudes(plus, full, window, 1.0);
    r.c1 = detail::estimate_from_magnitudes(p1, full, window, 1.0);
    r.c2 = detail::estimate_from_magnitudes(p2, full, window, 1.0);
    return r;
}

// ---------------------------------------------------------------------------
// Relations between partial derivatives

inline constexpr double kFirstOrderStep = 1e-6;
inline constexpr double kFirstOrderTolerance = 1e-6;
inline constexpr double kSecondOrderStep = 3e-4;
inline constexpr double kSecondOrderTolerance = 1e-4;

using Jacobian = std::array<std::array<double, kDim>, kDim>;  // [k][j] = dP_k/dx_j

namespace detail {

template <class F>
PentaComplex evaluate(F& f, const PentaComplex& u) {
    try {
        return f(u);
    } catch (const Error& e) {
        throw Error(ErrorKind::evaluation_failed, e.what());
    } catch (const std::exception& e) {
        throw Error(ErrorKind::evaluation_failed, e.what());
    }
}

inline PentaComplex shifted(const PentaComplex& u, std::size_t i, double di, std::size_t j = 0, double dj = 0.0) {
    PentaComplex::Components x = u.components();
    x[i] += di;
    x[j] += dj;
    return PentaComplex(x);
}

inline double pairwise_spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace detail

/// Central-difference Jacobian of the component map.
template <class F>
Jacobian numerical_jacobian(F&& f, const PentaComplex& point, double step) {
    Jacobian jac{};
    for (std::size_t j = 0; j < kDim; ++j) {
        const PentaComplex fp = detail::evaluate(f, detail::shifted(point, j, step));
        const PentaComplex fm = detail::evaluate(f, detail::shifted(point, j, -step));
        for (std::size_t k = 0; k < kDim; ++k) jac[k][j] = (fp[k] - fm[k]) / (2.0 * step);
    }
    return jac;
}

struct CrGroup {
    std::size_t shift = 0;                 // group g: dP_{(j+g) mod 5}/dx_j, j = 0..4
    std::array<double, kDim> derivatives{};
    double deviation = 0.0;                // max pairwise difference
    double threshold = 0.0;                // tol * max(1, max |derivative|)
    bool passed = false;
};

struct CrReport {
    std::array<CrGroup, kDim> groups{};
    double step = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// First-order relations: for each g, dP_{(j+g) mod 5}/dx_j is the same for
/// every j. Deviation is judged relative to max(1, largest derivative).
template <class F>
CrReport check_cr_relations(F&& f, const PentaComplex& point, double step = kFirstOrderStep,
                            double tol = kFirstOrderTolerance) {
    const Jacobian jac = numerical_jacobian(f, point, step);
    CrReport report;
    report.step = step;
    report.tolerance = tol;
    report.passed = true;
    for (std::size_t g = 0; g < kDim; ++g) {
        CrGroup& grp = report.groups[g];
        grp.shift = g;
        std::vector<double> vals;
        for (std::size_t j = 0; j < kDim; ++j) {
            grp.derivatives[j] = jac[(j + g) % kDim][j];
            vals.push_back(grp.derivatives[j]);
        }
        grp.deviation = detail::pairwise_spread(vals);
        grp.threshold = tol * std::max(1.0, detail::max_abs(vals));
        grp.passed = grp.deviation <= grp.threshold;
        report.passed = report.passed && grp.passed;
    }
    return report;
}

/// Unordered index pairs (i <= j) with i + j = l (mod 5): the mixed second
/// partials d^2 P_k / dx_i dx_j that must coincide.
inline std::vector<std::pair<std::size_t, std::size_t>> second_order_chain(std::size_t l) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = i; j < kDim; ++j) {
            if ((i + j) % kDim == l % kDim) pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

struct SecondOrderChain {
    std::size_t component = 0;  // k
    std::size_t sum = 0;        // l
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<double> values;
    double deviation = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct SecondOrderReport {
    std::vector<SecondOrderChain> chains;  // 25 entries, k-major
    double step = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

template <class F>
SecondOrderReport check_second_order(F&& f, const PentaComplex& point, double step = kSecondOrderStep,
                                     double tol = kSecondOrderTolerance) {
    using detail::evaluate;
    using detail::shifted;
    // Hessians of all five components at once: hess[i][j] is a PentaComplex
    // whose k-th entry is d^2 P_k / dx_i dx_j.
    std::array<std::array<PentaComplex, kDim>, kDim> hess{};
    const PentaComplex f0 = evaluate(f, point);
    const double h2 = step * step;
    for (std::size_t i = 0; i < kDim; ++i) {
        const PentaComplex fp = evaluate(f, shifted(point, i, step));
        const PentaComplex fm = evaluate(f, shifted(point, i, -step));
        hess[i][i] = (fp - f0 * 2.0 + fm) / h2;
        for (std::size_t j = i + 1; j < kDim; ++j) {
            const PentaComplex pp = evaluate(f, shifted(point, i, step, j, step));
            const PentaComplex pm = evaluate(f, shifted(point, i, step, j, -step));
            const PentaComplex mp = evaluate(f, shifted(point, i, -step, j, step));
            const PentaComplex mm = evaluate(f, shifted(point, i, -step, j, -step));
            hess[i][j] = (pp - pm - mp + mm) / (4.0 * h2);
            hess[j][i] = hess[i][j];
        }
    }
    SecondOrderReport report;
    report.step = step;
    report.tolerance = tol;
    report.passed = true;
    for (std::size_t k = 0; k < kDim; ++k) {
        for (std::size_t l = 0; l < kDim; ++l) {
            SecondOrderChain chain;
            chain.component = k;
            chain.sum = l;
            chain.pairs = second_order_chain(l);
            for (const auto& [i, j] : chain.pairs) chain.values.push_back(hess[i][j][k]);
            chain.deviation = detail::pairwise_spread(chain.values);
            chain.threshold = tol * std::max(1.0, detail::max_abs(chain.values));
            chain.passed = chain.deviation <= chain.threshold;
            report.passed = report.passed && chain.passed;
            report.chains.push_back(std::move(chain));
        }
    }
    return report;
}

}  // namespace penta
