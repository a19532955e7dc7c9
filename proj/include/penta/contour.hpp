#pragma once

// Integration of 5-complex functions along polylines, winding numbers of the
// loop projections on the two canonical planes, and the residue relation
//   closed-integral f(u) du / (u - u0) = 2 pi f(u0) (te1 n1 + te2 n2).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "penta/inverse.hpp"

namespace penta {

inline constexpr double kEdgeTolerance = 1e-9;
inline constexpr std::size_t kDefaultLoopSamples = 4096;

/// Ordered vertex list; a closed path also runs from the last vertex back to
/// the first.
class Path {
public:
    Path(std::vector<PentaComplex> vertices, bool closed) : vertices_(std::move(vertices)), closed_(closed) {
        if (vertices_.size() < 2) throw Error(ErrorKind::invalid_path, "a path needs at least two vertices");
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            if (vertices_[i] == vertices_[i + 1]) {
                throw Error(ErrorKind::invalid_path, "consecutive vertices must be distinct");
            }
        }
        if (closed_ && vertices_.front() == vertices_.back()) {
            throw Error(ErrorKind::invalid_path, "closed path repeats its first vertex; drop the duplicate");
        }
    }

    [[nodiscard]] const std::vector<PentaComplex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] bool closed() const noexcept { return closed_; }
    [[nodiscard]] std::size_t segment_count() const noexcept {
        return closed_ ? vertices_.size() : vertices_.size() - 1;
    }

    [[nodiscard]] std::pair<const PentaComplex&, const PentaComplex&> segment(std::size_t i) const {
        return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
    }

    /// Same geometry scaled about the origin.
    [[nodiscard]] Path scaled(double s) const {
        std::vector<PentaComplex> v;
        v.reserve(vertices_.size());
        for (const auto& p : vertices_) v.push_back(p * s);
        return Path(std::move(v), closed_);
    }

private:
    std::vector<PentaComplex> vertices_;
    bool closed_;
};

/// Regular polygon approximating a circle of radius `radius` (in the rotated
/// coordinates xi_k, eta_k) about `center`, traversed `turns` times
/// counter-clockwise in plane k. A nonzero `other_plane_radius` adds the same
/// rotation in the other plane, so the loop winds around both.
inline Path circle_path(const PentaComplex& center, int plane, double radius, std::size_t vertices = 256,
                        int turns = 1, double other_plane_radius = 0.0) {
    if (plane != 1 && plane != 2) throw Error(ErrorKind::invalid_argument, "plane must be 1 or 2");
    if (vertices < 3 || turns < 1) throw Error(ErrorKind::invalid_argument, "circle needs >= 3 vertices and >= 1 turn");
    const auto& basis = canonical_basis();
    const PentaComplex& e = plane == 1 ? basis.e1 : basis.e2;
    const PentaComplex& te = plane == 1 ? basis.te1 : basis.te2;
    const PentaComplex& eo = plane == 1 ? basis.e2 : basis.e1;
    const PentaComplex& teo = plane == 1 ? basis.te2 : basis.te1;
    // v_k = sqrt(5/2) xi_k, so a unit step in xi_k is sqrt(5/2) along e_k.
    const double s = std::sqrt(2.5);
    std::vector<PentaComplex> pts;
    const std::size_t total = vertices * static_cast<std::size_t>(turns);
    pts.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(vertices);
        PentaComplex p = center + (e * std::cos(t) + te * std::sin(t)) * (s * radius);
        if (other_plane_radius != 0.0) p += (eo * std::cos(t) + teo * std::sin(t)) * (s * other_plane_radius);
        pts.push_back(p);
    }
    return Path(std::move(pts), true);
}

using Point2 = std::array<double, 2>;

struct PlaneProjection {
    std::vector<Point2> points;
    int plane = 1;
};

inline Point2 project_point(const PentaComplex& u, int plane) { return rotated_coords(u).plane(plane); }

/// (xi_k, eta_k) of every vertex.
inline PlaneProjection project(const Path& path, int plane) {
    if (plane != 1 && plane != 2) throw Error(ErrorKind::invalid_argument, "plane must be 1 or 2");
    PlaneProjection proj;
    proj.plane = plane;
    proj.points.reserve(path.vertices().size());
    for (const auto& v : path.vertices()) proj.points.push_back(project_point(v, plane));
    return proj;
}

namespace detail {

inline double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
    t = std::fmin(1.0, std::fmax(0.0, t));
    return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
}

}  // namespace detail

/// Smallest distance from `point` to the closed polygon's edges.
inline double boundary_distance(const Point2& point, const PlaneProjection& polygon) {
    const auto& pts = polygon.points;
    double best = INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        best = std::fmin(best, detail::distance_to_segment(point, pts[i], pts[(i + 1) % pts.size()]));
    }
    return best;
}

/// Signed winding number of the closed polygon about `point`, from the sum of
/// subtended angles. Points within `edge_tol` of an edge throw OnBoundary.
inline int winding(const Point2& point, const PlaneProjection& polygon, double edge_tol = kEdgeTolerance) {
    const auto& pts = polygon.points;
    if (pts.empty()) throw Error(ErrorKind::invalid_path, "empty polygon");
    if (!(boundary_distance(point, polygon) > edge_tol)) {
        throw Error(ErrorKind::on_boundary, "point lies on the projected curve");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2& a = pts[i];
        const Point2& b = pts[(i + 1) % pts.size()];
        const double ax = a[0] - point[0], ay = a[1] - point[1];
        const double bx = b[0] - point[0], by = b[1] - point[1];
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Composite midpoint rule for the ring integral of f(u) du along every
/// segment, accumulated in vertex order.
template <class F>
PentaComplex integrate(F&& f, const Path& path, std::size_t samples_per_segment) {
    if (samples_per_segment < 1) throw Error(ErrorKind::invalid_argument, "samples_per_segment must be >= 1");
    PentaComplex total;
    const double n = static_cast<double>(samples_per_segment);
    for (std::size_t s = 0; s < path.segment_count(); ++s) {
        const auto [a, b] = path.segment(s);
        const PentaComplex du = (b - a) / n;
        PentaComplex seg;
        for (std::size_t i = 0; i < samples_per_segment; ++i) {
            const PentaComplex mid = a + (b - a) * ((static_cast<double>(i) + 0.5) / n);
            PentaComplex value;
            try {
                value = f(mid);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::non_invertible_on_path) throw;
                throw Error(ErrorKind::evaluation_failed, e.what());
            }
            seg += value * du;
        }
        total += seg;
    }
    return total;
}

struct ResidueResult {
    PentaComplex lhs;  // quadrature of f(u)/(u - u0) du around the loop
    PentaComplex rhs;  // 2 pi f(u0) (te1 n1 + te2 n2)
    int winding1 = 0;
    int winding2 = 0;

    [[nodiscard]] double error() const { return modulus(lhs - rhs); }
};

/// Samples per segment so that a loop of `segments` edges gets about `total`
/// integrand evaluations.
inline std::size_t samples_for_loop(std::size_t total, std::size_t segments) {
    return std::max<std::size_t>(1, (total + segments - 1) / segments);
}

/// Both sides of the residue relation for a closed path. `total_samples` is
/// spread evenly over the segments.
template <class F>
ResidueResult residue_formula(F&& f, const Path& path, const PentaComplex& u0,
                              std::size_t total_samples = kDefaultLoopSamples, double edge_tol = kEdgeTolerance) {
    if (!path.closed()) throw Error(ErrorKind::invalid_path, "residue relation needs a closed path");
    ResidueResult r;
    int* windings[2] = {&r.winding1, &r.winding2};
    for (int k = 1; k <= 2; ++k) {
        const PlaneProjection proj = project(path, k);
        const Point2 pole = project_point(u0, k);
        if (!(boundary_distance(pole, proj) > edge_tol)) {
            throw Error(ErrorKind::pole_on_path, "pole projection lies on the projected loop in plane " + std::to_string(k));
        }
        *windings[k - 1] = winding(pole, proj, edge_tol);
    }
    auto integrand = [&](const PentaComplex& u) {
        PentaComplex offset_inv;
        try {
            offset_inv = inverse(u - u0);
        } catch (const Error&) {
            throw Error(ErrorKind::non_invertible_on_path, "u - u0 is a divisor of zero on the path");
        }
        return f(u) * offset_inv;
    };
    const std::size_t per_segment = samples_for_loop(total_samples, path.segment_count());
    r.lhs = integrate(integrand, path, per_segment);
    const auto& basis = canonical_basis();
    r.rhs = 2.0 * std::numbers::pi * f(u0) *
            (basis.te1 * static_cast<double>(r.winding1) + basis.te2 * static_cast<double>(r.winding2));
    return r;
}

}  // namespace penta
