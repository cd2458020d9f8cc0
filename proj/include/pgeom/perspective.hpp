#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pgeom/cross_ratio.hpp"
#include "pgeom/group.hpp"
#include "pgeom/homogeneous.hpp"

namespace pgeom {

template <class S>
struct Point3 {
    S x{}, y{}, z{};

    friend Point3 operator+(const Point3& a, const Point3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Point3 operator-(const Point3& a, const Point3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Point3 operator*(const S& k, const Point3& p) {
        return {k * p.x, k * p.y, k * p.z};
    }
};

template <class S>
S dot(const Point3<S>& a, const Point3<S>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Point3<S> cross(const Point3<S>& a, const Point3<S>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
bool is_zero_vec(const Point3<S>& p) {
    return scalar_is_zero(p.x) && scalar_is_zero(p.y) && scalar_is_zero(p.z);
}

template <class S>
bool point_eq(const Point3<S>& a, const Point3<S>& b) {
    return scalar_eq(a.x, b.x) && scalar_eq(a.y, b.y) && scalar_eq(a.z, b.z);
}

// The plane {p : normal . p = offset}.
template <class S>
struct Plane3 {
    Point3<S> normal;
    S offset{};

    Plane3(Point3<S> n, S off) : normal(std::move(n)), offset(std::move(off)) {
        if (is_zero_vec(normal)) fail(Err::ZeroVector, "plane normal is zero");
    }

    bool contains(const Point3<S>& p) const { return scalar_eq(dot(normal, p), offset); }
};

// Projection apparatus: center O and an image plane not through O.
template <class S>
class CentralProjection {
  public:
    CentralProjection(Point3<S> center, Plane3<S> image_plane)
        : center_(std::move(center)), plane_(std::move(image_plane)) {
        if (plane_.contains(center_))
            fail(Err::CenterOnPlane, "projection center lies on the image plane");
    }

    const Point3<S>& center() const { return center_; }
    const Plane3<S>& image_plane() const { return plane_; }

  private:
    Point3<S> center_;
    Plane3<S> plane_;
};

// The unique point of the image plane collinear with the center and A.
// Not defined on the plane through the center parallel to the image plane.
template <class S>
Point3<S> project(const CentralProjection<S>& pr, const Point3<S>& a) {
    Point3<S> d = a - pr.center();
    if (is_zero_vec(d)) fail(Err::CenterInput, "cannot project the center of projection");
    S denom = dot(pr.image_plane().normal, d);
    if (scalar_is_zero(denom))
        fail(Err::NoImage, "point lies on the no-image plane through the center");
    S t = (pr.image_plane().offset - dot(pr.image_plane().normal, pr.center())) / denom;
    return pr.center() + t * d;
}

template <class S>
bool same_image(const CentralProjection<S>& pr, const Point3<S>& a1, const Point3<S>& a2) {
    return point_eq(project(pr, a1), project(pr, a2));
}

// Where all lines with the given direction converge on the image plane:
// the image of the direction's improper point.
template <class S>
Point3<S> vanishing_point(const CentralProjection<S>& pr, const Point3<S>& direction) {
    if (is_zero_vec(direction)) fail(Err::ZeroVector, "direction is zero");
    S denom = dot(pr.image_plane().normal, direction);
    if (scalar_is_zero(denom))
        fail(Err::DirectionParallel, "direction is parallel to the image plane");
    S t = (pr.image_plane().offset - dot(pr.image_plane().normal, pr.center())) / denom;
    return pr.center() + t * direction;
}

// Affine chart of a plane: origin plus two orthogonal tangent vectors.
// Exact backend keeps unnormalized tangents (no square roots); the double
// backend normalizes them so chart coordinates are metric.
template <class S>
struct PlaneChart {
    Point3<S> origin, u, v;

    std::array<S, 2> to_chart(const Point3<S>& p) const {
        Point3<S> d = p - origin;
        return {dot(d, u) / dot(u, u), dot(d, v) / dot(v, v)};
    }

    Point3<S> from_chart(const std::array<S, 2>& a) const {
        return origin + a[0] * u + a[1] * v;
    }
};

// Deterministic chart: first tangent from the largest-magnitude normal
// component rule, second by cross product, origin at the foot of the
// perpendicular from the coordinate origin.
template <class S>
PlaneChart<S> chart_basis(const Plane3<S>& plane) {
    const Point3<S>& n = plane.normal;
    std::array<S, 3> nc{n.x, n.y, n.z};
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (scalar_traits<S>::abs(nc[i]) > scalar_traits<S>::abs(nc[k])) k = i;
    std::size_t j = (k + 1) % 3;
    Point3<S> ej{};
    (j == 0 ? ej.x : j == 1 ? ej.y : ej.z) = S(1);
    S nn = dot(n, n);
    Point3<S> u = nn * ej - nc[j] * n;
    Point3<S> v = cross(n, u);
    Point3<S> origin = (plane.offset / nn) * n;
    if constexpr (!scalar_traits<S>::exact) {
        double lu = std::sqrt(scalar_traits<S>::to_double(dot(u, u)));
        double lv = std::sqrt(scalar_traits<S>::to_double(dot(v, v)));
        u = (1.0 / lu) * u;
        v = (1.0 / lv) * v;
    }
    return {origin, u, v};
}

// The RP^2 homography relating chart coordinates on the source plane to
// chart coordinates on the image plane under central projection, built by
// projecting a frame of four source points.
template <class S>
Homography<S, 2> projection_as_homography(const CentralProjection<S>& pr,
                                          const Plane3<S>& source_plane,
                                          const std::array<Point3<S>, 4>& frame,
                                          const PlaneChart<S>& source_chart,
                                          const PlaneChart<S>& image_chart) {
    if (source_plane.contains(pr.center()))
        fail(Err::CenterOnPlane, "projection center lies on the source plane");
    for (const auto& f : frame)
        if (!source_plane.contains(f))
            fail(Err::DegenerateFrame, "frame point does not lie on the source plane");
    std::array<ProjPoint<S, 2>, 4> src{
        from_affine(source_chart.to_chart(frame[0])), from_affine(source_chart.to_chart(frame[1])),
        from_affine(source_chart.to_chart(frame[2])), from_affine(source_chart.to_chart(frame[3]))};
    std::array<ProjPoint<S, 2>, 4> dst{from_affine(image_chart.to_chart(project(pr, frame[0]))),
                                       from_affine(image_chart.to_chart(project(pr, frame[1]))),
                                       from_affine(image_chart.to_chart(project(pr, frame[2]))),
                                       from_affine(image_chart.to_chart(project(pr, frame[3])))};
    return homography_from_frames(src, dst);
}

template <class S>
Homography<S, 2> projection_as_homography(const CentralProjection<S>& pr,
                                          const Plane3<S>& source_plane,
                                          const std::array<Point3<S>, 4>& frame) {
    return projection_as_homography(pr, source_plane, frame, chart_basis(source_plane),
                                    chart_basis(pr.image_plane()));
}

// Wireframe scene: vertices, edges by index pair, optional vertex labels,
// plus directions whose vanishing points should be marked.
template <class S>
struct Scene {
    std::vector<Point3<S>> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    std::vector<Point3<S>> marker_directions;

    void validate() const {
        if (!labels.empty() && labels.size() != vertices.size())
            fail(Err::InvalidScene, "label list does not match vertex list");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& [a, b] = edges[i];
            if (a >= vertices.size() || b >= vertices.size())
                fail(Err::InvalidScene, "edge " + std::to_string(i) + " references a missing vertex");
            if (a == b) fail(Err::InvalidScene, "edge " + std::to_string(i) + " is a self-loop");
        }
    }
};

inline Point3<double> to_double(const Point3<Rational>& p) {
    return {static_cast<double>(p.x), static_cast<double>(p.y), static_cast<double>(p.z)};
}

inline Plane3<double> to_double(const Plane3<Rational>& p) {
    return Plane3<double>(to_double(p.normal), static_cast<double>(p.offset));
}

inline CentralProjection<double> to_double(const CentralProjection<Rational>& pr) {
    return CentralProjection<double>(to_double(pr.center()), to_double(pr.image_plane()));
}

inline Scene<double> to_double(const Scene<Rational>& s) {
    Scene<double> out;
    out.vertices.reserve(s.vertices.size());
    for (const auto& v : s.vertices) out.vertices.push_back(to_double(v));
    out.edges = s.edges;
    out.labels = s.labels;
    for (const auto& d : s.marker_directions) out.marker_directions.push_back(to_double(d));
    return out;
}

}  // namespace pgeom
