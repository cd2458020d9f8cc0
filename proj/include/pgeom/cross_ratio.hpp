#pragma once

#include <array>
#include <cstddef>

#include "pgeom/group.hpp"
#include "pgeom/homogeneous.hpp"

namespace pgeom {

// Value space of the cross-ratio: a field value or a distinguished infinity.
template <class S>
struct ExtendedScalar {
    bool infinite = false;
    S value{};

    static ExtendedScalar finite(S v) { return {false, std::move(v)}; }
    static ExtendedScalar infinity() { return {true, S{}}; }
};

template <class S>
bool ext_eq(const ExtendedScalar<S>& a, const ExtendedScalar<S>& b) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return scalar_eq(a.value, b.value);
}

namespace detail {

template <class S>
S det2(const std::array<S, 2>& p, const std::array<S, 2>& q) {
    return p[0] * q[1] - p[1] * q[0];
}

template <class S>
void require_distinct4(const std::array<const ProjPoint<S, 1>*, 4>& pts) {
    static const char* names = "ABCD";
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (proj_equal(*pts[i], *pts[j]))
                fail(Err::NotDistinct, std::string("points ") + names[i] + " and " + names[j] +
                                           " coincide");
}

}  // namespace detail

// Cross-ratio (A,B;C,D) on RP^1 in determinant form:
// ([A,C].[B,D]) / ([A,D].[B,C]) with [P,Q] the 2x2 determinant of
// representatives. Well defined on improper points too.
template <class S>
ExtendedScalar<S> cross_ratio_rp1(const ProjPoint<S, 1>& a, const ProjPoint<S, 1>& b,
                                  const ProjPoint<S, 1>& c, const ProjPoint<S, 1>& d) {
    detail::require_distinct4<S>({&a, &b, &c, &d});
    S num = detail::det2(a.coords(), c.coords()) * detail::det2(b.coords(), d.coords());
    S den = detail::det2(a.coords(), d.coords()) * detail::det2(b.coords(), c.coords());
    if (scalar_is_zero(den)) {
        // Unreachable for four distinct points; kept for the value contract.
        if (scalar_is_zero(num)) fail(Err::NotDistinct, "degenerate 0/0 cross-ratio");
        return ExtendedScalar<S>::infinity();
    }
    return ExtendedScalar<S>::finite(num / den);
}

// Affine shortcut ((c-a)/(c-b)) * ((d-b)/(d-a)); agrees with the determinant
// form on the embedded points [x:1].
template <class S>
ExtendedScalar<S> cross_ratio_affine(const S& a, const S& b, const S& c, const S& d) {
    const std::array<const S*, 4> v{&a, &b, &c, &d};
    static const char* names = "abcd";
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (scalar_eq(*v[i], *v[j]))
                fail(Err::NotDistinct,
                     std::string("values ") + names[i] + " and " + names[j] + " coincide");
    S value = ((c - a) / (c - b)) * ((d - b) / (d - a));
    return ExtendedScalar<S>::finite(value);
}

template <class S>
bool is_collinear(const ProjPoint<S, 2>& p, const ProjPoint<S, 2>& q, const ProjPoint<S, 2>& r) {
    Mat<S, 3> m;
    for (int j = 0; j < 3; ++j) {
        m.a[0][j] = p[static_cast<std::size_t>(j)];
        m.a[1][j] = q[static_cast<std::size_t>(j)];
        m.a[2][j] = r[static_cast<std::size_t>(j)];
    }
    S d = det(m);
    if constexpr (scalar_traits<S>::exact) {
        return scalar_is_zero(d);
    } else {
        double bound = float_epsilon() * detail::euclid_norm(p.coords()) *
                       detail::euclid_norm(q.coords()) * detail::euclid_norm(r.coords());
        return std::fabs(scalar_traits<S>::to_double(d)) <= bound;
    }
}

// Pencil coordinates of x in the basis (a, b): the RP^1 point [alpha:beta]
// with x ~ alpha*a + beta*b. Solves the 2x2 system on the coordinate row
// pair with the largest pivot (smallest pair on ties), division-free.
template <class S>
ProjPoint<S, 1> pencil_parameters(const ProjPoint<S, 2>& x, const ProjPoint<S, 2>& a,
                                  const ProjPoint<S, 2>& b) {
    const auto& av = a.coords();
    const auto& bv = b.coords();
    std::size_t bk = 0, bl = 1;
    S best(0);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = k + 1; l < 3; ++l) {
            S m = scalar_traits<S>::abs(av[k] * bv[l] - av[l] * bv[k]);
            if (m > best) {
                best = m;
                bk = k;
                bl = l;
            }
        }
    if (scalar_is_zero(best)) fail(Err::IdenticalPoints, "pencil basis points coincide");
    const auto& xv = x.coords();
    S alpha = xv[bk] * bv[bl] - xv[bl] * bv[bk];
    S beta = av[bk] * xv[bl] - av[bl] * xv[bk];
    return make_point(std::array<S, 2>{alpha, beta});
}

// Cross-ratio of four distinct collinear points of RP^2, via the pencil
// parametrization over the basis (p1, p2).
template <class S>
ExtendedScalar<S> cross_ratio_collinear(const ProjPoint<S, 2>& p1, const ProjPoint<S, 2>& p2,
                                        const ProjPoint<S, 2>& p3, const ProjPoint<S, 2>& p4) {
    const std::array<const ProjPoint<S, 2>*, 4> pts{&p1, &p2, &p3, &p4};
    static const char* names = "ABCD";
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (proj_equal(*pts[i], *pts[j]))
                fail(Err::NotDistinct, std::string("points ") + names[i] + " and " + names[j] +
                                           " coincide");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k)
                if (!is_collinear(*pts[i], *pts[j], *pts[k]))
                    fail(Err::NotCollinear, std::string("points ") + names[i] + ", " + names[j] +
                                                ", " + names[k] + " are not collinear");
    ProjPoint<S, 1> q1 = pencil_parameters(p1, p1, p2);
    ProjPoint<S, 1> q2 = pencil_parameters(p2, p1, p2);
    ProjPoint<S, 1> q3 = pencil_parameters(p3, p1, p2);
    ProjPoint<S, 1> q4 = pencil_parameters(p4, p1, p2);
    return cross_ratio_rp1(q1, q2, q3, q4);
}

}  // namespace pgeom
