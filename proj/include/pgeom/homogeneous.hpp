#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "pgeom/error.hpp"
#include "pgeom/scalar.hpp"

namespace pgeom {

namespace detail {

// Canonical form: scale so the last nonzero coordinate equals 1.
template <class S, std::size_t K>
std::array<S, K> canonicalize(std::array<S, K> v, const char* what) {
    int pivot = -1;
    for (int i = static_cast<int>(K) - 1; i >= 0; --i) {
        if (!scalar_is_zero(v[static_cast<std::size_t>(i)])) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) fail(Err::ZeroVector, std::string(what) + " has only zero coordinates");
    S p = v[static_cast<std::size_t>(pivot)];
    for (auto& x : v) x = x / p;
    return v;
}

// All 2x2 minors of the 2xK matrix [a; b] vanish, i.e. a and b are nonzero
// scalar multiples of each other. Division-free, so it works for both
// backends.
template <class S, std::size_t K>
bool proportional(const std::array<S, K>& a, const std::array<S, K>& b) {
    for (std::size_t i = 0; i < K; ++i) {
        for (std::size_t j = i + 1; j < K; ++j) {
            S lhs = a[i] * b[j];
            S rhs = a[j] * b[i];
            if (!scalar_eq(lhs, rhs)) return false;
        }
    }
    return true;
}

template <class S>
std::array<S, 3> cross3(const std::array<S, 3>& a, const std::array<S, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

template <class S, std::size_t K>
double euclid_norm(const std::array<S, K>& v) {
    double acc = 0;
    for (const auto& x : v) {
        double d = scalar_traits<S>::to_double(x);
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace detail

// A point of RP^N, stored as a canonical homogeneous representative
// (last nonzero coordinate equals 1). N is the projective dimension;
// coordinates have length N + 1.
template <class S, int N>
class ProjPoint {
    static_assert(N >= 1, "projective dimension must be at least 1");

  public:
    using Coords = std::array<S, static_cast<std::size_t>(N) + 1>;

    explicit ProjPoint(Coords coords)
        : rep_(detail::canonicalize(std::move(coords), "point")) {}

    const Coords& coords() const { return rep_; }
    const S& operator[](std::size_t i) const { return rep_[i]; }

  private:
    Coords rep_;
};

// A line of RP^2 stored by its canonical dual triple: the line
// {P : u . P = 0}.
template <class S>
class ProjLine {
  public:
    using Coords = std::array<S, 3>;

    explicit ProjLine(Coords dual)
        : dual_(detail::canonicalize(std::move(dual), "line")) {}

    const Coords& dual() const { return dual_; }

  private:
    Coords dual_;
};

template <class S, std::size_t K>
ProjPoint<S, static_cast<int>(K) - 1> make_point(const std::array<S, K>& coords) {
    static_assert(K >= 2, "a projective point needs at least two coordinates");
    return ProjPoint<S, static_cast<int>(K) - 1>(coords);
}

template <class S, class... Rest>
auto make_point(const S& first, const Rest&... rest) {
    std::array<S, 1 + sizeof...(Rest)> v{first, static_cast<S>(rest)...};
    return make_point(v);
}

template <class S>
ProjLine<S> make_line(const std::array<S, 3>& dual) {
    return ProjLine<S>(dual);
}

template <class S, int N>
bool proj_equal(const ProjPoint<S, N>& p, const ProjPoint<S, N>& q) {
    return detail::proportional(p.coords(), q.coords());
}

template <class S>
bool proj_equal(const ProjLine<S>& l, const ProjLine<S>& m) {
    return detail::proportional(l.dual(), m.dual());
}

template <class S, int N>
bool is_proper(const ProjPoint<S, N>& p) {
    return !scalar_is_zero(p.coords().back());
}

template <class S, int N>
std::array<S, N> to_affine_chart(const ProjPoint<S, N>& p) {
    if (!is_proper(p)) fail(Err::ImproperPoint, "point at infinity has no affine chart");
    std::array<S, N> out;
    const S& w = p.coords().back();
    for (int i = 0; i < N; ++i) out[static_cast<std::size_t>(i)] = p.coords()[static_cast<std::size_t>(i)] / w;
    return out;
}

template <class S, std::size_t K>
ProjPoint<S, static_cast<int>(K)> from_affine(const std::array<S, K>& a) {
    std::array<S, K + 1> v;
    for (std::size_t i = 0; i < K; ++i) v[i] = a[i];
    v[K] = S(1);
    return ProjPoint<S, static_cast<int>(K)>(v);
}

template <class S>
ProjPoint<S, 1> from_affine(const S& a) {
    return from_affine(std::array<S, 1>{a});
}

template <class S>
ProjLine<S> join(const ProjPoint<S, 2>& p, const ProjPoint<S, 2>& q) {
    if (proj_equal(p, q)) fail(Err::IdenticalPoints, "join needs two distinct points");
    return ProjLine<S>(detail::cross3(p.coords(), q.coords()));
}

// Distinct lines of RP^2 always meet; there is no parallel case.
template <class S>
ProjPoint<S, 2> meet(const ProjLine<S>& l, const ProjLine<S>& m) {
    if (proj_equal(l, m)) fail(Err::IdenticalLines, "meet needs two distinct lines");
    return ProjPoint<S, 2>(detail::cross3(l.dual(), m.dual()));
}

template <class S>
bool incident(const ProjPoint<S, 2>& p, const ProjLine<S>& l) {
    S dot = l.dual()[0] * p[0] + l.dual()[1] * p[1] + l.dual()[2] * p[2];
    if constexpr (scalar_traits<S>::exact) {
        return scalar_is_zero(dot);
    } else {
        double bound = float_epsilon() * detail::euclid_norm(l.dual()) * detail::euclid_norm(p.coords());
        return std::fabs(scalar_traits<S>::to_double(dot)) <= bound;
    }
}

template <int N>
ProjPoint<double, N> to_double(const ProjPoint<Rational, N>& p) {
    std::array<double, static_cast<std::size_t>(N) + 1> v;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(p.coords()[i]);
    return ProjPoint<double, N>(v);
}

inline ProjLine<double> to_double(const ProjLine<Rational>& l) {
    std::array<double, 3> v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = static_cast<double>(l.dual()[i]);
    return ProjLine<double>(v);
}

}  // namespace pgeom
