#pragma once

#include <array>
#include <cstddef>

#include "pgeom/homogeneous.hpp"

namespace pgeom {

template <class S, std::size_t D>
struct Mat {
    static_assert(D >= 1);
    std::array<std::array<S, D>, D> a{};

    static Mat identity() {
        Mat m;
        for (std::size_t i = 0; i < D; ++i) m.a[i][i] = S(1);
        return m;
    }

    std::array<S, D * D> flatten() const {
        std::array<S, D * D> out;
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) out[i * D + j] = a[i][j];
        return out;
    }
};

template <class S, std::size_t D>
Mat<S, D> mul(const Mat<S, D>& x, const Mat<S, D>& y) {
    Mat<S, D> out;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            S acc(0);
            for (std::size_t k = 0; k < D; ++k) acc += x.a[i][k] * y.a[k][j];
            out.a[i][j] = acc;
        }
    return out;
}

template <class S, std::size_t D>
std::array<S, D> mul(const Mat<S, D>& m, const std::array<S, D>& v) {
    std::array<S, D> out;
    for (std::size_t i = 0; i < D; ++i) {
        S acc(0);
        for (std::size_t j = 0; j < D; ++j) acc += m.a[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

template <class S, std::size_t D>
Mat<S, D> transpose(const Mat<S, D>& m) {
    Mat<S, D> out;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) out.a[i][j] = m.a[j][i];
    return out;
}

template <class S, std::size_t D>
Mat<S, D - 1> minor_matrix(const Mat<S, D>& m, std::size_t row, std::size_t col) {
    static_assert(D >= 2);
    Mat<S, D - 1> out;
    std::size_t r = 0;
    for (std::size_t i = 0; i < D; ++i) {
        if (i == row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < D; ++j) {
            if (j == col) continue;
            out.a[r][c] = m.a[i][j];
            ++c;
        }
        ++r;
    }
    return out;
}

template <class S, std::size_t D>
S det(const Mat<S, D>& m) {
    if constexpr (D == 1) {
        return m.a[0][0];
    } else {
        S acc(0);
        for (std::size_t j = 0; j < D; ++j) {
            S term = m.a[0][j] * det(minor_matrix(m, 0, j));
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }
}

// adjugate(m) * m = det(m) * I; differs from the inverse only by the scalar
// matrix det(m) * I, so it represents the inverse in PGL without division.
template <class S, std::size_t D>
Mat<S, D> adjugate(const Mat<S, D>& m) {
    Mat<S, D> out;
    if constexpr (D == 1) {
        out.a[0][0] = S(1);
    } else {
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                S cof = det(minor_matrix(m, i, j));
                out.a[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
            }
    }
    return out;
}

namespace detail {

template <class S, std::size_t D>
double max_row_norm(const Mat<S, D>& m) {
    double best = 0;
    for (std::size_t i = 0; i < D; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < D; ++j) {
            double x = scalar_traits<S>::to_double(m.a[i][j]);
            acc += x * x;
        }
        best = std::max(best, std::sqrt(acc));
    }
    return best;
}

template <class S, std::size_t D>
bool is_invertible(const Mat<S, D>& m) {
    S d = det(m);
    if constexpr (scalar_traits<S>::exact) {
        return !scalar_is_zero(d);
    } else {
        double scale = max_row_norm(m);
        double thresh = float_epsilon() * std::pow(scale, static_cast<int>(D));
        return std::fabs(scalar_traits<S>::to_double(d)) > thresh;
    }
}

template <class S, std::size_t D>
Mat<S, D> canonicalize_matrix(const Mat<S, D>& m) {
    auto flat = detail::canonicalize(m.flatten(), "matrix");
    Mat<S, D> out;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) out.a[i][j] = flat[i * D + j];
    return out;
}

}  // namespace detail

// An element [g] of PGL(N+1): an invertible (N+1)x(N+1) matrix modulo the
// scalar subgroup. Stored canonically (last nonzero entry in row-major
// order equals 1).
template <class S, int N = 2>
class Homography {
  public:
    static constexpr std::size_t msize = static_cast<std::size_t>(N) + 1;

    explicit Homography(const Mat<S, msize>& rep) : rep_(checked(rep)) {}

    static Homography identity() { return Homography(Mat<S, msize>::identity()); }

    const Mat<S, msize>& rep() const { return rep_; }

  private:
    static Mat<S, msize> checked(const Mat<S, msize>& m) {
        if (!detail::is_invertible(m)) fail(Err::SingularMatrix, "matrix is not invertible");
        return detail::canonicalize_matrix(m);
    }

    Mat<S, msize> rep_;
};

template <class S, std::size_t D>
Homography<S, static_cast<int>(D) - 1> make_homography(const Mat<S, D>& m) {
    return Homography<S, static_cast<int>(D) - 1>(m);
}

template <class S, int N>
bool pgl_equal(const Homography<S, N>& g, const Homography<S, N>& h) {
    return detail::proportional(g.rep().flatten(), h.rep().flatten());
}

template <class S, int N>
ProjPoint<S, N> act_point(const Homography<S, N>& g, const ProjPoint<S, N>& p) {
    return ProjPoint<S, N>(mul(g.rep(), p.coords()));
}

// Induced action on duals: inverse-transpose (up to scalar, the adjugate
// transpose), the unique choice preserving incidence.
template <class S>
ProjLine<S> act_line(const Homography<S, 2>& g, const ProjLine<S>& l) {
    return ProjLine<S>(mul(transpose(adjugate(g.rep())), l.dual()));
}

template <class S, int N>
Homography<S, N> compose(const Homography<S, N>& g, const Homography<S, N>& h) {
    return Homography<S, N>(mul(g.rep(), h.rep()));
}

template <class S, int N>
Homography<S, N> inverse(const Homography<S, N>& g) {
    return Homography<S, N>(adjugate(g.rep()));
}

namespace detail {

// Matrix taking the standard frame e1, e2, e3, e1+e2+e3 to the four given
// points: columns d_i * f_i where d_i are the Cramer numerators expressing
// f4 in the basis (f1, f2, f3). The four determinant tests are exactly the
// four collinearity tests of the frame.
template <class S>
Mat<S, 3> frame_matrix(const std::array<ProjPoint<S, 2>, 4>& f) {
    auto col_det = [](const std::array<S, 3>& c0, const std::array<S, 3>& c1,
                      const std::array<S, 3>& c2) {
        Mat<S, 3> m;
        for (std::size_t i = 0; i < 3; ++i) {
            m.a[i][0] = c0[i];
            m.a[i][1] = c1[i];
            m.a[i][2] = c2[i];
        }
        return det(m);
    };
    const auto& p0 = f[0].coords();
    const auto& p1 = f[1].coords();
    const auto& p2 = f[2].coords();
    const auto& p3 = f[3].coords();
    S base = col_det(p0, p1, p2);
    S d0 = col_det(p3, p1, p2);
    S d1 = col_det(p0, p3, p2);
    S d2 = col_det(p0, p1, p3);
    if (scalar_is_zero(base) || scalar_is_zero(d0) || scalar_is_zero(d1) || scalar_is_zero(d2))
        fail(Err::DegenerateFrame, "three of the four frame points are collinear");
    Mat<S, 3> m;
    for (std::size_t i = 0; i < 3; ++i) {
        m.a[i][0] = d0 * p0[i];
        m.a[i][1] = d1 * p1[i];
        m.a[i][2] = d2 * p2[i];
    }
    return m;
}

}  // namespace detail

// The unique homography mapping src_i to dst_i for two quadruples in general
// position (fundamental theorem of projective geometry).
template <class S>
Homography<S, 2> homography_from_frames(const std::array<ProjPoint<S, 2>, 4>& src,
                                        const std::array<ProjPoint<S, 2>, 4>& dst) {
    Mat<S, 3> ms = detail::frame_matrix(src);
    Mat<S, 3> md = detail::frame_matrix(dst);
    return Homography<S, 2>(mul(md, adjugate(ms)));
}

template <int N>
Homography<double, N> to_double(const Homography<Rational, N>& g) {
    Mat<double, static_cast<std::size_t>(N) + 1> m;
    for (std::size_t i = 0; i < static_cast<std::size_t>(N) + 1; ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(N) + 1; ++j)
            m.a[i][j] = static_cast<double>(g.rep().a[i][j]);
    return Homography<double, N>(m);
}

}  // namespace pgeom
