#include "pgeom/rng.hpp"

namespace pgeom {

namespace {

long long nonzero_in(SplitMix64& rng, long long lo, long long hi) {
    for (;;) {
        long long v = rng.next_in(lo, hi);
        if (v != 0) return v;
    }
}

}  // namespace

Rational random_rational(SplitMix64& rng) {
    return make_rational(nonzero_in(rng, -10, 10), nonzero_in(rng, -10, 10));
}

Rational random_rational_or_zero(SplitMix64& rng) {
    return make_rational(rng.next_in(-10, 10), nonzero_in(rng, -10, 10));
}

ProjPoint<Rational, 1> random_proj_point1(SplitMix64& rng) {
    for (;;) {
        std::array<Rational, 2> v{random_rational_or_zero(rng), random_rational_or_zero(rng)};
        if (!v[0].is_zero() || !v[1].is_zero()) return make_point(v);
    }
}

ProjPoint<Rational, 2> random_proj_point2(SplitMix64& rng) {
    for (;;) {
        std::array<Rational, 3> v{random_rational_or_zero(rng), random_rational_or_zero(rng),
                                  random_rational_or_zero(rng)};
        if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero()) return make_point(v);
    }
}

ProjLine<Rational> random_proj_line(SplitMix64& rng) {
    for (;;) {
        std::array<Rational, 3> v{random_rational_or_zero(rng), random_rational_or_zero(rng),
                                  random_rational_or_zero(rng)};
        if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero()) return make_line(v);
    }
}

Mat<Rational, 2> random_invertible_mat2(SplitMix64& rng) {
    for (;;) {
        Mat<Rational, 2> m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.a[i][j] = random_rational_or_zero(rng);
        if (!det(m).is_zero()) return m;
    }
}

Mat<Rational, 3> random_invertible_mat3(SplitMix64& rng) {
    for (;;) {
        Mat<Rational, 3> m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.a[i][j] = random_rational_or_zero(rng);
        if (!det(m).is_zero()) return m;
    }
}

Homography<Rational, 1> random_homography1(SplitMix64& rng) {
    return Homography<Rational, 1>(random_invertible_mat2(rng));
}

Homography<Rational, 2> random_homography2(SplitMix64& rng) {
    return Homography<Rational, 2>(random_invertible_mat3(rng));
}

std::array<ProjPoint<Rational, 2>, 4> random_collinear_quad(SplitMix64& rng) {
    for (;;) {
        ProjPoint<Rational, 2> base1 = random_proj_point2(rng);
        ProjPoint<Rational, 2> base2 = random_proj_point2(rng);
        if (proj_equal(base1, base2)) continue;
        std::vector<ProjPoint<Rational, 2>> picked;
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            int attempts = 0;
            for (;; ++attempts) {
                if (attempts > 64) {
                    ok = false;
                    break;
                }
                Rational a = random_rational_or_zero(rng);
                Rational b = random_rational_or_zero(rng);
                if (a.is_zero() && b.is_zero()) continue;
                std::array<Rational, 3> v;
                for (std::size_t k = 0; k < 3; ++k)
                    v[k] = a * base1.coords()[k] + b * base2.coords()[k];
                if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
                ProjPoint<Rational, 2> cand = make_point(v);
                bool fresh = true;
                for (const auto& p : picked)
                    if (proj_equal(p, cand)) fresh = false;
                if (fresh) {
                    picked.push_back(cand);
                    break;
                }
            }
        }
        if (!ok) continue;
        return {picked[0], picked[1], picked[2], picked[3]};
    }
}

Point3<Rational> random_point3(SplitMix64& rng) {
    return {random_rational_or_zero(rng), random_rational_or_zero(rng),
            random_rational_or_zero(rng)};
}

Plane3<Rational> random_plane3(SplitMix64& rng) {
    for (;;) {
        Point3<Rational> n = random_point3(rng);
        if (is_zero_vec(n)) continue;
        return Plane3<Rational>(n, random_rational_or_zero(rng));
    }
}

}  // namespace pgeom
