#pragma once

#include <array>
#include <cstdint>

#include "pgeom/group.hpp"
#include "pgeom/homogeneous.hpp"
#include "pgeom/perspective.hpp"
#include "pgeom/scalar.hpp"

namespace pgeom {

// splitmix64. split(seed, stream) derives an independent stream
// deterministically, so batched work is reproducible regardless of how the
// batch is scheduled.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    static SplitMix64 split(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 mixer(seed ^ (0xA5A5A5A5DEADBEEFULL + stream * 0x9E3779B97F4A7C15ULL));
        return SplitMix64(mixer.next());
    }

  private:
    std::uint64_t state_;
};

// Random rational with numerator and denominator in [-10, 10] \ {0}.
Rational random_rational(SplitMix64& rng);

// Numerator in [-10, 10] (zero allowed), denominator nonzero.
Rational random_rational_or_zero(SplitMix64& rng);

ProjPoint<Rational, 1> random_proj_point1(SplitMix64& rng);
ProjPoint<Rational, 2> random_proj_point2(SplitMix64& rng);
ProjLine<Rational> random_proj_line(SplitMix64& rng);

Mat<Rational, 2> random_invertible_mat2(SplitMix64& rng);
Mat<Rational, 3> random_invertible_mat3(SplitMix64& rng);
Homography<Rational, 1> random_homography1(SplitMix64& rng);
Homography<Rational, 2> random_homography2(SplitMix64& rng);

// Four pairwise-distinct collinear points of RP^2.
std::array<ProjPoint<Rational, 2>, 4> random_collinear_quad(SplitMix64& rng);

Point3<Rational> random_point3(SplitMix64& rng);
Plane3<Rational> random_plane3(SplitMix64& rng);

}  // namespace pgeom
