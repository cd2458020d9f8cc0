#include <doctest.h>

#include "pgeom/perspective.hpp"
#include "pgeom/rng.hpp"

using namespace pgeom;

namespace {
Rational q(long long n, long long d = 1) { return make_rational(n, d); }

Point3<Rational> pt(long long x, long long y, long long z) { return {q(x), q(y), q(z)}; }

// The paper-canonical configuration: center at the origin, image plane z = 1.
CentralProjection<Rational> canonical() {
    return {pt(0, 0, 0), Plane3<Rational>(pt(0, 0, 1), q(1))};
}

bool collinear3(const Point3<Rational>& a, const Point3<Rational>& b, const Point3<Rational>& c) {
    return is_zero_vec(cross(b - a, c - a));
}

Point3<Rational> random_projectable(SplitMix64& rng, const CentralProjection<Rational>& pr) {
    for (;;) {
        Point3<Rational> a = random_point3(rng);
        Point3<Rational> d = a - pr.center();
        if (is_zero_vec(d)) continue;
        if (scalar_is_zero(dot(pr.image_plane().normal, d))) continue;
        return a;
    }
}
}  // namespace

TEST_CASE("project reduces to (x/z, y/z, 1) in the canonical configuration") {
    auto pr = canonical();
    Point3<Rational> image = project(pr, pt(2, 4, 2));
    CHECK(point_eq(image, pt(1, 2, 1)));

    CHECK_THROWS_AS(project(pr, pt(3, 5, 0)), Error);
    try {
        project(pr, pt(3, 5, 0));
    } catch (const Error& e) {
        CHECK(e.kind() == Err::NoImage);
    }
    try {
        project(pr, pt(0, 0, 0));
    } catch (const Error& e) {
        CHECK(e.kind() == Err::CenterInput);
    }
}

TEST_CASE("points already on the image plane are fixed") {
    auto pr = canonical();
    Point3<Rational> a{q(7, 3), q(-2), q(1)};
    CHECK(point_eq(project(pr, a), a));
}

TEST_CASE("projection is idempotent") {
    SplitMix64 rng(41);
    auto pr = canonical();
    for (int i = 0; i < 300; ++i) {
        auto a = random_projectable(rng, pr);
        auto image = project(pr, a);
        CHECK(point_eq(project(pr, image), image));
    }
}

TEST_CASE("Eq-1 regression: 1000 random rational points with z != 0") {
    SplitMix64 rng(42);
    auto pr = canonical();
    for (int i = 0; i < 1000; ++i) {
        Point3<Rational> a = random_point3(rng);
        if (a.z.is_zero()) continue;
        Point3<Rational> image = project(pr, a);
        CHECK(image.x == a.x / a.z);
        CHECK(image.y == a.y / a.z);
        CHECK(image.z == q(1));
        CHECK(collinear3(pr.center(), a, image));
    }
}

TEST_CASE("collinearity certificate holds for a general center and plane") {
    SplitMix64 rng(43);
    int done = 0;
    while (done < 300) {
        Plane3<Rational> plane = random_plane3(rng);
        Point3<Rational> center = random_point3(rng);
        if (plane.contains(center)) continue;
        CentralProjection<Rational> pr(center, plane);
        auto a = random_projectable(rng, pr);
        auto image = project(pr, a);
        CHECK(plane.contains(image));
        CHECK(collinear3(center, a, image));
        ++done;
    }
}

TEST_CASE("center on the image plane is rejected") {
    CHECK_THROWS_AS(CentralProjection<Rational>(pt(1, 1, 1), Plane3<Rational>(pt(0, 0, 1), q(1))),
                    Error);
    try {
        CentralProjection<Rational>(pt(1, 1, 1), Plane3<Rational>(pt(0, 0, 1), q(1)));
    } catch (const Error& e) {
        CHECK(e.kind() == Err::CenterOnPlane);
    }
}

TEST_CASE("same_image examples") {
    auto pr = canonical();
    CHECK(same_image(pr, pt(1, 1, 1), pt(2, 2, 2)));
    CHECK_FALSE(same_image(pr, pt(1, 1, 1), pt(1, 1, 2)));
    CHECK(same_image(pr, pt(3, 4, 5), pt(3, 4, 5)));
}

TEST_CASE("fiber property: same_image iff collinear with the center") {
    SplitMix64 rng(44);
    auto pr = canonical();
    int done = 0;
    while (done < 500) {
        auto a1 = random_projectable(rng, pr);
        // half the trials take a point on the ray through a1
        Point3<Rational> a2 = (done % 2 == 0) ? random_projectable(rng, pr)
                                              : random_rational(rng) * a1;
        Point3<Rational> d = a2 - pr.center();
        if (is_zero_vec(d) || scalar_is_zero(dot(pr.image_plane().normal, d))) continue;
        CHECK(same_image(pr, a1, a2) == collinear3(pr.center(), a1, a2));
        ++done;
    }
}

TEST_CASE("vanishing points in the canonical configuration") {
    auto pr = canonical();
    CHECK(point_eq(vanishing_point(pr, pt(0, 0, 1)), pt(0, 0, 1)));
    CHECK(point_eq(vanishing_point(pr, pt(1, 0, 1)), pt(1, 0, 1)));
    CHECK_THROWS_AS(vanishing_point(pr, pt(1, 0, 0)), Error);
    try {
        vanishing_point(pr, pt(1, 0, 0));
    } catch (const Error& e) {
        CHECK(e.kind() == Err::DirectionParallel);
    }
    try {
        vanishing_point(pr, pt(0, 0, 0));
    } catch (const Error& e) {
        CHECK(e.kind() == Err::ZeroVector);
    }
}

TEST_CASE("vanishing consistency: projected parallels meet at the vanishing point") {
    SplitMix64 rng(45);
    auto pr = canonical();
    auto chart = chart_basis(pr.image_plane());
    int done = 0;
    while (done < 200) {
        Point3<Rational> dir = random_point3(rng);
        if (is_zero_vec(dir) || scalar_is_zero(dot(pr.image_plane().normal, dir))) continue;
        auto a1 = random_projectable(rng, pr);
        auto a2 = random_projectable(rng, pr);
        Point3<Rational> b1 = a1 + dir;
        Point3<Rational> b2 = a2 + dir;
        auto projectable = [&](const Point3<Rational>& p) {
            Point3<Rational> d = p - pr.center();
            return !is_zero_vec(d) && !scalar_is_zero(dot(pr.image_plane().normal, d));
        };
        if (!projectable(b1) || !projectable(b2)) continue;

        auto chart_pt = [&](const Point3<Rational>& p) {
            return from_affine(chart.to_chart(project(pr, p)));
        };
        auto i_a1 = chart_pt(a1);
        auto i_b1 = chart_pt(b1);
        auto i_a2 = chart_pt(a2);
        auto i_b2 = chart_pt(b2);
        if (proj_equal(i_a1, i_b1) || proj_equal(i_a2, i_b2)) continue;  // segment seen end-on
        auto l1 = join(i_a1, i_b1);
        auto l2 = join(i_a2, i_b2);
        if (proj_equal(l1, l2)) continue;  // the two parallels were coplanar with the center
        auto vp = from_affine(chart.to_chart(vanishing_point(pr, dir)));
        CHECK(proj_equal(meet(l1, l2), vp));
        ++done;
    }
}

TEST_CASE("chart basis is exact and round-trips plane points") {
    SplitMix64 rng(46);
    int done = 0;
    while (done < 200) {
        Plane3<Rational> plane = random_plane3(rng);
        auto chart = chart_basis(plane);
        CHECK(plane.contains(chart.origin));
        CHECK(scalar_is_zero(dot(chart.u, plane.normal)));
        CHECK(scalar_is_zero(dot(chart.v, plane.normal)));
        CHECK(scalar_is_zero(dot(chart.u, chart.v)));
        std::array<Rational, 2> a{random_rational(rng), random_rational(rng)};
        Point3<Rational> p = chart.from_chart(a);
        CHECK(plane.contains(p));
        auto back = chart.to_chart(p);
        CHECK(back[0] == a[0]);
        CHECK(back[1] == a[1]);
        ++done;
    }
}

TEST_CASE("canonical chart is the paper chart (x, y)") {
    auto chart = chart_basis(Plane3<Rational>(pt(0, 0, 1), q(1)));
    auto c = chart.to_chart(pt(3, 4, 1));
    CHECK(c[0] == q(3));
    CHECK(c[1] == q(4));
}

TEST_CASE("projection_as_homography is the identity when source = image plane") {
    auto pr = canonical();
    Plane3<Rational> plane = pr.image_plane();
    std::array<Point3<Rational>, 4> frame{pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1)};
    auto h = projection_as_homography(pr, plane, frame);
    CHECK(pgl_equal(h, Homography<Rational, 2>::identity()));
}

TEST_CASE("projection_as_homography errors") {
    auto pr = canonical();
    // source plane through the center
    Plane3<Rational> through{pt(0, 0, 1), q(0)};
    std::array<Point3<Rational>, 4> frame{pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)};
    CHECK_THROWS_AS(projection_as_homography(pr, through, frame), Error);
    try {
        projection_as_homography(pr, through, frame);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::CenterOnPlane);
    }

    // collinear frame on a valid plane
    Plane3<Rational> source{pt(0, 0, 1), q(2)};
    std::array<Point3<Rational>, 4> degenerate{pt(0, 0, 2), pt(1, 0, 2), pt(2, 0, 2), pt(1, 1, 2)};
    try {
        projection_as_homography(pr, source, degenerate);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::DegenerateFrame);
    }

    // frame point off the plane
    std::array<Point3<Rational>, 4> off{pt(0, 0, 2), pt(1, 0, 2), pt(0, 1, 2), pt(1, 1, 3)};
    try {
        projection_as_homography(pr, source, off);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::DegenerateFrame);
    }
}

TEST_CASE("projection_as_homography agrees with pointwise projection") {
    SplitMix64 rng(47);
    int planes_done = 0;
    while (planes_done < 5) {
        Plane3<Rational> source = random_plane3(rng);
        Point3<Rational> center = random_point3(rng);
        Plane3<Rational> image = random_plane3(rng);
        if (source.contains(center) || image.contains(center)) continue;
        CentralProjection<Rational> pr(center, image);
        auto src_chart = chart_basis(source);
        auto img_chart = chart_basis(pr.image_plane());

        auto plane_point = [&](SplitMix64& r) {
            return src_chart.from_chart({random_rational(r), random_rational(r)});
        };
        std::array<Point3<Rational>, 4> frame{plane_point(rng), plane_point(rng), plane_point(rng),
                                              plane_point(rng)};
        Homography<Rational, 2> h = Homography<Rational, 2>::identity();
        try {
            bool frame_ok = true;
            for (const auto& f : frame) {
                Point3<Rational> d = f - center;
                if (is_zero_vec(d) || scalar_is_zero(dot(image.normal, d))) frame_ok = false;
            }
            if (!frame_ok) continue;
            h = projection_as_homography(pr, source, frame, src_chart, img_chart);
        } catch (const Error&) {
            continue;  // degenerate random frame
        }

        int pts_done = 0;
        while (pts_done < 50) {
            Point3<Rational> p = plane_point(rng);
            Point3<Rational> d = p - center;
            if (is_zero_vec(d) || scalar_is_zero(dot(image.normal, d))) continue;
            auto via_hom = act_point(h, from_affine(src_chart.to_chart(p)));
            auto via_proj = from_affine(img_chart.to_chart(project(pr, p)));
            CHECK(proj_equal(via_hom, via_proj));
            ++pts_done;
        }
        ++planes_done;
    }
}

TEST_CASE("projection preserves the cross-ratio of collinear plane points") {
    SplitMix64 rng(48);
    auto pr = canonical();
    Plane3<Rational> source{pt(1, 1, 4), q(8)};  // a tilted plane missing the origin
    auto src_chart = chart_basis(source);
    auto img_chart = chart_basis(pr.image_plane());
    int done = 0;
    while (done < 200) {
        // four distinct collinear points of the source plane
        std::array<Rational, 2> base{random_rational(rng), random_rational(rng)};
        std::array<Rational, 2> dir{random_rational(rng), random_rational(rng)};
        std::array<Rational, 4> ts{random_rational(rng), random_rational(rng),
                                   random_rational(rng), random_rational(rng)};
        bool distinct = true;
        for (int i = 0; i < 4 && distinct; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (ts[i] == ts[j]) distinct = false;
        if (!distinct) continue;

        std::array<Point3<Rational>, 4> pts_on_plane;
        bool all_projectable = true;
        for (int i = 0; i < 4; ++i) {
            pts_on_plane[i] = src_chart.from_chart(
                {base[0] + ts[i] * dir[0], base[1] + ts[i] * dir[1]});
            Point3<Rational> d = pts_on_plane[i] - pr.center();
            if (is_zero_vec(d) || scalar_is_zero(dot(pr.image_plane().normal, d)))
                all_projectable = false;
        }
        if (!all_projectable) continue;

        auto embed = [&](const Point3<Rational>& p, const PlaneChart<Rational>& chart) {
            return from_affine(chart.to_chart(p));
        };
        auto s1 = embed(pts_on_plane[0], src_chart);
        auto s2 = embed(pts_on_plane[1], src_chart);
        auto s3 = embed(pts_on_plane[2], src_chart);
        auto s4 = embed(pts_on_plane[3], src_chart);
        if (proj_equal(s1, s2) || proj_equal(s3, s4)) continue;

        auto before = cross_ratio_collinear(s1, s2, s3, s4);
        auto after = cross_ratio_collinear(embed(project(pr, pts_on_plane[0]), img_chart),
                                           embed(project(pr, pts_on_plane[1]), img_chart),
                                           embed(project(pr, pts_on_plane[2]), img_chart),
                                           embed(project(pr, pts_on_plane[3]), img_chart));
        CHECK(ext_eq(before, after));
        ++done;
    }
}

TEST_CASE("scene validation") {
    Scene<Rational> scene;
    scene.vertices = {pt(0, 0, 2), pt(1, 0, 2)};
    scene.edges = {{0, 1}};
    scene.validate();

    scene.edges.push_back({0, 5});
    CHECK_THROWS_AS(scene.validate(), Error);
    scene.edges.back() = {1, 1};
    try {
        scene.validate();
    } catch (const Error& e) {
        CHECK(e.kind() == Err::InvalidScene);
    }
}
