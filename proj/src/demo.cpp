#include "pgeom/demo.hpp"

#include <cmath>
#include <exception>

#include "pgeom/cross_ratio.hpp"
#include "pgeom/io.hpp"
#include "pgeom/render.hpp"
#include "pgeom/rng.hpp"

namespace pgeom {

namespace {

bool rel_close(const ExtendedScalar<double>& a, const ExtendedScalar<double>& b, double rel) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    double scale = std::max({1.0, std::fabs(a.value), std::fabs(b.value)});
    return std::fabs(a.value - b.value) <= rel * scale;
}

std::string describe_point(const ProjPoint<Rational, 2>& p) {
    return "[" + format_rational(p[0]) + ":" + format_rational(p[1]) + ":" +
           format_rational(p[2]) + "]";
}

std::string describe_config(const std::array<ProjPoint<Rational, 2>, 4>& quad,
                            const Homography<Rational, 2>& h) {
    std::string s = "quad";
    for (const auto& p : quad) s += " " + describe_point(p);
    s += " matrix";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += " " + format_rational(h.rep().a[i][j]);
    return s;
}

InvarianceTrial run_one(std::uint64_t seed, int index, DemoBackend backend) {
    InvarianceTrial trial;
    try {
        SplitMix64 rng = SplitMix64::split(seed, static_cast<std::uint64_t>(index));
        auto quad = random_collinear_quad(rng);
        Homography<Rational, 2> h = random_homography2(rng);
        if (backend == DemoBackend::Exact) {
            ExtendedScalar<Rational> before = cross_ratio_collinear(quad[0], quad[1], quad[2], quad[3]);
            ExtendedScalar<Rational> after =
                cross_ratio_collinear(act_point(h, quad[0]), act_point(h, quad[1]),
                                      act_point(h, quad[2]), act_point(h, quad[3]));
            trial.before = format_extended(before);
            trial.after = format_extended(after);
            trial.pass = ext_eq(before, after);
        } else {
            std::array<ProjPoint<double, 2>, 4> dquad{to_double(quad[0]), to_double(quad[1]),
                                                      to_double(quad[2]), to_double(quad[3])};
            Homography<double, 2> dh = to_double(h);
            ExtendedScalar<double> before =
                cross_ratio_collinear(dquad[0], dquad[1], dquad[2], dquad[3]);
            ExtendedScalar<double> after =
                cross_ratio_collinear(act_point(dh, dquad[0]), act_point(dh, dquad[1]),
                                      act_point(dh, dquad[2]), act_point(dh, dquad[3]));
            trial.before = format_extended(before);
            trial.after = format_extended(after);
            trial.pass = rel_close(before, after, 1e-6);
        }
        if (!trial.pass) trial.detail = describe_config(quad, h);
    } catch (const std::exception& e) {
        trial.pass = false;
        trial.detail = std::string("exception: ") + e.what();
    }
    return trial;
}

InvarianceReport run_impl(std::uint64_t seed, int trials, DemoBackend backend, bool parallel) {
    if (trials < 1) fail(Err::Parse, "trials must be at least 1");
    InvarianceReport report;
    report.seed = seed;
    report.trials = trials;
    report.backend = backend;
    report.results.resize(static_cast<std::size_t>(trials));
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = 0; i < trials; ++i)
            report.results[static_cast<std::size_t>(i)] = run_one(seed, i, backend);
    } else {
        for (int i = 0; i < trials; ++i)
            report.results[static_cast<std::size_t>(i)] = run_one(seed, i, backend);
    }
    for (const auto& t : report.results)
        if (t.pass) ++report.passed;
    return report;
}

}  // namespace

InvarianceReport run_invariance_trials(std::uint64_t seed, int trials, DemoBackend backend) {
    return run_impl(seed, trials, backend, true);
}

InvarianceReport run_invariance_trials_serial(std::uint64_t seed, int trials, DemoBackend backend) {
    return run_impl(seed, trials, backend, false);
}

std::pair<std::string, std::string> fixed_translation_check() {
    ExtendedScalar<Rational> before =
        cross_ratio_affine(Rational(0), Rational(1), Rational(3), Rational(10));
    Mat<Rational, 2> t;
    t.a[0][0] = 1;
    t.a[0][1] = 1;
    t.a[1][0] = 0;
    t.a[1][1] = 1;
    Homography<Rational, 1> g(t);
    auto pt = [](long long v) { return from_affine(Rational(v)); };
    ExtendedScalar<Rational> after =
        cross_ratio_rp1(act_point(g, pt(0)), act_point(g, pt(1)), act_point(g, pt(3)),
                        act_point(g, pt(10)));
    return {format_extended(before), format_extended(after)};
}

std::string invariance_figure_svg() {
    // Quadruple (0, 1, 3, 10) on the chart x-axis, and its image under a
    // homography sending that line onto a second visible line.
    Mat<Rational, 3> m;
    m.a[0][0] = 1;
    m.a[1][0] = 1;
    m.a[1][1] = 1;
    m.a[1][2] = 1;
    m.a[2][2] = 2;
    Homography<Rational, 2> h(m);
    const std::array<Rational, 4> xs{Rational(0), Rational(1), Rational(3), Rational(10)};
    std::array<const char*, 4> base_names{"A", "B", "C", "D"};
    std::array<const char*, 4> image_names{"A'", "B'", "C'", "D'"};

    RenderResult fig;
    std::vector<TextNote> notes;
    std::vector<std::array<double, 2>> base, image;
    for (std::size_t i = 0; i < 4; ++i) {
        ProjPoint<Rational, 2> p = from_affine(std::array<Rational, 2>{xs[i], Rational(0)});
        ProjPoint<Rational, 2> q = act_point(h, p);
        auto pc = to_affine_chart(p);
        auto qc = to_affine_chart(q);
        base.push_back({static_cast<double>(pc[0]), static_cast<double>(pc[1])});
        image.push_back({static_cast<double>(qc[0]), static_cast<double>(qc[1])});
        fig.markers.push_back({base.back()[0], base.back()[1], base_names[i]});
        fig.markers.push_back({image.back()[0], image.back()[1], image_names[i]});
    }
    fig.segments.push_back({base[0][0], base[0][1], base[3][0], base[3][1], 0});
    fig.segments.push_back({image[0][0], image[0][1], image[3][0], image[3][1], 1});

    auto make4 = [](const std::array<Rational, 4>& v) {
        return std::array<ProjPoint<Rational, 2>, 4>{
            from_affine(std::array<Rational, 2>{v[0], Rational(0)}),
            from_affine(std::array<Rational, 2>{v[1], Rational(0)}),
            from_affine(std::array<Rational, 2>{v[2], Rational(0)}),
            from_affine(std::array<Rational, 2>{v[3], Rational(0)})};
    };
    auto quad = make4(xs);
    ExtendedScalar<Rational> before = cross_ratio_collinear(quad[0], quad[1], quad[2], quad[3]);
    ExtendedScalar<Rational> after =
        cross_ratio_collinear(act_point(h, quad[0]), act_point(h, quad[1]), act_point(h, quad[2]),
                              act_point(h, quad[3]));
    notes.push_back({0.0, -1.0, "(A,B;C,D) = " + format_extended(before)});
    notes.push_back({0.5, 6.5, "(A',B';C',D') = " + format_extended(after)});

    Viewport vp;
    vp.width = 800;
    vp.height = 600;
    vp.scale = 35;
    return svg_document(fig, vp, notes);
}

}  // namespace pgeom
