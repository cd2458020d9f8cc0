#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pgeom/cross_ratio.hpp"
#include "pgeom/demo.hpp"
#include "pgeom/group.hpp"
#include "pgeom/io.hpp"
#include "pgeom/render.hpp"

namespace {

using namespace pgeom;

// Exit codes: 0 success, 2 parse/usage, 3 precondition, 4 verification.
int exit_code_for(const Error& e) {
    switch (category(e.kind())) {
        case ErrCategory::Parse: return 2;
        case ErrCategory::Precondition: return 3;
        case ErrCategory::Verification: return 4;
    }
    return 1;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Parse, "cannot open '" + path + "'");
    return in;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::Parse, "cannot write '" + path + "'");
    out << content;
}

template <class S>
std::array<S, 3> as_triple(const std::vector<S>& v) {
    return {v[0], v[1], v[2]};
}

template <class S>
std::string run_cross_ratio(const std::vector<std::string>& inline_values,
                            const std::string& points_path) {
    if (!inline_values.empty()) {
        if (inline_values.size() != 4)
            fail(Err::Parse, "expected exactly 4 inline values, got " +
                                 std::to_string(inline_values.size()));
        std::array<S, 4> v{parse_scalar<S>(inline_values[0]), parse_scalar<S>(inline_values[1]),
                           parse_scalar<S>(inline_values[2]), parse_scalar<S>(inline_values[3])};
        return format_extended(cross_ratio_affine(v[0], v[1], v[2], v[3]));
    }
    auto in = open_input(points_path);
    auto records = parse_points<S>(in, points_path);
    if (records.size() != 4)
        fail(Err::Parse, points_path + ": expected exactly 4 records, got " +
                             std::to_string(records.size()));
    for (const auto& rec : records)
        if (rec.is_line) fail(Err::Parse, points_path + ": cross-ratio expects points, not lines");
    if (records[0].coords.size() == 2) {
        auto pt = [&](std::size_t i) {
            return make_point(std::array<S, 2>{records[i].coords[0], records[i].coords[1]});
        };
        return format_extended(cross_ratio_rp1(pt(0), pt(1), pt(2), pt(3)));
    }
    auto pt = [&](std::size_t i) { return make_point(as_triple(records[i].coords)); };
    return format_extended(cross_ratio_collinear(pt(0), pt(1), pt(2), pt(3)));
}

template <class S>
int run_transform(const std::string& matrix_path, const std::string& points_path,
                  const std::string& out_path) {
    auto min = open_input(matrix_path);
    Homography<S, 2> g = make_homography(parse_matrix3<S>(min, matrix_path));
    auto pin = open_input(points_path);
    auto records = parse_points<S>(pin, points_path);
    std::ostringstream out;
    std::ostringstream notes;
    for (const auto& rec : records) {
        if (rec.is_line) {
            ProjLine<S> image = act_line(g, make_line(as_triple(rec.coords)));
            out << "line " << rec.label;
            for (const auto& c : image.dual()) out << " " << format_scalar(c);
            out << "\n";
        } else {
            if (rec.coords.size() != 3)
                fail(Err::Parse, points_path + ": transform expects 3-coordinate points");
            ProjPoint<S, 2> p = make_point(as_triple(rec.coords));
            ProjPoint<S, 2> image = act_point(g, p);
            if (is_proper(p) != is_proper(image))
                notes << "note: point '" << rec.label << "' " << (is_proper(p) ? "proper" : "improper")
                      << " -> " << (is_proper(image) ? "proper" : "improper") << "\n";
            out << rec.label;
            for (const auto& c : image.coords()) out << " " << format_scalar(c);
            out << "\n";
        }
    }
    write_output(out_path, out.str());
    std::cerr << notes.str();
    return 0;
}

struct RenderArgs {
    std::string scene_path;
    std::string out_path;
    std::string backend = "float";
    std::vector<double> center{0, 0, 0};
    std::vector<double> plane{0, 0, 1, 1};
    Viewport viewport;
    RenderOptions options;
};

int run_render(const RenderArgs& args) {
    if (args.backend != "float")
        fail(Err::Parse, "render supports only the float backend (exact arithmetic certifies, "
                         "it does not rasterize)");
    auto in = open_input(args.scene_path);
    Scene<double> scene = parse_scene<double>(in, args.scene_path);
    Plane3<double> plane({args.plane[0], args.plane[1], args.plane[2]}, args.plane[3]);
    CentralProjection<double> pr({args.center[0], args.center[1], args.center[2]}, plane);
    RenderResult result = render_scene(scene, pr, args.options);
    write_output(args.out_path, svg_document(result, args.viewport));
    return 0;
}

int run_demo(std::uint64_t seed, int trials, const std::string& backend_name,
             const std::string& out_path) {
    if (trials < 1) fail(Err::Parse, "--trials must be at least 1");
    DemoBackend backend = DemoBackend::Exact;
    if (backend_name == "float")
        backend = DemoBackend::Float;
    else if (backend_name != "exact")
        fail(Err::Parse, "unknown backend '" + backend_name + "'");

    auto [fixed_before, fixed_after] = fixed_translation_check();
    std::ostringstream out;
    out << "fixed: (0, 1, 3, 10) -> " << fixed_before << "; image under chart translation -> "
        << fixed_after << "\n";

    InvarianceReport report = run_invariance_trials(seed, trials, backend);
    for (int i = 0; i < report.trials; ++i) {
        const auto& t = report.results[static_cast<std::size_t>(i)];
        out << "trial " << i << ": " << t.before << " -> " << t.after << " "
            << (t.pass ? "ok" : "FAIL") << "\n";
        if (!t.pass) out << "  counterexample: " << t.detail << "\n";
    }
    out << "invariance: " << report.passed << "/" << report.trials << " "
        << (report.all_pass() ? "PASS" : "FAIL") << " (seed=" << seed << ", trials=" << trials
        << ", backend=" << (backend == DemoBackend::Exact ? "exact" : "float") << ")\n";
    std::cout << out.str();
    if (!out_path.empty()) write_output(out_path, invariance_figure_svg());
    return report.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective plane kernel: cross-ratios, homographies, perspective drawings"};
    app.require_subcommand(1);

    double epsilon = 0;

    auto* cr = app.add_subcommand("cross-ratio",
                                  "Cross-ratio of 4 inline affine values or a 4-point file");
    std::vector<std::string> cr_values;
    std::string cr_points, cr_backend = "exact";
    cr->add_option("values", cr_values, "four affine scalars");
    cr->add_option("--points", cr_points, "point file (4 records, RP^1 or collinear RP^2)");
    cr->add_option("--backend", cr_backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    cr->add_option("--epsilon", epsilon, "float comparison tolerance");

    auto* tf = app.add_subcommand("transform", "Apply a homography to a point/line file");
    std::string tf_matrix, tf_points, tf_out, tf_backend = "exact";
    tf->add_option("matrix", tf_matrix, "3x3 matrix file")->required();
    tf->add_option("points", tf_points, "point file")->required();
    tf->add_option("--out", tf_out, "output path (default stdout)");
    tf->add_option("--backend", tf_backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    tf->add_option("--epsilon", epsilon, "float comparison tolerance");

    auto* rd = app.add_subcommand("render", "Render a wireframe scene to SVG");
    RenderArgs rd_args;
    rd->add_option("scene", rd_args.scene_path, "scene file")->required();
    rd->add_option("--out", rd_args.out_path, "output SVG path (default stdout)");
    rd->add_option("--backend", rd_args.backend, "float (render never uses exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    rd->add_option("--center", rd_args.center, "projection center x y z")->expected(3);
    rd->add_option("--plane", rd_args.plane, "image plane nx ny nz c")->expected(4);
    rd->add_option("--width", rd_args.viewport.width, "SVG width");
    rd->add_option("--height", rd_args.viewport.height, "SVG height");
    rd->add_option("--scale", rd_args.viewport.scale, "chart units to pixels");
    rd->add_option("--near-margin", rd_args.options.near_margin,
                   "relative clip margin at the no-image plane");
    rd->add_flag("--front-only", rd_args.options.front_only, "drop geometry behind the center");
    rd->add_flag("--mark-vanishing", rd_args.options.mark_edge_directions,
                 "mark vanishing points of scene edge directions");
    rd->add_option("--epsilon", epsilon, "float comparison tolerance");

    auto* dm = app.add_subcommand("demo-invariance",
                                  "Verify cross-ratio preservation on random configurations");
    std::uint64_t dm_seed = 0;
    int dm_trials = 100;
    std::string dm_backend = "exact", dm_out;
    dm->add_option("--seed", dm_seed, "PRNG seed");
    dm->add_option("--trials", dm_trials, "number of random trials");
    dm->add_option("--backend", dm_backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    dm->add_option("--out", dm_out, "write an annotated SVG of one configuration");
    dm->add_option("--epsilon", epsilon, "float comparison tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (epsilon > 0) set_float_epsilon(epsilon);
        if (app.got_subcommand(cr)) {
            if (cr_values.empty() == cr_points.empty())
                fail(Err::Parse, "pass either 4 inline values or --points, not both");
            std::cout << (cr_backend == "exact" ? run_cross_ratio<Rational>(cr_values, cr_points)
                                                : run_cross_ratio<double>(cr_values, cr_points))
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(tf))
            return tf_backend == "exact" ? run_transform<Rational>(tf_matrix, tf_points, tf_out)
                                         : run_transform<double>(tf_matrix, tf_points, tf_out);
        if (app.got_subcommand(rd)) return run_render(rd_args);
        if (app.got_subcommand(dm)) return run_demo(dm_seed, dm_trials, dm_backend, dm_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
