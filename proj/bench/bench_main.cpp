// Benchmark: OpenMP kernels against their serial references, for the two
// batch paths (scene-edge projection, invariance trials). Verifies that both
// paths produce identical results before reporting timings.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pgeom/demo.hpp"
#include "pgeom/render.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace pgeom;

// K x K x 2 lattice wireframe in front of the canonical camera.
Scene<double> lattice_scene(int k) {
    Scene<double> scene;
    auto coord = [&](int i) { return 2.0 * i / (k - 1) - 1.0; };
    auto idx = [&](int i, int j, int l) {
        return static_cast<std::size_t>((l * k + j) * k + i);
    };
    for (int l = 0; l < 2; ++l)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < k; ++i)
                scene.vertices.push_back({coord(i), coord(j), 2.0 + 2.0 * l});
    for (int l = 0; l < 2; ++l)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < k; ++i) {
                if (i + 1 < k) scene.edges.push_back({idx(i, j, l), idx(i + 1, j, l)});
                if (j + 1 < k) scene.edges.push_back({idx(i, j, l), idx(i, j + 1, l)});
                if (l == 0) scene.edges.push_back({idx(i, j, 0), idx(i, j, 1)});
            }
    return scene;
}

double time_best_of(int repeat, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, s);
    }
    return best;
}

bool same_render(const RenderResult& a, const RenderResult& b) {
    if (a.segments.size() != b.segments.size()) return false;
    for (std::size_t i = 0; i < a.segments.size(); ++i) {
        const auto& s = a.segments[i];
        const auto& t = b.segments[i];
        if (s.edge != t.edge || s.x1 != t.x1 || s.y1 != t.y1 || s.x2 != t.x2 || s.y2 != t.y2)
            return false;
    }
    return true;
}

bool same_report(const InvarianceReport& a, const InvarianceReport& b) {
    if (a.passed != b.passed || a.results.size() != b.results.size()) return false;
    for (std::size_t i = 0; i < a.results.size(); ++i)
        if (a.results[i].before != b.results[i].before ||
            a.results[i].after != b.results[i].after)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pgeom kernel benchmark: serial reference vs OpenMP"};
    int edges = 50000;
    int trials = 2000;
    int repeat = 3;
    app.add_option("--edges", edges, "approximate edge count for the render benchmark");
    app.add_option("--trials", trials, "invariance trials");
    app.add_option("--repeat", repeat, "repetitions (best-of)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif

    int k = 2;
    while (4 * k * (k - 1) + k * k < edges) ++k;
    Scene<double> scene = lattice_scene(k);
    CentralProjection<double> pr({0, 0, 0}, Plane3<double>({0, 0, 1}, 1.0));
    RenderOptions opts;

    RenderResult serial_result = render_scene_serial(scene, pr, opts);
    RenderResult parallel_result = render_scene(scene, pr, opts);
    bool render_same = same_render(serial_result, parallel_result);

    double render_serial =
        time_best_of(repeat, [&] { render_scene_serial(scene, pr, opts); });
    double render_parallel = time_best_of(repeat, [&] { render_scene(scene, pr, opts); });

    std::printf("render      edges=%zu  serial=%.2f ms  parallel=%.2f ms  speedup=%.2fx  identical=%s\n",
                scene.edges.size(), render_serial * 1e3, render_parallel * 1e3,
                render_serial / render_parallel, render_same ? "yes" : "NO");

    InvarianceReport serial_report = run_invariance_trials_serial(0, trials, DemoBackend::Exact);
    InvarianceReport parallel_report = run_invariance_trials(0, trials, DemoBackend::Exact);
    bool demo_same = same_report(serial_report, parallel_report);

    double demo_serial = time_best_of(
        repeat, [&] { run_invariance_trials_serial(0, trials, DemoBackend::Exact); });
    double demo_parallel =
        time_best_of(repeat, [&] { run_invariance_trials(0, trials, DemoBackend::Exact); });

    std::printf("invariance  trials=%d  serial=%.2f ms  parallel=%.2f ms  speedup=%.2fx  identical=%s\n",
                trials, demo_serial * 1e3, demo_parallel * 1e3, demo_serial / demo_parallel,
                demo_same ? "yes" : "NO");

    return (render_same && demo_same) ? 0 : 1;
}
