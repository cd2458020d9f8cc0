#include "pgeom/render.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "pgeom/io.hpp"

namespace pgeom {

namespace {

struct EdgeSegments {
    std::array<Segment2, 2> seg;
    int count = 0;
};

struct Frame {
    Point3<double> center;
    Point3<double> normal;
    double n_dot_center;
    double side;  // offset - n.center, nonzero
    PlaneChart<double> chart;
};

Point3<double> lerp(const Point3<double>& a, const Point3<double>& b, double s) {
    return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y), a.z + s * (b.z - a.z)};
}

std::array<double, 2> project_to_chart(const Frame& fr, const Point3<double>& p) {
    Point3<double> d = p - fr.center;
    double t = fr.side / dot(fr.normal, d);
    return fr.chart.to_chart(fr.center + t * d);
}

// Projects one edge, clipping against the no-image plane. At most two
// sub-segments survive (one on each side of the crossing).
EdgeSegments project_edge(const Scene<double>& scene, const Frame& fr, const RenderOptions& opts,
                          std::size_t edge_index) {
    EdgeSegments out;
    const auto& [ia, ib] = scene.edges[edge_index];
    const Point3<double>& a = scene.vertices[ia];
    const Point3<double>& b = scene.vertices[ib];
    double fa = dot(fr.normal, a) - fr.n_dot_center;
    double fb = dot(fr.normal, b) - fr.n_dot_center;
    bool front_a = fa * fr.side > 0;
    bool front_b = fb * fr.side > 0;

    auto emit = [&](double sa, double sb) {
        auto p = project_to_chart(fr, lerp(a, b, sa));
        auto q = project_to_chart(fr, lerp(a, b, sb));
        out.seg[out.count++] = {p[0], p[1], q[0], q[1], edge_index};
    };

    if (fa == 0 && fb == 0) return out;  // edge lies on the no-image plane
    if (fa != 0 && fb != 0 && (fa > 0) == (fb > 0)) {
        if (opts.front_only && !front_a) return out;
        emit(0.0, 1.0);
        return out;
    }
    // The edge crosses (or touches) the no-image plane at s0.
    double s0 = fa / (fa - fb);
    double m = opts.near_margin;
    if (fa != 0 && s0 > 0 && (!opts.front_only || front_a)) emit(0.0, s0 * (1.0 - m));
    if (fb != 0 && s0 < 1 && (!opts.front_only || front_b)) emit(s0 + (1.0 - s0) * m, 1.0);
    return out;
}

std::vector<Marker2> collect_markers(const Scene<double>& scene,
                                     const CentralProjection<double>& pr, const Frame& fr,
                                     const RenderOptions& opts) {
    std::vector<Marker2> markers;
    for (std::size_t i = 0; i < scene.marker_directions.size(); ++i) {
        try {
            Point3<double> vp = vanishing_point(pr, scene.marker_directions[i]);
            auto c = fr.chart.to_chart(vp);
            markers.push_back({c[0], c[1], "d" + std::to_string(i)});
        } catch (const Error&) {
            // direction parallel to the image plane: improper vanishing
            // point, nothing to draw
        }
    }
    if (opts.mark_edge_directions) {
        std::vector<std::array<double, 3>> seen;
        for (const auto& [ia, ib] : scene.edges) {
            Point3<double> d = scene.vertices[ib] - scene.vertices[ia];
            std::array<double, 3> dv{d.x, d.y, d.z};
            bool fresh = true;
            for (const auto& s : seen)
                if (detail::proportional(s, dv)) fresh = false;
            if (!fresh) continue;
            std::size_t index = seen.size();
            seen.push_back(dv);
            try {
                Point3<double> vp = vanishing_point(pr, d);
                auto c = fr.chart.to_chart(vp);
                markers.push_back({c[0], c[1], "e" + std::to_string(index)});
            } catch (const Error&) {
            }
        }
    }
    return markers;
}

RenderResult render_impl(const Scene<double>& scene, const CentralProjection<double>& pr,
                         const RenderOptions& opts, bool parallel) {
    scene.validate();
    Frame fr{pr.center(), pr.image_plane().normal, dot(pr.image_plane().normal, pr.center()),
             pr.image_plane().offset - dot(pr.image_plane().normal, pr.center()),
             chart_basis(pr.image_plane())};

    std::vector<EdgeSegments> per_edge(scene.edges.size());
    if (parallel) {
        const std::int64_t n = static_cast<std::int64_t>(scene.edges.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            per_edge[static_cast<std::size_t>(i)] =
                project_edge(scene, fr, opts, static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < scene.edges.size(); ++i)
            per_edge[i] = project_edge(scene, fr, opts, i);
    }

    RenderResult result;
    for (const auto& es : per_edge)
        for (int k = 0; k < es.count; ++k) result.segments.push_back(es.seg[k]);
    result.markers = collect_markers(scene, pr, fr, opts);
    if (result.segments.empty() && result.markers.empty())
        fail(Err::EmptyScene, "no projectable geometry remains");
    return result;
}

std::string g9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

RenderResult render_scene(const Scene<double>& scene, const CentralProjection<double>& pr,
                          const RenderOptions& opts) {
    return render_impl(scene, pr, opts, true);
}

RenderResult render_scene_serial(const Scene<double>& scene, const CentralProjection<double>& pr,
                                 const RenderOptions& opts) {
    return render_impl(scene, pr, opts, false);
}

std::string svg_document(const RenderResult& result, const Viewport& vp,
                         const std::vector<TextNote>& notes) {
    auto px = [&](double x) { return vp.width / 2 + vp.scale * x; };
    auto py = [&](double y) { return vp.height / 2 - vp.scale * y; };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g9(vp.width) << "\" height=\""
       << g9(vp.height) << "\" viewBox=\"0 0 " << g9(vp.width) << " " << g9(vp.height) << "\">\n";
    for (const auto& s : result.segments) {
        os << "<line x1=\"" << g9(px(s.x1)) << "\" y1=\"" << g9(py(s.y1)) << "\" x2=\""
           << g9(px(s.x2)) << "\" y2=\"" << g9(py(s.y2))
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const auto& m : result.markers) {
        os << "<circle cx=\"" << g9(px(m.x)) << "\" cy=\"" << g9(py(m.y))
           << "\" r=\"3\" fill=\"red\"><title>" << m.label << "</title></circle>\n";
    }
    for (const auto& t : notes) {
        os << "<text x=\"" << g9(px(t.x)) << "\" y=\"" << g9(py(t.y))
           << "\" font-size=\"12\" fill=\"black\">" << t.text << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pgeom
