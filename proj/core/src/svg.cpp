#include "hypwalls/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hypwalls {

namespace {

constexpr double kScale = 100.0;  // px per boundary unit

std::string fmt(double v) {
    char buf[40];
    if (std::abs(v) < 5e-5) v = 0.0;  // avoid -0.0000
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

Complex slice_point(const SliceSpec& slice, double t) {
    return slice.axis == SliceSpec::Axis::ImEquals ? Complex{t, slice.value}
                                                   : Complex{slice.value, t};
}

// Cross-section of a wall with the slice plane, in (t, r) coordinates.
struct CrossCircle {
    double t0, radius;
};
struct CrossLine {
    double t0;
};

std::optional<CrossCircle> sphere_cross(const SphereWall& s, const SliceSpec& slice) {
    const double off = slice.axis == SliceSpec::Axis::ImEquals ? s.center.imag() - slice.value
                                                               : s.center.real() - slice.value;
    const double t0 = slice.axis == SliceSpec::Axis::ImEquals ? s.center.real() : s.center.imag();
    const double h2 = s.radius * s.radius - off * off;
    if (h2 <= 0.0) return std::nullopt;
    return CrossCircle{t0, std::sqrt(h2)};
}

std::optional<CrossLine> plane_cross(const PlaneWall& p, const SliceSpec& slice) {
    // Re(conj(n) z) + offset = 0 restricted to z = slice_point(t)
    const double nt = slice.axis == SliceSpec::Axis::ImEquals ? p.normal.real() : p.normal.imag();
    const double nc = slice.axis == SliceSpec::Axis::ImEquals ? p.normal.imag() : p.normal.real();
    if (std::abs(nt) < 1e-12) return std::nullopt;  // parallel to the slice
    return CrossLine{-(p.offset + nc * slice.value) / nt};
}

}  // namespace

std::string render_slice_svg(const DomainSpec& dom, const SliceSpec& slice,
                             const std::optional<std::vector<Face>>& face_filter) {
    std::vector<std::size_t> draw;
    if (face_filter) {
        for (const Face& f : *face_filter) draw.push_back(f.wall_index);
        std::sort(draw.begin(), draw.end());
    } else {
        for (std::size_t i = 0; i < dom.walls.size(); ++i) draw.push_back(i);
    }

    double window = dom.extent;
    double top = 1.5;
    std::vector<std::pair<CrossCircle, bool>> circles;  // (cross, is_prism)
    std::vector<std::pair<CrossLine, bool>> lines;
    for (std::size_t wi : draw) {
        const TaggedWall& w = dom.walls[wi];
        const bool prism = w.source == WallSource::Prism;
        if (const auto* s = std::get_if<SphereWall>(&w.wall)) {
            if (auto c = sphere_cross(*s, slice)) {
                circles.push_back({*c, prism});
                top = std::max(top, c->radius + 0.5);
            }
        } else if (const auto* p = std::get_if<PlaneWall>(&w.wall)) {
            if (auto l = plane_cross(*p, slice)) lines.push_back({*l, prism});
        }
    }
    window = std::max(window, 2.0);

    const double width = 2.0 * window * kScale;
    const double height = (top + 0.1) * kScale;
    const auto X = [&](double t) { return (t + window) * kScale; };
    const auto Y = [&](double r) { return (top + 0.1 - r) * kScale; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<!-- slice " << (slice.axis == SliceSpec::Axis::ImEquals ? "Im z = " : "Re z = ")
        << fmt(slice.value) << "; 1 boundary unit = 100 px, origin centered on the axis -->\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

    // Shaded domain region: area between the lower envelope of the slice
    // membership and the top of the viewport.
    const int steps = 600;
    svg << "  <path d=\"";
    bool in_run = false;
    double run_start = 0.0;
    std::ostringstream dseg;
    for (int i = 0; i <= steps; ++i) {
        const double t = -window + 2.0 * window * i / steps;
        const Complex z = slice_point(slice, t);
        bool excluded = false;
        double rmin = 0.0;
        for (const TaggedWall& w : dom.walls) {
            if (const auto* p = std::get_if<PlaneWall>(&w.wall)) {
                const double sign = w.source == WallSource::Prism ? w.prism_sign : (p->offset >= 0 ? 1.0 : -1.0);
                if (sign * ((std::conj(p->normal) * z).real() + p->offset) < 0.0) excluded = true;
            } else if (const auto* s = std::get_if<SphereWall>(&w.wall)) {
                const double d2 = std::norm(z - s->center);
                if (d2 < s->radius * s->radius)
                    rmin = std::max(rmin, std::sqrt(s->radius * s->radius - d2));
            }
            if (excluded) break;
        }
        const bool last = i == steps;
        if (!excluded) {
            if (!in_run) {
                run_start = t;
                dseg << "M " << fmt(X(t)) << " " << fmt(Y(top)) << " ";
            }
            dseg << "L " << fmt(X(t)) << " " << fmt(Y(std::min(rmin, top))) << " ";
            in_run = true;
        }
        if ((excluded || last) && in_run) {
            const double tend = excluded ? t : window;
            dseg << "L " << fmt(X(tend)) << " " << fmt(Y(top)) << " Z ";
            (void)run_start;
            in_run = false;
        }
    }
    svg << dseg.str() << "\" fill=\"#cfe3f5\" stroke=\"none\"/>\n";

    for (const auto& [line, prism] : lines) {
        svg << "  <line class=\"" << (prism ? "prism" : "wall") << "\" x1=\"" << fmt(X(line.t0))
            << "\" y1=\"" << fmt(Y(0.0)) << "\" x2=\"" << fmt(X(line.t0)) << "\" y2=\""
            << fmt(Y(top)) << "\" stroke=\"" << (prism ? "#777777" : "#b03030")
            << "\" stroke-width=\"1.5\"" << (prism ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    }
    for (const auto& [c, prism] : circles) {
        svg << "  <path class=\"" << (prism ? "prism" : "wall") << "\" d=\"M "
            << fmt(X(c.t0 - c.radius)) << " " << fmt(Y(0.0)) << " A " << fmt(c.radius * kScale)
            << " " << fmt(c.radius * kScale) << " 0 0 1 " << fmt(X(c.t0 + c.radius)) << " "
            << fmt(Y(0.0)) << "\" fill=\"none\" stroke=\"" << (prism ? "#777777" : "#b03030")
            << "\" stroke-width=\"1.5\"/>\n";
    }
    // boundary axis
    svg << "  <line x1=\"0\" y1=\"" << fmt(Y(0.0)) << "\" x2=\"" << fmt(width) << "\" y2=\""
        << fmt(Y(0.0)) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

void render_slice_file(const DomainSpec& dom, const SliceSpec& slice, const std::string& path,
                       const std::optional<std::vector<Face>>& face_filter) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << render_slice_svg(dom, slice, face_filter);
    if (!out) throw IOError("write failed: " + path);
}

}  // namespace hypwalls
