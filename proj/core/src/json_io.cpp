#include "hypwalls/json_io.hpp"

#include <json.hpp>

namespace hypwalls {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(std::string(what) + ": expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

MoebiusMatrix matrix_from(const json& j, double tol) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("matrix: expected [[a],[b],[c],[d]] with four entries");
    }
    Complex e[4];
    for (std::size_t i = 0; i < 4; ++i) {
        const json& cell = j[i];
        if (!cell.is_array() || cell.size() != 1) {
            throw ParseError("matrix entry " + std::to_string(i) + ": expected [[re, im]]");
        }
        e[i] = complex_from(cell[0], "matrix entry");
    }
    return {e[0], e[1], e[2], e[3], tol};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("invalid JSON at byte " + std::to_string(err.byte) + ": " + err.what());
    }
}

json matrix_json(const MoebiusMatrix& m) {
    return json::array({json::array({complex_json(m.a())}), json::array({complex_json(m.b())}),
                        json::array({complex_json(m.c())}), json::array({complex_json(m.d())})});
}

json wall_json(const Wall& w) {
    if (const auto* s = std::get_if<SphereWall>(&w)) {
        return {{"kind", "sphere"}, {"center", complex_json(s->center)}, {"radius", s->radius}};
    }
    if (const auto* p = std::get_if<PlaneWall>(&w)) {
        return {{"kind", "plane"}, {"normal", complex_json(p->normal)}, {"offset", p->offset}};
    }
    const auto& b = std::get<BallSphereWall>(w);
    return {{"kind", "ball-sphere"},
            {"center", json::array({b.center.w, b.center.x, b.center.y})},
            {"radius", b.radius}};
}

json boundary_json(const BoundaryPoint& p) {
    if (p.infinity) return "infinity";
    return complex_json(p.z);
}

}  // namespace

MoebiusMatrix parse_matrix(const std::string& text, double tol) {
    return matrix_from(parse_text(text), tol);
}

std::string matrix_to_json(const MoebiusMatrix& m) { return matrix_json(m).dump(); }

GroupSpec parse_group(const std::string& text, double tol) {
    const json j = parse_text(text);
    if (!j.is_object() || !j.contains("generators")) {
        throw ParseError("group file: expected an object with a \"generators\" array");
    }
    GroupSpec spec;
    spec.name = j.value("name", std::string{});
    spec.fuchsian = j.value("fuchsian", false);
    spec.unit_sphere_stabilizer = j.value("unit_sphere_stabilizer", false);
    for (const json& g : j.at("generators")) spec.generators.push_back(matrix_from(g, tol));
    if (j.contains("extra_elements")) {
        for (const json& g : j.at("extra_elements")) spec.extra_elements.push_back(matrix_from(g, tol));
    }
    if (spec.generators.empty()) throw ParseError("group file: no generators");
    return spec;
}

std::string wall_to_json(const Wall& w) { return wall_json(w).dump(); }

Wall parse_wall(const std::string& text) {
    const json j = parse_text(text);
    const std::string kind = j.value("kind", std::string{});
    if (kind == "sphere") {
        return SphereWall{complex_from(j.at("center"), "center"), j.at("radius").get<double>()};
    }
    if (kind == "plane") {
        return PlaneWall{complex_from(j.at("normal"), "normal"), j.at("offset").get<double>()};
    }
    if (kind == "ball-sphere") {
        const json& c = j.at("center");
        return BallSphereWall{Quaternion{c[0].get<double>(), c[1].get<double>(), c[2].get<double>(), 0.0},
                              j.at("radius").get<double>()};
    }
    throw ParseError("wall: unknown kind \"" + kind + "\"");
}

std::string classify_report_json(const MoebiusMatrix& m, double tol, int max_power) {
    json out;
    const IsometryClass by_trace = classify_trace(m, tol);
    out["class"] = to_string(by_trace.kind);
    out["marginal"] = by_trace.marginal;
    out["trace"] = complex_json(m.trace());
    out["normsq"] = m.normsq();
    if (by_trace.kind != IsometryKind::Identity) {
        json fps = json::array();
        for (const BoundaryPoint& p : fixed_points(m, tol)) fps.push_back(boundary_json(p));
        out["fixed_points"] = fps;
    }
    out["n_used"] = 1;
    if (by_trace.kind != IsometryKind::Identity && !is_su2(m, tol)) {
        const WallRelation rel = wall_relation(m, tol);
        switch (rel.kind) {
            case WallRelation::Kind::Tangent:
                out["wall_relation"] = {{"kind", "tangent"}, {"at", boundary_json(rel.tangent_at)}};
                break;
            case WallRelation::Kind::Disjoint:
                out["wall_relation"] = {{"kind", "disjoint"}};
                break;
            case WallRelation::Kind::CircleIntersection:
                out["wall_relation"] = {{"kind", "circle-intersection"}};
                break;
        }
        try {
            const IsometryClass geo = classify_geometric(m, max_power, tol);
            out["class_geometric"] = to_string(geo.kind);
            out["n_used"] = geo.n_used;
        } catch (const InconclusiveError& err) {
            out["class_geometric"] = "inconclusive";
            out["inconclusive"] = err.what();
        }
    } else {
        out["wall_relation"] = {{"kind", "su2-undefined"}};
    }
    return out.dump(2);
}

std::string bianchi_ideal_points_json(const BianchiContext& ctx) {
    json out;
    out["d"] = ctx.d;
    out["class_number"] = class_number(ctx);
    json pts = json::array();
    for (const IdealPoint& p : ideal_points(ctx)) {
        if (p.infinity) {
            pts.push_back({{"kind", "infinity"}});
        } else {
            pts.push_back({{"kind", "finite"},
                           {"r", p.r},
                           {"q", p.q},
                           {"z", complex_json(p.z)},
                           {"self_paired", p.self_paired}});
        }
    }
    out["ideal_points"] = pts;
    return out.dump(2);
}

std::string domain_report_json(const DomainSpec& dom, const std::vector<Face>& faces,
                               const DfReport& df) {
    json out;
    json walls = json::array();
    for (const TaggedWall& w : dom.walls) {
        json jw = wall_json(w.wall);
        jw["source"] = w.source == WallSource::Bisector
                           ? "bisector"
                           : (w.source == WallSource::Prism ? "prism" : "unit-sphere");
        jw["tag"] = matrix_json(w.tags.front().matrix);
        jw["tag_word"] = w.tags.front().word;
        jw["normsq"] = w.tags.front().normsq;
        walls.push_back(jw);
    }
    out["walls"] = walls;
    json jf = json::array();
    for (const Face& f : faces) {
        jf.push_back({{"wall", f.wall_index}, {"witnesses", f.witnesses.size()}});
    }
    out["faces"] = jf;
    json jdf;
    jdf["is_df"] = df.is_df;
    json pair = json::array();
    for (const SidePairing& sp : df.pairings) {
        json e;
        e["wall"] = sp.wall_index;
        if (sp.pairing) {
            e["pairing"] = matrix_json(sp.pairing->matrix);
            e["word"] = sp.pairing->word;
            e["df_deviation"] = sp.df_deviation;
        } else {
            e["pairing"] = nullptr;
        }
        pair.push_back(e);
    }
    jdf["pairings"] = pair;
    jdf["witnesses"] = df.witnesses;
    out["df"] = jdf;
    return out.dump(2);
}

std::string wall_report_json(const MoebiusMatrix& m, const std::string& model,
                             const std::string& kind, double tol) {
    json out;
    out["normsq"] = m.normsq();
    if (model == "ball") {
        if (kind != "bisector" && kind != "isometric") throw ParseError("kind must be bisector|isometric");
        // in the ball model the bisector IS the isometric sphere
        const BallSphereWall w = bisector_ball(m, tol);
        out["wall"] = wall_json(Wall{w});
        const Quaternion ip = ball_wall_inverse_point(m, tol);
        out["inverse_point"] = json::array({ip.w, ip.x, ip.y});
    } else if (model == "half") {
        if (kind == "bisector") {
            out["wall"] = wall_json(bisector_half_space(m, tol));
        } else if (kind == "isometric") {
            out["wall"] = wall_json(Wall{isometric_sphere_half_space(m, tol)});
        } else {
            throw ParseError("kind must be bisector|isometric");
        }
    } else {
        throw ParseError("model must be half|ball");
    }
    return out.dump(2);
}

std::string reduce_report_json(const HalfSpacePoint& input, const Reduction& red) {
    json out;
    out["input"] = {{"z", complex_json(input.z)}, {"r", input.r}};
    out["reduced"] = {{"z", complex_json(red.point.z)}, {"r", red.point.r}};
    out["applied"] = matrix_json(red.applied);
    out["steps"] = red.steps;
    return out.dump(2);
}

}  // namespace hypwalls
