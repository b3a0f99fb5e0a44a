#include "thinsphere/report.hpp"

#include <sstream>

namespace thinsphere::report {

Json document(const std::string& command, Json result) {
    return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"result", std::move(result)}};
}

Json to_json(const Cycle& c) { return Json(c.vertices()); }

Json to_json(const ValidationReport& r) {
    Json v = Json::array();
    for (const Violation& x : r.violations) v.push_back({{"kind", to_string(x.kind)}, {"message", x.message}});
    return {{"valid", r.ok()}, {"violations", v}};
}

Json to_json(const LocalMove& m) {
    auto edges = [](const std::vector<Edge>& es) {
        Json a = Json::array();
        for (const Edge& e : es) a.push_back({e.a, e.b});
        return a;
    };
    return {{"kind", to_string(m.kind)}, {"face", m.face},           {"side", m.side},
            {"apex", m.apex},            {"removed", edges(m.removed)}, {"inserted", edges(m.inserted)}};
}

Json to_json(const CycleClass& c) {
    Json sides = Json::array();
    for (const auto& side : c.shortenings) {
        Json s = Json::array();
        for (const LocalMove& m : side) s.push_back(to_json(m));
        sides.push_back(std::move(s));
    }
    Json blocking = Json::array();
    for (const BlockingPair& b : c.blocking)
        blocking.push_back({{"faces", {b.first, b.second}}, {"shared_edge", {b.shared.a, b.shared.b}}});
    return {{"tag", to_string(c.tag)},
            {"shortenings", sides},
            {"blocking", blocking},
            {"unblocked_pair", c.unblocked_pair}};
}

Json to_json(const ThinResult& r) {
    const ExtremaReport ex = local_extrema(r.profile);
    return {{"width", r.width},
            {"ordering", r.ordering},
            {"profile", r.profile},
            {"maxima", ex.maxima},
            {"minima", ex.minima}};
}

Json to_json(const GeodesicEntry& e) {
    return {{"cycle", to_json(e.cycle)},
            {"length", e.cycle.size()},
            {"tag", to_string(e.tag)},
            {"provenance", e.provenance.to_string()}};
}

Json to_json(const GeodesicReport& r) {
    Json s = Json::array(), u = Json::array();
    for (const auto& e : r.stable) s.push_back(to_json(e));
    for (const auto& e : r.unstable) u.push_back(to_json(e));
    return {{"stable", s}, {"unstable", u}, {"distinct", r.distinct_count()}};
}

Json to_json(const StableGeodesicsResult& r) {
    Json s = Json::array();
    for (const auto& e : r.stable) s.push_back(to_json(e));
    Json out{{"exception", r.exception ? Json(to_string(*r.exception)) : Json(nullptr)}, {"stable", s}};
    if (r.thin) out["thin"] = to_json(*r.thin);
    return out;
}

Json to_json(const VerificationRecord& r) {
    return {{"theorem", r.theorem},
            {"instance", r.instance},
            {"status", r.verified ? "verified" : "failed"},
            {"witness", r.witness}};
}

std::string dual_dot(const Triangulation& t, const std::vector<Cycle>& highlight) {
    static const char* const palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};
    std::ostringstream os;
    os << "graph dual {\n  node [shape=circle];\n";
    for (FaceId f = 0; f < t.num_faces(); ++f) {
        const Face& fc = t.face(f);
        os << "  f" << f << " [label=\"" << fc[0] << ' ' << fc[1] << ' ' << fc[2] << "\"];\n";
    }
    for (EdgeId e = 0; e < t.num_edges(); ++e) {
        const auto& fs = t.edge_faces(e);
        if (fs.size() != 2) continue;
        const Edge ed = t.edge(e);
        os << "  f" << fs[0] << " -- f" << fs[1] << " [label=\"" << ed.a << '-' << ed.b << '"';
        for (std::size_t i = 0; i < highlight.size(); ++i) {
            if (!highlight[i].contains_edge(ed)) continue;
            os << ", color=" << palette[i % std::size(palette)] << ", penwidth=2";
            break;
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace thinsphere::report
