#include "thinsphere/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace thinsphere {

std::string to_string(MoveKind k) { return k == MoveKind::Shortening ? "shortening" : "lengthening"; }

std::string to_string(CycleTag tag) {
    switch (tag) {
        case CycleTag::TriangleBoundary: return "triangle-boundary";
        case CycleTag::StableGeodesic: return "stable";
        case CycleTag::UnstableGeodesic: return "unstable";
        case CycleTag::Neither: return "neither";
    }
    return "unknown";
}

std::vector<LocalMove> local_moves(const Triangulation& t, const Cycle& c) {
    t.require_sphere();
    const auto labels = side_labels(t, c);  // also validates c against t

    std::vector<char> on_cycle(t.num_edges(), 0);
    for (const Edge& e : c.edges()) on_cycle[*t.edge_id(e.a, e.b)] = 1;

    std::vector<LocalMove> moves;
    for (FaceId f = 0; f < t.num_faces(); ++f) {
        std::vector<Edge> hit, miss;
        for (EdgeId e : t.face_edges(f)) (on_cycle[e] ? hit : miss).push_back(t.edge(e));

        if (hit.size() == 2 && c.size() > 3) {
            const VertexId apex = hit[0].has(hit[1].a) ? hit[1].a : hit[1].b;
            moves.push_back({MoveKind::Shortening, f, labels[f], apex, hit, miss});
        } else if (hit.size() == 1) {
            const VertexId apex = t.opposite_vertex(f, hit[0]);
            if (c.contains(apex)) continue;  // would pinch the cycle
            moves.push_back({MoveKind::Lengthening, f, labels[f], apex, hit, miss});
        }
    }
    return moves;
}

Cycle apply_move(const Triangulation& t, const Cycle& c, const LocalMove& m) {
    const auto legal = local_moves(t, c);
    if (std::find(legal.begin(), legal.end(), m) == legal.end())
        throw std::invalid_argument("move across face " + std::to_string(m.face) + " is not legal on " +
                                    c.to_string());

    std::vector<VertexId> seq = c.vertices();
    if (m.kind == MoveKind::Shortening) {
        seq.erase(std::find(seq.begin(), seq.end(), m.apex));
    } else {
        const Edge e = m.removed.front();
        const std::size_t n = seq.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (Edge::make(seq[i], seq[(i + 1) % n]) == e) {
                seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(i + 1), m.apex);
                break;
            }
        }
    }
    return Cycle(std::move(seq));
}

LocalMove inverse_move(const Triangulation& t, const Cycle& c, const LocalMove& m) {
    const Cycle next = apply_move(t, c, m);
    const MoveKind want = m.kind == MoveKind::Shortening ? MoveKind::Lengthening : MoveKind::Shortening;
    for (const LocalMove& cand : local_moves(t, next))
        if (cand.face == m.face && cand.kind == want) return cand;
    throw std::logic_error("no inverse move across face " + std::to_string(m.face));
}

namespace {

// Vertices shared by two faces, ascending.
std::vector<VertexId> common_vertices(const Face& x, const Face& y) {
    std::vector<VertexId> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

CycleClass classify_cycle(const Triangulation& t, const Cycle& c) {
    CycleClass cls;
    const auto moves = local_moves(t, c);
    if (t.is_face_boundary(c)) {
        cls.tag = CycleTag::TriangleBoundary;
        return cls;
    }
    for (const LocalMove& m : moves)
        if (m.kind == MoveKind::Shortening) cls.shortenings[m.side].push_back(m);

    if (cls.shortenings[0].empty() && cls.shortenings[1].empty()) {
        cls.tag = CycleTag::StableGeodesic;
        return cls;
    }
    if (cls.shortenings[0].empty() || cls.shortenings[1].empty()) {
        cls.tag = CycleTag::Neither;
        return cls;
    }
    for (const LocalMove& a : cls.shortenings[0]) {
        for (const LocalMove& b : cls.shortenings[1]) {
            const auto shared = common_vertices(t.face(a.face), t.face(b.face));
            if (shared.size() == 2 && c.contains_edge(Edge::make(shared[0], shared[1]))) {
                cls.blocking.push_back({a.face, b.face, Edge::make(shared[0], shared[1])});
                continue;
            }
            cls.tag = CycleTag::Neither;
            cls.blocking.clear();
            cls.unblocked_pair = {a.face, b.face};
            return cls;
        }
    }
    cls.tag = CycleTag::UnstableGeodesic;
    return cls;
}

ShortenResult greedy_shorten(const Triangulation& t, const Cycle& c) {
    ShortenResult r{c, {}, 0};
    for (;;) {
        const auto moves = local_moves(t, r.cycle);
        const LocalMove* pick = nullptr;
        for (const LocalMove& m : moves) {
            if (m.kind != MoveKind::Shortening) continue;
            if (!pick || std::pair(m.face, m.side) < std::pair(pick->face, pick->side)) pick = &m;
        }
        if (!pick) break;
        r.cycle = apply_move(t, r.cycle, *pick);
        ++r.steps;
    }
    r.cls = classify_cycle(t, r.cycle);
    return r;
}

}  // namespace thinsphere
