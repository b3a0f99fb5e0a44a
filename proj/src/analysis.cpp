#include "thinsphere/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace thinsphere {

std::string to_string(ProvenanceKind k) {
    switch (k) {
        case ProvenanceKind::ThinMinimum: return "thin-minimum";
        case ProvenanceKind::ThinMaximum: return "thin-maximum";
        case ProvenanceKind::VertexLink: return "vertex-link";
        case ProvenanceKind::HubCycle: return "hub-cycle";
        case ProvenanceKind::NonFacialTriangle: return "non-facial-triangle";
        case ProvenanceKind::TetrahedronEquator: return "tetrahedron-equator";
    }
    return "unknown";
}

std::string Provenance::to_string() const {
    std::ostringstream os;
    os << thinsphere::to_string(kind);
    if (!data.empty()) {
        os << '(';
        for (std::size_t i = 0; i < data.size(); ++i) os << (i ? "," : "") << data[i];
        os << ')';
    }
    return os.str();
}

std::size_t GeodesicReport::distinct_count() const {
    std::set<Cycle> all;
    for (const auto& e : stable) all.insert(e.cycle);
    for (const auto& e : unstable) all.insert(e.cycle);
    return all.size();
}

std::string to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::Wheel: return "wheel";
        case RegionTag::Fan: return "fan";
        case RegionTag::PlanarLollipop: return "planar-lollipop";
        case RegionTag::Other: return "other";
    }
    return "unknown";
}

std::string to_string(RegionCheck::Kind k) {
    switch (k) {
        case RegionCheck::Kind::BetweenMinima: return "between-minima";
        case RegionCheck::Kind::EmptyGeodesicStart: return "empty-geodesic-start";
        case RegionCheck::Kind::EmptyGeodesicEnd: return "empty-geodesic-end";
    }
    return "unknown";
}

std::string to_string(ExceptionKind k) {
    return k == ExceptionKind::Tetrahedron ? "tetrahedron" : "double-tetrahedron";
}

ThinResult thin_for_analysis(const Triangulation& t, const AnalysisOptions& options) {
    return thin_position(t, options.strategy, options.search);
}

namespace {

std::string describe_moves(const std::vector<LocalMove>& moves) {
    std::ostringstream os;
    for (std::size_t i = 0; i < moves.size(); ++i)
        os << (i ? ", " : "") << "face " << moves[i].face << " (apex " << moves[i].apex << ", side " << moves[i].side
           << ")";
    return os.str();
}

std::string why_not(CycleTag want, const Cycle& c, const CycleClass& cls) {
    std::ostringstream os;
    os << c.to_string() << " classified " << to_string(cls.tag) << ", expected " << to_string(want);
    if (cls.tag == CycleTag::Neither && cls.unblocked_pair.size() == 2)
        os << "; shortening faces " << cls.unblocked_pair[0] << " and " << cls.unblocked_pair[1]
           << " lie on opposite sides without sharing a cycle edge";
    else if (!cls.shortenings[0].empty() || !cls.shortenings[1].empty())
        os << "; shortenings: " << describe_moves(cls.shortenings[0]) << (cls.shortenings[0].empty() ? "" : "; ")
           << describe_moves(cls.shortenings[1]);
    return os.str();
}

// Re-verifies a constructed cycle, throwing with the witnessing moves on mismatch.
GeodesicEntry verified(const Triangulation& t, const Cycle& c, CycleTag want, Provenance p, const char* what) {
    const CycleClass cls = classify_cycle(t, c);
    if (cls.tag != want) throw VerificationFailure(what, p.to_string() + ": " + why_not(want, c, cls));
    return {c, cls.tag, std::move(p)};
}

std::vector<char> mask_of(int n, const std::vector<FaceId>& faces) {
    std::vector<char> m(n, 0);
    for (FaceId f : faces) m[f] = 1;
    return m;
}

std::vector<FaceId> faces_between(const Ordering& o, int from, int to) {
    return std::vector<FaceId>(o.begin() + from, o.begin() + to);
}

// Interior vertices of a face set: every incident face is a member.
std::vector<VertexId> interior_vertices(const Triangulation& t, const std::vector<char>& members) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < t.num_vertices(); ++v) {
        const auto fs = t.vertex_faces(v);
        if (std::all_of(fs.begin(), fs.end(), [&](FaceId f) { return members[f] != 0; })) out.push_back(v);
    }
    return out;
}

}  // namespace

GeodesicReport extract_geodesics(const Triangulation& t, const Ordering& thin) {
    const Profile p = profile(t, thin);
    const ExtremaReport ext = local_extrema(p);
    GeodesicReport report;
    for (int j : ext.maxima)
        report.unstable.push_back(verified(t, prefix_boundary(t, thin, j), CycleTag::UnstableGeodesic,
                                           {ProvenanceKind::ThinMaximum, {j}}, "maximum is not an unstable geodesic"));
    for (int j : ext.minima)
        report.stable.push_back(verified(t, prefix_boundary(t, thin, j), CycleTag::StableGeodesic,
                                         {ProvenanceKind::ThinMinimum, {j}}, "minimum is not a stable geodesic"));
    return report;
}

WhitneyResult every_3cycle_bounds(const Triangulation& t) {
    for (const Cycle& c : enumerate_cycles(t, 3))
        if (!t.is_face_boundary(c)) return {false, c};
    return {};
}

std::optional<Cycle> hamiltonian_cycle(const Triangulation& t) {
    t.require_sphere();
    const int nv = t.num_vertices();
    std::vector<std::vector<VertexId>> order(nv);
    for (VertexId v = 0; v < nv; ++v) {
        order[v] = t.neighbors(v);
        std::stable_sort(order[v].begin(), order[v].end(),
                         [&](VertexId a, VertexId b) { return t.degree(a) < t.degree(b); });
    }
    std::vector<char> used(nv, 0);
    std::vector<VertexId> path{0};
    used[0] = 1;
    auto extend = [&](auto&& self) -> bool {
        const VertexId cur = path.back();
        if (static_cast<int>(path.size()) == nv) return t.adjacent(cur, 0);
        for (VertexId w : order[cur]) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (self(self)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (!extend(extend)) return std::nullopt;
    return Cycle(path);
}

namespace {

// Faces of one side in breadth-first order from its lowest face.
std::vector<FaceId> dual_tree_order(const Triangulation& t, const std::vector<FaceId>& side) {
    const auto members = mask_of(t.num_faces(), side);
    std::vector<char> seen(t.num_faces(), 0);
    std::vector<FaceId> order;
    std::deque<FaceId> queue{side.front()};
    seen[side.front()] = 1;
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        order.push_back(f);
        auto next = dual_neighbors_within(t, f, members);
        std::sort(next.begin(), next.end());
        for (FaceId g : next)
            if (!seen[g]) {
                seen[g] = 1;
                queue.push_back(g);
            }
    }
    return order;
}

}  // namespace

Ordering bridge_from_hamiltonian(const Triangulation& t, const Cycle& h) {
    t.require_sphere();
    t.check_cycle(h);
    if (static_cast<int>(h.size()) != t.num_vertices())
        throw std::invalid_argument("cycle " + h.to_string() + " is not Hamiltonian");
    const auto [first, second] = two_sides(t, h);
    Ordering o = dual_tree_order(t, first.faces);
    const auto back = dual_tree_order(t, second.faces);
    o.insert(o.end(), back.rbegin(), back.rend());
    if (!is_good_ordering(t, o) || !is_bridge(t, o))
        throw VerificationFailure("bridge construction failed", "Hamiltonian cycle " + h.to_string());
    return o;
}

Cycle hamiltonian_from_bridge(const Triangulation& t, const Ordering& bridge) {
    if (!is_bridge(t, bridge)) throw std::invalid_argument("ordering is not in bridge position");
    const int j = local_extrema(profile(t, bridge)).maxima.front();
    Cycle c = prefix_boundary(t, bridge, j);
    if (static_cast<int>(c.size()) != t.num_vertices())
        throw VerificationFailure("bridge maximum is not Hamiltonian",
                                  c.to_string() + " has " + std::to_string(c.size()) + " of " +
                                      std::to_string(t.num_vertices()) + " vertices");
    return c;
}

ThinBridgeResult check_thin_equals_bridge(const Triangulation& t, const AnalysisOptions& options) {
    ThinBridgeResult r;
    r.thin = thin_for_analysis(t, options);
    if (r.thin.width.size() == 1) {  // a single maximum forces zero minima
        if (t.num_vertices() != 4)
            throw VerificationFailure("thin ordering is bridge on a non-tetrahedron",
                                      "V = " + std::to_string(t.num_vertices()) + ", width [" +
                                          std::to_string(r.thin.width.front()) + "]");
        r.tetrahedron = true;
        r.bridge_width = r.thin.width;
        return r;
    }
    if (auto h = hamiltonian_cycle(t)) r.bridge_width = width_of_ordering(t, bridge_from_hamiltonian(t, *h));
    return r;
}

RegionClass classify_region(const Triangulation& t, const DiskRegion& r) { return classify_region(t, r.faces); }

RegionClass classify_region(const Triangulation& t, const std::vector<FaceId>& faces) {
    if (faces.empty()) throw std::invalid_argument("empty region");
    const auto members = mask_of(t.num_faces(), faces);
    if (!disk_boundary(t, members)) throw std::invalid_argument("region is not a disk");

    const int n = static_cast<int>(faces.size());
    std::vector<int> deg;
    int arcs2 = 0;
    for (FaceId f : faces) {
        const int d = static_cast<int>(dual_neighbors_within(t, f, members).size());
        deg.push_back(d);
        arcs2 += d;
    }
    const int arcs = arcs2 / 2;
    const auto count_deg = [&](int d) { return static_cast<int>(std::count(deg.begin(), deg.end(), d)); };

    RegionClass cls;
    std::ostringstream w;
    if (arcs == n && count_deg(2) == n) {
        // All faces around one interior vertex.
        Face common = t.face(faces.front());
        std::vector<VertexId> hub(common.begin(), common.end());
        for (FaceId f : faces) {
            std::vector<VertexId> keep;
            for (VertexId v : hub)
                if (t.face_contains(f, v)) keep.push_back(v);
            hub = keep;
        }
        cls.tag = RegionTag::Wheel;
        cls.vertex = hub.empty() ? -1 : hub.front();
        w << "dual cycle of " << n << ", hub " << cls.vertex;
    } else if (arcs == n - 1 && n >= 2 && count_deg(1) == 2 && count_deg(1) + count_deg(2) == n) {
        std::vector<FaceId> ends;
        for (int i = 0; i < n; ++i)
            if (deg[i] == 1) ends.push_back(faces[i]);
        const Face& x = t.face(ends[0]);
        const Face& y = t.face(ends[1]);
        std::vector<VertexId> shared;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(shared));
        if (!shared.empty()) {
            cls.tag = RegionTag::Fan;
            cls.vertex = shared.front();
            w << "dual path of " << n << ", end faces " << ends[0] << " and " << ends[1] << " share vertex "
              << cls.vertex;
        } else {
            w << "dual path of " << n << ", end faces " << ends[0] << " and " << ends[1] << " share no vertex";
        }
    } else if (arcs == n && count_deg(3) == 1 && count_deg(1) == 1 && count_deg(2) == n - 2) {
        cls.tag = RegionTag::PlanarLollipop;
        w << "dual cycle with one antenna, " << n << " faces";
    } else {
        w << "dual graph with " << n << " faces and " << arcs << " arcs";
    }
    cls.witness = w.str();
    return cls;
}

bool RegionStructureReport::ok() const {
    return std::all_of(regions.begin(), regions.end(), [](const RegionCheck& r) { return r.ok; });
}

RegionStructureReport verify_region_structure(const Triangulation& t, const Ordering& thin) {
    RegionStructureReport report;
    const WhitneyResult whitney = every_3cycle_bounds(t);
    report.whitney = whitney.holds;
    if (!whitney.holds)
        report.warnings.push_back("non-facial 3-cycle " + whitney.counterexample->to_string() +
                                  ": shapes between adjacent minima are not predicted");

    const Profile p = profile(t, thin);
    const auto minima = local_extrema(p).minima;
    const int n = t.num_faces();

    auto check = [&](RegionCheck::Kind kind, int first, int second, std::vector<FaceId> faces, bool expected,
                     bool wheel_only) {
        RegionCheck rc;
        rc.kind = kind;
        rc.first = first;
        rc.second = second;
        std::sort(faces.begin(), faces.end());
        rc.faces = std::move(faces);
        rc.expected = expected;
        try {
            rc.cls = classify_region(t, rc.faces);
        } catch (const std::invalid_argument&) {
            rc.disk = false;
            rc.cls.witness = "not a disk";
        }
        const bool shape_ok = rc.disk && (wheel_only ? rc.cls.tag == RegionTag::Wheel : rc.cls.tag != RegionTag::Other);
        rc.ok = !expected || shape_ok;
        report.regions.push_back(std::move(rc));
    };

    if (minima.empty()) return report;
    // The disks beyond the outermost minima each contain a single maximum.
    check(RegionCheck::Kind::EmptyGeodesicStart, minima.front(), 0, faces_between(thin, 0, minima.front()), true, true);
    for (std::size_t i = 0; i + 1 < minima.size(); ++i)
        check(RegionCheck::Kind::BetweenMinima, minima[i], minima[i + 1], faces_between(thin, minima[i], minima[i + 1]),
              report.whitney, false);
    check(RegionCheck::Kind::EmptyGeodesicEnd, minima.back(), 0, faces_between(thin, minima.back(), n), true, true);
    return report;
}

GeodesicReport three_geodesics(const Triangulation& t, const AnalysisOptions& options) {
    t.require_sphere();
    GeodesicReport report;
    if (t.num_vertices() == 4) {
        for (const Cycle& c : enumerate_cycles(t, 4))
            if (c.size() == 4)
                report.unstable.push_back(verified(t, c, CycleTag::UnstableGeodesic,
                                                   {ProvenanceKind::TetrahedronEquator, {}},
                                                   "tetrahedron 4-cycle is not an unstable geodesic"));
    } else {
        const ThinResult thin = thin_for_analysis(t, options);
        report = extract_geodesics(t, thin.ordering);
        if (report.unstable.size() < 2 || report.stable.empty())
            throw VerificationFailure("thin ordering is bridge", "width has " + std::to_string(thin.width.size()) +
                                                                     " maxima and " +
                                                                     std::to_string(report.stable.size()) + " minima");
    }
    if (report.distinct_count() < 3)
        throw VerificationFailure("fewer than three distinct geodesics", std::to_string(report.distinct_count()) +
                                                                              " found");
    return report;
}

StableGeodesicsResult three_stable_geodesics(const Triangulation& t, const AnalysisOptions& options) {
    t.require_sphere();
    StableGeodesicsResult out;
    if (t.num_vertices() == 4) {
        out.exception = ExceptionKind::Tetrahedron;
        return out;
    }
    if (t.num_vertices() == 5) {
        out.exception = ExceptionKind::DoubleTetrahedron;
        return out;
    }

    const ThinResult thin = thin_for_analysis(t, options);
    out.thin = thin;
    const auto minima = local_extrema(thin.profile).minima;
    std::set<Cycle> seen;
    auto add = [&](const GeodesicEntry& e) {
        if (seen.insert(e.cycle).second) out.stable.push_back(e);
    };
    auto try_add = [&](const Cycle& c, Provenance p) {
        if (seen.count(c)) return false;
        if (classify_cycle(t, c).tag != CycleTag::StableGeodesic) return false;
        add({c, CycleTag::StableGeodesic, std::move(p)});
        return true;
    };

    for (int j : minima)
        add(verified(t, prefix_boundary(t, thin.ordering, j), CycleTag::StableGeodesic,
                     {ProvenanceKind::ThinMinimum, {j}}, "minimum is not a stable geodesic"));

    const int nf = t.num_faces();
    if (minima.size() == 1) {
        // The minimum splits the sphere into two wheels; join their hubs
        // through pairs of non-adjacent rim vertices.
        const int i = minima.front();
        const Cycle rim = prefix_boundary(t, thin.ordering, i);
        const RegionClass inner = classify_region(t, faces_between(thin.ordering, 0, i));
        const RegionClass outer = classify_region(t, faces_between(thin.ordering, i, nf));
        if (inner.tag != RegionTag::Wheel || outer.tag != RegionTag::Wheel)
            throw VerificationFailure("single minimum does not split into two wheels",
                                      "inner " + inner.witness + "; outer " + outer.witness);
        const int k = static_cast<int>(rim.size());
        for (int a = 0; a < k; ++a)
            for (int b = a + 2; b < k; ++b) {
                if (a == 0 && b == k - 1) continue;  // adjacent around the rim
                const Cycle hub_cycle({inner.vertex, rim[a], outer.vertex, rim[b]});
                try_add(hub_cycle, {ProvenanceKind::HubCycle, {inner.vertex, outer.vertex, rim[a], rim[b]}});
            }
    } else if (minima.size() == 2) {
        const std::vector<FaceId> between = faces_between(thin.ordering, minima[0], minima[1]);
        const auto members = mask_of(nf, between);
        bool found = false;
        std::optional<RegionClass> cls;
        try {
            cls = classify_region(t, between);
        } catch (const std::invalid_argument&) {
        }
        if (cls && (cls->tag == RegionTag::Wheel || cls->tag == RegionTag::PlanarLollipop)) {
            for (VertexId v : interior_vertices(t, members))
                if (!found) found = try_add(vertex_link(t, v), {ProvenanceKind::VertexLink, {v}});
        } else if (cls && cls->tag == RegionTag::Fan) {
            found = try_add(vertex_link(t, cls->vertex), {ProvenanceKind::VertexLink, {cls->vertex}});
        }
        if (!found) {
            std::set<Edge> region_edges;
            for (FaceId f : between)
                for (EdgeId e : t.face_edges(f)) region_edges.insert(t.edge(e));
            for (const Cycle& c : enumerate_cycles(t, 3)) {
                if (found || t.is_face_boundary(c)) continue;
                const auto es = c.edges();
                if (std::all_of(es.begin(), es.end(), [&](const Edge& e) { return region_edges.count(e) > 0; }))
                    found = try_add(c, {ProvenanceKind::NonFacialTriangle, {}});
            }
        }
    }

    // The two-minima argument above needs every non-facial triangle to lie
    // inside the region between the minima. When one of the minima is itself
    // such a triangle it can come up short, so try the remaining cheap
    // candidates: every vertex link, then every non-facial triangle.
    if (out.stable.size() < 3 && minima.size() == 2) {
        for (VertexId v = 0; v < t.num_vertices() && out.stable.size() < 3; ++v)
            try_add(vertex_link(t, v), {ProvenanceKind::VertexLink, {v}});
        for (const Cycle& c : enumerate_cycles(t, 3)) {
            if (out.stable.size() >= 3) break;
            if (!t.is_face_boundary(c)) try_add(c, {ProvenanceKind::NonFacialTriangle, {}});
        }
    }

    if (out.stable.size() < 3) {
        std::ostringstream w;
        w << out.stable.size() << " stable geodesic(s) from " << minima.size() << " minima:";
        for (const auto& e : out.stable) w << ' ' << e.cycle.to_string();
        throw VerificationFailure("fewer than three stable geodesics", w.str());
    }
    return out;
}

}  // namespace thinsphere
