#include "thinsphere/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "thinsphere/moves.hpp"

namespace thinsphere::oracle {

FaceSetShape inspect_face_set(const Triangulation& t, const std::vector<char>& members) {
    FaceSetShape shape;
    const int nf = t.num_faces();
    std::vector<FaceId> faces;
    for (FaceId f = 0; f < nf; ++f)
        if (members[f]) faces.push_back(f);
    if (faces.empty()) return shape;

    std::map<Edge, int> edge_use;
    std::set<VertexId> verts;
    for (FaceId f : faces) {
        const Face& fv = t.face(f);
        for (int i = 0; i < 3; ++i) {
            verts.insert(fv[i]);
            ++edge_use[Edge::make(fv[i], fv[(i + 1) % 3])];
        }
    }

    // Connected through shared edges.
    std::set<FaceId> reached{faces.front()};
    std::vector<FaceId> stack{faces.front()};
    while (!stack.empty()) {
        const FaceId f = stack.back();
        stack.pop_back();
        for (FaceId g : faces) {
            if (reached.count(g)) continue;
            int common = 0;
            for (VertexId v : t.face(g)) common += t.face_contains(f, v);
            if (common == 2) {
                reached.insert(g);
                stack.push_back(g);
            }
        }
    }
    if (reached.size() != faces.size()) return shape;

    // Each vertex's faces must form a single fan or a full wheel.
    for (VertexId v : verts) {
        std::map<VertexId, std::vector<VertexId>> link;
        for (FaceId f : faces) {
            if (!t.face_contains(f, v)) continue;
            std::vector<VertexId> xy;
            for (VertexId w : t.face(f))
                if (w != v) xy.push_back(w);
            link[xy[0]].push_back(xy[1]);
            link[xy[1]].push_back(xy[0]);
        }
        std::size_t ends = 0;
        for (const auto& [w, ns] : link) {
            if (ns.size() > 2) return shape;
            ends += ns.size() == 1;
        }
        std::set<VertexId> seen{link.begin()->first};
        std::vector<VertexId> st{link.begin()->first};
        while (!st.empty()) {
            const VertexId w = st.back();
            st.pop_back();
            for (VertexId x : link[w])
                if (seen.insert(x).second) st.push_back(x);
        }
        if (seen.size() != link.size() || (ends != 0 && ends != 2)) return shape;
    }

    // Boundary edges form one simple cycle.
    std::map<VertexId, std::vector<VertexId>> bnd;
    for (const auto& [e, uses] : edge_use) {
        if (uses > 2) return shape;
        if (uses == 1) {
            bnd[e.a].push_back(e.b);
            bnd[e.b].push_back(e.a);
        }
    }
    if (bnd.empty()) return shape;
    for (const auto& [v, ns] : bnd)
        if (ns.size() != 2) return shape;
    std::set<VertexId> on_cycle{bnd.begin()->first};
    std::vector<VertexId> st{bnd.begin()->first};
    while (!st.empty()) {
        const VertexId w = st.back();
        st.pop_back();
        for (VertexId x : bnd[w])
            if (on_cycle.insert(x).second) st.push_back(x);
    }
    if (on_cycle.size() != bnd.size()) return shape;

    const long chi = static_cast<long>(verts.size()) - static_cast<long>(edge_use.size()) + static_cast<long>(faces.size());
    if (chi != 1) return shape;

    shape.disk = true;
    shape.boundary_vertices = static_cast<int>(bnd.size());
    return shape;
}

namespace {

struct Enumerator {
    const Triangulation& t;
    const std::function<bool(const Ordering&, const Profile&)>& visit;
    int n;
    std::unordered_map<std::uint64_t, FaceSetShape> memo;
    Ordering order;
    Profile prof;
    std::uint64_t mask = 0;
    bool stopped = false;

    const FaceSetShape& shape_of(std::uint64_t m) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::vector<char> members(n, 0);
        for (int f = 0; f < n; ++f) members[f] = (m >> f) & 1;
        return memo.emplace(m, inspect_face_set(t, members)).first->second;
    }

    void run() {
        if (stopped) return;
        const int k = static_cast<int>(order.size());
        if (k == n) {
            if (!visit(order, prof)) stopped = true;
            return;
        }
        for (FaceId f = 0; f < n && !stopped; ++f) {
            if ((mask >> f) & 1) continue;
            const std::uint64_t next = mask | (std::uint64_t{1} << f);
            const bool last = k + 1 == n;
            if (!last) {
                const FaceSetShape& s = shape_of(next);
                if (!s.disk) continue;
                prof.push_back(s.boundary_vertices);
            }
            order.push_back(f);
            mask = next;
            run();
            mask ^= std::uint64_t{1} << f;
            order.pop_back();
            if (!last) prof.pop_back();
        }
    }
};

}  // namespace

void enumerate_good_orderings(const Triangulation& t, const std::function<bool(const Ordering&, const Profile&)>& visit,
                              int bound) {
    t.require_sphere();
    if (t.num_faces() > bound) throw BoundExceeded(t.num_faces(), bound);
    if (t.num_faces() > 63) throw std::invalid_argument("oracle enumeration supports at most 63 faces");
    Enumerator e{t, visit, t.num_faces(), {}, {}, {}};
    e.run();
}

std::uint64_t count_good_orderings(const Triangulation& t, int bound) {
    std::uint64_t count = 0;
    enumerate_good_orderings(
        t,
        [&](const Ordering&, const Profile&) {
            ++count;
            return true;
        },
        bound);
    return count;
}

WidthList brute_force_width(const Triangulation& t, int bound) {
    std::optional<WidthList> best;
    enumerate_good_orderings(
        t,
        [&](const Ordering&, const Profile& p) {
            WidthList w;
            for (std::size_t j = 1; j + 1 < p.size(); ++j)
                if (p[j - 1] < p[j] && p[j] > p[j + 1]) w.push_back(p[j]);
            std::sort(w.begin(), w.end(), std::greater<>());
            if (!best || w < *best) best = std::move(w);
            return true;
        },
        bound);
    return best.value_or(WidthList{});
}

WidthList subset_dp_width(const Triangulation& t, int max_faces) {
    t.require_sphere();
    const int n = t.num_faces();
    if (n > max_faces) throw BoundExceeded(n, max_faces);
    if (n > 63) throw std::invalid_argument("subset DP supports at most 63 faces");

    // Layer k maps each disk prefix set (with the direction of its last step)
    // to the smallest list of maxima completed so far. Appending the same
    // future maxima to two lists keeps their order, so this is exact.
    using Key = std::pair<std::uint64_t, int>;
    std::map<Key, WidthList> layer;
    std::unordered_map<std::uint64_t, int> length{{0, 0}};
    auto boundary = [&](std::uint64_t m) {
        auto it = length.find(m);
        if (it != length.end()) return it->second;
        std::vector<char> members(n, 0);
        for (int f = 0; f < n; ++f) members[f] = (m >> f) & 1;
        const FaceSetShape s = inspect_face_set(t, members);
        return length.emplace(m, s.disk ? s.boundary_vertices : -1).first->second;
    };

    for (FaceId f = 0; f < n; ++f) layer[{std::uint64_t{1} << f, +1}] = {};
    for (int k = 1; k < n - 1; ++k) {
        std::map<Key, WidthList> next;
        for (const auto& [key, maxima] : layer) {
            const auto [mask, dir] = key;
            const int here = boundary(mask);
            for (FaceId f = 0; f < n; ++f) {
                if ((mask >> f) & 1) continue;
                const std::uint64_t m = mask | (std::uint64_t{1} << f);
                const int there = boundary(m);
                if (there < 0) continue;
                const int d = there > here ? +1 : -1;
                WidthList w = maxima;
                if (dir > 0 && d < 0 && k >= 2) {
                    w.insert(std::upper_bound(w.begin(), w.end(), here, std::greater<>()), here);
                }
                auto [it, fresh] = next.try_emplace({m, d}, w);
                if (!fresh && w < it->second) it->second = std::move(w);
            }
        }
        layer = std::move(next);
    }
    // The last face closes the sphere; the final prefix is an endpoint.
    std::optional<WidthList> best;
    for (const auto& [key, maxima] : layer)
        if (!best || maxima < *best) best = maxima;
    return best.value_or(WidthList{});
}

std::vector<Cycle> brute_force_stable_geodesics(const Triangulation& t, int max_len) {
    if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
    std::vector<Cycle> out;
    for (Cycle& c : enumerate_cycles(t, max_len))
        if (classify_cycle(t, c).tag == CycleTag::StableGeodesic) out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using RawFace = std::array<std::int64_t, 3>;

Triangulation build(const std::vector<RawFace>& faces) { return Triangulation::from_faces(faces); }

std::vector<RawFace> raw_faces(const Triangulation& t) {
    std::vector<RawFace> out;
    for (const Face& f : t.faces()) out.push_back({f[0], f[1], f[2]});
    return out;
}

}  // namespace

Triangulation tetrahedron() { return build({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

Triangulation bipyramid(int k) {
    if (k < 3) throw std::invalid_argument("bipyramid needs k >= 3");
    // North apex 0, rim 1..k, south apex k+1.
    std::vector<RawFace> faces;
    for (int i = 1; i <= k; ++i) faces.push_back({0, i, i % k + 1});
    for (int i = 1; i <= k; ++i) faces.push_back({i, i % k + 1, k + 1});
    return build(faces);
}

Triangulation double_tetrahedron() { return bipyramid(3); }

Triangulation octahedron() { return bipyramid(4); }

Triangulation icosahedron() {
    // Top 0, upper ring 1..5, lower ring 6..10, bottom 11.
    std::vector<RawFace> faces;
    auto up = [](int i) { return 1 + (i % 5); };
    auto lo = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) faces.push_back({0, up(i), up(i + 1)});
    for (int i = 0; i < 5; ++i) {
        faces.push_back({up(i), up(i + 1), lo(i)});
        faces.push_back({up(i + 1), lo(i), lo(i + 1)});
    }
    for (int i = 0; i < 5; ++i) faces.push_back({lo(i), lo(i + 1), 11});
    return build(faces);
}

Triangulation stacked_sphere(std::uint64_t seed, int splits, const Triangulation& base) {
    if (splits < 0) throw std::invalid_argument("splits must be nonnegative");
    std::mt19937_64 rng(seed);
    auto faces = raw_faces(base);
    std::int64_t next_vertex = base.num_vertices();
    for (int s = 0; s < splits; ++s) {
        const std::size_t i = rng() % faces.size();
        const auto [a, b, c] = faces[i];
        const std::int64_t x = next_vertex++;
        faces[i] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({a, c, x});
    }
    return build(faces);
}

Triangulation flipped_sphere(std::uint64_t seed, int flips, const Triangulation& base) {
    if (flips < 0) throw std::invalid_argument("flips must be nonnegative");
    std::mt19937_64 rng(seed);
    auto faces = raw_faces(base);
    const std::size_t nv = static_cast<std::size_t>(base.num_vertices());

    auto has = [](const RawFace& f, std::int64_t v) { return f[0] == v || f[1] == v || f[2] == v; };
    for (int s = 0; s < flips; ++s) {
        const std::size_t i = rng() % faces.size();
        const int j = static_cast<int>(rng() % 3);
        const std::int64_t a = faces[i][j], b = faces[i][(j + 1) % 3], c = faces[i][(j + 2) % 3];

        std::size_t other = faces.size();
        for (std::size_t g = 0; g < faces.size(); ++g)
            if (g != i && has(faces[g], a) && has(faces[g], b)) other = g;
        std::int64_t d = -1;
        for (std::int64_t v : faces[other])
            if (v != a && v != b) d = v;

        std::vector<int> degree(nv, 0);
        bool cd_edge = false;
        for (const RawFace& f : faces) {
            for (std::int64_t v : f) ++degree[static_cast<std::size_t>(v)];
            if (has(f, c) && has(f, d)) cd_edge = true;
        }
        if (cd_edge || degree[static_cast<std::size_t>(a)] == 3 || degree[static_cast<std::size_t>(b)] == 3) continue;
        faces[i] = {a, c, d};
        faces[other] = {b, d, c};
    }
    return build(faces);
}

std::optional<GeneratorSpec::Kind> generator_kind(const std::string& name) {
    using K = GeneratorSpec::Kind;
    static const std::map<std::string, K> names{
        {"tetrahedron", K::Tetrahedron},   {"double-tetrahedron", K::DoubleTetrahedron},
        {"bipyramid", K::Bipyramid},       {"octahedron", K::Octahedron},
        {"icosahedron", K::Icosahedron},   {"stacked", K::StackedSphere},
        {"flipped", K::FlippedSphere},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

Triangulation generate(const GeneratorSpec& spec) {
    using K = GeneratorSpec::Kind;
    auto base_or = [&](const Triangulation& fallback) {
        if (spec.base.empty()) return fallback;
        const auto kind = generator_kind(spec.base);
        if (!kind || *kind == K::StackedSphere || *kind == K::FlippedSphere)
            throw std::invalid_argument("unsupported base '" + spec.base + "'");
        GeneratorSpec b;
        b.kind = *kind;
        b.k = spec.k;
        return generate(b);
    };
    switch (spec.kind) {
        case K::Tetrahedron: return tetrahedron();
        case K::DoubleTetrahedron: return double_tetrahedron();
        case K::Bipyramid: return bipyramid(spec.k);
        case K::Octahedron: return octahedron();
        case K::Icosahedron: return icosahedron();
        case K::StackedSphere: return stacked_sphere(spec.seed, spec.count, base_or(tetrahedron()));
        case K::FlippedSphere: return flipped_sphere(spec.seed, spec.count, base_or(octahedron()));
    }
    throw std::invalid_argument("unknown generator");
}

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back({"tetrahedron", tetrahedron()});
    for (int k = 3; k <= 8; ++k) out.push_back({"bipyramid-" + std::to_string(k), bipyramid(k)});
    out.push_back({"octahedron", octahedron()});
    out.push_back({"icosahedron", icosahedron()});
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const int splits = 1 + static_cast<int>((seed - 1) % 4);
        out.push_back({"stacked-s" + std::to_string(seed) + "-n" + std::to_string(splits), stacked_sphere(seed, splits)});
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const int k = seed <= 4 ? 4 : seed <= 7 ? 5 : 6;
        const int flips = 4 * static_cast<int>(seed);
        out.push_back({"flipped-s" + std::to_string(seed) + "-n" + std::to_string(flips) + "-bipyramid" + std::to_string(k),
                       flipped_sphere(seed, flips, bipyramid(k))});
    }
    return out;
}

}  // namespace thinsphere::oracle
