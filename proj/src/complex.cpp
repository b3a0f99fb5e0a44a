#include "thinsphere/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace thinsphere {

std::vector<VertexId> canonical_cycle(std::span<const VertexId> seq) {
    const std::size_t n = seq.size();
    if (n == 0) return {};
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
    std::vector<VertexId> fwd(n), bwd(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = seq[(start + i) % n];
        bwd[i] = seq[(start + n - i) % n];
    }
    return std::min(fwd, bwd);
}

Cycle::Cycle(std::vector<VertexId> vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<VertexId> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle repeats a vertex");
    v_ = canonical_cycle(vertices);
}

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    out.reserve(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(Edge::make(v_[i], v_[(i + 1) % v_.size()]));
    return out;
}

bool Cycle::contains(VertexId v) const { return std::find(v_.begin(), v_.end(), v) != v_.end(); }

bool Cycle::contains_edge(Edge e) const {
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (Edge::make(v_[i], v_[(i + 1) % n]) == e) return true;
    return false;
}

std::string Cycle::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

bool compute_orientation(Triangulation& t) {
    const int nf = t.num_faces();
    t.oriented_.assign(nf, {0, 0, 0});
    std::vector<char> done(nf, 0);
    for (int root = 0; root < nf; ++root) {
        if (done[root]) continue;
        t.oriented_[root] = t.faces_[root];
        done[root] = 1;
        std::deque<FaceId> queue{root};
        while (!queue.empty()) {
            const FaceId f = queue.front();
            queue.pop_front();
            const auto& o = t.oriented_[f];
            for (int i = 0; i < 3; ++i) {
                const VertexId u = o[i], v = o[(i + 1) % 3];
                const auto e = t.edge_id(u, v);
                const auto& inc = t.edge_faces_[*e];
                if (inc.size() != 2) continue;
                const FaceId g = inc[0] == f ? inc[1] : inc[0];
                const VertexId w = t.opposite_vertex(g, Edge::make(u, v));
                const std::array<VertexId, 3> want{v, u, w};
                if (!done[g]) {
                    t.oriented_[g] = want;
                    done[g] = 1;
                    queue.push_back(g);
                    continue;
                }
                // g must traverse the shared edge as v -> u.
                const auto& og = t.oriented_[g];
                bool ok = false;
                for (int j = 0; j < 3; ++j)
                    if (og[j] == v && og[(j + 1) % 3] == u) ok = true;
                if (!ok) return false;
            }
        }
    }
    return true;
}

Triangulation Triangulation::from_faces(std::span<const std::array<std::int64_t, 3>> raw) {
    Triangulation t;
    std::unordered_map<std::int64_t, VertexId> remap;
    auto id_of = [&](std::int64_t x) {
        auto [it, fresh] = remap.try_emplace(x, static_cast<VertexId>(remap.size()));
        if (fresh) t.labels_.push_back(x);
        return it->second;
    };

    std::set<Face> seen;
    t.faces_.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& r = raw[i];
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
            throw std::invalid_argument("face " + std::to_string(i) + " repeats a vertex");
        Face f{id_of(r[0]), id_of(r[1]), id_of(r[2])};
        std::sort(f.begin(), f.end());
        if (!seen.insert(f).second)
            throw std::invalid_argument("face " + std::to_string(i) + " duplicates an earlier face");
        t.faces_.push_back(f);
    }

    const int nv = static_cast<int>(remap.size());
    const int nf = static_cast<int>(t.faces_.size());
    t.adj_.assign(nv, {});
    t.vertex_faces_.assign(nv, {});
    t.face_edges_.assign(nf, {-1, -1, -1});

    std::map<Edge, EdgeId> edge_index;
    for (FaceId f = 0; f < nf; ++f) {
        const Face& fv = t.faces_[f];
        for (int i = 0; i < 3; ++i) {
            t.vertex_faces_[fv[i]].push_back(f);
            const Edge e = Edge::make(fv[i], fv[(i + 1) % 3]);
            auto [it, fresh] = edge_index.try_emplace(e, static_cast<EdgeId>(t.edges_.size()));
            if (fresh) {
                t.edges_.push_back(e);
                t.edge_faces_.emplace_back();
                t.adj_[e.a].emplace_back(e.b, it->second);
                t.adj_[e.b].emplace_back(e.a, it->second);
            }
            t.face_edges_[f][i] = it->second;
            t.edge_faces_[it->second].push_back(f);
        }
    }
    for (auto& a : t.adj_) std::sort(a.begin(), a.end());

    t.face_nbrs_.assign(nf, {-1, -1, -1});
    for (FaceId f = 0; f < nf; ++f)
        for (int i = 0; i < 3; ++i) {
            const auto& inc = t.edge_faces_[t.face_edges_[f][i]];
            if (inc.size() == 2) t.face_nbrs_[f][i] = inc[0] == f ? inc[1] : inc[0];
        }

    t.sphere_ = validate_sphere(t).ok();
    if (t.sphere_) {
        compute_orientation(t);
    } else {
        t.oriented_.assign(t.faces_.begin(), t.faces_.end());
    }
    return t;
}

std::optional<EdgeId> Triangulation::edge_id(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair<VertexId, EdgeId>{v, -1});
    if (it != a.end() && it->first == v) return it->second;
    return std::nullopt;
}

std::vector<VertexId> Triangulation::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(adj_[v].size());
    for (const auto& [w, e] : adj_[v]) out.push_back(w);
    return out;
}

std::optional<FaceId> Triangulation::find_face(VertexId a, VertexId b, VertexId c) const {
    const auto e = edge_id(a, b);
    if (!e) return std::nullopt;
    for (FaceId f : edge_faces_[*e])
        if (face_contains(f, c) && c != a && c != b) return f;
    return std::nullopt;
}

bool Triangulation::face_contains(FaceId f, VertexId v) const {
    const Face& fv = faces_[f];
    return fv[0] == v || fv[1] == v || fv[2] == v;
}

VertexId Triangulation::opposite_vertex(FaceId f, Edge e) const {
    for (VertexId v : faces_[f])
        if (!e.has(v)) return v;
    throw std::logic_error("opposite_vertex: degenerate face");
}

void Triangulation::require_sphere() const {
    if (!sphere_) throw std::invalid_argument("triangulation is not a valid 2-sphere");
}

void Triangulation::check_cycle(const Cycle& c) const {
    for (VertexId v : c.vertices())
        if (v < 0 || v >= num_vertices())
            throw std::invalid_argument("cycle " + c.to_string() + " uses unknown vertex " + std::to_string(v));
    for (const Edge& e : c.edges())
        if (!adjacent(e.a, e.b))
            throw std::invalid_argument("cycle " + c.to_string() + " uses non-edge " + std::to_string(e.a) + "-" +
                                        std::to_string(e.b));
}

bool Triangulation::is_face_boundary(const Cycle& c) const {
    return c.size() == 3 && find_face(c[0], c[1], c[2]).has_value();
}

// ---------------------------------------------------------------------------

bool ValidationReport::has(Violation::Kind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

std::string to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::TooFewFaces: return "too-few-faces";
        case Violation::Kind::EdgeValence: return "edge-valence";
        case Violation::Kind::EulerCharacteristic: return "euler-characteristic";
        case Violation::Kind::VertexLink: return "vertex-link";
        case Violation::Kind::DualDisconnected: return "dual-disconnected";
        case Violation::Kind::NonOrientable: return "non-orientable";
    }
    return "unknown";
}

ValidationReport validate_sphere(const Triangulation& t) {
    ValidationReport report;
    auto fail = [&](Violation::Kind k, std::string msg) { report.violations.push_back({k, std::move(msg)}); };

    const int nv = t.num_vertices(), ne = t.num_edges(), nf = t.num_faces();
    if (nf < 4) fail(Violation::Kind::TooFewFaces, "F = " + std::to_string(nf) + " < 4");

    bool manifold_edges = true;
    for (EdgeId e = 0; e < ne; ++e) {
        const auto n = t.edge_faces(e).size();
        if (n != 2) {
            manifold_edges = false;
            fail(Violation::Kind::EdgeValence, "edge " + std::to_string(t.edge(e).a) + "-" +
                                                   std::to_string(t.edge(e).b) + " lies in " + std::to_string(n) +
                                                   " face(s)");
        }
    }

    const int chi = nv - ne + nf;
    if (chi != 2)
        fail(Violation::Kind::EulerCharacteristic, "V - E + F = " + std::to_string(nv) + " - " + std::to_string(ne) +
                                                       " + " + std::to_string(nf) + " = " + std::to_string(chi));

    // The link of v is the graph of edges opposite v in its faces; it must be one cycle.
    for (VertexId v = 0; v < nv; ++v) {
        std::map<VertexId, std::vector<VertexId>> link;
        for (FaceId f : t.vertex_faces(v)) {
            VertexId x = -1, y = -1;
            for (VertexId w : t.face(f))
                if (w != v) (x < 0 ? x : y) = w;
            link[x].push_back(y);
            link[y].push_back(x);
        }
        bool ok = !link.empty();
        for (const auto& [w, ns] : link)
            if (ns.size() != 2) ok = false;
        if (ok) {
            std::set<VertexId> reached{link.begin()->first};
            std::vector<VertexId> stack{link.begin()->first};
            while (!stack.empty()) {
                const VertexId w = stack.back();
                stack.pop_back();
                for (VertexId x : link[w])
                    if (reached.insert(x).second) stack.push_back(x);
            }
            ok = reached.size() == link.size();
        }
        if (!ok) fail(Violation::Kind::VertexLink, "link of vertex " + std::to_string(v) + " is not a single cycle");
    }

    if (nf > 0) {
        std::vector<char> seen(nf, 0);
        std::vector<FaceId> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            for (EdgeId e : t.face_edges(f))
                for (FaceId g : t.edge_faces(e))
                    if (!seen[g]) {
                        seen[g] = 1;
                        ++count;
                        stack.push_back(g);
                    }
        }
        if (count != nf)
            fail(Violation::Kind::DualDisconnected, "dual graph reaches " + std::to_string(count) + " of " +
                                                        std::to_string(nf) + " faces from face 0");
    }

    if (manifold_edges && report.ok()) {
        Triangulation copy = t;
        if (!compute_orientation(copy)) fail(Violation::Kind::NonOrientable, "no consistent face orientation");
    }
    return report;
}

Cycle vertex_link(const Triangulation& t, VertexId v) {
    t.require_sphere();
    if (v < 0 || v >= t.num_vertices()) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    std::map<VertexId, VertexId> next;
    for (FaceId f : t.vertex_faces(v)) {
        const auto& o = t.oriented(f);
        int i = 0;
        while (o[i] != v) ++i;
        next[o[(i + 1) % 3]] = o[(i + 2) % 3];
    }
    std::vector<VertexId> seq;
    VertexId w = next.begin()->first;
    do {
        seq.push_back(w);
        w = next.at(w);
    } while (w != seq.front());
    return Cycle(std::move(seq));
}

namespace {

std::vector<char> cycle_edge_mask(const Triangulation& t, const Cycle& c) {
    t.check_cycle(c);
    std::vector<char> cut(t.num_edges(), 0);
    for (const Edge& e : c.edges()) cut[*t.edge_id(e.a, e.b)] = 1;
    return cut;
}

}  // namespace

std::vector<int> side_labels(const Triangulation& t, const Cycle& c) {
    t.require_sphere();
    const auto cut = cycle_edge_mask(t, c);
    const int nf = t.num_faces();
    std::vector<int> label(nf, -1);
    int regions = 0;
    for (FaceId root = 0; root < nf; ++root) {
        if (label[root] >= 0) continue;
        if (regions == 2) throw std::invalid_argument("cycle " + c.to_string() + " does not separate into two sides");
        label[root] = regions;
        std::vector<FaceId> stack{root};
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                if (cut[t.face_edges(f)[i]]) continue;
                const FaceId g = t.face_neighbors(f)[i];
                if (label[g] < 0) {
                    label[g] = regions;
                    stack.push_back(g);
                }
            }
        }
        ++regions;
    }
    if (regions != 2) throw std::invalid_argument("cycle " + c.to_string() + " does not separate into two sides");
    return label;
}

std::pair<DiskRegion, DiskRegion> two_sides(const Triangulation& t, const Cycle& c) {
    const auto label = side_labels(t, c);
    DiskRegion first{{}, c}, second{{}, c};
    for (FaceId f = 0; f < t.num_faces(); ++f) (label[f] == 0 ? first : second).faces.push_back(f);
    return {std::move(first), std::move(second)};
}

std::vector<Cycle> enumerate_cycles(const Triangulation& t, int max_len) {
    std::vector<Cycle> out;
    const int nv = t.num_vertices();
    std::vector<char> on_path(nv, 0);
    std::vector<VertexId> path;

    // Cycles are rooted at their minimal vertex and emitted in the direction
    // whose second vertex is smaller, which is exactly the canonical form.
    auto dfs = [&](auto&& self, VertexId root, VertexId cur) -> void {
        for (VertexId w : t.neighbors(cur)) {
            if (w == root && path.size() >= 3 && path[1] < path.back()) out.emplace_back(path);
            if (w <= root || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (VertexId root = 0; root < nv; ++root) {
        on_path[root] = 1;
        path.assign(1, root);
        dfs(dfs, root, root);
        on_path[root] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Cycle> disk_boundary(const Triangulation& t, const std::vector<char>& members) {
    t.require_sphere();
    const int nf = t.num_faces();
    FaceId root = -1;
    int count = 0;
    for (FaceId f = 0; f < nf; ++f)
        if (members[f]) {
            if (root < 0) root = f;
            ++count;
        }
    if (root < 0 || count == nf) return std::nullopt;

    std::vector<char> seen(nf, 0);
    std::vector<FaceId> stack{root};
    seen[root] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const FaceId f = stack.back();
        stack.pop_back();
        for (FaceId g : t.face_neighbors(f))
            if (members[g] && !seen[g]) {
                seen[g] = 1;
                ++reached;
                stack.push_back(g);
            }
    }
    if (reached != count) return std::nullopt;

    std::map<VertexId, std::vector<VertexId>> nbr;
    for (EdgeId e = 0; e < t.num_edges(); ++e) {
        const auto inc = t.edge_faces(e);
        if ((members[inc[0]] != 0) == (members[inc[1]] != 0)) continue;
        nbr[t.edge(e).a].push_back(t.edge(e).b);
        nbr[t.edge(e).b].push_back(t.edge(e).a);
    }
    for (const auto& [v, ns] : nbr)
        if (ns.size() != 2) return std::nullopt;
    std::vector<VertexId> seq{nbr.begin()->first};
    VertexId prev = -1, cur = seq.front();
    for (;;) {
        const auto& ns = nbr.at(cur);
        const VertexId next = ns[0] != prev ? ns[0] : ns[1];
        if (next == seq.front()) break;
        seq.push_back(next);
        prev = cur;
        cur = next;
    }
    if (seq.size() != nbr.size()) return std::nullopt;
    return Cycle(std::move(seq));
}

std::vector<FaceId> dual_neighbors_within(const Triangulation& t, FaceId f, const std::vector<char>& members) {
    std::vector<FaceId> out;
    for (EdgeId e : t.face_edges(f))
        for (FaceId g : t.edge_faces(e))
            if (g != f && members[g]) out.push_back(g);
    return out;
}

}  // namespace thinsphere
