#include "thinsphere/shelling.hpp"

#include <algorithm>
#include <map>

namespace thinsphere {

ShellingState::ShellingState(const Triangulation& t)
    : t_(&t), edge_count_(t.num_edges(), 0), vertex_count_(t.num_vertices(), 0), in_(t.num_faces(), 0) {
    stack_.reserve(t.num_faces());
    steps_.reserve(t.num_faces());
}

int ShellingState::boundary_edges_of(FaceId f) const {
    int b = 0;
    for (EdgeId e : t_->face_edges(f)) b += edge_count_[e] == 1;
    return b;
}

ShellingState::Step ShellingState::classify(FaceId f) const {
    if (in_[f]) return Step::Invalid;
    if (stack_.empty()) return Step::First;
    const auto& fe = t_->face_edges(f);
    int b = 0, shared = -1;
    for (int i = 0; i < 3; ++i)
        if (edge_count_[fe[i]] == 1) {
            ++b;
            shared = i;
        }
    if (size() == t_->num_faces() - 1) return b == 3 ? Step::Close : Step::Invalid;
    if (b == 2) return Step::Shrink;
    if (b == 1) {
        const VertexId apex = t_->face(f)[(shared + 2) % 3];
        return vertex_count_[apex] == 0 ? Step::Grow : Step::Invalid;
    }
    return Step::Invalid;
}

ShellingState::Step ShellingState::push(FaceId f) {
    const Step s = classify(f);
    if (s == Step::Invalid) throw std::invalid_argument("face " + std::to_string(f) + " cannot extend the prefix disk");
    in_[f] = 1;
    for (EdgeId e : t_->face_edges(f)) ++edge_count_[e];
    for (VertexId v : t_->face(f)) ++vertex_count_[v];
    stack_.push_back(f);
    steps_.push_back(s);
    switch (s) {
        case Step::First: length_ = 3; break;
        case Step::Grow: ++length_; break;
        case Step::Shrink: --length_; break;
        case Step::Close: length_ = 0; break;
        case Step::Invalid: break;
    }
    return s;
}

void ShellingState::pop() {
    const FaceId f = stack_.back();
    const Step s = steps_.back();
    stack_.pop_back();
    steps_.pop_back();
    in_[f] = 0;
    for (EdgeId e : t_->face_edges(f)) --edge_count_[e];
    for (VertexId v : t_->face(f)) --vertex_count_[v];
    switch (s) {
        case Step::First: length_ = 0; break;
        case Step::Grow: --length_; break;
        case Step::Shrink: ++length_; break;
        case Step::Close: length_ = 3; break;
        case Step::Invalid: break;
    }
}

Cycle ShellingState::boundary_cycle() const {
    std::map<VertexId, std::vector<VertexId>> nbr;
    for (EdgeId e = 0; e < t_->num_edges(); ++e) {
        if (edge_count_[e] != 1) continue;
        const Edge& ed = t_->edge(e);
        nbr[ed.a].push_back(ed.b);
        nbr[ed.b].push_back(ed.a);
    }
    if (nbr.empty()) throw std::logic_error("prefix has no boundary");
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
    return Cycle(std::move(seq));
}

// ---------------------------------------------------------------------------

GoodnessResult is_good_ordering(const Triangulation& t, const Ordering& o) {
    t.require_sphere();
    const int n = t.num_faces();
    if (static_cast<int>(o.size()) != n) return {false, 0, "ordering has " + std::to_string(o.size()) + " faces, expected " + std::to_string(n)};
    std::vector<char> seen(n, 0);
    for (FaceId f : o) {
        if (f < 0 || f >= n || seen[f]) return {false, 0, "not a permutation of the faces"};
        seen[f] = 1;
    }
    ShellingState st(t);
    for (int k = 0; k < n; ++k) {
        const FaceId f = o[k];
        if (st.classify(f) == ShellingState::Step::Invalid) {
            const int b = st.boundary_edges_of(f);
            std::string why = b == 0   ? "shares no edge with the prefix boundary"
                              : b == 1 ? "would pinch the prefix at its apex"
                              : b == 3 ? "closes the sphere before the last step"
                                       : "does not close the sphere";
            return {false, k + 1, "face " + std::to_string(f) + " " + why};
        }
        st.push(f);
    }
    return {};
}

Profile profile(const Triangulation& t, const Ordering& o) {
    if (auto g = is_good_ordering(t, o); !g) throw std::invalid_argument("ordering not good: " + g.reason);
    ShellingState st(t);
    Profile p;
    p.reserve(o.size());
    for (std::size_t k = 0; k + 1 < o.size(); ++k) {
        st.push(o[k]);
        p.push_back(st.boundary_length());
    }
    return p;
}

ExtremaReport local_extrema(const Profile& p) {
    ExtremaReport r;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
        if (p[j - 1] < p[j] && p[j] > p[j + 1]) r.maxima.push_back(static_cast<int>(j + 1));
        if (p[j - 1] > p[j] && p[j] < p[j + 1]) r.minima.push_back(static_cast<int>(j + 1));
    }
    return r;
}

WidthList width_of_profile(const Profile& p) {
    WidthList w;
    for (int j : local_extrema(p).maxima) w.push_back(p[j - 1]);
    std::sort(w.rbegin(), w.rend());
    return w;
}

WidthList width_of_ordering(const Triangulation& t, const Ordering& o) { return width_of_profile(profile(t, o)); }

std::strong_ordering compare_width(const WidthList& a, const WidthList& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool is_bridge(const Triangulation& t, const Ordering& o) {
    const auto r = local_extrema(profile(t, o));
    return r.maxima.size() == 1 && r.minima.empty();
}

Cycle prefix_boundary(const Triangulation& t, const Ordering& o, int k) {
    if (auto g = is_good_ordering(t, o); !g) throw std::invalid_argument("ordering not good: " + g.reason);
    if (k < 1 || k >= t.num_faces()) throw std::out_of_range("prefix size out of range");
    ShellingState st(t);
    for (int i = 0; i < k; ++i) st.push(o[i]);
    return st.boundary_cycle();
}

Ordering reorder_delay(const Triangulation& t, const Ordering& o, int i, int m) {
    if (auto g = is_good_ordering(t, o); !g) throw std::invalid_argument("ordering not good: " + g.reason);
    const int n = t.num_faces();
    if (i < 1 || m < i || m > n) throw std::out_of_range("delay positions out of range");
    if (i == m) return o;
    if (m == n) throw std::invalid_argument("the closed sphere has no boundary to shorten; choose m < n");

    ShellingState st(t);
    for (int k = 0; k < m; ++k) st.push(o[k]);
    const FaceId f = o[i - 1];
    if (st.boundary_edges_of(f) != 2)
        throw std::invalid_argument("face " + std::to_string(f) + " does not give a shortening move on the boundary of I_" +
                                    std::to_string(m));

    Ordering out = o;
    std::rotate(out.begin() + (i - 1), out.begin() + i, out.begin() + m);
    if (!is_good_ordering(t, out)) throw std::logic_error("delayed ordering is not good");
    return out;
}

}  // namespace thinsphere
