#include "support.hpp"

#include <numeric>
#include <stdexcept>

#include "thinsphere/oracle.hpp"
#include "thinsphere/tri_io.hpp"

namespace thinsphere::testing {

Triangulation random_sphere(Rng& rng, int max_faces) {
    const Triangulation bases[] = {oracle::tetrahedron(), oracle::octahedron(), oracle::bipyramid(3),
                                   oracle::bipyramid(5)};
    for (;;) {
        const Triangulation& base = bases[rng() % std::size(bases)];
        const int room = (max_faces - base.num_faces()) / 2;
        if (room < 0) continue;
        const std::uint64_t seed = rng();
        if (rng() % 2 == 0) return oracle::stacked_sphere(seed, static_cast<int>(rng() % (room + 1)), base);
        // Flips keep F fixed; optionally stack first to vary the size.
        const Triangulation grown = oracle::stacked_sphere(seed, static_cast<int>(rng() % (room + 1)), base);
        const bool flippable = grown.num_vertices() > 4;
        return flippable ? oracle::flipped_sphere(rng(), 1 + static_cast<int>(rng() % 40), grown) : grown;
    }
}

Ordering random_good_ordering(const Triangulation& t, Rng& rng) {
    ShellingState st(t);
    std::vector<FaceId> options;
    while (st.size() < t.num_faces()) {
        options.clear();
        for (FaceId f = 0; f < t.num_faces(); ++f)
            if (!st.contains(f) && st.classify(f) != ShellingState::Step::Invalid) options.push_back(f);
        if (options.empty()) throw std::logic_error("random shelling got stuck on " + describe(t));
        st.push(options[rng() % options.size()]);
    }
    return st.faces();
}

Cycle random_cycle(const Triangulation& t, Rng& rng) {
    if (rng() % 4 == 0) return vertex_link(t, static_cast<VertexId>(rng() % t.num_vertices()));
    const Ordering o = random_good_ordering(t, rng);
    const int k = 1 + static_cast<int>(rng() % (t.num_faces() - 1));
    return prefix_boundary(t, o, k);
}

bool dual_is_tree(const Triangulation& t, const std::vector<FaceId>& faces) {
    std::vector<char> members(t.num_faces(), 0);
    for (FaceId f : faces) members[f] = 1;
    std::size_t arcs = 0;
    for (FaceId f : faces) arcs += dual_neighbors_within(t, f, members).size();
    arcs /= 2;
    if (arcs + 1 != faces.size()) return false;

    std::vector<char> seen(t.num_faces(), 0);
    std::vector<FaceId> stack{faces.front()};
    seen[faces.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const FaceId f = stack.back();
        stack.pop_back();
        for (FaceId g : dual_neighbors_within(t, f, members))
            if (!seen[g]) {
                seen[g] = 1;
                ++reached;
                stack.push_back(g);
            }
    }
    return reached == faces.size();
}

std::string describe(const Triangulation& t) {
    std::string s = "V=" + std::to_string(t.num_vertices()) + " F=" + std::to_string(t.num_faces()) + " {";
    for (const Face& f : t.faces())
        s += " " + std::to_string(f[0]) + "-" + std::to_string(f[1]) + "-" + std::to_string(f[2]);
    return s + " }";
}

}  // namespace thinsphere::testing
