#pragma once

// Seeded generators shared by the property tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thinsphere/complex.hpp"
#include "thinsphere/shelling.hpp"

namespace thinsphere::testing {

using Rng = std::mt19937_64;

/// A random sphere with at most max_faces faces: stacked or flipped, from a
/// random small base.
Triangulation random_sphere(Rng& rng, int max_faces);

/// Builds a good ordering by adding a uniformly chosen admissible face at
/// every step.
Ordering random_good_ordering(const Triangulation& t, Rng& rng);

/// A random embedded cycle: the boundary of a random prefix of a random
/// good ordering, or a vertex link.
Cycle random_cycle(const Triangulation& t, Rng& rng);

/// The faces form a tree in the dual graph (adjacency through shared edges).
bool dual_is_tree(const Triangulation& t, const std::vector<FaceId>& faces);

std::string describe(const Triangulation& t);

}  // namespace thinsphere::testing
