#pragma once

// Brute-force ground truth and a generator suite of triangulated spheres.
//
// The enumeration here does not share code with the incremental shelling
// search: every prefix is tested for being a disk from scratch
// (connectivity, vertex links, a single boundary cycle, Euler
// characteristic one).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thinsphere/complex.hpp"
#include "thinsphere/shelling.hpp"

namespace thinsphere::oracle {

struct FaceSetShape {
    bool disk = false;
    int boundary_vertices = 0;
};

/// Topological test of an arbitrary face subset (given as a per-face mask).
FaceSetShape inspect_face_set(const Triangulation& t, const std::vector<char>& members);

/// Calls visit for every good ordering, in lexicographic order of face
/// indices, until visit returns false. Throws BoundExceeded when F > bound.
void enumerate_good_orderings(const Triangulation& t, const std::function<bool(const Ordering&, const Profile&)>& visit,
                              int bound = 12);

std::uint64_t count_good_orderings(const Triangulation& t, int bound = 12);

/// Minimum width over every good ordering.
WidthList brute_force_width(const Triangulation& t, int bound = 12);

/// Every cycle of length <= max_len classified as a stable geodesic.
/// Minimum width by dynamic programming over disk-shaped face subsets.
/// Slower per state than the search but independent of it; practical up to
/// about twenty faces. Throws BoundExceeded when F > max_faces.
WidthList subset_dp_width(const Triangulation& t, int max_faces = 24);

std::vector<Cycle> brute_force_stable_geodesics(const Triangulation& t, int max_len);

// --- generators -------------------------------------------------------------

Triangulation tetrahedron();
Triangulation double_tetrahedron();
/// Apex 0 over the rim 1..k over apex k+1. Requires k >= 3.
Triangulation bipyramid(int k);
Triangulation octahedron();
Triangulation icosahedron();
/// Inserts a degree-3 vertex into a uniformly chosen face, `splits` times.
Triangulation stacked_sphere(std::uint64_t seed, int splits, const Triangulation& base = tetrahedron());
/// Attempts `flips` random edge flips; a flip is skipped when the new
/// diagonal already exists or an endpoint of the old edge has degree 3.
Triangulation flipped_sphere(std::uint64_t seed, int flips, const Triangulation& base = octahedron());

struct GeneratorSpec {
    enum class Kind { Tetrahedron, DoubleTetrahedron, Bipyramid, Octahedron, Icosahedron, StackedSphere, FlippedSphere };
    Kind kind = Kind::Tetrahedron;
    int k = 0;                // Bipyramid
    std::uint64_t seed = 0;   // Stacked/Flipped
    int count = 0;            // splits or flips
    std::string base = "";    // optional base generator name for Stacked/Flipped
};

/// Throws std::invalid_argument for out-of-range parameters.
Triangulation generate(const GeneratorSpec& spec);

/// Parses a generator name such as "tetrahedron", "bipyramid", "stacked".
std::optional<GeneratorSpec::Kind> generator_kind(const std::string& name);

struct CatalogEntry {
    std::string name;
    Triangulation triangulation;
};

/// Tetrahedron, bipyramids k = 3..8, octahedron, icosahedron and twenty
/// seeded stacked/flipped spheres with at most twelve faces.
std::vector<CatalogEntry> default_catalog();

}  // namespace thinsphere::oracle
