#pragma once

// Triangulated 2-spheres as simplicial complexes: indexing, validation,
// embedded cycles, vertex links and the two sides of a cycle.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace thinsphere {

using VertexId = int;
using FaceId = int;
using EdgeId = int;

/// Unordered vertex pair, stored with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    static Edge make(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }
    bool has(VertexId v) const { return a == v || b == v; }
    auto operator<=>(const Edge&) const = default;
};

/// Vertex triple of a face, sorted ascending.
using Face = std::array<VertexId, 3>;

/// Canonical form of a cyclic vertex sequence: the minimal vertex first,
/// then whichever direction has the smaller second element.
std::vector<VertexId> canonical_cycle(std::span<const VertexId> seq);

/// An embedded cycle in the 1-skeleton, kept in canonical form so that
/// equal cycles compare equal regardless of starting point or direction.
class Cycle {
public:
    Cycle() = default;
    /// Throws std::invalid_argument for fewer than three vertices or a repeated vertex.
    explicit Cycle(std::vector<VertexId> vertices);

    const std::vector<VertexId>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    VertexId operator[](std::size_t i) const { return v_[i]; }

    /// Edges in cyclic order: (v0,v1), (v1,v2), ..., (vk,v0).
    std::vector<Edge> edges() const;
    bool contains(VertexId v) const;
    bool contains_edge(Edge e) const;
    std::string to_string() const;

    auto operator<=>(const Cycle&) const = default;

private:
    std::vector<VertexId> v_;
};

class Triangulation {
public:
    Triangulation() = default;

    /// Builds the complex from raw face triples. Vertex ids are remapped to
    /// 0..V-1 in order of first appearance; face order is preserved. Throws
    /// std::invalid_argument on a repeated vertex inside a face or a
    /// duplicated face. Sphere validity is not required here (see
    /// validate_sphere); it is cached and queried through is_sphere().
    static Triangulation from_faces(std::span<const std::array<std::int64_t, 3>> faces);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    /// Original id (as given to from_faces) of each vertex.
    const std::vector<std::int64_t>& labels() const { return labels_; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    /// Neighbours of v in ascending order.
    std::vector<VertexId> neighbors(VertexId v) const;

    std::span<const FaceId> edge_faces(EdgeId e) const { return edge_faces_[e]; }
    std::span<const FaceId> vertex_faces(VertexId v) const { return vertex_faces_[v]; }

    /// Edge i of a face joins face[i] and face[(i+1)%3]; the vertex
    /// opposite it is face[(i+2)%3].
    const std::array<EdgeId, 3>& face_edges(FaceId f) const { return face_edges_[f]; }
    /// Face across each of face_edges(f), or -1 where the edge is not shared by exactly two faces.
    const std::array<FaceId, 3>& face_neighbors(FaceId f) const { return face_nbrs_[f]; }

    std::optional<FaceId> find_face(VertexId a, VertexId b, VertexId c) const;
    VertexId opposite_vertex(FaceId f, Edge e) const;
    bool face_contains(FaceId f, VertexId v) const;

    /// Consistently oriented vertex triple (only meaningful when is_sphere()).
    const std::array<VertexId, 3>& oriented(FaceId f) const { return oriented_[f]; }

    bool is_sphere() const { return sphere_; }
    /// Throws std::invalid_argument unless is_sphere().
    void require_sphere() const;

    /// Throws std::invalid_argument if some consecutive pair of c is not an edge or a vertex is out of range.
    void check_cycle(const Cycle& c) const;
    /// True when c is the boundary of a face.
    bool is_face_boundary(const Cycle& c) const;

    friend bool operator==(const Triangulation& x, const Triangulation& y) { return x.faces_ == y.faces_; }

private:
    std::vector<Face> faces_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
    std::vector<std::vector<FaceId>> edge_faces_;
    std::vector<std::int64_t> labels_;
    std::vector<std::vector<FaceId>> vertex_faces_;
    std::vector<std::array<EdgeId, 3>> face_edges_;
    std::vector<std::array<FaceId, 3>> face_nbrs_;
    std::vector<std::array<VertexId, 3>> oriented_;
    bool sphere_ = false;

    friend bool compute_orientation(Triangulation& t);
};

struct Violation {
    enum class Kind { TooFewFaces, EdgeValence, EulerCharacteristic, VertexLink, DualDisconnected, NonOrientable };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(Violation::Kind k) const;
};

std::string to_string(Violation::Kind k);

/// Checks every sphere invariant and names each failure with a witness.
ValidationReport validate_sphere(const Triangulation& t);

/// Neighbours of v in rotational order around v.
Cycle vertex_link(const Triangulation& t, VertexId v);

/// One side of a cycle: a set of faces (ascending) bounded by the cycle.
struct DiskRegion {
    std::vector<FaceId> faces;
    Cycle boundary;
};

/// Cuts the dual graph along the edges of c. The region holding the lowest
/// face index comes first.
std::pair<DiskRegion, DiskRegion> two_sides(const Triangulation& t, const Cycle& c);

/// Side label (0 or 1, matching two_sides) for every face.
std::vector<int> side_labels(const Triangulation& t, const Cycle& c);

/// Every embedded cycle of length at most max_len, canonical and sorted.
std::vector<Cycle> enumerate_cycles(const Triangulation& t, int max_len);

/// Boundary of a face subset of a sphere when the subset is a disk: its
/// faces are dual-connected and the edges with one incident member face form
/// a single simple cycle.
std::optional<Cycle> disk_boundary(const Triangulation& t, const std::vector<char>& members);

/// Faces adjacent to f through edges shared inside `members` (a per-face mask).
std::vector<FaceId> dual_neighbors_within(const Triangulation& t, FaceId f, const std::vector<char>& members);

}  // namespace thinsphere
