#pragma once

// Local moves on embedded cycles and the resulting classification into
// stable geodesics, unstable geodesics, triangle boundaries, or neither.

#include <array>
#include <string>
#include <vector>

#include "thinsphere/complex.hpp"

namespace thinsphere {

enum class MoveKind { Shortening, Lengthening };

/// A shortening across `face` removes `apex` from the cycle, replacing the
/// two cycle edges through it by the face's third edge. A lengthening
/// inserts the off-cycle `apex` between the endpoints of one cycle edge.
struct LocalMove {
    MoveKind kind = MoveKind::Shortening;
    FaceId face = -1;
    int side = 0;  // label from two_sides / side_labels
    VertexId apex = -1;
    std::vector<Edge> removed;
    std::vector<Edge> inserted;

    bool operator==(const LocalMove&) const = default;
};

std::string to_string(MoveKind k);

/// All legal moves on c, each tagged with the side holding its face.
std::vector<LocalMove> local_moves(const Triangulation& t, const Cycle& c);

/// Throws std::invalid_argument when m is not a legal move on c.
Cycle apply_move(const Triangulation& t, const Cycle& c, const LocalMove& m);

/// The move on apply_move(t, c, m) that undoes m.
LocalMove inverse_move(const Triangulation& t, const Cycle& c, const LocalMove& m);

enum class CycleTag { TriangleBoundary, StableGeodesic, UnstableGeodesic, Neither };

std::string to_string(CycleTag tag);

/// For an unstable geodesic: one opposite-side pair of shortening faces and the cycle edge they share.
struct BlockingPair {
    FaceId first = -1;
    FaceId second = -1;
    Edge shared;
};

struct CycleClass {
    CycleTag tag = CycleTag::Neither;
    std::array<std::vector<LocalMove>, 2> shortenings;  // per side
    std::vector<BlockingPair> blocking;                 // filled for UnstableGeodesic
    /// When tag is Neither with shortenings on both sides: an opposite-side pair not sharing a cycle edge.
    std::vector<FaceId> unblocked_pair;
};

CycleClass classify_cycle(const Triangulation& t, const Cycle& c);

struct ShortenResult {
    Cycle cycle;
    CycleClass cls;
    int steps = 0;
};

/// Applies shortenings (lowest face index first, then lowest side) until none remain.
ShortenResult greedy_shorten(const Triangulation& t, const Cycle& c);

}  // namespace thinsphere
