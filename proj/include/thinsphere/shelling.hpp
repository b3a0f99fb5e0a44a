#pragma once

// Good orderings (shellings) of a triangulated sphere, their boundary-length
// profiles and widths, and exact search for thin position.
//
// Positions are 1-based prefix sizes: position k refers to the disk I_k made
// of the first k faces, and profile[k-1] = |boundary of I_k|.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinsphere/complex.hpp"

namespace thinsphere {

using Ordering = std::vector<FaceId>;
/// Boundary vertex counts of I_1 .. I_{n-1}.
using Profile = std::vector<int>;
/// Profile values at local maxima, sorted descending.
using WidthList = std::vector<int>;

class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(int faces, int bound)
        : std::runtime_error("exhaustive search needs F <= " + std::to_string(bound) + ", got F = " +
                             std::to_string(faces)) {}
};

/// Incrementally maintained prefix disk. Each added face either grows the
/// boundary by one (shares one edge, brings a new vertex), shrinks it by one
/// (shares two adjacent edges), or closes the sphere (last face).
class ShellingState {
public:
    enum class Step { Invalid, First, Grow, Shrink, Close };

    explicit ShellingState(const Triangulation& t);

    Step classify(FaceId f) const;
    /// Adds f; throws std::invalid_argument when classify(f) is Invalid.
    Step push(FaceId f);
    void pop();

    int size() const { return static_cast<int>(stack_.size()); }
    int boundary_length() const { return length_; }
    bool contains(FaceId f) const { return in_[f] != 0; }
    const std::vector<FaceId>& faces() const { return stack_; }
    /// The boundary of the current prefix (requires 0 < size() < F).
    Cycle boundary_cycle() const;
    /// Number of boundary edges of the prefix that f lies on.
    int boundary_edges_of(FaceId f) const;

private:
    const Triangulation* t_;
    std::vector<std::uint8_t> edge_count_;
    std::vector<int> vertex_count_;
    std::vector<char> in_;
    std::vector<FaceId> stack_;
    std::vector<Step> steps_;
    int length_ = 0;
};

struct GoodnessResult {
    bool good = true;
    int position = 0;  // prefix size at which the first violation occurs; 0 when good
    std::string reason;
    explicit operator bool() const { return good; }
};

GoodnessResult is_good_ordering(const Triangulation& t, const Ordering& o);

/// Throws std::invalid_argument when o is not good.
Profile profile(const Triangulation& t, const Ordering& o);

struct ExtremaReport {
    std::vector<int> maxima;  // positions
    std::vector<int> minima;
};

/// Only interior positions 2..n-2 are considered; endpoints never count.
ExtremaReport local_extrema(const Profile& p);

WidthList width_of_profile(const Profile& p);
WidthList width_of_ordering(const Triangulation& t, const Ordering& o);

/// Descending-lexicographic; a proper prefix compares less.
std::strong_ordering compare_width(const WidthList& a, const WidthList& b);

bool is_bridge(const Triangulation& t, const Ordering& o);

/// Boundary cycle of I_k for 1 <= k <= n-1.
Cycle prefix_boundary(const Triangulation& t, const Ordering& o, int k);

enum class Strategy { Exhaustive, BranchAndBound };

struct SearchOptions {
    int bound = 12;  // face limit for Exhaustive
};

struct ThinResult {
    Ordering ordering;
    WidthList width;
    Profile profile;
};

/// A good ordering of globally minimal width. Exhaustive returns the
/// lexicographically lowest optimal ordering and throws BoundExceeded when
/// F > options.bound; BranchAndBound has no face limit.
ThinResult thin_position(const Triangulation& t, Strategy strategy, const SearchOptions& options = {});

/// Every good ordering whose width equals the minimum, in lexicographic
/// order, stopping after `limit` results. Throws BoundExceeded.
std::vector<Ordering> all_thin_orderings(const Triangulation& t, const SearchOptions& options = {},
                                         std::size_t limit = 1000);

/// Direct search for an ordering with a single maximum and no minima.
std::optional<Ordering> find_bridge_ordering(const Triangulation& t);

/// Moves the face at position i to position m (1-based, i <= m), shifting
/// faces i+1..m down by one. Requires the face to give a shortening move on
/// the boundary of I_m (m < n), or i == m. The result is good and no wider.
Ordering reorder_delay(const Triangulation& t, const Ordering& o, int i, int m);

}  // namespace thinsphere
