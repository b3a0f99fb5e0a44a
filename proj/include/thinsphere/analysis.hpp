#pragma once

// Procedures built on thin position: geodesics at profile extrema,
// Hamiltonian cycles versus bridge orderings, region shapes between
// adjacent minima, and constructions of three (stable) geodesics.
//
// Nothing constructed here is trusted: every returned cycle is re-checked
// with classify_cycle, and a mismatch raises VerificationFailure.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinsphere/complex.hpp"
#include "thinsphere/moves.hpp"
#include "thinsphere/shelling.hpp"

namespace thinsphere {

class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(const std::string& what, std::string witness)
        : std::runtime_error(what + ": " + witness), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

struct AnalysisOptions {
    Strategy strategy = Strategy::BranchAndBound;
    SearchOptions search;
};

enum class ProvenanceKind { ThinMinimum, ThinMaximum, VertexLink, HubCycle, NonFacialTriangle, TetrahedronEquator };

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::ThinMinimum;
    /// ThinMinimum/ThinMaximum: {position}; VertexLink: {v}; HubCycle: {w, v, r_i, r_j}.
    std::vector<int> data;

    std::string to_string() const;
};

std::string to_string(ProvenanceKind k);

struct GeodesicEntry {
    Cycle cycle;
    CycleTag tag = CycleTag::Neither;
    Provenance provenance;
};

struct GeodesicReport {
    std::vector<GeodesicEntry> stable;
    std::vector<GeodesicEntry> unstable;

    std::size_t distinct_count() const;
};

/// Boundary cycles at the maxima and minima of a (thin) ordering, classified.
/// Throws VerificationFailure if a maximum is not an unstable geodesic or a
/// minimum is not a stable geodesic.
GeodesicReport extract_geodesics(const Triangulation& t, const Ordering& thin);

struct WhitneyResult {
    bool holds = true;
    std::optional<Cycle> counterexample;  // a 3-cycle that is not a face
};

WhitneyResult every_3cycle_bounds(const Triangulation& t);

/// Backtracking from vertex 0, trying low-degree neighbours first.
std::optional<Cycle> hamiltonian_cycle(const Triangulation& t);

/// Builds one side's dual tree root-to-leaves, then the other side
/// leaves-to-root. Throws std::invalid_argument if h is not Hamiltonian.
Ordering bridge_from_hamiltonian(const Triangulation& t, const Cycle& h);

/// The boundary at the unique maximum of a bridge ordering.
Cycle hamiltonian_from_bridge(const Triangulation& t, const Ordering& bridge);

struct ThinBridgeResult {
    bool tetrahedron = false;
    ThinResult thin;
    std::optional<WidthList> bridge_width;  // absent when there is no Hamiltonian cycle
};

/// Throws VerificationFailure if a thin ordering is also bridge on anything but the tetrahedron.
ThinBridgeResult check_thin_equals_bridge(const Triangulation& t, const AnalysisOptions& options = {});

enum class RegionTag { Wheel, Fan, PlanarLollipop, Other };

std::string to_string(RegionTag tag);

struct RegionClass {
    RegionTag tag = RegionTag::Other;
    VertexId vertex = -1;  // hub of a wheel, distinguished vertex of a fan
    std::string witness;   // dual graph shape
};

/// Throws std::invalid_argument when the faces do not form a disk.
RegionClass classify_region(const Triangulation& t, const std::vector<FaceId>& faces);
RegionClass classify_region(const Triangulation& t, const DiskRegion& r);

struct RegionCheck {
    enum class Kind { BetweenMinima, EmptyGeodesicStart, EmptyGeodesicEnd };
    Kind kind = Kind::BetweenMinima;
    int first = 0;   // minimum position(s) bounding the region
    int second = 0;  // 0 when unused
    std::vector<FaceId> faces;
    bool disk = true;
    RegionClass cls;
    bool expected = true;  // whether a theorem predicts the shape here
    bool ok = true;
};

std::string to_string(RegionCheck::Kind k);

struct RegionStructureReport {
    bool whitney = true;
    std::vector<RegionCheck> regions;
    std::vector<std::string> warnings;

    bool ok() const;
};

/// Shapes of the regions cut out by adjacent minima of a thin ordering, and
/// of the end disks next to the empty geodesic.
RegionStructureReport verify_region_structure(const Triangulation& t, const Ordering& thin);

/// At least three distinct geodesics (stable or unstable).
GeodesicReport three_geodesics(const Triangulation& t, const AnalysisOptions& options = {});

enum class ExceptionKind { Tetrahedron, DoubleTetrahedron };

std::string to_string(ExceptionKind k);

struct StableGeodesicsResult {
    std::optional<ExceptionKind> exception;
    std::vector<GeodesicEntry> stable;
    std::optional<ThinResult> thin;
};

/// Either one of the two exceptional triangulations or at least three
/// distinct, verified stable geodesics.
StableGeodesicsResult three_stable_geodesics(const Triangulation& t, const AnalysisOptions& options = {});

/// Thin ordering under the given options (exhaustive only when within the bound).
ThinResult thin_for_analysis(const Triangulation& t, const AnalysisOptions& options);

}  // namespace thinsphere
