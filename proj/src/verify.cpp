#include "thinsphere/verify.hpp"

#include <functional>
#include <sstream>

namespace thinsphere {

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names{
        "extrema-classification", "hamiltonian-bridge", "whitney-hamiltonian", "thin-bridge-tetrahedron",
        "region-structure",       "three-geodesics",    "three-stable-geodesics",
    };
    return names;
}

namespace {

std::string list(const std::vector<int>& xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
    return os.str();
}

// Runs one check; exceptions become failed rows carrying their message.
VerificationRecord run(const std::string& theorem, const std::string& instance,
                       const std::function<std::pair<bool, std::string>()>& body) {
    VerificationRecord r{theorem, instance, false, {}};
    try {
        std::tie(r.verified, r.witness) = body();
    } catch (const VerificationFailure& e) {
        r.witness = e.what();
    } catch (const std::exception& e) {
        r.witness = std::string("error: ") + e.what();
    }
    return r;
}

}  // namespace

std::vector<VerificationRecord> verify_instance(const std::string& name, const Triangulation& t,
                                                const VerifyOptions& options) {
    std::vector<VerificationRecord> rows;
    const auto& names = theorem_names();
    if (!t.is_sphere()) {
        for (const auto& th : names) rows.push_back({th, name, false, "not a valid 2-sphere"});
        return rows;
    }

    AnalysisOptions aopts;
    aopts.search.bound = options.bound;
    aopts.strategy = t.num_faces() <= options.bound ? Strategy::Exhaustive : Strategy::BranchAndBound;

    ThinResult thin;
    std::vector<Ordering> thin_orderings;
    try {
        thin = thin_for_analysis(t, aopts);
        if (options.all_thin && aopts.strategy == Strategy::Exhaustive)
            thin_orderings = all_thin_orderings(t, aopts.search, options.all_thin_limit);
        else
            thin_orderings = {thin.ordering};
    } catch (const std::exception& e) {
        for (const auto& th : names) rows.push_back({th, name, false, std::string("thin search failed: ") + e.what()});
        return rows;
    }
    const std::string search_note = aopts.strategy == Strategy::Exhaustive ? "exhaustive" : "branch-and-bound";

    rows.push_back(run(names[0], name, [&] {
        std::size_t maxima = 0, minima = 0;
        for (const Ordering& o : thin_orderings) {
            const GeodesicReport g = extract_geodesics(t, o);
            maxima += g.unstable.size();
            minima += g.stable.size();
        }
        std::ostringstream w;
        w << thin_orderings.size() << " " << search_note << " thin ordering(s) of width " << list(thin.width) << "; "
          << maxima << " maxima unstable, " << minima << " minima stable";
        return std::pair{true, w.str()};
    }));

    const std::optional<Cycle> ham = [&]() -> std::optional<Cycle> {
        try {
            return hamiltonian_cycle(t);
        } catch (...) {
            return std::nullopt;
        }
    }();

    rows.push_back(run(names[1], name, [&] {
        const std::optional<Ordering> direct = find_bridge_ordering(t);
        std::ostringstream w;
        if (ham.has_value() != direct.has_value()) {
            w << "Hamiltonian cycle " << (ham ? "found" : "absent") << " but bridge ordering "
              << (direct ? "found" : "absent");
            return std::pair{false, w.str()};
        }
        if (!ham) return std::pair{true, std::string("no Hamiltonian cycle and no bridge ordering")};
        const Ordering b = bridge_from_hamiltonian(t, *ham);
        const Cycle back = hamiltonian_from_bridge(t, b);
        if (back != *ham) {
            w << "round trip of " << ham->to_string() << " returned " << back.to_string();
            return std::pair{false, w.str()};
        }
        const Cycle from_direct = hamiltonian_from_bridge(t, *direct);
        const Ordering again = bridge_from_hamiltonian(t, from_direct);
        if (hamiltonian_from_bridge(t, again) != from_direct) {
            w << "round trip of searched bridge cycle " << from_direct.to_string() << " failed";
            return std::pair{false, w.str()};
        }
        w << "Hamiltonian " << ham->to_string() << " <-> bridge width " << list(width_of_ordering(t, b))
          << "; searched bridge gives " << from_direct.to_string();
        return std::pair{true, w.str()};
    }));

    rows.push_back(run(names[2], name, [&] {
        const WhitneyResult wr = every_3cycle_bounds(t);
        if (!wr.holds)
            return std::pair{true, "vacuous: non-facial 3-cycle " + wr.counterexample->to_string()};
        if (!ham) return std::pair{false, std::string("every 3-cycle bounds a face but no Hamiltonian cycle found")};
        return std::pair{true, "every 3-cycle bounds a face; Hamiltonian " + ham->to_string()};
    }));

    rows.push_back(run(names[3], name, [&] {
        const ThinBridgeResult r = check_thin_equals_bridge(t, aopts);
        if (r.tetrahedron) return std::pair{true, "tetrahedron: thin width " + list(r.thin.width) + " is bridge"};
        return std::pair{true, "thin " + list(r.thin.width) + " differs from bridge " +
                                   (r.bridge_width ? list(*r.bridge_width) : std::string("(none)"))};
    }));

    rows.push_back(run(names[4], name, [&] {
        std::ostringstream w;
        bool ok = true, whitney = true;
        std::size_t regions = 0;
        for (const Ordering& o : thin_orderings) {
            const RegionStructureReport rep = verify_region_structure(t, o);
            whitney = rep.whitney;
            regions += rep.regions.size();
            for (const RegionCheck& rc : rep.regions) {
                if (rc.ok) continue;
                if (ok) w << "unexpected shape: ";
                ok = false;
                w << to_string(rc.kind) << " " << rc.first << (rc.second ? "-" + std::to_string(rc.second) : "")
                  << " is " << to_string(rc.cls.tag) << " (" << rc.cls.witness << "); ";
            }
        }
        if (ok) {
            w << regions << " region(s) over " << thin_orderings.size() << " ordering(s) match";
            if (!whitney) w << "; between-minima shapes not predicted (non-facial 3-cycle)";
        }
        return std::pair{ok, w.str()};
    }));

    rows.push_back(run(names[5], name, [&] {
        const GeodesicReport g = three_geodesics(t, aopts);
        std::ostringstream w;
        w << g.distinct_count() << " distinct: " << g.stable.size() << " stable, " << g.unstable.size() << " unstable";
        return std::pair{true, w.str()};
    }));

    rows.push_back(run(names[6], name, [&] {
        const StableGeodesicsResult r = three_stable_geodesics(t, aopts);
        if (r.exception) return std::pair{true, "exception: " + to_string(*r.exception)};
        std::ostringstream w;
        w << r.stable.size() << " stable:";
        for (const auto& e : r.stable) w << ' ' << e.cycle.to_string() << '[' << e.provenance.to_string() << ']';
        return std::pair{true, w.str()};
    }));
    return rows;
}

}  // namespace thinsphere
