#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "thinsphere/analysis.hpp"
#include "thinsphere/oracle.hpp"
#include "thinsphere/report.hpp"
#include "thinsphere/tri_io.hpp"
#include "thinsphere/verify.hpp"

namespace thinsphere::cli {

namespace {

using report::Json;

struct RunConfig {
    std::string format = "text";
    std::string strategy = "branch-and-bound";
    int bound = 12;
    std::uint64_t seed = 0;
    std::string dot_path;
    bool verbose = false;

    bool structured() const { return format == "structured"; }
    Strategy search_strategy() const {
        return strategy == "exhaustive" ? Strategy::Exhaustive : Strategy::BranchAndBound;
    }
    AnalysisOptions analysis() const {
        AnalysisOptions a;
        a.strategy = search_strategy();
        a.search.bound = bound;
        return a;
    }
};

// Thrown for usage and I/O problems; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string list(const std::vector<int>& xs, char open = '[', char close = ']') {
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << close;
    return os.str();
}

Triangulation load(const std::string& path) {
    try {
        return read_tri_file(path);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

bool relabelled(const Triangulation& t) {
    const auto& l = t.labels();
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] != static_cast<std::int64_t>(i)) return true;
    return false;
}

class Session {
public:
    Session(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    // Loads a file and insists on a valid sphere; prints the violations otherwise.
    std::optional<Triangulation> sphere(const std::string& path, const std::string& command) {
        Triangulation t = load(path);
        if (t.is_sphere()) {
            if (relabelled(t) && !cfg_.structured())
                out_ << "note: vertices renumbered 0.." << t.num_vertices() - 1 << " in order of first appearance\n";
            return t;
        }
        const ValidationReport r = validate_sphere(t);
        if (cfg_.structured()) {
            emit(command, {{"input", path}, {"validation", report::to_json(r)}});
        } else {
            out_ << path << ": not a valid 2-sphere\n";
            for (const auto& v : r.violations) out_ << "  " << to_string(v.kind) << ": " << v.message << '\n';
        }
        return std::nullopt;
    }

    void emit(const std::string& command, Json result) { out_ << report::document(command, std::move(result)).dump(2) << '\n'; }

    void annotate(Json& j, const Triangulation& t) const {
        if (relabelled(t)) j["vertex_labels"] = t.labels();
    }

    void dot(const Triangulation& t, const std::vector<Cycle>& cycles) {
        if (cfg_.dot_path.empty()) return;
        std::ofstream f(cfg_.dot_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + cfg_.dot_path);
        f << report::dual_dot(t, cycles);
        if (!f) throw UsageError("cannot write " + cfg_.dot_path);
    }

    int validate(const std::string& path) {
        const Triangulation t = load(path);
        const ValidationReport r = validate_sphere(t);
        if (cfg_.structured()) {
            Json j{{"input", path},
                   {"vertices", t.num_vertices()},
                   {"edges", t.num_edges()},
                   {"faces", t.num_faces()},
                   {"validation", report::to_json(r)}};
            emit("validate", std::move(j));
        } else if (r.ok()) {
            out_ << path << ": valid 2-sphere, V=" << t.num_vertices() << " E=" << t.num_edges()
                 << " F=" << t.num_faces() << '\n';
        } else {
            out_ << path << ": not a valid 2-sphere\n";
            for (const auto& v : r.violations) out_ << "  " << to_string(v.kind) << ": " << v.message << '\n';
        }
        return r.ok() ? Ok : Failed;
    }

    int thin(const std::string& path) {
        const auto t = sphere(path, "thin");
        if (!t) return Failed;
        const ThinResult r = thin_position(*t, cfg_.search_strategy(), SearchOptions{cfg_.bound});
        const ExtremaReport ex = local_extrema(r.profile);
        std::vector<Cycle> cycles;
        for (int k : ex.maxima) cycles.push_back(prefix_boundary(*t, r.ordering, k));
        for (int k : ex.minima) cycles.push_back(prefix_boundary(*t, r.ordering, k));
        if (cfg_.structured()) {
            Json j = report::to_json(r);
            j["input"] = path;
            j["strategy"] = cfg_.strategy;
            annotate(j, *t);
            emit("thin", std::move(j));
        } else {
            out_ << "width    " << list(r.width) << '\n'
                 << "ordering " << list(r.ordering) << '\n'
                 << "profile  " << list(r.profile, '(', ')') << '\n'
                 << "maxima   " << list(ex.maxima) << '\n'
                 << "minima   " << list(ex.minima) << '\n';
            if (cfg_.verbose)
                for (std::size_t i = 0; i < cycles.size(); ++i)
                    out_ << (i < ex.maxima.size() ? "  max " : "  min ") << cycles[i].to_string() << '\n';
        }
        dot(*t, cycles);
        return Ok;
    }

    int bridge(const std::string& path) {
        const auto t = sphere(path, "bridge");
        if (!t) return Failed;
        const std::optional<Ordering> b = find_bridge_ordering(*t);
        std::optional<Cycle> h;
        Profile p;
        if (b) {
            h = hamiltonian_from_bridge(*t, *b);
            p = profile(*t, *b);
        }
        if (cfg_.structured()) {
            Json j{{"input", path}, {"found", b.has_value()}};
            if (b) {
                j["ordering"] = *b;
                j["profile"] = p;
                j["width"] = width_of_profile(p);
                j["hamiltonian_cycle"] = report::to_json(*h);
            }
            annotate(j, *t);
            emit("bridge", std::move(j));
        } else if (b) {
            out_ << "bridge ordering " << list(*b) << '\n'
                 << "profile         " << list(p, '(', ')') << '\n'
                 << "width           " << list(width_of_profile(p)) << '\n'
                 << "hamiltonian     " << h->to_string() << '\n';
        } else {
            out_ << "no bridge ordering (no Hamiltonian cycle)\n";
        }
        if (h) dot(*t, {*h});
        return Ok;
    }

    int geodesics(const std::string& path) {
        const auto t = sphere(path, "geodesics");
        if (!t) return Failed;
        const AnalysisOptions opts = cfg_.analysis();
        Json j{{"input", path}};
        std::vector<Cycle> cycles;
        int status = Ok;
        std::ostringstream text;

        try {
            const GeodesicReport g = three_geodesics(*t, opts);
            j["geodesics"] = report::to_json(g);
            text << g.distinct_count() << " distinct geodesics\n";
            for (const auto& e : g.unstable) {
                text << "  unstable " << e.cycle.to_string() << "  [" << e.provenance.to_string() << "]\n";
                cycles.push_back(e.cycle);
            }
            for (const auto& e : g.stable) {
                text << "  stable   " << e.cycle.to_string() << "  [" << e.provenance.to_string() << "]\n";
                cycles.push_back(e.cycle);
            }
        } catch (const VerificationFailure& e) {
            j["geodesics"] = {{"error", e.what()}};
            text << "geodesics: verification failed: " << e.what() << '\n';
            status = Failed;
        }

        try {
            const StableGeodesicsResult s = three_stable_geodesics(*t, opts);
            j["stable_geodesics"] = report::to_json(s);
            if (s.exception) {
                text << "stable geodesics: exceptional triangulation (" << to_string(*s.exception) << ")\n";
            } else {
                text << s.stable.size() << " stable geodesics\n";
                for (const auto& e : s.stable)
                    text << "  stable   " << e.cycle.to_string() << "  [" << e.provenance.to_string() << "]\n";
            }
            for (const auto& e : s.stable)
                if (std::find(cycles.begin(), cycles.end(), e.cycle) == cycles.end()) cycles.push_back(e.cycle);
        } catch (const VerificationFailure& e) {
            j["stable_geodesics"] = {{"error", e.what()}};
            text << "stable geodesics: verification failed: " << e.what() << '\n';
            status = Failed;
        }

        if (cfg_.structured()) {
            annotate(j, *t);
            emit("geodesics", std::move(j));
        } else {
            out_ << text.str();
        }
        dot(*t, cycles);
        return status;
    }

    int classify(const std::string& path, const std::string& spec) {
        const auto t = sphere(path, "classify");
        if (!t) return Failed;
        std::map<std::int64_t, VertexId> id;
        for (VertexId v = 0; v < t->num_vertices(); ++v) id[t->labels()[v]] = v;

        std::vector<VertexId> seq;
        std::stringstream ss(spec);
        for (std::string item; std::getline(ss, item, ',');) {
            std::int64_t label = 0;
            try {
                std::size_t used = 0;
                label = std::stoll(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw UsageError("--cycle: not an integer: '" + item + "'");
            }
            const auto it = id.find(label);
            if (it == id.end()) throw UsageError("--cycle: unknown vertex " + std::to_string(label));
            seq.push_back(it->second);
        }
        std::optional<Cycle> c;
        try {
            c = Cycle(seq);
            t->check_cycle(*c);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--cycle: ") + e.what());
        }

        const CycleClass cls = classify_cycle(*t, *c);
        if (cfg_.structured()) {
            Json j{{"input", path}, {"cycle", report::to_json(*c)}, {"classification", report::to_json(cls)}};
            annotate(j, *t);
            emit("classify", std::move(j));
        } else {
            out_ << c->to_string() << ": " << to_string(cls.tag) << '\n';
            for (int side = 0; side < 2; ++side) {
                out_ << "  side " << side << " shortenings:";
                for (const auto& m : cls.shortenings[side]) out_ << " face " << m.face << " (apex " << m.apex << ')';
                out_ << '\n';
            }
            for (const auto& b : cls.blocking)
                out_ << "  blocked: faces " << b.first << ',' << b.second << " share " << b.shared.a << '-'
                     << b.shared.b << '\n';
        }
        dot(*t, {*c});
        return Ok;
    }

    int verify(const std::vector<std::string>& paths, bool catalog, const VerifyOptions& vopts) {
        if (paths.empty() && !catalog) throw UsageError("verify: give input files or --catalog");
        std::vector<std::pair<std::string, Triangulation>> inputs;
        if (catalog)
            for (auto& e : oracle::default_catalog()) inputs.emplace_back(e.name, std::move(e.triangulation));
        for (const auto& p : paths) inputs.emplace_back(p, load(p));

        std::vector<VerificationRecord> rows;
        for (const auto& [name, t] : inputs) {
            auto r = verify_instance(name, t, vopts);
            rows.insert(rows.end(), r.begin(), r.end());
        }
        const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.verified; });

        if (cfg_.structured()) {
            Json a = Json::array();
            for (const auto& r : rows) a.push_back(report::to_json(r));
            emit("verify", {{"rows", a}, {"instances", inputs.size()}, {"failed", failed}, {"all_verified", failed == 0}});
        } else {
            for (const auto& r : rows) {
                out_ << (r.verified ? "verified " : "FAILED   ") << r.instance << "  " << r.theorem;
                if (cfg_.verbose || !r.verified) out_ << "  -- " << r.witness;
                out_ << '\n';
            }
            out_ << rows.size() - failed << '/' << rows.size() << " verified over " << inputs.size()
                 << " instance(s)\n";
        }
        return failed == 0 ? Ok : Failed;
    }

    int gen(const std::string& name, std::optional<int> k, int splits, int flips, const std::string& base,
            const std::string& out_path) {
        const auto kind = oracle::generator_kind(name);
        if (!kind) throw UsageError("gen: unknown generator '" + name + "'");
        oracle::GeneratorSpec spec;
        spec.kind = *kind;
        spec.seed = cfg_.seed;
        spec.base = base;
        if (*kind == oracle::GeneratorSpec::Kind::Bipyramid) {
            if (!k) throw UsageError("gen bipyramid: missing k");
            spec.k = *k;
        } else if (*kind == oracle::GeneratorSpec::Kind::StackedSphere) {
            spec.count = k.value_or(splits);
        } else if (*kind == oracle::GeneratorSpec::Kind::FlippedSphere) {
            spec.count = k.value_or(flips);
        }
        Triangulation t;
        try {
            t = oracle::generate(spec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("gen: ") + e.what());
        }
        if (out_path.empty()) {
            out_ << serialize_triangulation(t);
        } else {
            try {
                write_tri_file(out_path, t);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            if (cfg_.structured())
                emit("gen", {{"output", out_path},
                             {"vertices", t.num_vertices()},
                             {"edges", t.num_edges()},
                             {"faces", t.num_faces()}});
            else
                out_ << "wrote " << out_path << ": V=" << t.num_vertices() << " E=" << t.num_edges()
                     << " F=" << t.num_faces() << '\n';
        }
        return Ok;
    }

    int oracle_check(const std::string& path) {
        const auto t = sphere(path, "oracle");
        if (!t) return Failed;
        const WidthList brute = oracle::brute_force_width(*t, cfg_.bound);
        const std::uint64_t count = oracle::count_good_orderings(*t, cfg_.bound);
        const ThinResult r = thin_position(*t, cfg_.search_strategy(), SearchOptions{cfg_.bound});
        const bool agree = r.width == brute;
        if (cfg_.structured()) {
            Json j{{"input", path},
                   {"strategy", cfg_.strategy},
                   {"thin_width", r.width},
                   {"brute_force_width", brute},
                   {"good_orderings", count},
                   {"agree", agree}};
            annotate(j, *t);
            emit("oracle", std::move(j));
        } else {
            out_ << "thin (" << cfg_.strategy << ") " << list(r.width) << '\n'
                 << "brute force           " << list(brute) << '\n'
                 << "good orderings        " << count << '\n'
                 << (agree ? "agree\n" : "DISAGREE\n");
        }
        return agree ? Ok : Failed;
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thin position, width and geodesics of triangulated 2-spheres", "thinsphere"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--strategy", cfg.strategy, "Thin-position search")
        ->check(CLI::IsMember({"exhaustive", "branch-and-bound"}));
    app.add_option("--bound", cfg.bound, "Face limit for exhaustive enumeration")->check(CLI::Range(4, 63));
    app.add_option("--seed", cfg.seed, "Seed for random generators");
    app.add_option("--dot", cfg.dot_path, "Write the dual graph with highlighted cycles to this file");
    app.add_flag("-v,--verbose", cfg.verbose, "More detail in text output");

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check that a .tri file is a simplicial 2-sphere");
    validate->add_option("path", path)->required();
    auto* thin = app.add_subcommand("thin", "Find a thin ordering and its width");
    thin->add_option("path", path)->required();
    auto* bridge = app.add_subcommand("bridge", "Find a bridge ordering or report that none exists");
    bridge->add_option("path", path)->required();
    auto* geodesics = app.add_subcommand("geodesics", "Three geodesics and three stable geodesics");
    geodesics->add_option("path", path)->required();

    std::string cycle;
    auto* classify = app.add_subcommand("classify", "Classify one cycle");
    classify->add_option("path", path)->required();
    classify->add_option("--cycle", cycle, "Comma-separated vertices, e.g. 1,2,3,4")->required();

    std::vector<std::string> paths;
    bool catalog = false;
    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Check the thin-position theorems on inputs");
    verify->add_option("paths", paths);
    verify->add_flag("--catalog", catalog, "Run on the built-in catalog");
    verify->add_flag("--all-thin", vopts.all_thin, "Check every thin ordering, not just one");

    std::string gen_name, base, out_path;
    std::optional<int> gen_k;
    int splits = 1, flips = 10;
    auto* gen = app.add_subcommand("gen", "Generate a triangulation");
    gen->add_option("name", gen_name, "tetrahedron, double-tetrahedron, bipyramid, octahedron, icosahedron, stacked, flipped")
        ->required();
    gen->add_option("k", gen_k, "Rim size for bipyramid (or split/flip count)");
    gen->add_option("--splits", splits, "Stacked: vertices to insert");
    gen->add_option("--flips", flips, "Flipped: flips to attempt");
    gen->add_option("--base", base, "Starting triangulation for stacked/flipped");
    gen->add_option("--out", out_path, "Output file (default: standard output)");

    auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check thin search against brute-force enumeration");
    oracle_cmd->add_option("path", path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return UsageOrIo;
    }
    vopts.bound = cfg.bound;

    Session s(cfg, out, err);
    try {
        if (*validate) return s.validate(path);
        if (*thin) return s.thin(path);
        if (*bridge) return s.bridge(path);
        if (*geodesics) return s.geodesics(path);
        if (*classify) return s.classify(path, cycle);
        if (*verify) return s.verify(paths, catalog, vopts);
        if (*gen) return s.gen(gen_name, gen_k, splits, flips, base, out_path);
        if (*oracle_cmd) return s.oracle_check(path);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return UsageOrIo;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << " (raise --bound or use --strategy branch-and-bound)\n";
        return UsageOrIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Failed;
    }
    return UsageOrIo;
}

}  // namespace thinsphere::cli
