#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include "thinsphere/moves.hpp"
#include "thinsphere/oracle.hpp"
#include "thinsphere/tri_io.hpp"

using namespace thinsphere;

TEST(Enumerate, TetrahedronOrderingsAreAllPermutations) {
    // Every prefix of 1, 2 or 3 faces of the tetrahedron is a disk.
    EXPECT_EQ(oracle::count_good_orderings(oracle::tetrahedron()), 24u);
}

TEST(Enumerate, FrozenCounts) {
    EXPECT_EQ(oracle::count_good_orderings(oracle::double_tetrahedron()), 264u);
    EXPECT_EQ(oracle::count_good_orderings(oracle::octahedron()), 4224u);
}

TEST(Enumerate, ProfilesStartAndEndAtThree) {
    std::size_t seen = 0;
    oracle::enumerate_good_orderings(oracle::double_tetrahedron(), [&](const Ordering& o, const Profile& p) {
        EXPECT_EQ(o.size(), 6u);
        EXPECT_EQ(p.front(), 3);
        EXPECT_EQ(p.back(), 3);
        ++seen;
        return true;
    });
    EXPECT_EQ(seen, 264u);
}

TEST(Enumerate, StopsEarlyAndRespectsBound) {
    int seen = 0;
    oracle::enumerate_good_orderings(oracle::octahedron(), [&](const Ordering&, const Profile&) { return ++seen < 5; });
    EXPECT_EQ(seen, 5);
    EXPECT_THROW(oracle::count_good_orderings(oracle::icosahedron()), BoundExceeded);
}

TEST(BruteForceWidth, Examples) {
    EXPECT_EQ(oracle::brute_force_width(oracle::tetrahedron()), (WidthList{4}));
    EXPECT_EQ(oracle::brute_force_width(oracle::double_tetrahedron()), (WidthList{4, 4}));
    EXPECT_EQ(oracle::brute_force_width(oracle::octahedron()), (WidthList{5, 5}));
}

TEST(SubsetDpWidth, AgreesWithEnumeration) {
    for (const auto& e : oracle::default_catalog()) {
        if (e.triangulation.num_faces() > 12) continue;
        EXPECT_EQ(oracle::subset_dp_width(e.triangulation), oracle::brute_force_width(e.triangulation)) << e.name;
    }
}

TEST(SubsetDpWidth, Icosahedron) {
    EXPECT_EQ(oracle::subset_dp_width(oracle::icosahedron()), (WidthList{7, 7, 7, 7, 6, 6}));
}

TEST(InspectFaceSet, Shapes) {
    const Triangulation t = oracle::octahedron();
    std::vector<char> m(8, 0);
    m[*t.find_face(0, 1, 2)] = 1;
    EXPECT_TRUE(oracle::inspect_face_set(t, m).disk);
    EXPECT_EQ(oracle::inspect_face_set(t, m).boundary_vertices, 3);
    m[*t.find_face(2, 3, 5)] = 1;
    EXPECT_FALSE(oracle::inspect_face_set(t, m).disk);
    std::fill(m.begin(), m.end(), 1);
    EXPECT_FALSE(oracle::inspect_face_set(t, m).disk);  // the whole sphere
}

TEST(BruteForceStable, Examples) {
    EXPECT_EQ(oracle::brute_force_stable_geodesics(oracle::octahedron(), 6),
              (std::vector<Cycle>{Cycle({0, 1, 5, 3}), Cycle({0, 2, 5, 4}), Cycle({1, 2, 3, 4})}));
    EXPECT_EQ(oracle::brute_force_stable_geodesics(oracle::double_tetrahedron(), 5), (std::vector<Cycle>{Cycle({1, 2, 3})}));
    for (int len = 3; len <= 4; ++len) EXPECT_TRUE(oracle::brute_force_stable_geodesics(oracle::tetrahedron(), len).empty());
    EXPECT_THROW(oracle::brute_force_stable_geodesics(oracle::tetrahedron(), 2), std::invalid_argument);
}

TEST(BruteForceStable, BipyramidEquatorIsStable) {
    for (int k = 4; k <= 8; ++k) {
        std::vector<VertexId> rim;
        for (int i = 1; i <= k; ++i) rim.push_back(i);
        EXPECT_EQ(classify_cycle(oracle::bipyramid(k), Cycle(rim)).tag, CycleTag::StableGeodesic) << k;
    }
}

TEST(Generators, Sizes) {
    EXPECT_TRUE(oracle::bipyramid(3) == oracle::double_tetrahedron());
    EXPECT_EQ(oracle::double_tetrahedron().num_faces(), 6);
    EXPECT_TRUE(oracle::bipyramid(4) == oracle::octahedron());
    EXPECT_EQ(oracle::icosahedron().num_vertices(), 12);
    EXPECT_EQ(oracle::stacked_sphere(7, 5).num_vertices(), 9);
    const Triangulation f = oracle::flipped_sphere(7, 50);
    EXPECT_EQ(f.num_vertices(), 6);
    EXPECT_TRUE(validate_sphere(f).ok());
    const Triangulation s = oracle::stacked_sphere(3, 1);
    EXPECT_EQ(s.num_vertices(), 5);
    EXPECT_EQ(s.num_faces(), 6);
}

TEST(Generators, SeededAndReproducible) {
    EXPECT_TRUE(oracle::stacked_sphere(11, 6) == oracle::stacked_sphere(11, 6));
    EXPECT_TRUE(oracle::flipped_sphere(11, 30) == oracle::flipped_sphere(11, 30));
    EXPECT_FALSE(oracle::flipped_sphere(11, 30) == oracle::flipped_sphere(12, 30));
}

TEST(Generators, FlipsKeepDegreesAboveThree) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Triangulation t = oracle::flipped_sphere(seed, 60, oracle::icosahedron());
        ASSERT_TRUE(validate_sphere(t).ok());
        for (VertexId v = 0; v < t.num_vertices(); ++v) EXPECT_GE(t.degree(v), 3);
    }
}

TEST(Generators, ParameterErrors) {
    EXPECT_THROW(oracle::bipyramid(2), std::invalid_argument);
    EXPECT_THROW(oracle::stacked_sphere(1, -1), std::invalid_argument);
    EXPECT_THROW(oracle::flipped_sphere(1, -1), std::invalid_argument);
    oracle::GeneratorSpec spec;
    spec.kind = oracle::GeneratorSpec::Kind::StackedSphere;
    spec.base = "torus";
    EXPECT_THROW(oracle::generate(spec), std::invalid_argument);
    EXPECT_FALSE(oracle::generator_kind("dodecahedron"));
    EXPECT_EQ(oracle::generator_kind("double-tetrahedron"), oracle::GeneratorSpec::Kind::DoubleTetrahedron);
}

TEST(Catalog, Contents) {
    const auto cat = oracle::default_catalog();
    EXPECT_EQ(cat.size(), 29u);
    std::set<std::string> names;
    int random = 0;
    for (const auto& e : cat) {
        names.insert(e.name);
        if (e.name.rfind("stacked", 0) == 0 || e.name.rfind("flipped", 0) == 0) {
            ++random;
            EXPECT_LE(e.triangulation.num_faces(), 12) << e.name;
        }
    }
    EXPECT_EQ(names.size(), cat.size());
    EXPECT_EQ(random, 20);
    for (const char* n : {"tetrahedron", "octahedron", "icosahedron", "bipyramid-3", "bipyramid-8"}) EXPECT_TRUE(names.count(n)) << n;
}

TEST(Fixtures, ManifestMatchesOracles) {
    const std::string dir = THINSPHERE_FIXTURES;
    std::ifstream in(dir + "/manifest.json");
    ASSERT_TRUE(in) << dir;
    const nlohmann::json manifest = nlohmann::json::parse(in);
    ASSERT_EQ(manifest.at("schema_version"), 1);
    for (const auto& f : manifest.at("fixtures")) {
        const std::string name = f.at("name");
        const Triangulation t = read_tri_file(dir + "/" + f.at("file").get<std::string>());
        EXPECT_EQ(t.num_vertices(), f.at("vertices")) << name;
        EXPECT_EQ(t.num_edges(), f.at("edges")) << name;
        EXPECT_EQ(t.num_faces(), f.at("faces")) << name;
        EXPECT_EQ(t.is_sphere(), f.at("sphere").get<bool>()) << name;
        if (!t.is_sphere()) continue;
        const WidthList width = f.at("width");
        if (t.num_faces() <= 12) {
            EXPECT_EQ(oracle::brute_force_width(t), width) << name;
            EXPECT_EQ(oracle::count_good_orderings(t), f.at("good_orderings").get<std::uint64_t>()) << name;
        } else {
            EXPECT_EQ(oracle::subset_dp_width(t), width) << name;
        }
        EXPECT_EQ(thin_position(t, Strategy::BranchAndBound).width, width) << name;
        std::vector<Cycle> stable;
        for (const auto& c : f.at("stable_geodesics")) stable.emplace_back(c.get<std::vector<VertexId>>());
        EXPECT_EQ(oracle::brute_force_stable_geodesics(t, t.num_vertices()), stable) << name;
    }
}
