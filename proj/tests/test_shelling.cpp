#include <gtest/gtest.h>

#include "thinsphere/oracle.hpp"
#include "thinsphere/shelling.hpp"

using namespace thinsphere;

namespace {

// Face ids of the tetrahedron as built by the generator: 012, 013, 023, 123.
Ordering tetra_order(const Triangulation& t) {
    return {*t.find_face(0, 1, 2), *t.find_face(0, 1, 3), *t.find_face(0, 2, 3), *t.find_face(1, 2, 3)};
}

}  // namespace

TEST(ShellingState, StepsAndBoundary) {
    const Triangulation t = oracle::octahedron();
    ShellingState st(t);
    using S = ShellingState::Step;
    EXPECT_EQ(st.push(*t.find_face(0, 1, 2)), S::First);
    EXPECT_EQ(st.boundary_length(), 3);
    EXPECT_EQ(st.classify(*t.find_face(2, 3, 5)), S::Invalid);  // vertex contact only
    EXPECT_EQ(st.push(*t.find_face(0, 2, 3)), S::Grow);
    EXPECT_EQ(st.boundary_cycle(), Cycle({0, 1, 2, 3}));
    EXPECT_EQ(st.push(*t.find_face(0, 3, 4)), S::Grow);
    EXPECT_EQ(st.push(*t.find_face(0, 1, 4)), S::Shrink);
    EXPECT_EQ(st.boundary_cycle(), Cycle({1, 2, 3, 4}));
    st.pop();
    EXPECT_EQ(st.boundary_length(), 5);
    EXPECT_THROW(st.push(*t.find_face(1, 4, 5)), std::invalid_argument);  // touches only vertices 1 and 4
}

TEST(GoodOrdering, TetrahedronExample) {
    const Triangulation t = oracle::tetrahedron();
    EXPECT_TRUE(is_good_ordering(t, tetra_order(t)));
}

TEST(GoodOrdering, WitnessPosition) {
    const Triangulation t = oracle::octahedron();
    const Ordering bad{*t.find_face(0, 1, 2), *t.find_face(3, 4, 5), *t.find_face(0, 2, 3), *t.find_face(0, 3, 4),
                       *t.find_face(0, 1, 4), *t.find_face(1, 2, 5), *t.find_face(2, 3, 5), *t.find_face(1, 4, 5)};
    const GoodnessResult g = is_good_ordering(t, bad);
    EXPECT_FALSE(g);
    EXPECT_EQ(g.position, 2);
    EXPECT_FALSE(g.reason.empty());

    const Ordering pinched{*t.find_face(0, 1, 2), *t.find_face(2, 3, 5), *t.find_face(0, 2, 3), *t.find_face(0, 3, 4),
                           *t.find_face(0, 1, 4), *t.find_face(1, 2, 5), *t.find_face(3, 4, 5), *t.find_face(1, 4, 5)};
    EXPECT_EQ(is_good_ordering(t, pinched).position, 2);

    EXPECT_FALSE(is_good_ordering(t, {0, 1, 2}));          // not a permutation
    EXPECT_FALSE(is_good_ordering(t, {0, 0, 1, 2, 3, 4, 5, 6}));
}

TEST(Profile, TetrahedronAndErrors) {
    const Triangulation t = oracle::tetrahedron();
    EXPECT_EQ(profile(t, tetra_order(t)), (Profile{3, 4, 3}));
    EXPECT_THROW(profile(t, {0, 1}), std::invalid_argument);
}

TEST(Profile, DoubleTetrahedronThroughEquator) {
    const Triangulation t = oracle::double_tetrahedron();  // apexes 0 and 4 over 1,2,3
    const Ordering o{*t.find_face(0, 1, 2), *t.find_face(0, 2, 3), *t.find_face(0, 1, 3),
                     *t.find_face(1, 2, 4), *t.find_face(2, 3, 4), *t.find_face(1, 3, 4)};
    EXPECT_EQ(profile(t, o), (Profile{3, 4, 3, 4, 3}));
    EXPECT_EQ(prefix_boundary(t, o, 3), Cycle({1, 2, 3}));
}

TEST(LocalExtrema, Examples) {
    EXPECT_EQ(local_extrema({3, 4, 3}).maxima, (std::vector<int>{2}));
    EXPECT_TRUE(local_extrema({3, 4, 3}).minima.empty());
    EXPECT_EQ(local_extrema({3, 4, 3, 4, 3}).maxima, (std::vector<int>{2, 4}));
    EXPECT_EQ(local_extrema({3, 4, 3, 4, 3}).minima, (std::vector<int>{3}));
    EXPECT_EQ(local_extrema({3, 4, 5, 4, 3}).maxima, (std::vector<int>{3}));
    EXPECT_TRUE(local_extrema({3, 4, 5, 4, 3}).minima.empty());
}

TEST(Width, FromProfilesAndOrderings) {
    EXPECT_EQ(width_of_profile({3, 4, 5, 4, 5, 6, 5, 4, 3}), (WidthList{6, 5}));
    const Triangulation t = oracle::tetrahedron();
    EXPECT_EQ(width_of_ordering(t, tetra_order(t)), (WidthList{4}));
}

TEST(CompareWidth, Examples) {
    EXPECT_EQ(compare_width({4, 4}, {5}), std::strong_ordering::less);
    EXPECT_EQ(compare_width({5, 4}, {5}), std::strong_ordering::greater);
    EXPECT_EQ(compare_width({4}, {4}), std::strong_ordering::equal);
    EXPECT_EQ(compare_width({7, 7, 7, 7, 6, 6}, {7, 7, 7, 7, 7}), std::strong_ordering::less);
}

TEST(Bridge, Examples) {
    const Triangulation t = oracle::tetrahedron();
    EXPECT_TRUE(is_bridge(t, tetra_order(t)));
    const Triangulation d = oracle::double_tetrahedron();
    EXPECT_FALSE(is_bridge(d, thin_position(d, Strategy::Exhaustive).ordering));
}

TEST(ThinPosition, SmallInstances) {
    for (Strategy s : {Strategy::Exhaustive, Strategy::BranchAndBound}) {
        const ThinResult a = thin_position(oracle::tetrahedron(), s);
        EXPECT_EQ(a.width, (WidthList{4}));
        EXPECT_EQ(a.profile, (Profile{3, 4, 3}));
        EXPECT_EQ(thin_position(oracle::double_tetrahedron(), s).width, (WidthList{4, 4}));
        EXPECT_EQ(thin_position(oracle::octahedron(), s).width, (WidthList{5, 5}));
    }
}

TEST(ThinPosition, OctahedronMinimumIsSquareEquator) {
    const Triangulation t = oracle::octahedron();
    const ThinResult r = thin_position(t, Strategy::Exhaustive);
    const auto ex = local_extrema(r.profile);
    ASSERT_EQ(ex.minima.size(), 1u);
    const Cycle c = prefix_boundary(t, r.ordering, ex.minima[0]);
    EXPECT_EQ(c.size(), 4u);
    for (VertexId v : c.vertices()) EXPECT_EQ(t.degree(v), 4);
    EXPECT_FALSE(t.adjacent(c[0], c[2]));
}

TEST(ThinPosition, ExhaustiveIsLexicographicallyFirst) {
    const Triangulation t = oracle::bipyramid(5);
    const ThinResult r = thin_position(t, Strategy::Exhaustive);
    const auto all = all_thin_orderings(t);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(r.ordering, all.front());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& o : all) EXPECT_EQ(width_of_ordering(t, o), r.width);
}

TEST(ThinPosition, ExhaustiveRespectsBound) {
    EXPECT_THROW(thin_position(oracle::icosahedron(), Strategy::Exhaustive), BoundExceeded);
    EXPECT_THROW(thin_position(oracle::bipyramid(6), Strategy::Exhaustive, SearchOptions{10}), BoundExceeded);
}

TEST(ThinPosition, Icosahedron) {
    const ThinResult r = thin_position(oracle::icosahedron(), Strategy::BranchAndBound);
    EXPECT_EQ(r.width, (WidthList{7, 7, 7, 7, 6, 6}));
    EXPECT_EQ(width_of_ordering(oracle::icosahedron(), r.ordering), r.width);
}

TEST(ThinPosition, BipyramidFamily) {
    // Thin width of the k-gonal bipyramid, k >= 4: k-2 maxima of height 5.
    for (int k = 4; k <= 8; ++k)
        EXPECT_EQ(thin_position(oracle::bipyramid(k), Strategy::BranchAndBound).width, WidthList(k - 2, 5)) << k;
}

TEST(FindBridge, ExistsOnCatalog) {
    for (const auto& e : oracle::default_catalog()) {
        const auto b = find_bridge_ordering(e.triangulation);
        ASSERT_TRUE(b) << e.name;
        EXPECT_TRUE(is_bridge(e.triangulation, *b));
        EXPECT_EQ(width_of_ordering(e.triangulation, *b), WidthList{e.triangulation.num_vertices()});
    }
}

TEST(ReorderDelay, MovesShorteningFaceLater) {
    const Triangulation t = oracle::octahedron();
    // Star of vertex 0, then the star of vertex 5.
    const Ordering o{*t.find_face(0, 1, 2), *t.find_face(0, 2, 3), *t.find_face(0, 3, 4), *t.find_face(0, 1, 4),
                     *t.find_face(1, 2, 5), *t.find_face(2, 3, 5), *t.find_face(3, 4, 5), *t.find_face(1, 4, 5)};
    // A face of I_m lying on two boundary edges of I_m can be delayed to position m.
    EXPECT_EQ(reorder_delay(t, o, 1, 1), o);
    int tried = 0;
    for (int m = 2; m < 8; ++m) {
        ShellingState st(t);
        for (int k = 0; k < m; ++k) st.push(o[k]);
        for (int i = 1; i < m; ++i) {
            if (st.boundary_edges_of(o[i - 1]) != 2) {
                EXPECT_THROW(reorder_delay(t, o, i, m), std::invalid_argument) << i << ' ' << m;
                continue;
            }
            const Ordering r = reorder_delay(t, o, i, m);
            EXPECT_EQ(r[m - 1], o[i - 1]);
            EXPECT_TRUE(is_good_ordering(t, r));
            EXPECT_NE(compare_width(width_of_ordering(t, r), width_of_ordering(t, o)), std::strong_ordering::greater);
            ++tried;
        }
    }
    EXPECT_GT(tried, 0);
}

TEST(ReorderDelay, Errors) {
    const Triangulation t = oracle::tetrahedron();
    const Ordering o = tetra_order(t);
    EXPECT_EQ(reorder_delay(t, o, 4, 4), o);
    EXPECT_THROW(reorder_delay(t, o, 2, 4), std::invalid_argument);  // closed sphere
    EXPECT_THROW(reorder_delay(t, o, 2, 3), std::invalid_argument);  // face 013 meets the boundary once
    EXPECT_THROW(reorder_delay(t, o, 3, 2), std::out_of_range);
    EXPECT_THROW(reorder_delay(t, {0, 3}, 1, 2), std::invalid_argument);
}
