#include <gtest/gtest.h>

#include "pipcat/abstract_cubical.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/errors.hpp"
#include "support.hpp"

using namespace pipcat;
using namespace testing_support;

namespace {

// Square on vertices 0-1-3-2 (0,1 / 2,3 as rows).
std::vector<std::vector<int>> square_faces() {
    return {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 1, 2, 3}};
}

}  // namespace

TEST(Abstract, SquareRootedAtCornerIsTwoAntichain) {
    const auto a = AbstractCubicalComplex::create(4, square_faces(), 0);
    EXPECT_EQ(a.f_vector(), (std::vector<std::size_t>{4, 4, 1}));
    const auto e = extract_pip(a);
    EXPECT_EQ(e.pip, Pip::from_relations(2, {}, {}));
    EXPECT_EQ(e.hyperplanes.class_count(), 2);
}

TEST(Abstract, PathRootedAtEndIsChainAndAtMiddleIsInconsistentPair) {
    const std::vector<std::vector<int>> path = {{0}, {1}, {2}, {0, 1}, {1, 2}};
    const auto end = extract_pip(AbstractCubicalComplex::create(3, path, 0)).pip;
    EXPECT_TRUE(end.less(0, 1) || end.less(1, 0));
    const auto middle = extract_pip(AbstractCubicalComplex::create(3, path, 1)).pip;
    EXPECT_TRUE(middle.inconsistent(0, 1));
    EXPECT_FALSE(middle.comparable(0, 1));
}

TEST(Abstract, ValidationFailures) {
    EXPECT_THROW(AbstractCubicalComplex::create(3, {{0}, {1}, {2}, {0, 1, 2}}, 0), ValidationError);
    EXPECT_THROW(AbstractCubicalComplex::create(2, {{0}, {0, 1}}, 0), ValidationError);
    // Four vertices without their edges are not a square.
    EXPECT_THROW(AbstractCubicalComplex::create(4, {{0}, {1}, {2}, {3}, {0, 1, 2, 3}}, 0), ValidationError);
    // Edges 0-3 and 1-2 are the diagonals, not the sides, of the square.
    EXPECT_THROW(AbstractCubicalComplex::create(4, {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {0, 3}, {0, 1, 2, 3}}, 0),
                 ValidationError);
    EXPECT_THROW(AbstractCubicalComplex::create(4, square_faces(), 4), ValidationError);
}

TEST(Abstract, RunningExampleRoundTrip) {
    const Pip p = fixture("p7");
    const auto a = to_abstract(CubicalComplex::build(p));
    EXPECT_EQ(a.f_vector(), (std::vector<std::size_t>{16, 24, 10, 1}));
    const auto e = extract_pip(a);
    EXPECT_TRUE(pip_isomorphic(e.pip, p).has_value());
}

TEST(Abstract, RerootingChangesPipButNotCrossingComplex) {
    const Pip p = fixture("p7");
    const auto x = CubicalComplex::build(p);
    const auto a = to_abstract(x);
    const auto delta = crossing_complex(p);
    for (int r = 0; r < a.n_vertices(); ++r) {
        const auto re = a.rerooted(r);
        const auto e = extract_pip(re);
        const auto map = class_elements(x, re, e.hyperplanes);
        EXPECT_EQ(crossing_complex(e.pip).relabeled(map), delta) << "root " << r;
    }
}

TEST(AbstractProperty, RoundTripIsIsomorphism) {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const int n = static_cast<int>(seed % 10);
        const RawPip r = random_raw_pip(seed * 13, n, 0.3, 0.35);
        const auto a = to_abstract(CubicalComplex::build(r.pip));
        ASSERT_TRUE(pip_isomorphic(extract_pip(a).pip, r.pip).has_value()) << "seed " << seed;
    }
}

TEST(AbstractProperty, RerootAtEveryVertexRebuildsSameComplex) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const RawPip r = random_raw_pip(seed, static_cast<int>(seed % 6), 0.3, 0.4);
        const auto a = to_abstract(CubicalComplex::build(r.pip));
        for (int root = 0; root < a.n_vertices(); ++root) {
            const auto e = extract_pip(a.rerooted(root));
            ASSERT_EQ(CubicalComplex::build(e.pip).f_vector(), a.f_vector());
        }
    }
}
