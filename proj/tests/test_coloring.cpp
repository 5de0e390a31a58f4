#include <gtest/gtest.h>

#include <set>

#include "pipcat/coloring.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/io.hpp"
#include "pipcat/poly.hpp"
#include "support.hpp"

using namespace pipcat;
using namespace testing_support;

namespace {

// Chromatic number by trying every assignment of r colours.
int brute_chromatic(const SimplicialComplex& k) {
    std::vector<int> verts = k.vertices().members();
    const auto edges = k.edges();
    for (int r = 0;; ++r) {
        if (verts.empty()) return 0;
        if (r == 0) continue;
        std::vector<int> col(64, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < verts.size(); ++i) total *= static_cast<std::uint64_t>(r);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (int v : verts) {
                col[v] = static_cast<int>(c % static_cast<std::uint64_t>(r));
                c /= static_cast<std::uint64_t>(r);
            }
            bool ok = true;
            for (auto [a, b] : edges) ok = ok && col[a] != col[b];
            if (ok) return r;
        }
    }
}

}  // namespace

TEST(Coloring, AntichainLiftIsSubsetIndicator) {
    const auto x = CubicalComplex::build(fixture("a3"));
    const SimplicialColoring ks{3, {0, 1, 2}};
    const auto kc = lift_coloring(x, ks);
    for (std::size_t v = 0; v < x.vertices().size(); ++v) EXPECT_EQ(kc.label[v], x.vertices()[v].bits());
    EXPECT_EQ(kc.label[0], 0u);
    EXPECT_EQ(project_coloring(x, kc), ks);
}

TEST(Coloring, SixSquareStarLabels) {
    const Pip p = fixture("six_star");
    const auto x = CubicalComplex::build(p);
    const auto delta = crossing_complex(p);
    EXPECT_EQ(chromatic_number(delta), 2);
    const auto ks = find_r_coloring(delta, 2);
    ASSERT_TRUE(ks.has_value());
    const auto kc = lift_coloring(x, *ks);
    // Centre 00, spokes alternate 01 / 10 around the star, outer corners 11.
    std::multiset<std::uint64_t> spokes, corners;
    for (std::size_t v = 0; v < x.vertices().size(); ++v) {
        const int size = x.vertices()[v].size();
        if (size == 0) EXPECT_EQ(kc.label[v], 0u);
        if (size == 1) spokes.insert(kc.label[v]);
        if (size == 2) corners.insert(kc.label[v]);
    }
    EXPECT_EQ(spokes, (std::multiset<std::uint64_t>{1, 1, 1, 2, 2, 2}));
    EXPECT_EQ(corners, (std::multiset<std::uint64_t>{3, 3, 3, 3, 3, 3}));
    for (int e = 0; e < 6; ++e) {
        const int next = (e + 1) % 6;
        const auto a = x.vertex_index(ElementSet::singleton(e));
        const auto b = x.vertex_index(ElementSet::singleton(next));
        EXPECT_NE(kc.label[static_cast<std::size_t>(*a)], kc.label[static_cast<std::size_t>(*b)]);
    }
}

TEST(Coloring, BalancedFixtureValidatesPrintedLabels) {
    const auto a = io::abstract_from_json(io::parse_json(io::read_file(data_path("balanced_a.json"))));
    const auto kc = io::cubical_coloring_from_json(io::parse_json(io::read_file(data_path("balanced_a_coloring.json"))));
    EXPECT_EQ(a.n_vertices(), 16);
    EXPECT_EQ(a.dimension(), 3);
    EXPECT_TRUE(validate_cubical_coloring(a, kc));
    const auto e = extract_pip(a);
    const auto balanced = is_balanced_pair(e.pip);
    EXPECT_TRUE(balanced.simplicial);
    EXPECT_TRUE(balanced.cubical);
    // Flipping one label breaks the bijection on every face through it.
    auto broken = kc;
    broken.label[0] ^= 1;
    EXPECT_FALSE(validate_cubical_coloring(a, broken));
}

TEST(Coloring, FiveSquareStarIsNotBalanced) {
    const Pip p = fixture("five_star");
    const auto delta = crossing_complex(p);
    const auto x = CubicalComplex::build(p);
    EXPECT_EQ(chromatic_number(delta), 3);
    EXPECT_EQ(x.dimension(), 2);
    const auto balanced = is_balanced_pair(p);
    EXPECT_FALSE(balanced.simplicial);
    EXPECT_FALSE(balanced.cubical);
    EXPECT_TRUE(balanced.cubical_exhaustive);
    EXPECT_EQ(exhaustive_cubical_coloring(x, 2).result, SearchResult::none);
    EXPECT_EQ(exhaustive_cubical_coloring(x, 3).result, SearchResult::found);
}

TEST(Coloring, ChainAndDilworth) {
    const auto chain = dilworth_coloring(fixture("chain"));
    EXPECT_EQ(chain.r, 1);
    const auto a3 = dilworth_coloring(fixture("a3"));
    EXPECT_EQ(a3.r, 3);
    EXPECT_EQ(std::set<int>(a3.color.begin(), a3.color.end()), (std::set<int>{0, 1, 2}));
    EXPECT_TRUE(is_balanced_pair(fixture("chain")).simplicial);
    EXPECT_THROW(dilworth_coloring(fixture("p7")), PreconditionError);
}

TEST(Coloring, InvalidInputsAreRejected) {
    const Pip p = fixture("p7");
    const auto x = CubicalComplex::build(p);
    EXPECT_THROW(lift_coloring(x, SimplicialColoring{1, std::vector<int>(7, 0)}), InvalidColoring);
    const auto single_square = CubicalComplex::build(Pip::from_relations(2, {}, {}));
    EXPECT_FALSE(validate_cubical_coloring(single_square, CubicalColoring{2, {0, 1, 1, 3}}));
    EXPECT_TRUE(validate_cubical_coloring(single_square, CubicalColoring{2, {0, 1, 2, 3}}));
}

TEST(ColoringProperty, ChromaticNumberMatchesBruteForce) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const RawPip r = random_raw_pip(seed * 5, static_cast<int>(seed % 9), 0.2, 0.5);
        const auto delta = crossing_complex(r.pip);
        const int chi = chromatic_number(delta);
        ASSERT_EQ(chi, brute_chromatic(delta)) << "seed " << seed;
        const auto ks = find_r_coloring(delta, chi);
        ASSERT_TRUE(ks && is_valid_coloring(delta, *ks));
        if (chi > 0) ASSERT_FALSE(find_r_coloring(delta, chi - 1).has_value());
    }
}

TEST(ColoringProperty, LiftProjectRoundTripAndColouredIdentity) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const RawPip r = random_raw_pip(seed * 7, static_cast<int>(seed % 10), 0.3, 0.4);
        const auto x = CubicalComplex::build(r.pip);
        const auto delta = crossing_complex(r.pip);
        const int chi = chromatic_number(delta);
        for (int extra = 0; extra <= 1; ++extra) {
            const auto ks = find_r_coloring(delta, chi + extra);
            ASSERT_TRUE(ks.has_value());
            const auto kc = lift_coloring(x, *ks);
            ASSERT_TRUE(validate_cubical_coloring(x, kc));
            ASSERT_EQ(project_coloring(x, kc), *ks);
            std::map<int, BigInt> ones;
            std::vector<int> xs;
            for (int i = 0; i < ks->r; ++i) {
                ones.emplace(ks->r + i, 1);
                xs.push_back(i);
            }
            ASSERT_EQ(coloured_f_cubical(x, kc).substitute(ones), coloured_f_simplicial(delta, *ks).shift_variables(xs, 1));
        }
    }
}

TEST(ColoringProperty, MinimumColoursAgree) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const RawPip r = random_raw_pip(seed * 11, static_cast<int>(seed % 8), 0.25, 0.5);
        const auto x = CubicalComplex::build(r.pip);
        const int chi = chromatic_number(crossing_complex(r.pip));
        if (chi > 0) ASSERT_EQ(exhaustive_cubical_coloring(x, chi - 1).result, SearchResult::none) << "seed " << seed;
        const auto found = exhaustive_cubical_coloring(x, chi);
        ASSERT_EQ(found.result, SearchResult::found) << "seed " << seed;
        ASSERT_TRUE(validate_cubical_coloring(x, *found.coloring));
        ASSERT_TRUE(is_valid_coloring(crossing_complex(r.pip), project_coloring(x, *found.coloring)));
    }
}

TEST(ColoringProperty, PosetPipsAreBalanced) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const RawPip r = random_raw_pip(seed, static_cast<int>(seed % 10), 0.3, 0.0);
        const auto bp = is_balanced_pair(r.pip);
        ASSERT_TRUE(bp.simplicial && bp.cubical);
        const auto dc = dilworth_coloring(r.pip);
        ASSERT_EQ(dc.r, crossing_complex(r.pip).dimension() + 1);
        ASSERT_TRUE(is_valid_coloring(crossing_complex(r.pip), dc));
    }
}
