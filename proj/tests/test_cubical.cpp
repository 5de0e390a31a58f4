#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pipcat/cubical.hpp"
#include "pipcat/poly.hpp"
#include "support.hpp"

using namespace pipcat;
using namespace testing_support;

namespace {

ElementSet one_based(std::initializer_list<int> labels) {
    ElementSet s;
    for (int l : labels) s.insert(l - 1);
    return s;
}

std::set<ElementSet> vertex_downsets(const CubicalComplex& x, const CubicalFace& f) {
    std::set<ElementSet> out;
    for (int v : x.vertex_set(f)) out.insert(x.vertices()[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace

TEST(Cubical, RunningExampleCounts) {
    const auto x = CubicalComplex::build(fixture("p7"));
    EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{16, 24, 10, 1}));
    EXPECT_EQ(x.dimension(), 3);
    EXPECT_EQ(x.vertices()[static_cast<std::size_t>(x.root())], ElementSet());
    EXPECT_EQ(facets(x).size(), 6u);
}

TEST(Cubical, RunningExampleSquareAndEdge) {
    const auto x = CubicalComplex::build(fixture("p7"));
    const CubicalFace square{one_based({1, 2, 3, 6}), one_based({2, 6})};
    ASSERT_TRUE(x.face_index(square).has_value());
    EXPECT_EQ(vertex_downsets(x, square), (std::set<ElementSet>{one_based({1, 2, 3, 6}), one_based({1, 2, 3}),
                                                                 one_based({1, 3, 6}), one_based({1, 3})}));
    const CubicalFace edge{one_based({1, 2, 3, 6}), one_based({2})};
    EXPECT_EQ(vertex_downsets(x, edge), (std::set<ElementSet>{one_based({1, 2, 3, 6}), one_based({1, 3, 6})}));
    EXPECT_TRUE(face_contains(edge, square));
    EXPECT_FALSE(face_contains(square, edge));
    const auto v = x.vertex_index(one_based({1, 2, 3, 6}));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(embed_coordinates(x, *v), (std::vector<std::uint8_t>{1, 1, 1, 0, 0, 1, 0}));
    EXPECT_FALSE(x.face_index(CubicalFace{one_based({1, 2, 3, 6}), one_based({1})}).has_value());
}

TEST(Cubical, AntichainGivesSolidCube) {
    const auto x = CubicalComplex::build(fixture("a3"));
    EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{8, 12, 6, 1}));
    const IntPolynomial two_plus_t({BigInt(2), BigInt(1)});
    EXPECT_EQ(f_poly_cubical(x), two_plus_t * two_plus_t * two_plus_t);
    EXPECT_EQ(interval_witness(x), std::optional<int>(7));
    EXPECT_TRUE(is_closed_star_of_root(x));
}

TEST(Cubical, EmptyPipIsAPoint) {
    const auto x = CubicalComplex::build(Pip::from_relations(0, {}, {}));
    EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(x.dimension(), 0);
    EXPECT_TRUE(cut_vertices(x).empty());
}

TEST(Cubical, FaceMeet) {
    const auto x = CubicalComplex::build(fixture("p7"));
    const CubicalFace a{one_based({1, 2, 3, 6}), one_based({2, 6})};
    const CubicalFace b{one_based({1, 2, 3}), one_based({2, 3})};
    const auto m = face_meet(a, b);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, (CubicalFace{one_based({1, 2, 3}), one_based({2})}));
    const CubicalFace c{one_based({1, 2, 4, 5}), one_based({4, 5})};
    EXPECT_FALSE(face_meet(a, c).has_value());
}

TEST(Cubical, RootLinkIsCrossingComplexOfMinima) {
    const auto x = CubicalComplex::build(fixture("p7"));
    const auto l = vertex_link(x, x.root());
    EXPECT_EQ(l.facets(), (std::vector<ElementSet>{one_based({1, 2})}));
    EXPECT_EQ(direct_vertex_link(x, x.root()), l);
}

TEST(Cubical, CutVertices) {
    const auto p7 = CubicalComplex::build(fixture("p7"));
    EXPECT_EQ(cut_vertices(p7).size(), 1u);
    const auto x = CubicalComplex::build(fixture("cut_vertex"));
    std::set<ElementSet> cuts;
    for (int v : cut_vertices(x)) cuts.insert(x.vertices()[static_cast<std::size_t>(v)]);
    EXPECT_EQ(cuts, (std::set<ElementSet>{one_based({1, 2}), one_based({1, 2, 5, 6, 7})}));
    EXPECT_TRUE(cut_vertices(CubicalComplex::build(fixture("a3"))).empty());
}

TEST(Cubical, HyperplaneOfElement) {
    const auto x = CubicalComplex::build(fixture("p7"));
    const auto h = hyperplane_complex(x, 2);
    EXPECT_EQ(h.sub.labels, (std::vector<int>{1, 3, 4}));
    EXPECT_EQ(h.complex.f_vector(), (std::vector<std::size_t>{5, 5, 1}));
    EXPECT_EQ(h.carrier_faces.size(), 11u);
    for (int f : h.carrier_faces) EXPECT_TRUE(x.faces()[static_cast<std::size_t>(f)].directions.contains(2));
    EXPECT_THROW(hyperplane_complex(x, 7), IndexError);
}

TEST(Cubical, DerivativeExample) {
    const auto x = CubicalComplex::build(fixture("derivative"));
    const auto d = derivative_complex(x, DerivativeMethod::direct);
    ASSERT_EQ(d.size(), 4u);
    std::vector<std::size_t> sizes;
    for (const auto& c : d) sizes.push_back(c.poset.size());
    // Square, square, square with a pendant edge, edge.
    EXPECT_EQ(sizes, (std::vector<std::size_t>{9, 9, 11, 3}));
    EXPECT_EQ(compare_derivative_methods(x), std::nullopt);
    EXPECT_EQ(f_poly_derivative(d), f_poly_cubical(x).derivative());
}

TEST(Cubical, IntervalAndStarLemmas) {
    const auto chain = CubicalComplex::build(fixture("chain"));
    EXPECT_EQ(interval_witness(chain), std::optional<int>(4));
    EXPECT_FALSE(is_closed_star_of_root(chain));
    const auto star = CubicalComplex::build(fixture("five_star"));
    EXPECT_FALSE(interval_witness(star).has_value());
    EXPECT_TRUE(is_closed_star_of_root(star));
    EXPECT_FALSE(interval_witness(CubicalComplex::build(fixture("p7"))).has_value());
}

TEST(Cubical, NerveOnRunningExample) {
    const auto x = CubicalComplex::build(fixture("p7"));
    EXPECT_TRUE(hyperplanes_commonly_intersect(x, one_based({3, 4, 5})));
    EXPECT_FALSE(hyperplanes_commonly_intersect(x, one_based({3, 7})));
    EXPECT_FALSE(hyperplanes_commonly_intersect(x, one_based({1, 3})));
    EXPECT_TRUE(hyperplanes_commonly_intersect(x, ElementSet()));
    EXPECT_EQ(hyperplane_union_components(x).size(), 2u);
    EXPECT_EQ(vertex_deleted_component_count(x), 2);
}

TEST(Cubical, ProductAndWedge) {
    const auto a = CubicalComplex::build(fixture("chain"));
    const auto b = CubicalComplex::build(fixture("a3"));
    EXPECT_EQ(f_poly_cubical(product(a, b)), f_poly_cubical(a) * f_poly_cubical(b));
    EXPECT_EQ(wedge(a, b).f_vector(), (std::vector<std::size_t>{12, 16, 6, 1}));
}

TEST(CubicalProperty, FacesMatchBruteForceCubes) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = static_cast<int>(seed % 9);
        const RawPip r = random_raw_pip(seed * 17, n, 0.3, 0.35);
        const auto x = CubicalComplex::build(r.pip, Execution::serial);
        const auto downsets = subsets_where(n, [&](ElementSet s) { return raw_downset(r, s) && raw_consistent(r, s); });
        ASSERT_EQ(x.vertices().size(), downsets.size());
        std::set<ElementSet> vset(downsets.begin(), downsets.end());
        // A cube is a set of 2^k downsets {I \ N : N ⊆ M}; enumerate every
        // (I, M) with all those sets present and check that M ⊆ max I.
        std::size_t cubes = 0;
        for (ElementSet i : downsets) {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const ElementSet dirs(m);
                if (!dirs.subset_of(i)) continue;
                bool all = true;
                for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
                    all = all && vset.contains(i - ElementSet(sub));
                    if (sub == 0) break;
                }
                if (!all) continue;
                ++cubes;
                ASSERT_TRUE(x.face_index(CubicalFace{i, dirs}).has_value());
            }
        }
        ASSERT_EQ(cubes, x.faces().size()) << "seed " << seed;
    }
}

TEST(CubicalProperty, SkeletonDistanceIsSymmetricDifference) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const RawPip r = random_raw_pip(seed, static_cast<int>(seed % 8), 0.3, 0.4);
        const auto x = CubicalComplex::build(r.pip);
        const auto& vs = x.vertices();
        for (std::size_t u = 0; u < vs.size(); ++u) {
            const auto d = skeleton_distances(x, static_cast<int>(u));
            for (std::size_t v = 0; v < vs.size(); ++v) ASSERT_EQ(d[v], (vs[u] ^ vs[v]).size());
        }
    }
}

TEST(CubicalProperty, ContainmentAndMeetMatchVertexSets) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const RawPip r = random_raw_pip(seed * 101, static_cast<int>(seed % 7), 0.3, 0.4);
        const auto x = CubicalComplex::build(r.pip);
        for (const auto& a : x.faces()) {
            const auto va = vertex_downsets(x, a);
            for (const auto& b : x.faces()) {
                const auto vb = vertex_downsets(x, b);
                ASSERT_EQ(face_contains(a, b), std::includes(vb.begin(), vb.end(), va.begin(), va.end()));
                std::set<ElementSet> common;
                std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::inserter(common, common.end()));
                const auto m = face_meet(a, b);
                ASSERT_EQ(m.has_value(), !common.empty());
                if (m) ASSERT_EQ(vertex_downsets(x, *m), common);
            }
        }
    }
}

TEST(CubicalProperty, SerialAndParallelBuildAgree) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Pip p = random_raw_pip(seed, 15, 0.12, 0.15).pip;
        const auto s = CubicalComplex::build(p, Execution::serial);
        const auto q = CubicalComplex::build(p, Execution::parallel);
        EXPECT_EQ(s.vertices(), q.vertices());
        EXPECT_EQ(s.faces(), q.faces());
    }
}
