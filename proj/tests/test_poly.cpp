#include <gtest/gtest.h>

#include "pipcat/coloring.hpp"
#include "pipcat/poly.hpp"
#include "support.hpp"

using namespace pipcat;
using namespace testing_support;

namespace {

IntPolynomial poly(std::initializer_list<int> c) {
    std::vector<BigInt> v;
    for (int x : c) v.emplace_back(x);
    return IntPolynomial(v);
}

// Face counts of ℂ_P by dimension straight from the definition:
// one k-cube C(I, M) per consistent downset I and k-subset M of max I.
std::vector<std::size_t> cube_counts_oracle(const RawPip& r) {
    std::vector<std::size_t> f(static_cast<std::size_t>(r.n) + 1, 0);
    for (ElementSet i : subsets_where(r.n, [&](ElementSet s) { return raw_downset(r, s) && raw_consistent(r, s); })) {
        ElementSet top;
        for (int x : i) {
            bool maximal = true;
            for (int y : i) maximal = maximal && (y == x || !r.leq[x][y]);
            if (maximal) top.insert(x);
        }
        for (std::uint64_t m = top.bits();; m = (m - 1) & top.bits()) {
            ++f[static_cast<std::size_t>(ElementSet(m).size())];
            if (m == 0) break;
        }
    }
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
    const auto p = poly({1, 2});
    EXPECT_EQ(p * p, poly({1, 4, 4}));
    EXPECT_EQ(p - p, IntPolynomial());
    EXPECT_EQ(IntPolynomial().degree(), -1);
    EXPECT_EQ(poly({1, 7, 7, 1}).substitute_shift(1), poly({16, 24, 10, 1}));
    EXPECT_EQ(poly({16, 24, 10, 1}).derivative(), poly({24, 20, 3}));
    EXPECT_EQ(poly({16, 24, 10, 1}).evaluate(-1), 1);
    EXPECT_EQ(poly({16, 24, 10, 1}).to_string(), "16 + 24*t + 10*t^2 + t^3");
    EXPECT_EQ(poly({0, -1, 0, 2}).to_string(), "-t + 2*t^3");
    EXPECT_EQ(IntPolynomial().to_string(), "0");
}

TEST(Polynomial, BigCoefficientsStayExact) {
    IntPolynomial p = poly({1, 1});
    IntPolynomial acc = poly({1});
    for (int i = 0; i < 80; ++i) acc = acc * p;
    EXPECT_EQ(acc.coefficient(40), binomial(80, 40));
    EXPECT_EQ(acc.evaluate(1), BigInt(1) << 80);
}

TEST(Polynomial, RunningExampleIdentity) {
    const Pip p = fixture("p7");
    const auto x = CubicalComplex::build(p);
    const auto fc = f_poly_cubical(x);
    const auto fd = f_poly_simplicial(crossing_complex(p));
    EXPECT_EQ(fc, poly({16, 24, 10, 1}));
    EXPECT_EQ(fd, poly({1, 7, 7, 1}));
    EXPECT_EQ(fc, fd.substitute_shift(1));
    EXPECT_EQ(euler_characteristic(fc), 1);
    EXPECT_EQ(hyperplane_count(fc), 7);
    EXPECT_EQ(transform_T(fd.coefficients()), fc.coefficients());
    EXPECT_EQ(transform_T_inverse(fc.coefficients()), fd.coefficients());
}

TEST(Polynomial, TransformMatrixEntries) {
    // Column j of T is the expansion of (1+t)^j.
    for (int j = 0; j < 6; ++j) {
        std::vector<BigInt> unit(static_cast<std::size_t>(j) + 1, 0);
        unit.back() = 1;
        const auto col = transform_T(unit);
        for (int i = 0; i <= j; ++i) EXPECT_EQ(col[static_cast<std::size_t>(i)], binomial(j, i));
    }
}

TEST(Polynomial, ColouredAntichainCube) {
    const Pip p = fixture("a3");
    const auto x = CubicalComplex::build(p);
    const auto delta = crossing_complex(p);
    const SimplicialColoring ks{3, {0, 1, 2}};
    const auto s = coloured_f_simplicial(delta, ks);
    // (1 + x1)(1 + x2)(1 + x3)
    EXPECT_EQ(s.terms().size(), 8u);
    const auto c = coloured_f_cubical(x, lift_coloring(x, ks));
    EXPECT_EQ(c.variable_count(), 6);
    // Each coordinate contributes a factor (1 + y_i + x_i).
    EXPECT_EQ(c.terms().size(), 27u);
    std::map<int, BigInt> ones{{3, 1}, {4, 1}, {5, 1}};
    EXPECT_EQ(c.substitute(ones), s.shift_variables({0, 1, 2}, 1));
    EXPECT_EQ(c.substitute(ones).to_univariate(), f_poly_cubical(x));
}

TEST(Polynomial, ColouredRejectsInvalidColouring) {
    const auto x = CubicalComplex::build(fixture("a3"));
    CubicalColoring bad{3, std::vector<std::uint64_t>(8, 0)};
    EXPECT_THROW(coloured_f_cubical(x, bad), InvalidColoring);
}

TEST(PolynomialProperty, CubicalCountsMatchDefinition) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const RawPip r = random_raw_pip(seed * 3, static_cast<int>(seed % 11), 0.3, 0.35);
        const auto x = CubicalComplex::build(r.pip);
        ASSERT_EQ(x.f_vector(), cube_counts_oracle(r)) << "seed " << seed;
        const auto fc = f_poly_cubical(x);
        const auto fd = f_poly_simplicial(crossing_complex(r.pip));
        ASSERT_EQ(fc, fd.substitute_shift(1));
        ASSERT_EQ(fd, fc.substitute_shift(-1));
        ASSERT_EQ(euler_characteristic(fc), 1);
        ASSERT_EQ(hyperplane_count(fc), r.n);
        ASSERT_EQ(f_poly_derivative(derivative_complex(x, DerivativeMethod::via_hyperplanes)), fc.derivative());
    }
}
