#include <gtest/gtest.h>

#include <regex>

#include "pipcat/errors.hpp"
#include "pipcat/io.hpp"
#include "support.hpp"

using namespace pipcat;
using namespace testing_support;

namespace {

std::size_t count_matches(const std::string& text, const std::string& pattern) {
    const std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Io, TextFormatRoundTrip) {
    const Pip p = fixture("p7");
    for (int base : {0, 1}) {
        const std::string text = io::write_pip_text(p, base);
        EXPECT_EQ(io::parse_pip_text(text), p);
        EXPECT_EQ(io::write_pip_text(io::parse_pip_text(text), base), text);
    }
}

TEST(Io, JsonFormatRoundTrip) {
    const Pip p = fixture("cut_vertex");
    EXPECT_EQ(io::pip_from_json(io::pip_to_json(p)), p);
    EXPECT_EQ(io::pip_from_json(io::pip_to_json(p, 1)), p);
    EXPECT_EQ(io::parse_pip(io::pip_to_json(p).dump()), p);
}

TEST(Io, ParseErrorsNameTheLine) {
    try {
        io::parse_pip_text("pip 3\norder 0 1\nordr 1 2\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(io::parse_pip_text("order 0 1\n"), ParseError);
    EXPECT_THROW(io::parse_pip_text("pip 2\norder 0 x\n"), ParseError);
    EXPECT_THROW(io::parse_pip_text("pip 2\nincons 0 5\n"), ParseError);
    EXPECT_THROW(io::parse_pip_text("pip 2\norder 0 1\norder 1 0\n"), CycleError);
    EXPECT_THROW(io::parse_json("{\"n\": "), ParseError);
}

TEST(Io, CommentsAndBaseDirective) {
    const Pip a = io::parse_pip_text("# two elements\nbase 1\npip 2\norder 1 2   # a cover\n");
    const Pip b = io::parse_pip_text("pip 2\norder 0 1\n");
    EXPECT_EQ(a, b);
    EXPECT_EQ(io::parse_pip_text("pip 2\norder 1 2\n", 1), b);
}

TEST(Io, ComplexJsonRoundTrip) {
    const auto x = CubicalComplex::build(fixture("p7"));
    const auto a = to_abstract(x);
    const auto back = io::abstract_from_json(io::abstract_to_json(a));
    EXPECT_EQ(back.faces(), a.faces());
    EXPECT_EQ(back.root(), a.root());
    const auto stored = io::abstract_from_json(io::parse_json(io::read_file(data_path("p7_complex.json"))));
    EXPECT_EQ(stored.faces(), a.faces());

    const auto delta = crossing_complex(fixture("p7"));
    EXPECT_EQ(io::simplicial_from_json(io::simplicial_to_json(delta, 1), 1), delta);
}

TEST(Io, ColouringJsonRoundTrip) {
    const SimplicialColoring ks{2, {0, 1, 0}};
    EXPECT_EQ(io::simplicial_coloring_from_json(io::coloring_to_json(ks, 1), 1), ks);
    EXPECT_EQ(io::coloring_to_json(ks, 1)["assignment"]["1"], 1);
    const CubicalColoring kc{3, {0, 1, 6, 7}};
    EXPECT_EQ(io::cubical_coloring_from_json(io::coloring_to_json(kc)), kc);
    EXPECT_EQ(io::bitstring(6, 3), "011");
    EXPECT_EQ(io::coloring_lines(kc), "0:000\n1:100\n2:011\n3:111\n");
}

TEST(Io, HasseDotOfRunningExample) {
    const std::string dot = io::hasse_dot(fixture("p7"), 1);
    EXPECT_EQ(count_matches(dot, R"(\n  "\d+";)"), 7u);
    EXPECT_EQ(count_matches(dot, R"(--[^\n]*style=dashed)"), 3u);
    EXPECT_EQ(count_matches(dot, R"(--)"), 10u);
}

TEST(Io, CrossingAndSkeletonDot) {
    const std::string g5 = io::graph_dot(crossing_complex(fixture("g5")), 1);
    EXPECT_EQ(count_matches(g5, R"(--)"), 5u);
    const std::string point = io::skeleton_dot(CubicalComplex::build(Pip::from_relations(0, {}, {})));
    EXPECT_EQ(count_matches(point, R"(\bv\d+ \[)"), 1u);
    EXPECT_EQ(count_matches(point, R"(--)"), 0u);
}

TEST(Io, FaceDumps) {
    const auto delta = crossing_complex(fixture("p7"));
    const std::string dump = io::simplicial_faces_dump(delta, 1);
    EXPECT_EQ(count_matches(dump, "\n"), 16u);
    EXPECT_EQ(io::fvector_string({16, 24, 10, 1}), "16,24,10,1");
}
