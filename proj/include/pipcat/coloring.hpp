#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pipcat/cubical.hpp"
#include "pipcat/simplicial.hpp"

namespace pipcat {

/// κ_s: vertex label -> colour in 0..r-1 (-1 for labels that are not vertices).
struct SimplicialColoring {
    int r = 0;
    std::vector<int> color;

    int operator[](int v) const { return color.at(static_cast<std::size_t>(v)); }
    friend bool operator==(const SimplicialColoring&, const SimplicialColoring&) = default;
};

/// κ_c: vertex index -> vertex of [0,1]^r, bit j holding coordinate j.
struct CubicalColoring {
    int r = 0;
    std::vector<std::uint64_t> label;

    friend bool operator==(const CubicalColoring&, const CubicalColoring&) = default;
};

inline constexpr int kMaxColors = 64;

/// 1-skeleton of K as a graph on 0..max label.
Graph skeleton_graph(const SimplicialComplex& k);

bool is_valid_coloring(const SimplicialComplex& k, const SimplicialColoring& c);
/// InvalidColoring naming an offending vertex or edge.
void require_valid_coloring(const SimplicialComplex& k, const SimplicialColoring& c);

/// Exact backtracking in reverse degeneracy order, lowest colour first.
std::optional<SimplicialColoring> find_r_coloring(const SimplicialComplex& k, int r);
/// 0 for a complex without vertices.
int chromatic_number(const SimplicialComplex& k);
/// chromatic number <= dim + 1.
bool is_balanced(const SimplicialComplex& k);

/// Parity of the colour counts of each downset.
CubicalColoring lift_coloring(const CubicalComplex& x, const SimplicialColoring& ks);

/// Index of the first face on which κ_c is not a bijection onto a face of
/// [0,1]^r, if any. Faces are given by their vertex lists.
std::optional<std::size_t> invalid_face(const std::vector<std::vector<int>>& faces, const CubicalColoring& kc);
std::optional<std::size_t> invalid_face(const CubicalComplex& x, const CubicalColoring& kc);
bool validate_cubical_coloring(const CubicalComplex& x, const CubicalColoring& kc);
bool validate_cubical_coloring(const AbstractCubicalComplex& a, const CubicalColoring& kc);

/// Colour of each element = the coordinate flipped along its edges.
/// InvalidColoring with a witness when κ_c is invalid or ambiguous.
SimplicialColoring project_coloring(const CubicalComplex& x, const CubicalColoring& kc);

enum class SearchResult { found, none, budget_exhausted };

struct CubicalSearch {
    SearchResult result = SearchResult::none;
    std::optional<CubicalColoring> coloring;
    std::uint64_t nodes = 0;
};

/// Exhaustive search for a valid κ_c with r coordinates, root fixed to 0.
CubicalSearch exhaustive_cubical_coloring(const CubicalComplex& x, int r, std::uint64_t node_budget = 5'000'000);

struct BalancedPair {
    bool simplicial = false;
    bool cubical = false;
    bool cubical_exhaustive = false;  // cubical side decided by the exhaustive search
};

/// Simplicial side via chromatic number; cubical side via the exhaustive
/// search with r = dim ℂ_P when it finishes within budget, else via lift of
/// an r-colouring of Δ_P.
BalancedPair is_balanced_pair(const Pip& p);

/// Colour i for the elements of the i-th chain of a minimum chain cover.
SimplicialColoring dilworth_coloring(const Pip& p);

}  // namespace pipcat
