#pragma once

#include <unordered_set>
#include <utility>
#include <vector>

#include "pipcat/element_set.hpp"
#include "pipcat/pip.hpp"

namespace pipcat {

/// A finite simplicial complex with fully enumerated faces.
///
/// Vertices keep their original labels (a vertex set is an ElementSet, not
/// necessarily 0..n-1), so links and sub-complexes stay comparable with the
/// complex they came from. Faces include the empty face and are kept in
/// canonical order.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Downward closure of `facets` on the vertex set {0..n-1}; vertices
    /// not covered by a facet are isolated. IndexError on bad labels.
    static SimplicialComplex from_facets(int n, const std::vector<ElementSet>& facets);
    /// Same, with an explicit vertex set.
    static SimplicialComplex from_facets(ElementSet vertices, const std::vector<ElementSet>& facets);
    /// Downward closure of an arbitrary generating family.
    static SimplicialComplex generated_by(ElementSet vertices, const std::vector<ElementSet>& sets);

    ElementSet vertices() const { return vertices_; }
    int n_vertices() const { return vertices_.size(); }
    const std::vector<ElementSet>& faces() const { return faces_; }
    const std::vector<ElementSet>& facets() const { return facets_; }
    bool contains(ElementSet face) const { return index_.contains(face); }

    /// -1 for {∅}.
    int dimension() const;
    /// (f_{-1}, f_0, ..., f_{d}).
    std::vector<std::size_t> f_vector() const;

    /// Vertex pairs forming 1-faces.
    std::vector<std::pair<int, int>> edges() const;

    /// Relabels each vertex v to map[v]; the map must be injective on vertices.
    SimplicialComplex relabeled(const std::vector<int>& map) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.faces_ == b.faces_;
    }

private:
    void finalize(std::vector<ElementSet> faces);

    ElementSet vertices_;
    std::vector<ElementSet> faces_;
    std::vector<ElementSet> facets_;
    std::unordered_set<ElementSet, ElementSetHash> index_;
};

/// Simple undirected graph on 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<ElementSet> adjacency() const;
    Graph complement() const;
};

/// Faces are the consistent antichains of p; vertices are all elements.
SimplicialComplex crossing_complex(const Pip& p, Execution exec = Execution::parallel);

/// Minimal non-faces, canonical order.
std::vector<ElementSet> missing_faces(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);

SimplicialComplex clique_complex(const Graph& g);
/// Independence complex: clique complex of the complement.
SimplicialComplex anticlique_complex(const Graph& g);

/// {τ ∈ K : τ ∩ σ = ∅, τ ∪ σ ∈ K}. NotAFace when σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, ElementSet sigma);
/// All faces of K containing σ, closed downward. NotAFace when σ ∉ K.
SimplicialComplex closed_star(const SimplicialComplex& k, ElementSet sigma);

/// Join; k2's labels are shifted above max label of k1 (by `offset`, or by
/// the smallest shift that makes the vertex sets disjoint when offset < 0).
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2, int offset = -1);
/// Disjoint union with the same relabeling convention as join.
SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2, int offset = -1);

/// Components of the 1-skeleton, ordered by their smallest vertex.
std::vector<ElementSet> connected_components(const SimplicialComplex& k);

}  // namespace pipcat
