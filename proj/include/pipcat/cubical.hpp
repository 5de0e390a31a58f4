#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pipcat/abstract_cubical.hpp"
#include "pipcat/pip.hpp"
#include "pipcat/simplicial.hpp"

namespace pipcat {

/// The cube C(I, M) = { I \ N : N ⊆ M } for a consistent downset I and
/// M ⊆ max I. Its dimension is |M|.
struct CubicalFace {
    ElementSet downset;
    ElementSet directions;

    int dimension() const { return directions.size(); }
    friend bool operator==(const CubicalFace&, const CubicalFace&) = default;
};

/// C(I', M') ⊆ C(I, M) iff M' ⊆ M and I \ M ⊆ I' ⊆ I.
bool face_contains(const CubicalFace& inner, const CubicalFace& outer);

/// C(I1 ∩ I2, M1 ∩ M2) when (I1 \ M1) ∪ (I2 \ M2) ⊆ I1 ∩ I2, else nullopt.
std::optional<CubicalFace> face_meet(const CubicalFace& a, const CubicalFace& b);

/// The rooted CAT(0) cube complex of a PIP.
///
/// Vertices are the consistent downsets in canonical order, so vertex 0 is
/// the root (the empty downset). Faces are ordered by dimension, then by the
/// index of their top downset, then canonically by direction set.
class CubicalComplex {
public:
    struct Edge {
        int lower;    // vertex I \ x
        int upper;    // vertex I
        int element;  // x
    };

    static CubicalComplex build(const Pip& p, Execution exec = Execution::parallel);

    const Pip& pip() const { return pip_; }
    int root() const { return 0; }

    const std::vector<ElementSet>& vertices() const { return vertices_; }
    std::optional<int> vertex_index(ElementSet downset) const;

    const std::vector<CubicalFace>& faces() const { return faces_; }
    std::optional<int> face_index(const CubicalFace& f) const;

    /// Vertex indices of C(I, M), ascending.
    std::vector<int> vertex_set(const CubicalFace& f) const;

    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbouring vertices in the 1-skeleton.
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

    int dimension() const { return faces_.back().dimension(); }
    std::vector<std::size_t> f_vector() const;

private:
    struct FaceKeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
            return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
        }
    };

    Pip pip_;
    std::vector<ElementSet> vertices_;
    std::unordered_map<ElementSet, int, ElementSetHash> vertex_lookup_;
    std::vector<CubicalFace> faces_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, FaceKeyHash> face_lookup_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Indicator vector of the vertex's downset, indexed by element.
std::vector<std::uint8_t> embed_coordinates(const CubicalComplex& x, int vertex);

/// (smaller, larger) face index pairs of the covering relation: C(I, M\x)
/// and C(I\x, M\x) below C(I, M) for each x ∈ M.
std::vector<std::pair<int, int>> covering_pairs(const CubicalComplex& x);

struct CubicalFacet {
    int face;             // index into faces()
    ElementSet antichain; // A with face = C(↓A, A)
};

/// Maximal faces (no face covers them), each with its antichain.
std::vector<CubicalFacet> facets(const CubicalComplex& x);

/// Link of a vertex with downset J, as the crossing complex of the sub-PIP
/// max J ∪ min{x ∉ J : x consistent with J}. Vertex labels are elements.
SimplicialComplex vertex_link(const CubicalComplex& x, int vertex);

/// The same link built directly: one simplex vertex per edge at v (labeled
/// by the edge's element), one simplex per face containing v.
SimplicialComplex direct_vertex_link(const CubicalComplex& x, int vertex);
/// Same, reusing a precomputed faces_by_vertex table.
SimplicialComplex direct_vertex_link(const CubicalComplex& x, int vertex,
                                     const std::vector<std::vector<int>>& incidence);

/// For each vertex, the indices of the faces containing it.
std::vector<std::vector<int>> faces_by_vertex(const CubicalComplex& x);

/// Vertices whose deletion (with every face containing them) disconnects
/// the remaining 1-skeleton.
std::vector<int> cut_vertices(const CubicalComplex& x);

/// The hyperplane dual to element x: the complex of the sub-PIP of elements
/// consistent and incomparable with x, plus the faces of the parent
/// complex that cross it (those C(I, M) with x ∈ M).
struct Hyperplane {
    int element = -1;
    SubPip sub;
    CubicalComplex complex;
    std::vector<int> carrier_faces;
};

Hyperplane hyperplane_complex(const CubicalComplex& x, int element);

/// A finite ranked poset given by its cover relation.
struct RankedPoset {
    std::vector<int> rank;
    std::vector<std::vector<int>> lower_covers;  // sorted

    std::size_t size() const { return rank.size(); }
};

/// One component of the derivative complex. For the direct method,
/// `members` lists (smaller face, larger face, common cover) triples by
/// face index of the parent complex; `hyperplane` is the element whose
/// hyperplane the component realizes (filled by both methods).
struct DerivativeComponent {
    int hyperplane = -1;
    RankedPoset poset;
    std::vector<std::array<int, 3>> members;
};

enum class DerivativeMethod { direct, via_hyperplanes };

/// direct: pairs {b, c} of faces with a common cover and no meet, ordered
/// by {b,c} ≤ {b',c'} iff (b ⊆ b' and c ⊆ c') or (b ⊆ c' and c ⊆ b'),
/// computed from vertex sets alone. via_hyperplanes: the face posets of the
/// complexes H_x. Components are returned sorted by hyperplane element.
std::vector<DerivativeComponent> derivative_complex(const CubicalComplex& x, DerivativeMethod method);

/// Empty when `a` and `b` are isomorphic under `map` (a-index -> b-index);
/// otherwise a description of the first mismatch.
std::optional<std::string> check_poset_isomorphism(const RankedPoset& a, const RankedPoset& b,
                                                   const std::vector<int>& map);

/// Compares both derivative methods component by component, using the
/// face correspondence (I, M) -> (I \ ↓x, M \ x) into H_x.
std::optional<std::string> compare_derivative_methods(const CubicalComplex& x);

/// Both complexes are built through the PIP combinators.
CubicalComplex product(const CubicalComplex& a, const CubicalComplex& b);
CubicalComplex wedge(const CubicalComplex& a, const CubicalComplex& b);

/// Breadth-first distances in the 1-skeleton from `from`.
std::vector<int> skeleton_distances(const CubicalComplex& x, int from);
int geodesic_distance(const CubicalComplex& x, int u, int v);

/// A vertex v such that every vertex lies on a shortest path from the root
/// to v, if one exists.
std::optional<int> interval_witness(const CubicalComplex& x);

/// True when every facet contains the root.
bool is_closed_star_of_root(const CubicalComplex& x);

/// True when some face C(I, M) has s ⊆ M.
bool hyperplanes_commonly_intersect(const CubicalComplex& x, ElementSet s);

AbstractCubicalComplex to_abstract(const CubicalComplex& x);

/// For each hyperplane class of `a` (built with to_abstract from x), the
/// element of x it belongs to.
std::vector<int> class_elements(const CubicalComplex& x, const AbstractCubicalComplex& a,
                                const HyperplaneStructure& h);

/// Components of the union of hyperplanes: elements x, y joined when some
/// face has both in M. Returned as element sets, ordered by smallest member.
std::vector<ElementSet> hyperplane_union_components(const CubicalComplex& x);

/// Number of components of the complex with all vertices removed: open
/// cells of dimension >= 1, glued along containment.
int vertex_deleted_component_count(const CubicalComplex& x);

}  // namespace pipcat
