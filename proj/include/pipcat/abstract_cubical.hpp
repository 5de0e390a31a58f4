#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pipcat/pip.hpp"

namespace pipcat {

using VertexBits = boost::dynamic_bitset<std::uint64_t>;

struct VertexBitsHash {
    std::size_t operator()(const VertexBits& b) const noexcept { return boost::hash_value(b); }
};

/// A rooted cubical complex given only by the vertex sets of its faces.
///
/// Construction validates the structure: every face has 2^k vertices, all
/// vertex singletons are present, each k-face contains exactly 2k faces of
/// dimension k-1 and its edges form a k-regular graph whose distance profile
/// from every vertex is binomial (as in a k-cube), and any two maximal faces
/// meet in a face or not at all. Failures raise ValidationError.
class AbstractCubicalComplex {
public:
    static AbstractCubicalComplex create(int n_vertices, std::vector<std::vector<int>> faces, int root);

    int n_vertices() const { return n_; }
    int root() const { return root_; }
    std::size_t face_count() const { return faces_.size(); }

    /// Sorted vertex list of face i (faces keep their input order).
    const std::vector<int>& face(std::size_t i) const { return faces_[i]; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const VertexBits& face_bits(std::size_t i) const { return bits_[i]; }
    int dimension(std::size_t i) const { return dims_[i]; }
    int dimension() const;
    std::vector<std::size_t> f_vector() const;

    const std::vector<int>& lower_covers(std::size_t i) const { return lower_[i]; }
    const std::vector<int>& upper_covers(std::size_t i) const { return upper_[i]; }
    /// Face indices of maximal faces.
    std::vector<int> facets() const;
    /// Face indices of the 1-dimensional faces, in face order.
    std::vector<int> edge_faces() const;

    std::optional<int> find_face(const std::vector<int>& sorted_vertices) const;
    /// Index of the singleton face {v}.
    int vertex_face(int v) const { return vertex_face_[static_cast<std::size_t>(v)]; }

    /// Same complex with a different root vertex.
    AbstractCubicalComplex rerooted(int root) const;

private:
    int n_ = 0;
    int root_ = 0;
    std::vector<std::vector<int>> faces_;
    std::vector<VertexBits> bits_;
    std::vector<int> dims_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::vector<int>> upper_;
    std::vector<int> vertex_face_;
    std::unordered_map<VertexBits, int, VertexBitsHash> lookup_;
};

/// Edge equivalence classes (hyperplanes) of an abstract complex. Two edges
/// are related when they are opposite sides of a square.
struct HyperplaneStructure {
    std::vector<int> edges;          // face indices of edges
    std::vector<int> edge_class;     // class of edges[i]
    std::vector<std::vector<int>> class_edges;  // positions into `edges`
    std::vector<VertexBits> far_side;           // side not containing the root

    int class_count() const { return static_cast<int>(class_edges.size()); }
};

/// Classes are numbered by their first edge in face order. ValidationError
/// when a class does not split the 1-skeleton into exactly two sides.
HyperplaneStructure hyperplane_structure(const AbstractCubicalComplex& a);

struct ExtractedPip {
    Pip pip;  // element i is hyperplane class i
    HyperplaneStructure hyperplanes;
};

/// The PIP of hyperplanes: H1 <= H2 iff far(H1) ⊇ far(H2); H1, H2
/// inconsistent iff their far sides are disjoint. Simple connectivity of
/// the input is assumed, not checked.
ExtractedPip extract_pip(const AbstractCubicalComplex& a);

}  // namespace pipcat

