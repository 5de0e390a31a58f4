#include "pipcat/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pipcat/config.hpp"
#include "pipcat/errors.hpp"

namespace pipcat {

namespace {

int default_offset(const SimplicialComplex& k1) {
    return k1.vertices().empty() ? 0 : k1.vertices().max() + 1;
}

ElementSet shift(ElementSet s, int offset) {
    if (offset + (s.empty() ? 0 : s.max()) >= kMaxElements) {
        throw CapExceeded("relabeled vertex exceeds " + std::to_string(kMaxElements) + " labels");
    }
    return ElementSet(s.bits() << offset);
}

}  // namespace

SimplicialComplex::SimplicialComplex() { finalize({ElementSet{}}); }

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<ElementSet>& facets) {
    if (n < 0 || n > kMaxElements) {
        throw IndexError("vertex count out of range: " + std::to_string(n));
    }
    return from_facets(ElementSet::range(n), facets);
}

SimplicialComplex SimplicialComplex::from_facets(ElementSet vertices, const std::vector<ElementSet>& facets) {
    return generated_by(vertices, facets);
}

SimplicialComplex SimplicialComplex::generated_by(ElementSet vertices, const std::vector<ElementSet>& sets) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    seen.insert(ElementSet{});
    for (int v : vertices) {
        seen.insert(ElementSet::singleton(v));
    }
    for (ElementSet f : sets) {
        if (!f.subset_of(vertices)) {
            throw IndexError("face " + f.to_string() + " uses a vertex outside " + vertices.to_string());
        }
        if (seen.contains(f)) {
            continue;
        }
        // every subset of f, via the standard submask walk
        const std::uint64_t full = f.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            seen.insert(ElementSet(sub));
            if (seen.size() > kMaxSimplicialFaces) {
                throw CapExceeded("simplicial complex exceeds " + std::to_string(kMaxSimplicialFaces) + " faces");
            }
            if (sub == 0) {
                break;
            }
        }
    }
    SimplicialComplex k;
    k.vertices_ = vertices;
    k.finalize(std::vector<ElementSet>(seen.begin(), seen.end()));
    return k;
}

void SimplicialComplex::finalize(std::vector<ElementSet> faces) {
    sort_canonical(faces);
    faces_ = std::move(faces);
    index_ = std::unordered_set<ElementSet, ElementSetHash>(faces_.begin(), faces_.end());
    facets_.clear();
    for (ElementSet f : faces_) {
        bool maximal = true;
        for (int v : vertices_ - f) {
            if (index_.contains(f.with(v))) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            facets_.push_back(f);
        }
    }
}

int SimplicialComplex::dimension() const { return faces_.back().size() - 1; }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    for (ElementSet s : faces_) {
        ++f[static_cast<std::size_t>(s.size())];
    }
    return f;
}

std::vector<std::pair<int, int>> SimplicialComplex::edges() const {
    std::vector<std::pair<int, int>> out;
    for (ElementSet s : faces_) {
        if (s.size() == 2) {
            out.emplace_back(s.min(), s.max());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& map) const {
    auto image = [&](ElementSet s) {
        ElementSet out;
        for (int v : s) {
            const int w = map.at(static_cast<std::size_t>(v));
            if (w < 0 || w >= kMaxElements) {
                throw IndexError("relabeled vertex out of range");
            }
            out.insert(w);
        }
        return out;
    };
    const ElementSet new_vertices = image(vertices_);
    if (new_vertices.size() != vertices_.size()) {
        throw PreconditionError("vertex relabeling is not injective");
    }
    std::vector<ElementSet> faces;
    faces.reserve(faces_.size());
    for (ElementSet f : faces_) {
        faces.push_back(image(f));
    }
    SimplicialComplex k;
    k.vertices_ = new_vertices;
    k.finalize(std::move(faces));
    return k;
}

std::vector<ElementSet> Graph::adjacency() const {
    std::vector<ElementSet> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
            throw IndexError("bad graph edge " + std::to_string(a) + "-" + std::to_string(b));
        }
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    return adj;
}

Graph Graph::complement() const {
    const auto adj = adjacency();
    Graph g{n, {}};
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!adj[static_cast<std::size_t>(a)].contains(b)) {
                g.edges.emplace_back(a, b);
            }
        }
    }
    return g;
}

SimplicialComplex crossing_complex(const Pip& p, Execution exec) {
    return SimplicialComplex::generated_by(p.ground(), enumerate_consistent_antichains(p, exec));
}

std::vector<ElementSet> missing_faces(const SimplicialComplex& k) {
    // A minimal non-face S has S - {max S} in K, so extend each face by a
    // larger vertex and test all codimension-one subsets.
    std::vector<ElementSet> out;
    for (ElementSet f : k.faces()) {
        const int floor = f.empty() ? -1 : f.max();
        for (int v : k.vertices()) {
            if (v <= floor) {
                continue;
            }
            const ElementSet s = f.with(v);
            if (k.contains(s)) {
                continue;
            }
            bool minimal = true;
            for (int u : f) {
                if (!k.contains(s.without(u))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                out.push_back(s);
            }
        }
    }
    sort_canonical(out);
    return out;
}

bool is_flag(const SimplicialComplex& k) {
    const auto missing = missing_faces(k);
    return std::all_of(missing.begin(), missing.end(), [](ElementSet s) { return s.size() == 2; });
}

SimplicialComplex clique_complex(const Graph& g) {
    require_within_cap(g.n, "clique_complex");
    const auto adj = g.adjacency();
    auto cliques = kernels::filter_subsets_serial(g.n, [&adj](ElementSet s) {
        for (int v : s) {
            if (!(s.without(v)).subset_of(adj[static_cast<std::size_t>(v)])) {
                return false;
            }
        }
        return true;
    });
    return SimplicialComplex::generated_by(ElementSet::range(g.n), cliques);
}

SimplicialComplex anticlique_complex(const Graph& g) { return clique_complex(g.complement()); }

SimplicialComplex link(const SimplicialComplex& k, ElementSet sigma) {
    if (!k.contains(sigma)) {
        throw NotAFace(sigma.to_string() + " is not a face");
    }
    std::vector<ElementSet> faces;
    ElementSet vertices;
    for (ElementSet t : k.faces()) {
        if (!t.intersects(sigma) && k.contains(t | sigma)) {
            faces.push_back(t);
            vertices |= t;
        }
    }
    return SimplicialComplex::generated_by(vertices, faces);
}

SimplicialComplex closed_star(const SimplicialComplex& k, ElementSet sigma) {
    if (!k.contains(sigma)) {
        throw NotAFace(sigma.to_string() + " is not a face");
    }
    std::vector<ElementSet> faces;
    ElementSet vertices;
    for (ElementSet t : k.faces()) {
        if (sigma.subset_of(t)) {
            faces.push_back(t);
            vertices |= t;
        }
    }
    return SimplicialComplex::generated_by(vertices, faces);
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2, int offset) {
    if (offset < 0) {
        offset = default_offset(k1);
    }
    const ElementSet v2 = shift(k2.vertices(), offset);
    if (v2.intersects(k1.vertices())) {
        throw PreconditionError("join offset does not separate the vertex sets");
    }
    if (k1.faces().size() * k2.faces().size() > kMaxSimplicialFaces) {
        throw CapExceeded("join exceeds the face cap");
    }
    std::vector<ElementSet> faces;
    faces.reserve(k1.faces().size() * k2.faces().size());
    for (ElementSet a : k1.faces()) {
        for (ElementSet b : k2.faces()) {
            faces.push_back(a | shift(b, offset));
        }
    }
    return SimplicialComplex::generated_by(k1.vertices() | v2, faces);
}

SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2, int offset) {
    if (offset < 0) {
        offset = default_offset(k1);
    }
    const ElementSet v2 = shift(k2.vertices(), offset);
    if (v2.intersects(k1.vertices())) {
        throw PreconditionError("disjoint union offset does not separate the vertex sets");
    }
    std::vector<ElementSet> faces = k1.faces();
    for (ElementSet b : k2.faces()) {
        faces.push_back(shift(b, offset));
    }
    return SimplicialComplex::generated_by(k1.vertices() | v2, faces);
}

std::vector<ElementSet> connected_components(const SimplicialComplex& k) {
    std::vector<int> parent(kMaxElements);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : k.edges()) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
        }
    }
    std::vector<ElementSet> comps(kMaxElements);
    for (int v : k.vertices()) {
        comps[static_cast<std::size_t>(find(v))].insert(v);
    }
    std::vector<ElementSet> out;
    for (ElementSet c : comps) {
        if (!c.empty()) {
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
    return out;
}

}  // namespace pipcat
