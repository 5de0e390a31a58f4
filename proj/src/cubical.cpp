#include "pipcat/cubical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "pipcat/config.hpp"
#include "pipcat/errors.hpp"

namespace pipcat {

namespace {

using FaceKey = std::pair<std::uint64_t, std::uint64_t>;

FaceKey key_of(const CubicalFace& f) { return {f.downset.bits(), f.directions.bits()}; }

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }

private:
    std::vector<int> parent_;
};

void require_vertex(const CubicalComplex& x, int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= x.vertices().size()) {
        throw IndexError("vertex " + std::to_string(v) + " out of range");
    }
}

void require_element(const CubicalComplex& x, int e) {
    if (e < 0 || e >= x.pip().size()) {
        throw IndexError("element " + std::to_string(e) + " out of range");
    }
}

}  // namespace

bool face_contains(const CubicalFace& inner, const CubicalFace& outer) {
    return inner.directions.subset_of(outer.directions) &&
           (outer.downset - outer.directions).subset_of(inner.downset) && inner.downset.subset_of(outer.downset);
}

std::optional<CubicalFace> face_meet(const CubicalFace& a, const CubicalFace& b) {
    const ElementSet common = a.downset & b.downset;
    if (!((a.downset - a.directions) | (b.downset - b.directions)).subset_of(common)) {
        return std::nullopt;
    }
    return CubicalFace{common, a.directions & b.directions};
}

CubicalComplex CubicalComplex::build(const Pip& p, Execution exec) {
    CubicalComplex x;
    x.pip_ = p;
    x.vertices_ = enumerate_consistent_downsets(p, exec);
    for (std::size_t i = 0; i < x.vertices_.size(); ++i) {
        x.vertex_lookup_.emplace(x.vertices_[i], static_cast<int>(i));
    }

    struct Entry {
        int dim;
        int top;
        CubicalFace face;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < x.vertices_.size(); ++i) {
        const ElementSet top = x.vertices_[i];
        const std::uint64_t full = extremal_elements(p, top, Extremum::max).bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            const ElementSet m(sub);
            entries.push_back({m.size(), static_cast<int>(i), {top, m}});
            if (sub == 0) {
                break;
            }
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.dim != b.dim) {
            return a.dim < b.dim;
        }
        if (a.top != b.top) {
            return a.top < b.top;
        }
        return canonical_less(a.face.directions, b.face.directions);
    });
    x.faces_.reserve(entries.size());
    for (const auto& e : entries) {
        x.face_lookup_.emplace(key_of(e.face), static_cast<int>(x.faces_.size()));
        x.faces_.push_back(e.face);
    }

    x.adjacency_.assign(x.vertices_.size(), {});
    for (const auto& f : x.faces_) {
        if (f.dimension() != 1) {
            continue;
        }
        const int element = f.directions.min();
        const int upper = x.vertex_lookup_.at(f.downset);
        const int lower = x.vertex_lookup_.at(f.downset.without(element));
        x.edges_.push_back({lower, upper, element});
        x.adjacency_[static_cast<std::size_t>(lower)].push_back(upper);
        x.adjacency_[static_cast<std::size_t>(upper)].push_back(lower);
    }
    for (auto& nbrs : x.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return x;
}

std::optional<int> CubicalComplex::vertex_index(ElementSet downset) const {
    const auto it = vertex_lookup_.find(downset);
    if (it == vertex_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<int> CubicalComplex::face_index(const CubicalFace& f) const {
    const auto it = face_lookup_.find(key_of(f));
    if (it == face_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<int> CubicalComplex::vertex_set(const CubicalFace& f) const {
    std::vector<int> out;
    const std::uint64_t full = f.directions.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
        const auto v = vertex_index(f.downset - ElementSet(sub));
        if (!v) {
            throw NotAFace("C(" + f.downset.to_string() + ", " + f.directions.to_string() + ") is not a face");
        }
        out.push_back(*v);
        if (sub == 0) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> CubicalComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& face : faces_) {
        ++f[static_cast<std::size_t>(face.dimension())];
    }
    return f;
}

std::vector<std::uint8_t> embed_coordinates(const CubicalComplex& x, int vertex) {
    require_vertex(x, vertex);
    std::vector<std::uint8_t> out(static_cast<std::size_t>(x.pip().size()), 0);
    for (int e : x.vertices()[static_cast<std::size_t>(vertex)]) {
        out[static_cast<std::size_t>(e)] = 1;
    }
    return out;
}

std::vector<std::pair<int, int>> covering_pairs(const CubicalComplex& x) {
    std::vector<std::pair<int, int>> out;
    const auto& faces = x.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        for (int e : f.directions) {
            const CubicalFace keep{f.downset, f.directions.without(e)};
            const CubicalFace drop{f.downset.without(e), f.directions.without(e)};
            out.emplace_back(*x.face_index(keep), static_cast<int>(i));
            out.emplace_back(*x.face_index(drop), static_cast<int>(i));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CubicalFacet> facets(const CubicalComplex& x) {
    std::vector<CubicalFacet> out;
    const auto& faces = x.faces();
    const ElementSet ground = x.pip().ground();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        bool maximal = true;
        for (int e : ground - f.downset) {
            if (x.face_index({f.downset.with(e), f.directions.with(e)})) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            for (int e : f.downset - f.directions) {
                if (x.face_index({f.downset, f.directions.with(e)})) {
                    maximal = false;
                    break;
                }
            }
        }
        if (maximal) {
            out.push_back({static_cast<int>(i), f.directions});
        }
    }
    return out;
}

SimplicialComplex vertex_link(const CubicalComplex& x, int vertex) {
    require_vertex(x, vertex);
    const Pip& p = x.pip();
    const ElementSet j = x.vertices()[static_cast<std::size_t>(vertex)];
    ElementSet addable;
    for (int e : p.ground() - j) {
        if (!p.inconsistent_with(e).intersects(j)) {
            addable.insert(e);
        }
    }
    const ElementSet support = extremal_elements(p, j, Extremum::max) | extremal_elements(p, addable, Extremum::min);
    std::vector<int> labels;
    const Pip sub = p.induced(support, &labels);
    const SimplicialComplex local = crossing_complex(sub, Execution::serial);
    return local.relabeled(labels);
}

std::vector<std::vector<int>> faces_by_vertex(const CubicalComplex& x) {
    std::vector<std::vector<int>> out(x.vertices().size());
    const auto& faces = x.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (int v : x.vertex_set(faces[i])) {
            out[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        }
    }
    return out;
}

SimplicialComplex direct_vertex_link(const CubicalComplex& x, int vertex) {
    require_vertex(x, vertex);
    std::vector<std::vector<int>> incidence(x.vertices().size());
    const auto& faces = x.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto vs = x.vertex_set(faces[i]);
        if (std::binary_search(vs.begin(), vs.end(), vertex)) {
            incidence[static_cast<std::size_t>(vertex)].push_back(static_cast<int>(i));
        }
    }
    return direct_vertex_link(x, vertex, incidence);
}

SimplicialComplex direct_vertex_link(const CubicalComplex& x, int vertex,
                                     const std::vector<std::vector<int>>& incidence) {
    require_vertex(x, vertex);
    const ElementSet here = x.vertices()[static_cast<std::size_t>(vertex)];
    ElementSet link_vertices;
    std::vector<ElementSet> simplices;
    for (int fi : incidence.at(static_cast<std::size_t>(vertex))) {
        ElementSet simplex;
        for (int w : x.vertex_set(x.faces()[static_cast<std::size_t>(fi)])) {
            const ElementSet diff = here ^ x.vertices()[static_cast<std::size_t>(w)];
            if (diff.size() == 1) {
                simplex |= diff;
            }
        }
        link_vertices |= simplex;
        simplices.push_back(simplex);
    }
    return SimplicialComplex::generated_by(link_vertices, simplices);
}

std::vector<int> cut_vertices(const CubicalComplex& x) {
    const auto& adj = x.adjacency();
    const int nv = static_cast<int>(x.vertices().size());
    std::vector<int> out;
    for (int v = 0; v < nv; ++v) {
        if (nv <= 2) {
            break;
        }
        const int start = v == 0 ? 1 : 0;
        std::vector<char> seen(static_cast<std::size_t>(nv), 0);
        seen[static_cast<std::size_t>(v)] = 1;
        seen[static_cast<std::size_t>(start)] = 1;
        std::deque<int> queue{start};
        int reached = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    queue.push_back(w);
                }
            }
        }
        if (reached < nv - 1) {
            out.push_back(v);
        }
    }
    return out;
}

Hyperplane hyperplane_complex(const CubicalComplex& x, int element) {
    require_element(x, element);
    Hyperplane h;
    h.element = element;
    h.sub = crossing_neighborhood(x.pip(), element);
    h.complex = CubicalComplex::build(h.sub.pip, Execution::serial);
    const auto& faces = x.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].directions.contains(element)) {
            h.carrier_faces.push_back(static_cast<int>(i));
        }
    }
    return h;
}

namespace {

std::vector<DerivativeComponent> derivative_direct(const CubicalComplex& x) {
    const AbstractCubicalComplex a = to_abstract(x);
    const std::size_t nf = a.face_count();

    // Pairs of lower covers of a common face with no greatest common lower bound.
    std::vector<std::array<int, 3>> elements;
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t f = 0; f < nf; ++f) {
        const auto& lower = a.lower_covers(f);
        for (std::size_t i = 0; i < lower.size(); ++i) {
            for (std::size_t j = i + 1; j < lower.size(); ++j) {
                const int b = std::min(lower[i], lower[j]);
                const int c = std::max(lower[i], lower[j]);
                const VertexBits common = a.face_bits(static_cast<std::size_t>(b)) & a.face_bits(static_cast<std::size_t>(c));
                bool has_meet = false;
                if (common.any()) {
                    std::vector<int> vs;
                    for (auto k = common.find_first(); k != VertexBits::npos; k = common.find_next(k)) {
                        vs.push_back(static_cast<int>(k));
                    }
                    has_meet = a.find_face(vs).has_value();
                    if (!has_meet) {
                        throw ValidationError("intersection of two faces is not a face");
                    }
                }
                if (!has_meet && !seen.contains({b, c})) {
                    seen.emplace(std::make_pair(b, c), static_cast<int>(elements.size()));
                    elements.push_back({b, c, static_cast<int>(f)});
                }
            }
        }
    }

    auto subface = [&a](int s, int t) { return a.face_bits(static_cast<std::size_t>(s)).is_subset_of(a.face_bits(static_cast<std::size_t>(t))); };
    auto leq = [&](const std::array<int, 3>& e, const std::array<int, 3>& g) {
        return (subface(e[0], g[0]) && subface(e[1], g[1])) || (subface(e[0], g[1]) && subface(e[1], g[0]));
    };

    std::vector<std::vector<int>> by_face(nf);
    for (std::size_t k = 0; k < elements.size(); ++k) {
        by_face[static_cast<std::size_t>(elements[k][0])].push_back(static_cast<int>(k));
        by_face[static_cast<std::size_t>(elements[k][1])].push_back(static_cast<int>(k));
    }

    const std::size_t ne = elements.size();
    std::vector<int> rank(ne);
    std::vector<std::vector<int>> lower(ne);
    UnionFind uf(ne);
    for (std::size_t k = 0; k < ne; ++k) {
        const auto& e = elements[k];
        rank[k] = a.dimension(static_cast<std::size_t>(e[0]));
        std::vector<int> candidates;
        for (int side : {e[0], e[1]}) {
            for (int lc : a.lower_covers(static_cast<std::size_t>(side))) {
                const auto& hits = by_face[static_cast<std::size_t>(lc)];
                candidates.insert(candidates.end(), hits.begin(), hits.end());
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (int g : candidates) {
            const auto& eg = elements[static_cast<std::size_t>(g)];
            if (a.dimension(static_cast<std::size_t>(eg[0])) + 1 == rank[k] && leq(eg, e)) {
                lower[k].push_back(g);
                uf.unite(static_cast<int>(k), g);
            }
        }
    }

    std::map<int, std::vector<int>> groups;
    for (std::size_t k = 0; k < ne; ++k) {
        groups[uf.find(static_cast<int>(k))].push_back(static_cast<int>(k));
    }
    std::vector<DerivativeComponent> out;
    for (const auto& [root, members] : groups) {
        DerivativeComponent comp;
        std::vector<int> local(ne, -1);
        for (std::size_t i = 0; i < members.size(); ++i) {
            local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
        }
        for (int m : members) {
            const auto& e = elements[static_cast<std::size_t>(m)];
            comp.members.push_back(e);
            comp.poset.rank.push_back(rank[static_cast<std::size_t>(m)]);
            std::vector<int> lc;
            for (int g : lower[static_cast<std::size_t>(m)]) {
                lc.push_back(local[static_cast<std::size_t>(g)]);
            }
            std::sort(lc.begin(), lc.end());
            comp.poset.lower_covers.push_back(std::move(lc));
        }
        const auto& first = comp.members.front();
        const ElementSet moved = x.faces()[static_cast<std::size_t>(first[2])].directions -
                                 x.faces()[static_cast<std::size_t>(first[0])].directions;
        comp.hyperplane = moved.size() == 1 ? moved.min() : -1;
        out.push_back(std::move(comp));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const DerivativeComponent& l, const DerivativeComponent& r) { return l.hyperplane < r.hyperplane; });
    return out;
}

RankedPoset face_poset(const CubicalComplex& x) {
    RankedPoset poset;
    poset.rank.reserve(x.faces().size());
    for (const auto& f : x.faces()) {
        poset.rank.push_back(f.dimension());
    }
    poset.lower_covers.assign(x.faces().size(), {});
    for (auto [lo, hi] : covering_pairs(x)) {
        poset.lower_covers[static_cast<std::size_t>(hi)].push_back(lo);
    }
    for (auto& lc : poset.lower_covers) {
        std::sort(lc.begin(), lc.end());
    }
    return poset;
}

}  // namespace

std::vector<DerivativeComponent> derivative_complex(const CubicalComplex& x, DerivativeMethod method) {
    if (method == DerivativeMethod::direct) {
        return derivative_direct(x);
    }
    std::vector<DerivativeComponent> out;
    for (int e = 0; e < x.pip().size(); ++e) {
        const Hyperplane h = hyperplane_complex(x, e);
        DerivativeComponent comp;
        comp.hyperplane = e;
        comp.poset = face_poset(h.complex);
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::string> check_poset_isomorphism(const RankedPoset& a, const RankedPoset& b,
                                                   const std::vector<int>& map) {
    if (a.size() != b.size() || map.size() != a.size()) {
        return "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    }
    std::vector<char> hit(b.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        const int m = map[i];
        if (m < 0 || static_cast<std::size_t>(m) >= b.size() || hit[static_cast<std::size_t>(m)]) {
            return "map is not a bijection at " + std::to_string(i);
        }
        hit[static_cast<std::size_t>(m)] = 1;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto j = static_cast<std::size_t>(map[i]);
        if (a.rank[i] != b.rank[j]) {
            return "rank differs at " + std::to_string(i);
        }
        std::vector<int> image;
        for (int c : a.lower_covers[i]) {
            image.push_back(map[static_cast<std::size_t>(c)]);
        }
        std::sort(image.begin(), image.end());
        if (image != b.lower_covers[j]) {
            return "lower covers differ at " + std::to_string(i);
        }
    }
    return std::nullopt;
}

std::optional<std::string> compare_derivative_methods(const CubicalComplex& x) {
    const auto direct = derivative_complex(x, DerivativeMethod::direct);
    const int n = x.pip().size();
    if (static_cast<int>(direct.size()) != n) {
        return "direct method has " + std::to_string(direct.size()) + " components, expected " + std::to_string(n);
    }
    for (int e = 0; e < n; ++e) {
        const auto& comp = direct[static_cast<std::size_t>(e)];
        if (comp.hyperplane != e) {
            return "no direct component for element " + std::to_string(e);
        }
        const Hyperplane h = hyperplane_complex(x, e);
        const RankedPoset target = face_poset(h.complex);
        const ElementSet below = x.pip().down(e);
        std::vector<int> map;
        for (const auto& m : comp.members) {
            const auto& cover = x.faces()[static_cast<std::size_t>(m[2])];
            const auto& small = x.faces()[static_cast<std::size_t>(m[0])];
            if (!cover.directions.contains(e) || (cover.directions - small.directions) != ElementSet::singleton(e)) {
                return "component " + std::to_string(e) + " mixes hyperplanes";
            }
            const CubicalFace image{h.sub.from_parent(cover.downset - below), h.sub.from_parent(cover.directions.without(e))};
            const auto idx = h.complex.face_index(image);
            if (!idx) {
                return "face of H_" + std::to_string(e) + " missing";
            }
            map.push_back(*idx);
        }
        if (auto err = check_poset_isomorphism(comp.poset, target, map)) {
            return "H_" + std::to_string(e) + ": " + *err;
        }
    }
    return std::nullopt;
}

CubicalComplex product(const CubicalComplex& a, const CubicalComplex& b) {
    return CubicalComplex::build(combine(a.pip(), b.pip(), CombineMode::consistent));
}

CubicalComplex wedge(const CubicalComplex& a, const CubicalComplex& b) {
    return CubicalComplex::build(combine(a.pip(), b.pip(), CombineMode::inconsistent));
}

std::vector<int> skeleton_distances(const CubicalComplex& x, int from) {
    require_vertex(x, from);
    std::vector<int> dist(x.vertices().size(), -1);
    dist[static_cast<std::size_t>(from)] = 0;
    std::deque<int> queue{from};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : x.adjacency()[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int geodesic_distance(const CubicalComplex& x, int u, int v) {
    require_vertex(x, v);
    return skeleton_distances(x, u)[static_cast<std::size_t>(v)];
}

std::optional<int> interval_witness(const CubicalComplex& x) {
    const auto from_root = skeleton_distances(x, x.root());
    const int nv = static_cast<int>(x.vertices().size());
    // A witness is at maximal distance from the root.
    const int far = *std::max_element(from_root.begin(), from_root.end());
    for (int v = 0; v < nv; ++v) {
        if (from_root[static_cast<std::size_t>(v)] != far) {
            continue;
        }
        const auto from_v = skeleton_distances(x, v);
        bool ok = true;
        for (int w = 0; w < nv && ok; ++w) {
            ok = from_root[static_cast<std::size_t>(w)] + from_v[static_cast<std::size_t>(w)] == far;
        }
        if (ok) {
            return v;
        }
    }
    return std::nullopt;
}

bool is_closed_star_of_root(const CubicalComplex& x) {
    const auto fs = facets(x);
    return std::all_of(fs.begin(), fs.end(), [&x](const CubicalFacet& f) {
        const auto& face = x.faces()[static_cast<std::size_t>(f.face)];
        return face.downset == face.directions;
    });
}

bool hyperplanes_commonly_intersect(const CubicalComplex& x, ElementSet s) {
    if (!s.subset_of(x.pip().ground())) {
        throw IndexError(s.to_string() + " is not a set of elements");
    }
    return std::any_of(x.faces().begin(), x.faces().end(),
                       [s](const CubicalFace& f) { return s.subset_of(f.directions); });
}

AbstractCubicalComplex to_abstract(const CubicalComplex& x) {
    std::vector<std::vector<int>> faces;
    faces.reserve(x.faces().size());
    for (const auto& f : x.faces()) {
        faces.push_back(x.vertex_set(f));
    }
    return AbstractCubicalComplex::create(static_cast<int>(x.vertices().size()), std::move(faces), x.root());
}

std::vector<int> class_elements(const CubicalComplex& x, const AbstractCubicalComplex& a,
                                const HyperplaneStructure& h) {
    std::vector<int> out;
    for (const auto& members : h.class_edges) {
        int element = -1;
        for (int pos : members) {
            const auto& vs = a.face(static_cast<std::size_t>(h.edges[static_cast<std::size_t>(pos)]));
            const ElementSet diff = x.vertices()[static_cast<std::size_t>(vs[0])] ^ x.vertices()[static_cast<std::size_t>(vs[1])];
            if (diff.size() != 1 || (element >= 0 && diff.min() != element)) {
                throw ValidationError("hyperplane class does not match a single element");
            }
            element = diff.min();
        }
        out.push_back(element);
    }
    return out;
}

std::vector<ElementSet> hyperplane_union_components(const CubicalComplex& x) {
    const int n = x.pip().size();
    UnionFind uf(static_cast<std::size_t>(n));
    for (const auto& f : x.faces()) {
        if (f.dimension() >= 2) {
            const int first = f.directions.min();
            for (int e : f.directions) {
                uf.unite(first, e);
            }
        }
    }
    std::vector<ElementSet> comps(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        comps[static_cast<std::size_t>(uf.find(e))].insert(e);
    }
    std::vector<ElementSet> out;
    for (ElementSet c : comps) {
        if (!c.empty()) {
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](ElementSet l, ElementSet r) { return l.min() < r.min(); });
    return out;
}

int vertex_deleted_component_count(const CubicalComplex& x) {
    const auto& faces = x.faces();
    UnionFind uf(faces.size());
    for (auto [lo, hi] : covering_pairs(x)) {
        if (faces[static_cast<std::size_t>(lo)].dimension() >= 1) {
            uf.unite(lo, hi);
        }
    }
    int count = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].dimension() >= 1 && uf.find(static_cast<int>(i)) == static_cast<int>(i)) {
            ++count;
        }
    }
    return count;
}

}  // namespace pipcat
