#include "pipcat/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pipcat/errors.hpp"

namespace pipcat {

namespace {

bool fits(std::uint64_t label, int r) { return r >= 64 || (label >> r) == 0; }

bool face_ok(const std::vector<int>& face, const std::vector<std::uint64_t>& label, int r) {
    std::uint64_t all = ~std::uint64_t{0};
    std::uint64_t any = 0;
    std::vector<std::uint64_t> image;
    image.reserve(face.size());
    for (int v : face) {
        const std::uint64_t l = label[static_cast<std::size_t>(v)];
        if (!fits(l, r)) {
            return false;
        }
        all &= l;
        any |= l;
        image.push_back(l);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        return false;
    }
    return std::bit_width(face.size()) - 1 == static_cast<unsigned>(std::popcount(any ^ all));
}

std::vector<std::vector<int>> face_vertex_lists(const CubicalComplex& x) {
    std::vector<std::vector<int>> out;
    out.reserve(x.faces().size());
    for (const auto& f : x.faces()) {
        out.push_back(x.vertex_set(f));
    }
    return out;
}

std::vector<int> degeneracy_order(const std::vector<ElementSet>& adj, ElementSet vertices) {
    std::vector<int> order;
    ElementSet left = vertices;
    while (!left.empty()) {
        int best = -1;
        int best_degree = kMaxElements + 1;
        for (int v : left) {
            const int d = (adj[static_cast<std::size_t>(v)] & left).size();
            if (d < best_degree) {
                best = v;
                best_degree = d;
            }
        }
        order.push_back(best);
        left.erase(best);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

bool assign(std::size_t pos, const std::vector<int>& order, const std::vector<ElementSet>& adj, int r,
            std::vector<int>& color) {
    if (pos == order.size()) {
        return true;
    }
    const int v = order[pos];
    for (int c = 0; c < r; ++c) {
        bool clash = false;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(w)] == c) {
                clash = true;
                break;
            }
        }
        if (clash) {
            continue;
        }
        color[static_cast<std::size_t>(v)] = c;
        if (assign(pos + 1, order, adj, r, color)) {
            return true;
        }
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
}

}  // namespace

Graph skeleton_graph(const SimplicialComplex& k) {
    Graph g;
    g.n = k.vertices().empty() ? 0 : k.vertices().max() + 1;
    g.edges = k.edges();
    return g;
}

bool is_valid_coloring(const SimplicialComplex& k, const SimplicialColoring& c) {
    try {
        require_valid_coloring(k, c);
        return true;
    } catch (const InvalidColoring&) {
        return false;
    }
}

void require_valid_coloring(const SimplicialComplex& k, const SimplicialColoring& c) {
    if (c.r < 0 || c.r > kMaxColors) {
        throw InvalidColoring("colour count " + std::to_string(c.r) + " out of range");
    }
    for (int v : k.vertices()) {
        if (static_cast<std::size_t>(v) >= c.color.size()) {
            throw InvalidColoring("vertex " + std::to_string(v) + " has no colour");
        }
        const int col = c.color[static_cast<std::size_t>(v)];
        if (col < 0 || col >= c.r) {
            throw InvalidColoring("vertex " + std::to_string(v) + " has colour " + std::to_string(col) +
                                  " outside 0.." + std::to_string(c.r - 1));
        }
    }
    for (auto [a, b] : k.edges()) {
        if (c.color[static_cast<std::size_t>(a)] == c.color[static_cast<std::size_t>(b)]) {
            throw InvalidColoring("edge {" + std::to_string(a) + "," + std::to_string(b) + "} is monochromatic");
        }
    }
}

std::optional<SimplicialColoring> find_r_coloring(const SimplicialComplex& k, int r) {
    const Graph g = skeleton_graph(k);
    SimplicialColoring c{r, std::vector<int>(static_cast<std::size_t>(g.n), -1)};
    if (k.vertices().empty()) {
        return c;
    }
    if (r <= 0 || r > kMaxColors) {
        return std::nullopt;
    }
    const auto adj = g.adjacency();
    const auto order = degeneracy_order(adj, k.vertices());
    if (!assign(0, order, adj, r, c.color)) {
        return std::nullopt;
    }
    return c;
}

int chromatic_number(const SimplicialComplex& k) {
    for (int r = 0;; ++r) {
        if (find_r_coloring(k, r)) {
            return r;
        }
    }
}

bool is_balanced(const SimplicialComplex& k) { return chromatic_number(k) <= k.dimension() + 1; }

CubicalColoring lift_coloring(const CubicalComplex& x, const SimplicialColoring& ks) {
    require_valid_coloring(crossing_complex(x.pip(), Execution::serial), ks);
    CubicalColoring kc{ks.r, {}};
    kc.label.reserve(x.vertices().size());
    for (ElementSet downset : x.vertices()) {
        std::uint64_t w = 0;
        for (int e : downset) {
            w ^= std::uint64_t{1} << ks[e];
        }
        kc.label.push_back(w);
    }
    if (auto bad = invalid_face(x, kc)) {
        throw InvalidColoring("lifted colouring fails on face " + std::to_string(*bad));
    }
    return kc;
}

std::optional<std::size_t> invalid_face(const std::vector<std::vector<int>>& faces, const CubicalColoring& kc) {
    if (kc.r < 0 || kc.r > kMaxColors) {
        throw InvalidColoring("colour count " + std::to_string(kc.r) + " out of range");
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (int v : faces[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= kc.label.size()) {
                throw InvalidColoring("vertex " + std::to_string(v) + " has no label");
            }
        }
        if (!face_ok(faces[i], kc.label, kc.r)) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> invalid_face(const CubicalComplex& x, const CubicalColoring& kc) {
    return invalid_face(face_vertex_lists(x), kc);
}

bool validate_cubical_coloring(const CubicalComplex& x, const CubicalColoring& kc) {
    return kc.label.size() == x.vertices().size() && !invalid_face(x, kc);
}

bool validate_cubical_coloring(const AbstractCubicalComplex& a, const CubicalColoring& kc) {
    return kc.label.size() == static_cast<std::size_t>(a.n_vertices()) && !invalid_face(a.faces(), kc);
}

SimplicialColoring project_coloring(const CubicalComplex& x, const CubicalColoring& kc) {
    if (kc.label.size() != x.vertices().size()) {
        throw InvalidColoring("expected " + std::to_string(x.vertices().size()) + " labels, got " +
                              std::to_string(kc.label.size()));
    }
    if (auto bad = invalid_face(x, kc)) {
        const auto& f = x.faces()[*bad];
        throw InvalidColoring("not a bijection onto a cube face on C(" + f.downset.to_string() + ", " +
                              f.directions.to_string() + ")");
    }
    SimplicialColoring ks{kc.r, std::vector<int>(static_cast<std::size_t>(x.pip().size()), -1)};
    for (const auto& e : x.edges()) {
        const std::uint64_t flip = kc.label[static_cast<std::size_t>(e.lower)] ^ kc.label[static_cast<std::size_t>(e.upper)];
        const int coord = std::countr_zero(flip);
        int& slot = ks.color[static_cast<std::size_t>(e.element)];
        if (slot >= 0 && slot != coord) {
            throw InvalidColoring("edges of element " + std::to_string(e.element) + " flip coordinates " +
                                  std::to_string(slot) + " and " + std::to_string(coord));
        }
        slot = coord;
    }
    return ks;
}

CubicalSearch exhaustive_cubical_coloring(const CubicalComplex& x, int r, std::uint64_t node_budget) {
    CubicalSearch out;
    const std::size_t nv = x.vertices().size();
    if (r < 0 || r > kMaxColors) {
        return out;
    }
    const auto faces = face_vertex_lists(x);
    // Faces become checkable once their largest vertex is labeled.
    std::vector<std::vector<std::size_t>> closing(nv);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].size() > 1) {
            closing[static_cast<std::size_t>(faces[i].back())].push_back(i);
        }
    }
    std::vector<std::vector<int>> lower(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        for (int w : x.adjacency()[v]) {
            if (static_cast<std::size_t>(w) < v) {
                lower[v].push_back(w);
            }
        }
    }

    std::vector<std::uint64_t> label(nv, 0);
    bool exhausted = false;
    // Coordinates are interchangeable, so a new coordinate is only ever the
    // next unused one.
    auto search = [&](auto&& self, std::size_t v, int used) -> bool {
        if (v == nv) {
            return true;
        }
        const std::uint64_t base = label[static_cast<std::size_t>(lower[v].front())];
        for (int j = 0; j < std::min(r, used + 1); ++j) {
            if (++out.nodes > node_budget) {
                exhausted = true;
                return false;
            }
            label[v] = base ^ (std::uint64_t{1} << j);
            bool ok = true;
            for (std::size_t f : closing[v]) {
                if (!face_ok(faces[f], label, r)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, v + 1, std::max(used, j + 1))) {
                return true;
            }
            if (exhausted) {
                return false;
            }
        }
        return false;
    };
    const bool found = search(search, 1, 0);
    if (found) {
        out.result = SearchResult::found;
        out.coloring = CubicalColoring{r, label};
    } else {
        out.result = exhausted ? SearchResult::budget_exhausted : SearchResult::none;
    }
    return out;
}

BalancedPair is_balanced_pair(const Pip& p) {
    BalancedPair out;
    const SimplicialComplex delta = crossing_complex(p, Execution::serial);
    out.simplicial = is_balanced(delta);
    const CubicalComplex x = CubicalComplex::build(p, Execution::serial);
    const int d = x.dimension();
    const CubicalSearch search = exhaustive_cubical_coloring(x, d);
    if (search.result != SearchResult::budget_exhausted) {
        out.cubical = search.result == SearchResult::found;
        out.cubical_exhaustive = true;
        return out;
    }
    if (auto ks = find_r_coloring(delta, d)) {
        out.cubical = validate_cubical_coloring(x, lift_coloring(x, *ks));
    }
    return out;
}

SimplicialColoring dilworth_coloring(const Pip& p) {
    if (p.has_inconsistencies()) {
        throw PreconditionError("Dilworth colouring needs a PIP without inconsistent pairs");
    }
    const ChainCover cover = min_chain_cover(p);
    SimplicialColoring c{static_cast<int>(cover.chains.size()), std::vector<int>(static_cast<std::size_t>(p.size()), -1)};
    for (std::size_t i = 0; i < cover.chains.size(); ++i) {
        for (int e : cover.chains[i]) {
            c.color[static_cast<std::size_t>(e)] = static_cast<int>(i);
        }
    }
    return c;
}

}  // namespace pipcat
