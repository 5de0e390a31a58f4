#include "pipcat/abstract_cubical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

#include "pipcat/errors.hpp"

namespace pipcat {

namespace {

std::string describe(const std::vector<int>& face) {
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        out += (i ? "," : "") + std::to_string(face[i]);
    }
    return out + "}";
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// Edges inside a face must form a k-cube graph: k-regular, with the
// binomial distance profile from every vertex.
void check_cube_graph(const std::vector<int>& face, int k, const std::vector<std::vector<int>>& adjacency) {
    const std::size_t m = face.size();
    std::unordered_map<int, std::size_t> local;
    for (std::size_t i = 0; i < m; ++i) {
        local[face[i]] = i;
    }
    std::vector<std::vector<std::size_t>> nbr(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (int w : adjacency[static_cast<std::size_t>(face[i])]) {
            auto it = local.find(w);
            if (it != local.end()) {
                nbr[i].push_back(it->second);
            }
        }
        if (static_cast<int>(nbr[i].size()) != k) {
            throw ValidationError("face " + describe(face) + " is not a cube: vertex " + std::to_string(face[i]) +
                                  " has " + std::to_string(nbr[i].size()) + " neighbours inside it, expected " +
                                  std::to_string(k));
        }
    }
    std::vector<int> dist(m);
    std::vector<std::uint64_t> profile(static_cast<std::size_t>(k + 1));
    for (std::size_t s = 0; s < m; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(profile.begin(), profile.end(), 0);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            if (dist[u] > k) {
                break;
            }
            ++profile[static_cast<std::size_t>(dist[u])];
            for (std::size_t w : nbr[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        for (int d = 0; d <= k; ++d) {
            if (profile[static_cast<std::size_t>(d)] != binomial(k, d)) {
                throw ValidationError("face " + describe(face) + " is not a cube: wrong distance profile");
            }
        }
    }
}

}  // namespace

AbstractCubicalComplex AbstractCubicalComplex::create(int n_vertices, std::vector<std::vector<int>> faces,
                                                      int root) {
    if (n_vertices < 1) {
        throw ValidationError("a cubical complex needs at least one vertex");
    }
    if (root < 0 || root >= n_vertices) {
        throw ValidationError("root " + std::to_string(root) + " is not a vertex");
    }
    AbstractCubicalComplex a;
    a.n_ = n_vertices;
    a.root_ = root;
    a.vertex_face_.assign(static_cast<std::size_t>(n_vertices), -1);

    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        if (f.empty()) {
            throw ValidationError("empty face");
        }
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
            throw ValidationError("face " + describe(f) + " repeats a vertex");
        }
        if (f.front() < 0 || f.back() >= n_vertices) {
            throw ValidationError("face " + describe(f) + " uses a vertex outside 0.." + std::to_string(n_vertices - 1));
        }
        if (!std::has_single_bit(f.size())) {
            throw ValidationError("face " + describe(f) + " has " + std::to_string(f.size()) +
                                  " vertices, not a power of 2");
        }
        VertexBits bits(static_cast<std::size_t>(n_vertices));
        for (int v : f) {
            bits.set(static_cast<std::size_t>(v));
        }
        const int index = static_cast<int>(a.faces_.size());
        if (!a.lookup_.emplace(bits, index).second) {
            throw ValidationError("face " + describe(f) + " listed twice");
        }
        if (f.size() == 1) {
            a.vertex_face_[static_cast<std::size_t>(f[0])] = index;
        }
        a.dims_.push_back(std::countr_zero(f.size()));
        a.bits_.push_back(std::move(bits));
        a.faces_.push_back(std::move(f));
    }
    for (int v = 0; v < n_vertices; ++v) {
        if (a.vertex_face_[static_cast<std::size_t>(v)] < 0) {
            throw ValidationError("vertex " + std::to_string(v) + " is missing its singleton face");
        }
    }

    // incidence and edge adjacency
    std::vector<std::vector<int>> containing(static_cast<std::size_t>(n_vertices));
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n_vertices));
    for (std::size_t i = 0; i < a.faces_.size(); ++i) {
        for (int v : a.faces_[i]) {
            containing[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        }
        if (a.dims_[i] == 1) {
            adjacency[static_cast<std::size_t>(a.faces_[i][0])].push_back(a.faces_[i][1]);
            adjacency[static_cast<std::size_t>(a.faces_[i][1])].push_back(a.faces_[i][0]);
        }
    }

    a.lower_.assign(a.faces_.size(), {});
    a.upper_.assign(a.faces_.size(), {});
    for (std::size_t i = 0; i < a.faces_.size(); ++i) {
        const int k = a.dims_[i];
        if (k == 0) {
            continue;
        }
        std::vector<int> subs;
        for (int v : a.faces_[i]) {
            for (int j : containing[static_cast<std::size_t>(v)]) {
                if (a.dims_[static_cast<std::size_t>(j)] == k - 1 &&
                    a.bits_[static_cast<std::size_t>(j)].is_subset_of(a.bits_[i])) {
                    subs.push_back(j);
                }
            }
        }
        std::sort(subs.begin(), subs.end());
        subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
        if (static_cast<int>(subs.size()) != 2 * k) {
            throw ValidationError("face " + describe(a.faces_[i]) + " has " + std::to_string(subs.size()) +
                                  " faces of dimension " + std::to_string(k - 1) + ", expected " +
                                  std::to_string(2 * k));
        }
        check_cube_graph(a.faces_[i], k, adjacency);
        for (int j : subs) {
            a.upper_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
        }
        a.lower_[i] = std::move(subs);
    }

    const auto maximal = a.facets();
    for (std::size_t x = 0; x < maximal.size(); ++x) {
        for (std::size_t y = x + 1; y < maximal.size(); ++y) {
            VertexBits meet = a.bits_[static_cast<std::size_t>(maximal[x])] & a.bits_[static_cast<std::size_t>(maximal[y])];
            if (meet.any() && !a.lookup_.contains(meet)) {
                throw ValidationError("faces " + describe(a.faces_[static_cast<std::size_t>(maximal[x])]) + " and " +
                                      describe(a.faces_[static_cast<std::size_t>(maximal[y])]) +
                                      " intersect in a non-face");
            }
        }
    }
    return a;
}

int AbstractCubicalComplex::dimension() const { return *std::max_element(dims_.begin(), dims_.end()); }

std::vector<std::size_t> AbstractCubicalComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (int d : dims_) {
        ++f[static_cast<std::size_t>(d)];
    }
    return f;
}

std::vector<int> AbstractCubicalComplex::facets() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (upper_[i].empty()) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

std::vector<int> AbstractCubicalComplex::edge_faces() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (dims_[i] == 1) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

std::optional<int> AbstractCubicalComplex::find_face(const std::vector<int>& sorted_vertices) const {
    VertexBits bits(static_cast<std::size_t>(n_));
    for (int v : sorted_vertices) {
        if (v < 0 || v >= n_) {
            return std::nullopt;
        }
        bits.set(static_cast<std::size_t>(v));
    }
    auto it = lookup_.find(bits);
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

AbstractCubicalComplex AbstractCubicalComplex::rerooted(int root) const {
    if (root < 0 || root >= n_) {
        throw ValidationError("root " + std::to_string(root) + " is not a vertex");
    }
    AbstractCubicalComplex a = *this;
    a.root_ = root;
    return a;
}

HyperplaneStructure hyperplane_structure(const AbstractCubicalComplex& a) {
    HyperplaneStructure h;
    h.edges = a.edge_faces();
    std::unordered_map<int, int> position;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        position[h.edges[i]] = static_cast<int>(i);
    }

    std::vector<int> parent(h.edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
            parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
        }
    };
    for (std::size_t i = 0; i < a.face_count(); ++i) {
        if (a.dimension(i) != 2) {
            continue;
        }
        const auto& sides = a.lower_covers(i);
        for (std::size_t x = 0; x < sides.size(); ++x) {
            for (std::size_t y = x + 1; y < sides.size(); ++y) {
                const auto& ex = a.face_bits(static_cast<std::size_t>(sides[x]));
                const auto& ey = a.face_bits(static_cast<std::size_t>(sides[y]));
                if (!ex.intersects(ey)) {
                    unite(position.at(sides[x]), position.at(sides[y]));
                }
            }
        }
    }

    std::unordered_map<int, int> class_of_root;
    h.edge_class.resize(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const int r = find(static_cast<int>(i));
        auto [it, inserted] = class_of_root.emplace(r, static_cast<int>(h.class_edges.size()));
        if (inserted) {
            h.class_edges.emplace_back();
        }
        h.edge_class[i] = it->second;
        h.class_edges[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }

    const auto n = static_cast<std::size_t>(a.n_vertices());
    std::vector<std::vector<std::pair<int, int>>> adjacency(n);  // (neighbour, edge position)
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = a.face(static_cast<std::size_t>(h.edges[i]));
        adjacency[static_cast<std::size_t>(e[0])].emplace_back(e[1], static_cast<int>(i));
        adjacency[static_cast<std::size_t>(e[1])].emplace_back(e[0], static_cast<int>(i));
    }

    for (int c = 0; c < h.class_count(); ++c) {
        // flood fill from the root avoiding this class's edges
        VertexBits near(n);
        std::vector<int> stack{a.root()};
        near.set(static_cast<std::size_t>(a.root()));
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adjacency[static_cast<std::size_t>(u)]) {
                if (h.edge_class[static_cast<std::size_t>(e)] != c && !near.test(static_cast<std::size_t>(w))) {
                    near.set(static_cast<std::size_t>(w));
                    stack.push_back(w);
                }
            }
        }
        VertexBits far = ~near;
        if (far.none()) {
            throw ValidationError("hyperplane " + std::to_string(c) + " does not divide the complex into two sides");
        }
        // the far side must itself be connected without the class edges
        const auto start = static_cast<int>(far.find_first());
        VertexBits seen(n);
        stack = {start};
        seen.set(static_cast<std::size_t>(start));
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adjacency[static_cast<std::size_t>(u)]) {
                if (h.edge_class[static_cast<std::size_t>(e)] != c && !seen.test(static_cast<std::size_t>(w))) {
                    seen.set(static_cast<std::size_t>(w));
                    stack.push_back(w);
                }
            }
        }
        if (seen != far) {
            throw ValidationError("hyperplane " + std::to_string(c) + " splits the complex into more than two sides");
        }
        for (int pos : h.class_edges[static_cast<std::size_t>(c)]) {
            const auto& e = a.face(static_cast<std::size_t>(h.edges[static_cast<std::size_t>(pos)]));
            if (near.test(static_cast<std::size_t>(e[0])) == near.test(static_cast<std::size_t>(e[1]))) {
                throw ValidationError("hyperplane " + std::to_string(c) + " has an edge with both ends on one side");
            }
        }
        h.far_side.push_back(std::move(far));
    }
    return h;
}

ExtractedPip extract_pip(const AbstractCubicalComplex& a) {
    HyperplaneStructure h = hyperplane_structure(a);
    const int m = h.class_count();
    if (m > kMaxElements) {
        throw ValidationError("complex has " + std::to_string(m) + " hyperplanes; at most " +
                              std::to_string(kMaxElements) + " are supported");
    }
    std::vector<Pair> order;
    std::vector<Pair> incons;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            if (x == y) {
                continue;
            }
            const auto& fx = h.far_side[static_cast<std::size_t>(x)];
            const auto& fy = h.far_side[static_cast<std::size_t>(y)];
            if (fy.is_subset_of(fx)) {
                order.emplace_back(x, y);
            } else if (x < y && !fx.intersects(fy)) {
                incons.emplace_back(x, y);
            }
        }
    }
    try {
        return ExtractedPip{Pip::from_relations(m, order, incons), std::move(h)};
    } catch (const CycleError& e) {
        throw ValidationError(std::string("hyperplane order is not a partial order: ") + e.what());
    } catch (const SelfInconsistentError& e) {
        throw ValidationError(std::string("hyperplane relations are not a PIP: ") + e.what());
    }
}

}  // namespace pipcat
