#include "pipcat/pip.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <tuple>

#include "pipcat/config.hpp"
#include "pipcat/errors.hpp"

namespace pipcat {

namespace {

std::string label(int x) { return std::to_string(x); }

void check_index(int n, int x) {
    if (x < 0 || x >= n) {
        throw IndexError("element " + label(x) + " outside 0.." + label(n - 1));
    }
}

ElementSet shifted(ElementSet s, int offset) { return ElementSet(s.bits() << offset); }

}  // namespace

Pip Pip::from_relations(int n, const std::vector<Pair>& covers, const std::vector<Pair>& minimal_incons) {
    if (n < 0) {
        throw IndexError("negative element count");
    }
    if (n > kMaxElements) {
        throw CapExceeded("at most " + label(kMaxElements) + " elements are representable");
    }
    Pip p;
    p.n_ = n;
    p.down_.resize(static_cast<std::size_t>(n));
    p.up_.resize(static_cast<std::size_t>(n));
    p.incons_.resize(static_cast<std::size_t>(n));

    for (int x = 0; x < n; ++x) {
        p.down_[x] = ElementSet::singleton(x);
    }
    for (auto [a, b] : covers) {
        check_index(n, a);
        check_index(n, b);
        if (a == b) {
            throw CycleError("order relation " + label(a) + " < " + label(b) + " is a loop");
        }
        p.down_[b].insert(a);
    }
    // Warshall
    for (int k = 0; k < n; ++k) {
        for (int x = 0; x < n; ++x) {
            if (p.down_[x].contains(k)) {
                p.down_[x] |= p.down_[k];
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y : p.down_[x]) {
            if (y != x && p.down_[y].contains(x)) {
                throw CycleError("order relations form a cycle through " + label(std::min(x, y)) + " and " +
                                 label(std::max(x, y)));
            }
            p.up_[y].insert(x);
        }
    }

    for (auto [a, b] : minimal_incons) {
        check_index(n, a);
        check_index(n, b);
        for (int a2 : p.up_[a]) {
            for (int b2 : p.up_[b]) {
                if (a2 == b2) {
                    throw SelfInconsistentError("inconsistency " + label(a) + " <-> " + label(b) +
                                                " is inherited by " + label(a2) + " <-> " + label(a2));
                }
                p.incons_[a2].insert(b2);
                p.incons_[b2].insert(a2);
            }
        }
    }
    return p;
}

std::vector<Pair> Pip::cover_relations() const {
    std::vector<Pair> out;
    for (int b = 0; b < n_; ++b) {
        for (int a : down_[b].without(b)) {
            const ElementSet between = (down_[b].without(b) & up_[a]).without(a);
            if (between.empty()) {
                out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pair> Pip::minimal_inconsistencies() const {
    std::vector<Pair> out;
    for (int a = 0; a < n_; ++a) {
        for (int b : incons_[a]) {
            if (b < a) {
                continue;
            }
            bool minimal = true;
            for (int a2 : down_[a]) {
                ElementSet hits = incons_[a2] & down_[b];
                if (a2 == a) {
                    hits.erase(b);
                }
                if (!hits.empty()) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Pip::order_relation_count() const {
    std::size_t count = 0;
    for (const auto& d : down_) {
        count += static_cast<std::size_t>(d.size());
    }
    return count;
}

std::size_t Pip::inconsistent_pair_count() const {
    std::size_t count = 0;
    for (const auto& s : incons_) {
        count += static_cast<std::size_t>(s.size());
    }
    return count / 2;
}

bool Pip::has_inconsistencies() const {
    return std::any_of(incons_.begin(), incons_.end(), [](ElementSet s) { return !s.empty(); });
}

bool Pip::has_strict_order() const {
    return std::any_of(down_.begin(), down_.end(), [](ElementSet s) { return s.size() > 1; });
}

Pip Pip::induced(ElementSet subset, std::vector<int>* labels) const {
    subset &= ground();
    std::vector<int> old_of_new = subset.members();
    std::vector<int> new_of_old(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < old_of_new.size(); ++i) {
        new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
    }
    auto remap = [&](ElementSet s) {
        ElementSet out;
        for (int x : s & subset) {
            out.insert(new_of_old[static_cast<std::size_t>(x)]);
        }
        return out;
    };
    Pip q;
    q.n_ = static_cast<int>(old_of_new.size());
    for (int x : old_of_new) {
        q.down_.push_back(remap(down_[x]));
        q.up_.push_back(remap(up_[x]));
        q.incons_.push_back(remap(incons_[x]));
    }
    if (labels != nullptr) {
        *labels = std::move(old_of_new);
    }
    return q;
}

Pip Pip::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw PreconditionError("relabeling has wrong length");
    }
    ElementSet image;
    for (int y : perm) {
        check_index(n_, y);
        image.insert(y);
    }
    if (image.size() != n_) {
        throw PreconditionError("relabeling is not a permutation");
    }
    auto remap = [&](ElementSet s) {
        ElementSet out;
        for (int x : s) {
            out.insert(perm[static_cast<std::size_t>(x)]);
        }
        return out;
    };
    Pip q;
    q.n_ = n_;
    q.down_.resize(down_.size());
    q.up_.resize(up_.size());
    q.incons_.resize(incons_.size());
    for (int x = 0; x < n_; ++x) {
        const auto y = static_cast<std::size_t>(perm[static_cast<std::size_t>(x)]);
        q.down_[y] = remap(down_[x]);
        q.up_[y] = remap(up_[x]);
        q.incons_[y] = remap(incons_[x]);
    }
    return q;
}

ElementSet SubPip::to_parent(ElementSet s) const {
    ElementSet out;
    for (int x : s) {
        out.insert(labels.at(static_cast<std::size_t>(x)));
    }
    return out;
}

ElementSet SubPip::from_parent(ElementSet s) const {
    ElementSet out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (s.contains(labels[i])) {
            out.insert(static_cast<int>(i));
        }
    }
    return out;
}

Pip normalize(const Pip& p) {
    return Pip::from_relations(p.size(), p.cover_relations(), p.minimal_inconsistencies());
}

ElementSet order_closure(const Pip& p, ElementSet s, Direction dir) {
    if (!s.subset_of(p.ground())) {
        throw IndexError("set " + s.to_string() + " is not inside the ground set");
    }
    ElementSet out;
    for (int x : s) {
        out |= dir == Direction::down ? p.down(x) : p.up(x);
    }
    return out;
}

ElementSet extremal_elements(const Pip& p, ElementSet s, Extremum which) {
    if (!s.subset_of(p.ground())) {
        throw IndexError("set " + s.to_string() + " is not inside the ground set");
    }
    ElementSet out;
    for (int x : s) {
        const ElementSet strict = (which == Extremum::max ? p.up(x) : p.down(x)).without(x);
        if (!strict.intersects(s)) {
            out.insert(x);
        }
    }
    return out;
}

bool is_consistent(const Pip& p, ElementSet s) {
    for (int x : s) {
        if (p.inconsistent_with(x).intersects(s)) {
            return false;
        }
    }
    return true;
}

bool is_antichain(const Pip& p, ElementSet s) {
    for (int x : s) {
        if ((p.down(x) | p.up(x)).without(x).intersects(s)) {
            return false;
        }
    }
    return true;
}

bool is_downset(const Pip& p, ElementSet s) {
    for (int x : s) {
        if (!p.down(x).subset_of(s)) {
            return false;
        }
    }
    return true;
}

std::vector<ElementSet> enumerate_consistent_downsets(const Pip& p, Execution exec) {
    require_within_cap(p.size(), "enumerate_consistent_downsets");
    auto out = kernels::filter_subsets(
        p.size(), [&p](ElementSet s) { return is_downset(p, s) && is_consistent(p, s); }, exec);
    sort_canonical(out);
    return out;
}

std::vector<ElementSet> enumerate_consistent_antichains(const Pip& p, Execution exec) {
    require_within_cap(p.size(), "enumerate_consistent_antichains");
    auto out = kernels::filter_subsets(
        p.size(), [&p](ElementSet s) { return is_antichain(p, s) && is_consistent(p, s); }, exec);
    sort_canonical(out);
    return out;
}

ElementSet downset_to_antichain(const Pip& p, ElementSet downset) {
    if (!downset.subset_of(p.ground()) || !is_downset(p, downset) || !is_consistent(p, downset)) {
        throw PreconditionError(downset.to_string() + " is not a consistent downset");
    }
    return extremal_elements(p, downset, Extremum::max);
}

ElementSet antichain_to_downset(const Pip& p, ElementSet antichain) {
    if (!antichain.subset_of(p.ground()) || !is_antichain(p, antichain) || !is_consistent(p, antichain)) {
        throw PreconditionError(antichain.to_string() + " is not a consistent antichain");
    }
    return order_closure(p, antichain, Direction::down);
}

Pip combine(const Pip& p, const Pip& q, CombineMode mode) {
    const int n = p.size() + q.size();
    require_within_cap(n, "combine");
    std::vector<Pair> covers;
    std::vector<Pair> incons;
    for (auto [a, b] : p.cover_relations()) {
        covers.emplace_back(a, b);
    }
    for (auto [a, b] : q.cover_relations()) {
        covers.emplace_back(a + p.size(), b + p.size());
    }
    for (auto [a, b] : p.minimal_inconsistencies()) {
        incons.emplace_back(a, b);
    }
    for (auto [a, b] : q.minimal_inconsistencies()) {
        incons.emplace_back(a + p.size(), b + p.size());
    }
    if (mode == CombineMode::inconsistent) {
        const ElementSet p_min = extremal_elements(p, p.ground(), Extremum::min);
        const ElementSet q_min = shifted(extremal_elements(q, q.ground(), Extremum::min), p.size());
        for (int a : p_min) {
            for (int b : q_min) {
                incons.emplace_back(a, b);
            }
        }
    }
    return Pip::from_relations(n, covers, incons);
}

SubPip crossing_neighborhood(const Pip& p, int x) {
    check_index(p.size(), x);
    SubPip sub;
    sub.pip = p.induced(p.ground() - p.conflicts(x), &sub.labels);
    return sub;
}

ChainCover min_chain_cover(const Pip& p) {
    if (p.has_inconsistencies()) {
        throw PreconditionError("chain cover requires a PIP without inconsistent pairs");
    }
    const int n = p.size();
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);  // right y -> left x with x < y matched

    std::vector<char> visited;
    auto augment = [&](auto&& self, int x) -> bool {
        for (int y : p.up(x).without(x)) {
            if (visited[static_cast<std::size_t>(y)]) {
                continue;
            }
            visited[static_cast<std::size_t>(y)] = 1;
            const int owner = match_right[static_cast<std::size_t>(y)];
            if (owner < 0 || self(self, owner)) {
                match_right[static_cast<std::size_t>(y)] = x;
                return true;
            }
        }
        return false;
    };
    for (int x = 0; x < n; ++x) {
        visited.assign(static_cast<std::size_t>(n), 0);
        augment(augment, x);
    }

    std::vector<int> successor(static_cast<std::size_t>(n), -1);
    for (int y = 0; y < n; ++y) {
        if (match_right[static_cast<std::size_t>(y)] >= 0) {
            successor[static_cast<std::size_t>(match_right[static_cast<std::size_t>(y)])] = y;
        }
    }
    ChainCover cover;
    for (int start = 0; start < n; ++start) {
        if (match_right[static_cast<std::size_t>(start)] >= 0) {
            continue;
        }
        std::vector<int> chain;
        for (int x = start; x >= 0; x = successor[static_cast<std::size_t>(x)]) {
            chain.push_back(x);
        }
        cover.chains.push_back(std::move(chain));
    }
    return cover;
}

namespace {

using Signature = std::array<int, 6>;

std::vector<Signature> signatures(const Pip& p) {
    std::vector<int> hasse_in(static_cast<std::size_t>(p.size()), 0);
    std::vector<int> hasse_out(static_cast<std::size_t>(p.size()), 0);
    for (auto [a, b] : p.cover_relations()) {
        ++hasse_out[static_cast<std::size_t>(a)];
        ++hasse_in[static_cast<std::size_t>(b)];
    }
    std::vector<int> minimal_deg(static_cast<std::size_t>(p.size()), 0);
    for (auto [a, b] : p.minimal_inconsistencies()) {
        ++minimal_deg[static_cast<std::size_t>(a)];
        ++minimal_deg[static_cast<std::size_t>(b)];
    }
    std::vector<Signature> out;
    for (int x = 0; x < p.size(); ++x) {
        const auto i = static_cast<std::size_t>(x);
        out.push_back({p.down(x).size(), p.up(x).size(), hasse_in[i], hasse_out[i], p.inconsistent_with(x).size(),
                       minimal_deg[i]});
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> pip_isomorphic(const Pip& p, const Pip& q) {
    if (p.size() > kMaxIsomorphismSize || q.size() > kMaxIsomorphismSize) {
        throw CapExceeded("isomorphism search is limited to " + label(kMaxIsomorphismSize) + " elements");
    }
    if (p.size() != q.size() || p.order_relation_count() != q.order_relation_count() ||
        p.inconsistent_pair_count() != q.inconsistent_pair_count()) {
        return std::nullopt;
    }
    const auto sig_p = signatures(p);
    const auto sig_q = signatures(q);
    {
        auto a = sig_p;
        auto b = sig_q;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            return std::nullopt;
        }
    }

    const int n = p.size();
    // Assign p's elements rarest signature first.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[static_cast<std::size_t>(i)] = i;
    }
    auto frequency = [&](int x) {
        return std::count(sig_p.begin(), sig_p.end(), sig_p[static_cast<std::size_t>(x)]);
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frequency(a) < frequency(b); });

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    ElementSet used;
    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) {
            return true;
        }
        const int x = order[depth];
        for (int y = 0; y < n; ++y) {
            if (used.contains(y) || sig_q[static_cast<std::size_t>(y)] != sig_p[static_cast<std::size_t>(x)]) {
                continue;
            }
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const int a = order[d];
                const int b = image[static_cast<std::size_t>(a)];
                ok = p.leq(a, x) == q.leq(b, y) && p.leq(x, a) == q.leq(y, b) &&
                     p.inconsistent(a, x) == q.inconsistent(b, y);
            }
            if (!ok) {
                continue;
            }
            image[static_cast<std::size_t>(x)] = y;
            used.insert(y);
            if (self(self, depth + 1)) {
                return true;
            }
            used.erase(y);
            image[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    if (!extend(extend, 0)) {
        return std::nullopt;
    }
    return image;
}

Pip random_pip(std::uint64_t seed, int n, double order_density, double incons_density) {
    if (!(order_density >= 0.0 && order_density <= 1.0) || !(incons_density >= 0.0 && incons_density <= 1.0)) {
        throw PreconditionError("densities must lie in [0, 1]");
    }
    if (n < 0 || n > kMaxElements) {
        throw IndexError("random_pip size out of range");
    }
    std::mt19937_64 rng(seed);
    // Portable uniform draw in [0,1); std distributions differ across libraries.
    auto coin = [&rng](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

    std::vector<Pair> covers;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (coin(order_density)) {
                covers.emplace_back(i, j);
            }
        }
    }
    const Pip poset = Pip::from_relations(n, covers, {});

    std::vector<Pair> incons;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (poset.comparable(a, b) || poset.up(a).intersects(poset.up(b))) {
                continue;
            }
            if (coin(incons_density)) {
                incons.emplace_back(a, b);
            }
        }
    }
    return Pip::from_relations(n, poset.cover_relations(), incons);
}

}  // namespace pipcat
