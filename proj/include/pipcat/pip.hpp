#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pipcat/element_set.hpp"
#include "pipcat/kernels.hpp"

namespace pipcat {

using Pair = std::pair<int, int>;

/// A finite poset with inconsistent pairs on the elements 0..n-1.
///
/// Relations are stored closed: `down(x)` is the principal downset of x
/// (x included), `inconsistent_with(x)` the full upward-closed set of
/// elements inconsistent with x. Instances are only produced through
/// `from_relations` (or the combinators below), so every Pip satisfies the
/// order axioms, symmetry, irreflexivity and upward inheritance.
class Pip {
public:
    Pip() = default;

    /// Closes `covers` (a < b) reflexively and transitively and closes
    /// `minimal_incons` upward. Throws IndexError, CycleError or
    /// SelfInconsistentError.
    static Pip from_relations(int n, const std::vector<Pair>& covers,
                              const std::vector<Pair>& minimal_incons);

    int size() const { return n_; }
    ElementSet ground() const { return ElementSet::range(n_); }

    bool leq(int a, int b) const { return down_[b].contains(a); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    bool inconsistent(int a, int b) const { return incons_[a].contains(b); }

    ElementSet down(int x) const { return down_[x]; }
    ElementSet up(int x) const { return up_[x]; }
    ElementSet inconsistent_with(int x) const { return incons_[x]; }
    /// Elements comparable or inconsistent with x (x included).
    ElementSet conflicts(int x) const { return down_[x] | up_[x] | incons_[x]; }

    /// Hasse diagram edges (a covered by b), sorted.
    std::vector<Pair> cover_relations() const;
    /// Inconsistent pairs (a < b as labels) not inherited from another pair.
    std::vector<Pair> minimal_inconsistencies() const;

    std::size_t order_relation_count() const;          // |{(a,b) : a <= b}|
    std::size_t inconsistent_pair_count() const;       // unordered pairs
    bool has_inconsistencies() const;
    bool has_strict_order() const;

    /// Sub-PIP induced on `subset`, relabeled 0..k-1 in increasing order.
    /// `labels`, when given, receives the original label of each new element.
    Pip induced(ElementSet subset, std::vector<int>* labels = nullptr) const;

    /// Image under a relabeling x -> perm[x] (a permutation of 0..n-1).
    Pip relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Pip&, const Pip&) = default;

private:
    int n_ = 0;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> incons_;
};

/// A sub-PIP together with the original label of each of its elements.
struct SubPip {
    Pip pip;
    std::vector<int> labels;

    ElementSet to_parent(ElementSet s) const;
    ElementSet from_parent(ElementSet s) const;
};

struct ChainCover {
    std::vector<std::vector<int>> chains;  // each listed bottom to top
};

enum class Direction { down, up };
enum class Extremum { max, min };
enum class CombineMode { consistent, inconsistent };

/// Re-runs the closure on the PIP's own cover and minimal-inconsistency
/// data; the result equals the input for every valid Pip.
Pip normalize(const Pip& p);

ElementSet order_closure(const Pip& p, ElementSet s, Direction dir);
ElementSet extremal_elements(const Pip& p, ElementSet s, Extremum which);

bool is_consistent(const Pip& p, ElementSet s);
bool is_antichain(const Pip& p, ElementSet s);
bool is_downset(const Pip& p, ElementSet s);

/// All consistent downsets, canonical order (size, then lexicographic).
std::vector<ElementSet> enumerate_consistent_downsets(const Pip& p,
                                                      Execution exec = Execution::parallel);
/// All consistent antichains, canonical order.
std::vector<ElementSet> enumerate_consistent_antichains(const Pip& p,
                                                        Execution exec = Execution::parallel);

/// max I for a consistent downset I; PreconditionError otherwise.
ElementSet downset_to_antichain(const Pip& p, ElementSet downset);
/// The downset generated by a consistent antichain; PreconditionError otherwise.
ElementSet antichain_to_downset(const Pip& p, ElementSet antichain);

/// Disjoint union with q's labels shifted by |p|. Cross pairs are
/// incomparable, and either all consistent or all inconsistent.
Pip combine(const Pip& p, const Pip& q, CombineMode mode);

/// Sub-PIP on the elements that are consistent and incomparable with x.
SubPip crossing_neighborhood(const Pip& p, int x);

/// Minimum chain partition of an inconsistency-free PIP via bipartite
/// matching on the strict order relation.
ChainCover min_chain_cover(const Pip& p);

/// A relabeling `f` with p.leq(a,b) == q.leq(f[a],f[b]) and likewise for
/// inconsistency, or nullopt. Requires |p| == |q| <= 12.
std::optional<std::vector<int>> pip_isomorphic(const Pip& p, const Pip& q);

inline constexpr int kMaxIsomorphismSize = 12;

/// Seeded random PIP: a random DAG over label order (pair i<j kept with
/// probability order_density), closed; then each incomparable pair with no
/// common upper bound is made minimally inconsistent with probability
/// incons_density, and the result closed upward.
Pip random_pip(std::uint64_t seed, int n, double order_density, double incons_density);

}  // namespace pipcat
