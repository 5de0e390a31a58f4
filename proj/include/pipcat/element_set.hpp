#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace pipcat {

/// Hard upper bound on ground-set size; an ElementSet is a 64-bit mask.
inline constexpr int kMaxElements = 64;

/// A subset of the ground set {0, ..., n-1}, stored as a bitmask.
class ElementSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
    ElementSet(std::initializer_list<int> members);

    /// The full ground set {0, ..., n-1}.
    static constexpr ElementSet range(int n) {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElementSet singleton(int x) { return ElementSet(std::uint64_t{1} << x); }
    static ElementSet from_members(const std::vector<int>& members);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int x) { bits_ |= std::uint64_t{1} << x; }
    constexpr void erase(int x) { bits_ &= ~(std::uint64_t{1} << x); }

    constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr ElementSet with(int x) const { return ElementSet(bits_ | (std::uint64_t{1} << x)); }
    constexpr ElementSet without(int x) const { return ElementSet(bits_ & ~(std::uint64_t{1} << x)); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> members() const;

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
    constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(ElementSet, ElementSet) = default;
    /// Bitmask order, for ordered containers (not the canonical face order).
    friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

    /// Renders as "{1,2,3}" with labels shifted by `base`.
    std::string to_string(int base = 0) const;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical enumeration order: by size, then lexicographically on the
/// sorted member lists.
constexpr bool canonical_less(ElementSet a, ElementSet b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    ElementSet diff = a ^ b;
    if (diff.empty()) {
        return false;
    }
    return a.contains(diff.min());
}

struct CanonicalLess {
    constexpr bool operator()(ElementSet a, ElementSet b) const { return canonical_less(a, b); }
};

void sort_canonical(std::vector<ElementSet>& sets);

std::ostream& operator<<(std::ostream& os, ElementSet s);

struct ElementSetHash {
    std::size_t operator()(ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace pipcat
