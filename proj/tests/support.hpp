#pragma once

// Shared test helpers: fixture loading, an independent seeded PIP generator
// and brute-force oracles that work from raw relation matrices.

#include <cstdint>
#include <string>
#include <vector>

#include "pipcat/errors.hpp"
#include "pipcat/io.hpp"
#include "pipcat/pip.hpp"

namespace testing_support {

using pipcat::ElementSet;
using pipcat::Pip;

inline std::string data_path(const std::string& file) { return std::string(PIPCAT_DATA_DIR) + "/" + file; }

inline Pip fixture(const std::string& stem) { return pipcat::io::parse_pip(pipcat::io::read_file(data_path(stem + ".pip"))); }

/// splitmix64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t state_;
};

/// Raw relation data of a generated PIP, closed by the test itself.
struct RawPip {
    int n = 0;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::pair<int, int>> incons;
    std::vector<std::vector<bool>> leq;    // reflexive-transitive closure
    std::vector<std::vector<bool>> clash;  // upward closure of incons
    Pip pip;
};

inline void close_relations(RawPip& r) {
    const int n = r.n;
    r.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r.leq[i][i] = true;
    for (auto [a, b] : r.covers) r.leq[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r.leq[i][k] && r.leq[k][j]) r.leq[i][j] = true;
    r.clash.assign(n, std::vector<bool>(n, false));
    for (auto [a, b] : r.incons)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((r.leq[a][x] && r.leq[b][y]) || (r.leq[b][x] && r.leq[a][y])) r.clash[x][y] = true;
}

/// Random order over a random permutation of labels; inconsistent pairs
/// are added one at a time and kept only when no element becomes
/// inconsistent with itself.
inline RawPip random_raw_pip(std::uint64_t seed, int n, double order_density, double incons_density) {
    Rng rng(seed);
    RawPip r;
    r.n = n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(order_density)) r.covers.emplace_back(perm[i], perm[j]);
    close_relations(r);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (r.leq[a][b] || r.leq[b][a] || !rng.chance(incons_density)) continue;
            r.incons.emplace_back(a, b);
            close_relations(r);
            bool self = false;
            for (int x = 0; x < n; ++x) self = self || r.clash[x][x];
            if (self) {
                r.incons.pop_back();
                close_relations(r);
            }
        }
    }
    r.pip = Pip::from_relations(n, r.covers, r.incons);
    return r;
}

inline bool raw_consistent(const RawPip& r, ElementSet s) {
    for (int a : s)
        for (int b : s)
            if (r.clash[a][b]) return false;
    return true;
}

inline bool raw_downset(const RawPip& r, ElementSet s) {
    for (int b : s)
        for (int a = 0; a < r.n; ++a)
            if (r.leq[a][b] && !s.contains(a)) return false;
    return true;
}

inline bool raw_antichain(const RawPip& r, ElementSet s) {
    for (int a : s)
        for (int b : s)
            if (a != b && r.leq[a][b]) return false;
    return true;
}

/// Every subset of 0..n-1 satisfying `pred`.
template <class Pred>
std::vector<ElementSet> subsets_where(int n, Pred pred) {
    std::vector<ElementSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (pred(ElementSet(m))) out.emplace_back(m);
    return out;
}

}  // namespace testing_support
