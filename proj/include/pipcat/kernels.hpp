#pragma once

// Exhaustive subset scans. The serial versions are the reference
// implementation; the OpenMP versions must return identical output.

#include <cstdint>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "pipcat/element_set.hpp"

namespace pipcat {

enum class Execution { serial, parallel };

/// Subset scans below this many elements always run serially.
inline constexpr int kParallelSubsetThreshold = 14;

namespace kernels {

/// Every subset of {0..n-1} accepted by `pred`, in increasing mask order.
template <class Pred>
std::vector<ElementSet> filter_subsets_serial(int n, Pred&& pred) {
    std::vector<ElementSet> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (pred(ElementSet(mask))) {
            out.emplace_back(mask);
        }
    }
    return out;
}

/// Same contract as filter_subsets_serial. The mask range is cut into
/// fixed blocks so the concatenation order does not depend on scheduling.
template <class Pred>
std::vector<ElementSet> filter_subsets_parallel(int n, Pred&& pred) {
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t block = total < 4096 ? total : 4096;
    const auto nblocks = static_cast<std::int64_t>((total + block - 1) / block);
    std::vector<std::vector<ElementSet>> parts(static_cast<std::size_t>(nblocks));

#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        auto& part = parts[static_cast<std::size_t>(b)];
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
        const std::uint64_t hi = lo + block < total ? lo + block : total;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (pred(ElementSet(mask))) {
                part.emplace_back(mask);
            }
        }
    }

    std::size_t count = 0;
    for (const auto& part : parts) {
        count += part.size();
    }
    std::vector<ElementSet> out;
    out.reserve(count);
    for (const auto& part : parts) {
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

template <class Pred>
std::vector<ElementSet> filter_subsets(int n, Pred&& pred, Execution exec) {
    if (exec == Execution::parallel && n >= kParallelSubsetThreshold) {
        return filter_subsets_parallel(n, pred);
    }
    return filter_subsets_serial(n, pred);
}

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace kernels
}  // namespace pipcat
