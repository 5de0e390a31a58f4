#pragma once

#include <cstddef>

namespace pipcat {

/// Name of the environment variable that overrides the element cap.
inline constexpr const char* kCapEnvVar = "PIPCAT_MAX_ELEMENTS";

inline constexpr int kDefaultElementCap = 20;
inline constexpr std::size_t kMaxSimplicialFaces = std::size_t{1} << 20;

/// Largest ground set the exponential enumerations accept. Reads
/// PIPCAT_MAX_ELEMENTS once; values outside [1, 40] are ignored.
int element_cap();

/// Throws CapExceeded when n is above element_cap().
void require_within_cap(int n, const char* what);

}  // namespace pipcat
