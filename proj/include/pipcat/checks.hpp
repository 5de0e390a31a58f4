#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipcat/kernels.hpp"
#include "pipcat/pip.hpp"

namespace pipcat {

struct CheckResult {
    std::string instance;
    std::string check;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

struct CheckReport {
    std::uint64_t seed = 0;
    int count = 0;
    int n_max = 0;
    std::vector<CheckResult> results;  // sorted by (instance, check)

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct CheckInstance {
    std::string name;
    Pip pip;
    std::uint64_t seed = 0;  // used to derive auxiliary instances
};

struct CheckOptions {
    std::uint64_t seed = 1;
    int count = 100;
    int n_max = 8;
    Execution exec = Execution::parallel;
    /// Directory holding the golden fixtures; empty skips them.
    std::filesystem::path fixtures;
    int round_trip_max_n = 9;
    int all_roots_max_n = 7;
    int exhaustive_coloring_max_n = 7;
    /// Face count above which the all-pairs face-lemma check is skipped.
    std::size_t face_pair_limit = 1500;
};

/// Names of the per-instance theorem suites, in report order.
const std::vector<std::string>& suite_names();

/// Deterministic random instances: seed, n and densities all derive from
/// (seed, index); n is uniform on 0..n_max.
std::vector<CheckInstance> random_instances(std::uint64_t seed, int count, int n_max);

/// The golden PIP fixtures found in `dir` (*.pip), named golden/<stem>.
std::vector<CheckInstance> golden_instances(const std::filesystem::path& dir);

/// Runs every suite on one instance. Exceptions become failures.
std::vector<CheckResult> check_instance(const CheckInstance& inst, const CheckOptions& opt);

/// Checks tied to specific fixture files (complex round trip, printed colouring).
std::vector<CheckResult> check_golden_files(const std::filesystem::path& dir);

/// Golden instances plus `count` random ones, fanned out per instance.
CheckReport run_checks(const CheckOptions& opt);

}  // namespace pipcat
