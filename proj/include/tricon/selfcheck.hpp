#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricon/parallel.hpp"

namespace tricon {

struct SelfcheckOptions {
    std::uint64_t seed = 20240601;
    int trials = 50;
    int oracle_samples = 500;
    ExecOptions exec{};
};

struct PropertyResult {
    std::string name;
    int passed = 0;
    int total = 0;
    /// First failing input with the observed values, serialized.
    std::optional<std::string> counterexample;

    bool ok() const { return passed == total; }
};

/// Randomized invariant suite: coefficient-form equivalence, the substate
/// counting inequality, and the bound <= sampled-roof sandwich.
std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& options);

} // namespace tricon
