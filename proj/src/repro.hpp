#pragma once

// The three worked inversions (j = 8000 at i, j = -3375 and j = -50000 at
// rho) with their matching-decimal counts.

#include "mpcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jinv {

struct ReproExample {
    std::string name;
    std::string description;
    unsigned digits;
    std::size_t terms;
    long claimed_decimals;  // reference count quoted with the example
    long required_decimals; // pass threshold
    /// Agreement must also stay below this many decimals, when set.
    std::optional<long> below_decimals;
    long achieved_decimals;
    bool passed;
    std::string value;
    std::string target;
    std::vector<std::string> warnings;
};

struct ReproReport {
    std::vector<ReproExample> examples;
    bool all_passed;
};

/// floor(-log10 |x - target|), clamped to [0, cap]; cap for an exact match.
long matching_decimals(const mp::Complex &x, const mp::Complex &target, long cap);

/// Runs all three examples. `digits` replaces the per-example precision.
ReproReport run_reproduction(std::optional<unsigned> digits = std::nullopt);

} // namespace jinv
