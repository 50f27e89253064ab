#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace abptk {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
};

/// Runs the full reproducibility battery (exact identities, bound numbers,
/// round-trips, finite-field oracles, property suites) and returns one
/// result per criterion. Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240917);

/// Prints one pass/fail line per criterion; returns true iff all pass.
bool print_acceptance(std::ostream& os, std::uint64_t seed = 20240917);

}  // namespace abptk
