#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyharm::verify {

struct PropertyResult {
    std::string name;
    int trials = 0;
    bool passed = true;
    std::string counterexample;  // serialized first failing instance
};

/// Runs a seeded property suite. Suites: "identities" (operator algebra),
/// "decomposition" (Almansi/alternative/extension/cellular round trips),
/// "kernels" (Laurent kernels, norm membership against the critical curves),
/// "curves" (piecewise-affine geometry relations).
std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed, int trials);

std::vector<std::string> suite_names();

}  // namespace polyharm::verify
