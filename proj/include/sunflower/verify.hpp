#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sunflower {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Named invariant suites, one per module; reduced-scale versions of the
// property checks the test suite runs in full.
std::vector<std::string> verify_suite_names();
std::vector<PropertyResult> run_verify_suite(const std::string& name, std::uint64_t seed);

}  // namespace sunflower
