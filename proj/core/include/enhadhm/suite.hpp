#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace enhadhm {

struct CriterionResult {
    int index = 0;
    std::string name;
    std::string status; // "pass" | "fail" | "inconclusive"
    std::string detail;

    bool passed() const { return status == "pass"; }
    bool failed() const { return status == "fail"; }
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    bool deep = false;          // term-by-term exactness of the long sequence
    std::size_t sample_r_max = 3; // grid for the sampled-representation checks
    std::size_t sample_c_max = 5;
};

/* The full verification battery. The per-criterion grids that are part
 * of the contract (expected dimensions, the explicit families, walls,
 * oracle sizes) are fixed here; the options only scale the sampling
 * grids and the seed. Every comparison is exact. */
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

} // namespace enhadhm
