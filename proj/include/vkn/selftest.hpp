#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vkn::selftest {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

SuiteResult thm31_random(uint64_t seed, int cases = 200);
SuiteResult thm41_random(uint64_t seed, int cases = 500);
SuiteResult ac_index_equivalence(uint64_t seed, int cases = 1000);
SuiteResult writhe_move_invariance(uint64_t seed, int diagrams = 20, int moves_each = 500);
SuiteResult stallings_random(uint64_t seed, int cases = 200);
SuiteResult stabilize_random(uint64_t seed, int cases = 200);
SuiteResult braid_milnor_lk(uint64_t seed, int cases = 200);

/// Every randomized identity suite, in a fixed order.
std::vector<SuiteResult> run_all(uint64_t seed);

} // namespace vkn::selftest
