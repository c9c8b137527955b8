#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qinfo {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// End-to-end invariant checks over seeded random states. The fast suite
/// covers every identity at reduced sample counts; `full` raises the counts
/// and adds the d=4 protocol-optimality sweep and the extremal-search
/// cross-check of the coherent-entropy closed form.
std::vector<CheckResult> run_validation(bool full, std::uint64_t seed, int threads);

}  // namespace qinfo
