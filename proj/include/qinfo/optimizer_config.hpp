#pragma once

#include <cstdint>

namespace qinfo {

/// Settings for the multi-start diagonal-entropy optimizers. Restart r draws
/// its initial point from an RNG stream seeded with seed + r, so results are
/// independent of the thread count.
struct OptimizerConfig {
    int restarts = 32;
    int max_iters = 2000;
    double step_tol = 1e-9;
    double objective_tol = 1e-8;
    std::uint64_t seed = 0;
    int threads = 1;
};

}  // namespace qinfo
