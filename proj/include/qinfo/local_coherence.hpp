#pragma once

#include <optional>
#include <vector>

#include "qinfo/density.hpp"
#include "qinfo/optimizer_config.hpp"

namespace qinfo {

/// A point on U(d_1) x ... x U(d_m): one real parameter vector per part,
/// of length D_p^2, interpreted as coefficients of a Hermitian generator
/// basis. The realized per-part unitary is exp(i H(theta_p)).
///
/// Generator ordering per part (dimension D): index 0 is the identity (a
/// pure-phase gauge direction that never changes the objective), indices
/// 1..D-1 are the diagonal projectors |k><k| for k = 1..D-1, followed by
/// (symmetric, antisymmetric) pairs for each j < k in lexicographic order.
struct UnitaryPoint {
    std::vector<RealVector> thetas;

    static UnitaryPoint identity(const std::vector<int>& part_dims);
};

enum class OptimizeDirection { Minimize, Maximize };

struct OptimizeOutcome {
    double value = 0.0;
    UnitaryPoint point;
    bool converged = false;
    std::vector<double> restart_values;
    std::vector<char> restart_converged;
};

/// exp(i H(theta)) for one factor of dimension d; theta must have length d^2.
ComplexMatrix unitary_from_params(const RealVector& theta, int d);

/// Full-space product unitary realized by a UnitaryPoint for the given
/// partition (parts may group non-adjacent subsystems).
ComplexMatrix build_product_unitary(const HilbertSpec& space,
                                    const std::vector<PartitionLabel>& parts,
                                    const UnitaryPoint& point);

/// Shannon entropy of diag(U rho U^dag) with U = build_product_unitary(...).
/// This is the objective the optimizers extremize.
double diag_entropy_objective(const DensityOperator& rho,
                              const std::vector<PartitionLabel>& parts,
                              const UnitaryPoint& point);

/// Multi-start extremization of the diagonal entropy over the product group
/// defined by `parts` (a disjoint cover of all subsystems; a single part
/// covering everything gives the full unitary group).
///
/// Each restart runs gradient descent with an adaptive step (gradient by
/// central finite differences, step 1e-5) followed by a coordinate-search
/// polish with step halving down to the configured step tolerance. Restart 0
/// always starts at the identity; restarts r >= 1 draw theta uniformly from
/// [-pi, pi] using seed + r.
OptimizeOutcome optimize_diag_entropy(const DensityOperator& rho,
                                      const std::vector<PartitionLabel>& parts,
                                      OptimizeDirection direction,
                                      const OptimizerConfig& cfg);

struct LocalCoherenceResult {
    double sc_loc = 0.0;
    double max_diag = 0.0;
    double min_diag = 0.0;
    double gap = 0.0;              // G = S_c(rho) - sc_loc
    std::optional<double> local;   // L = I_{A:B} - G, bipartitions only
    OptimizeOutcome max_outcome;
    OptimizeOutcome min_outcome;
    bool converged = false;
};

/// Runs both optimization directions and fills the derived quantities.
LocalCoherenceResult sc_local(const DensityOperator& rho,
                              const std::vector<PartitionLabel>& parts,
                              const OptimizerConfig& cfg);

}  // namespace qinfo
