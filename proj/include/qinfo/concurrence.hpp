#pragma once

#include "qinfo/density.hpp"

namespace qinfo {

struct ConcurrenceResult {
    double concurrence = 0.0;  // C in [0, 1]
    double e_f = 0.0;          // entanglement of formation, bits
};

/// Two-qubit concurrence and entanglement of formation.
///
/// Computes the square roots of the eigenvalues of
/// rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y) in decreasing order
/// (via the Hermitian form sqrt(rho) R sqrt(rho)), then
/// C = max(0, r1 - r2 - r3 - r4) and E_f = H2((1 + sqrt(1 - C^2))/2).
/// Throws DimensionError unless dims == [2, 2].
ConcurrenceResult concurrence(const DensityOperator& rho);

}  // namespace qinfo
