#pragma once

#include <array>
#include <vector>

#include "qinfo/density.hpp"

namespace qinfo {

/// I_{A:B} = S(rho_A) + S(rho_B) - S(rho_AB) for disjoint labels a, b.
/// Nonnegative by subadditivity; equals 2 S(rho_A) when rho_{AB} is pure.
double mutual_information(const DensityOperator& rho, const PartitionLabel& a,
                          const PartitionLabel& b);

/// Full balance of the coherent-entropy decomposition
///   S_c(rho) = sum_k S_c(rho_k) + I_{P1:P2} + I_{P1P2:P3} + ...
/// for an ordered chain of parts. Every term is stored so tables can be
/// printed straight from a ledger; `residual` is the absolute identity gap.
struct InfoLedger {
    std::vector<PartitionLabel> parts;
    std::vector<double> part_entropy;    // S(rho_k)
    std::vector<double> part_coherent;   // S_c(rho_k)
    std::vector<double> chain_mutual;    // I_{P1..Pk : P(k+1)}, k = 1..n-1
    double total_entropy = 0.0;          // S(rho)
    double total_coherent = 0.0;         // S_c(rho)
    double residual = 0.0;

    double parts_sum() const;            // rhs of the identity
};

/// Ledger over an explicit ordered chain of disjoint parts covering all
/// subsystems. Throws NumericalFailure if the identity residual exceeds
/// 1e-9 (up to 3 parts) or 1e-8 (more parts).
InfoLedger ledger_for_parts(const DensityOperator& rho,
                            const std::vector<PartitionLabel>& parts);

/// Two-part split: S_c(rho) = S_c(rho_A) + S_c(rho_B) + I_{A:B}.
InfoLedger bipartite_ledger(const DensityOperator& rho, const PartitionLabel& a,
                            const PartitionLabel& b);

/// Three declared subsystems taken in the given order:
/// S_c(rho) = S_c(A) + S_c(B) + S_c(C) + I_{A:B} + I_{AB:C}.
InfoLedger tripartite_ledger(const DensityOperator& rho, const std::array<int, 3>& order);

/// One part per declared subsystem, in declaration order or a caller-chosen
/// order.
InfoLedger chain_ledger(const DensityOperator& rho);
InfoLedger chain_ledger(const DensityOperator& rho, const std::vector<int>& order);

}  // namespace qinfo
