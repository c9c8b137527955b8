#include "qinfo/multipartite.hpp"

#include <cmath>
#include <numeric>

#include "qinfo/entropy.hpp"

namespace qinfo {

double mutual_information(const DensityOperator& rho, const PartitionLabel& a,
                          const PartitionLabel& b) {
    a.validate_against(rho.space());
    b.validate_against(rho.space());
    if (!a.disjoint_with(b))
        throw InvalidPartition("mutual_information: labels overlap");
    const PartitionLabel ab = a.merged_with(b);
    const double s_a = von_neumann(partial_trace(rho, a));
    const double s_b = von_neumann(partial_trace(rho, b));
    const double s_ab = von_neumann(partial_trace(rho, ab));
    return clamp_bits(s_a + s_b - s_ab);
}

double InfoLedger::parts_sum() const {
    double sum = std::accumulate(part_coherent.begin(), part_coherent.end(), 0.0);
    return sum + std::accumulate(chain_mutual.begin(), chain_mutual.end(), 0.0);
}

InfoLedger ledger_for_parts(const DensityOperator& rho,
                            const std::vector<PartitionLabel>& parts) {
    if (parts.size() < 2)
        throw InvalidPartition("ledger: need at least 2 parts");
    int covered = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        parts[p].validate_against(rho.space());
        covered += parts[p].size();
        for (std::size_t q = p + 1; q < parts.size(); ++q)
            if (!parts[p].disjoint_with(parts[q]))
                throw InvalidPartition("ledger: parts overlap");
    }
    if (covered != rho.space().num_subsystems())
        throw InvalidPartition("ledger: parts do not cover all subsystems");

    InfoLedger ledger;
    ledger.parts = parts;
    ledger.total_entropy = von_neumann(rho);
    ledger.total_coherent =
        clamp_bits(std::log2(static_cast<double>(rho.dim())) - ledger.total_entropy);

    // Per-part terms plus the nested chain I_{P1..Pk : P(k+1)}. The entropy
    // of each growing prefix is reused between consecutive terms.
    std::vector<double> prefix_entropy;  // S(rho_{P1..Pk}), k = 1..n
    for (const auto& part : parts) {
        const DensityOperator marginal = partial_trace(rho, part);
        const double s = von_neumann(marginal);
        ledger.part_entropy.push_back(s);
        ledger.part_coherent.push_back(
            clamp_bits(std::log2(static_cast<double>(marginal.dim())) - s));
    }

    PartitionLabel prefix = parts[0];
    prefix_entropy.push_back(ledger.part_entropy[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) {
        prefix = prefix.merged_with(parts[k]);
        const double s_prefix = k + 1 == parts.size()
                                    ? ledger.total_entropy
                                    : von_neumann(partial_trace(rho, prefix));
        prefix_entropy.push_back(s_prefix);
        ledger.chain_mutual.push_back(
            clamp_bits(prefix_entropy[k - 1] + ledger.part_entropy[k] - s_prefix));
    }

    ledger.residual = std::abs(ledger.total_coherent - ledger.parts_sum());
    const double bound = parts.size() <= 3 ? 1e-9 : 1e-8;
    if (ledger.residual > bound)
        throw NumericalFailure("ledger: identity residual " + std::to_string(ledger.residual) +
                               " exceeds " + std::to_string(bound));
    return ledger;
}

InfoLedger bipartite_ledger(const DensityOperator& rho, const PartitionLabel& a,
                            const PartitionLabel& b) {
    return ledger_for_parts(rho, {a, b});
}

InfoLedger tripartite_ledger(const DensityOperator& rho, const std::array<int, 3>& order) {
    if (rho.space().num_subsystems() != 3)
        throw InvalidPartition("tripartite_ledger: state must declare exactly 3 parts");
    std::vector<PartitionLabel> parts;
    for (int k : order) parts.push_back(PartitionLabel{k});
    return ledger_for_parts(rho, parts);
}

InfoLedger chain_ledger(const DensityOperator& rho) {
    std::vector<int> order(static_cast<std::size_t>(rho.space().num_subsystems()));
    std::iota(order.begin(), order.end(), 0);
    return chain_ledger(rho, order);
}

InfoLedger chain_ledger(const DensityOperator& rho, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != rho.space().num_subsystems())
        throw InvalidPartition("chain_ledger: order must list every subsystem once");
    std::vector<PartitionLabel> parts;
    for (int k : order) parts.push_back(PartitionLabel{k});
    return ledger_for_parts(rho, parts);
}

}  // namespace qinfo
