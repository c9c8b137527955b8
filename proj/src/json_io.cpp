#include "qinfo/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qinfo {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix: expected a nonempty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw ParseError("matrix: ragged rows");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& entry = row.at(static_cast<std::size_t>(k));
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError("matrix: each entry must be [re, im]");
            m(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    }
    return m;
}

json to_json(const DensityOperator& rho) {
    return json{{"dims", rho.space().dims()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityOperator density_from_json(const json& j) {
    if (!j.contains("dims") || !j.contains("matrix"))
        throw ParseError("density operator: need 'dims' and 'matrix' keys");
    std::vector<int> dims;
    try {
        dims = j.at("dims").get<std::vector<int>>();
    } catch (const json::exception&) {
        throw ParseError("density operator: 'dims' must be an integer array");
    }
    HilbertSpec space(dims);
    ComplexMatrix m = matrix_from_json(j.at("matrix"));
    const Eigen::Index d = space.total_dim();
    if (m.rows() != d || m.cols() != d)
        throw ParseError("density operator: matrix has " + std::to_string(m.size()) +
                         " entries, expected total dimension squared = " +
                         std::to_string(d * d));
    return DensityOperator(std::move(space), std::move(m));
}

DensityOperator load_density(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return density_from_json(j);
}

json to_json(const KrausChannel& channel) {
    json ops = json::array();
    for (const auto& m : channel.ops()) ops.push_back(matrix_to_json(m));
    return json{{"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j) {
    if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty())
        throw ParseError("channel: need a nonempty 'kraus' array");
    std::vector<ComplexMatrix> ops;
    for (const auto& m : j.at("kraus")) ops.push_back(matrix_from_json(m));
    return KrausChannel(std::move(ops));
}

json to_json(const JointDistribution& dist) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < dist.joint().rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j2 = 0; j2 < dist.joint().cols(); ++j2)
            row.push_back(dist.joint()(i, j2));
        rows.push_back(std::move(row));
    }
    json m1 = json::array(), m2 = json::array();
    for (Eigen::Index i = 0; i < dist.marginal1().size(); ++i) m1.push_back(dist.marginal1()[i]);
    for (Eigen::Index i = 0; i < dist.marginal2().size(); ++i) m2.push_back(dist.marginal2()[i]);
    return json{{"joint", std::move(rows)},
                {"marginal1", std::move(m1)},
                {"marginal2", std::move(m2)}};
}

json to_json(const InfoLedger& ledger) {
    json parts = json::array();
    for (std::size_t k = 0; k < ledger.parts.size(); ++k)
        parts.push_back(json{{"part", ledger.parts[k].to_string()},
                             {"S", ledger.part_entropy[k]},
                             {"Sc", ledger.part_coherent[k]}});
    json mutual = json::array();
    std::string prefix = ledger.parts.front().to_string();
    for (std::size_t k = 0; k + 1 < ledger.parts.size(); ++k) {
        const std::string next = ledger.parts[k + 1].to_string();
        mutual.push_back(json{{"between", prefix + ":" + next}, {"I", ledger.chain_mutual[k]}});
        prefix += next;
    }
    return json{{"parts", std::move(parts)},
                {"mutual_information", std::move(mutual)},
                {"S_total", ledger.total_entropy},
                {"Sc_total", ledger.total_coherent},
                {"Sc_parts_sum", ledger.parts_sum()},
                {"residual", ledger.residual}};
}

json to_json(const LocalCoherenceResult& result) {
    auto outcome_json = [](const OptimizeOutcome& o) {
        json restarts = json::array();
        for (std::size_t r = 0; r < o.restart_values.size(); ++r)
            restarts.push_back(json{{"value", o.restart_values[r]},
                                    {"converged", o.restart_converged[r] != 0}});
        return json{{"value", o.value}, {"converged", o.converged}, {"restarts", restarts}};
    };
    json out{{"sc_loc", result.sc_loc},
             {"max_diag", result.max_diag},
             {"min_diag", result.min_diag},
             {"G", result.gap},
             {"converged", result.converged},
             {"max_search", outcome_json(result.max_outcome)},
             {"min_search", outcome_json(result.min_outcome)}};
    if (result.local) out["L"] = *result.local;
    return out;
}

std::string counts_to_csv(const SampledDistribution& sampled) {
    std::ostringstream out;
    out << "s1,s2,count\n";
    for (Eigen::Index i = 0; i < sampled.counts.rows(); ++i)
        for (Eigen::Index j = 0; j < sampled.counts.cols(); ++j)
            out << i << ',' << j << ',' << sampled.counts(i, j) << '\n';
    return out.str();
}

OptimizerConfig optimizer_config_from_json(const json& j, OptimizerConfig base) {
    if (j.contains("restarts")) base.restarts = j.at("restarts").get<int>();
    if (j.contains("max_iters")) base.max_iters = j.at("max_iters").get<int>();
    if (j.contains("step_tol")) base.step_tol = j.at("step_tol").get<double>();
    if (j.contains("objective_tol")) base.objective_tol = j.at("objective_tol").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) base.threads = j.at("threads").get<int>();
    return base;
}

}  // namespace qinfo
