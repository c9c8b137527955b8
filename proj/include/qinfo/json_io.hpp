#pragma once

#include <string>

#include <json.hpp>

#include "qinfo/density.hpp"
#include "qinfo/local_coherence.hpp"
#include "qinfo/multipartite.hpp"
#include "qinfo/timechannel.hpp"

namespace qinfo {

/// Matrix encoding shared by all file formats: an array of rows, each row an
/// array of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Density-operator file format: { "dims": [...], "matrix": [...] }.
/// Shape problems raise ParseError; violated physical invariants raise
/// InvalidState.
nlohmann::json to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j);
DensityOperator load_density(const std::string& path);

/// Channel file format: { "kraus": [ matrix, ... ] }.
nlohmann::json to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json to_json(const JointDistribution& dist);
nlohmann::json to_json(const InfoLedger& ledger);
nlohmann::json to_json(const LocalCoherenceResult& result);

/// Empirical counts as "s1,s2,count" lines with a header row.
std::string counts_to_csv(const SampledDistribution& sampled);

/// Optimizer settings from a JSON block; missing keys keep their defaults.
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j, OptimizerConfig base = {});

}  // namespace qinfo
