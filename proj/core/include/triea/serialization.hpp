#pragma once

#include <nlohmann/json.hpp>

#include "triea/archive.hpp"
#include "triea/coords.hpp"
#include "triea/ga.hpp"
#include "triea/synthetic.hpp"
#include "triea/tensor.hpp"

namespace triea {

// JSON mappings used by the command-line tool. Indices are 0-based.

void to_json(nlohmann::json& j, const TriclusterCoords& coords);
/// Reads {genes, conditions, times}; entries are sorted and deduplicated.
void from_json(const nlohmann::json& j, TriclusterCoords& coords);

void to_json(nlohmann::json& j, const FitnessBreakdown& b);
void from_json(const nlohmann::json& j, FitnessBreakdown& b);

void to_json(nlohmann::json& j, const QualityWeights& w);
void to_json(nlohmann::json& j, const GAConfig& config);

/// {dims:[g,c,t], planted:[{genes,conditions,times,pattern}], noise_sigma, background, seed}
void from_json(const nlohmann::json& j, SyntheticSpec& spec);
void to_json(nlohmann::json& j, const SyntheticSpec& spec);

/// One `triclusters.json` entry: index lists, label lists and the breakdown.
nlohmann::json entry_to_json(const ArchiveEntry& entry, const ExpressionTensor& tensor);

/// {entries:[...]}. Labels are included when a tensor is given.
nlohmann::json archive_to_json(const Archive& archive, const ExpressionTensor* tensor = nullptr);
Archive archive_from_json(const nlohmann::json& j);

}  // namespace triea
