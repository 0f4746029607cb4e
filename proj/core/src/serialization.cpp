#include "triea/serialization.hpp"

#include <string>

namespace triea {
namespace {

template <typename T>
nlohmann::json labels_for(const std::vector<std::size_t>& idx, const std::vector<T>& labels) {
    auto out = nlohmann::json::array();
    for (auto i : idx) out.push_back(labels.at(i));
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const TriclusterCoords& coords) {
    j = nlohmann::json{{"genes", coords.genes}, {"conditions", coords.conditions}, {"times", coords.times}};
}

void from_json(const nlohmann::json& j, TriclusterCoords& coords) {
    j.at("genes").get_to(coords.genes);
    j.at("conditions").get_to(coords.conditions);
    j.at("times").get_to(coords.times);
    canonicalize(coords);
}

void to_json(nlohmann::json& j, const FitnessBreakdown& b) {
    j = nlohmann::json{{"msr", b.msr}, {"lsl", b.lsl}, {"weights", b.weights},
                       {"distinction", b.distinction}, {"f", b.f}};
}

void from_json(const nlohmann::json& j, FitnessBreakdown& b) {
    j.at("msr").get_to(b.msr);
    j.at("lsl").get_to(b.lsl);
    j.at("weights").get_to(b.weights);
    j.at("distinction").get_to(b.distinction);
    j.at("f").get_to(b.f);
}

void to_json(nlohmann::json& j, const QualityWeights& w) {
    j = nlohmann::json{{"wg", w.w_gene},   {"wc", w.w_condition},   {"wt", w.w_time},
                       {"wdg", w.wd_gene}, {"wdc", w.wd_condition}, {"wdt", w.wd_time}};
}

void to_json(nlohmann::json& j, const GAConfig& config) {
    j = nlohmann::json{{"population_size", config.population_size},
                       {"generations", config.generations},
                       {"p_crossover", config.p_crossover},
                       {"p_mutation", config.p_mutation},
                       {"quality_weights", config.quality_weights},
                       {"delta", config.delta},
                       {"n_triclusters", config.n_triclusters},
                       {"slope_mode", std::string(to_string(config.slope_mode))},
                       {"seed", config.seed},
                       {"elite_count", config.elite_count}};
}

void from_json(const nlohmann::json& j, SyntheticSpec& spec) {
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 3) throw std::invalid_argument("synthetic spec: dims must hold 3 integers");
    spec.dims = Shape{dims[0].get<std::size_t>(), dims[1].get<std::size_t>(), dims[2].get<std::size_t>()};
    spec.planted.clear();
    if (j.contains("planted")) {
        for (const auto& p : j.at("planted")) {
            PlantedRegion region;
            region.coords.genes = p.at("genes").get<std::vector<std::size_t>>();
            region.coords.conditions = p.at("conditions").get<std::vector<std::size_t>>();
            region.coords.times = p.at("times").get<std::vector<std::size_t>>();
            canonicalize(region.coords);
            region.pattern = parse_plant_pattern(p.value("pattern", std::string("additive")));
            spec.planted.push_back(std::move(region));
        }
    }
    spec.noise_sigma = j.value("noise_sigma", 0.0);
    spec.background = parse_background(j.value("background", std::string("uniform01")));
    spec.seed = j.value("seed", std::uint64_t{0});
}

void to_json(nlohmann::json& j, const SyntheticSpec& spec) {
    auto planted = nlohmann::json::array();
    for (const auto& p : spec.planted) {
        nlohmann::json entry = p.coords;
        entry["pattern"] = std::string(to_string(p.pattern));
        planted.push_back(std::move(entry));
    }
    j = nlohmann::json{{"dims", {spec.dims.genes, spec.dims.conditions, spec.dims.times}},
                       {"planted", std::move(planted)},
                       {"noise_sigma", spec.noise_sigma},
                       {"background", std::string(to_string(spec.background))},
                       {"seed", spec.seed}};
}

nlohmann::json entry_to_json(const ArchiveEntry& entry, const ExpressionTensor& tensor) {
    nlohmann::json j = entry.coords;
    j["gene_labels"] = labels_for(entry.coords.genes, tensor.gene_ids());
    j["condition_labels"] = labels_for(entry.coords.conditions, tensor.condition_ids());
    j["time_labels"] = labels_for(entry.coords.times, tensor.time_labels());
    j.update(nlohmann::json(entry.breakdown));
    return j;
}

nlohmann::json archive_to_json(const Archive& archive, const ExpressionTensor* tensor) {
    auto entries = nlohmann::json::array();
    for (const auto& e : archive.entries()) {
        if (tensor) {
            entries.push_back(entry_to_json(e, *tensor));
        } else {
            nlohmann::json j = e.coords;
            j.update(nlohmann::json(e.breakdown));
            entries.push_back(std::move(j));
        }
    }
    return nlohmann::json{{"entries", std::move(entries)}};
}

Archive archive_from_json(const nlohmann::json& j) {
    Archive archive;
    for (const auto& e : j.at("entries")) {
        FitnessBreakdown b;
        if (e.contains("f")) b = e.get<FitnessBreakdown>();
        archive.add(e.get<TriclusterCoords>(), b);
    }
    return archive;
}

}  // namespace triea
