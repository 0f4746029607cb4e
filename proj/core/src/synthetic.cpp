#include "triea/synthetic.hpp"

#include <cmath>
#include <string>

#include "triea/rng.hpp"

namespace triea {
namespace {

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

std::vector<double> draws(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto& x : out) x = uniform(rng, lo, hi);
    return out;
}

}  // namespace

std::string_view to_string(PlantPattern pattern) {
    switch (pattern) {
        case PlantPattern::constant: return "constant";
        case PlantPattern::additive: return "additive";
        case PlantPattern::multiplicative: return "multiplicative";
    }
    return "?";
}

std::string_view to_string(Background background) {
    return background == Background::uniform01 ? "uniform01" : "gaussian";
}

PlantPattern parse_plant_pattern(std::string_view text) {
    if (text == "constant") return PlantPattern::constant;
    if (text == "additive") return PlantPattern::additive;
    if (text == "multiplicative") return PlantPattern::multiplicative;
    throw std::invalid_argument("unknown plant pattern '" + std::string(text) + "'");
}

Background parse_background(std::string_view text) {
    if (text == "uniform01") return Background::uniform01;
    if (text == "gaussian") return Background::gaussian;
    throw std::invalid_argument("unknown background '" + std::string(text) + "'");
}

void SyntheticSpec::validate() const {
    if (dims.genes == 0 || dims.conditions == 0 || dims.times == 0) {
        throw std::invalid_argument("synthetic spec: every dimension must be positive");
    }
    if (!std::isfinite(noise_sigma) || noise_sigma < 0.0) {
        throw std::invalid_argument("synthetic spec: noise_sigma must be finite and >= 0");
    }
    for (std::size_t i = 0; i < planted.size(); ++i) {
        try {
            triea::validate(planted[i].coords, dims);
        } catch (const std::exception& e) {
            throw std::invalid_argument("synthetic spec: planted region " + std::to_string(i) + ": " + e.what());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (shared_cells(planted[i].coords, planted[j].coords) > 0) {
                throw PlantOverlapError("synthetic spec: planted regions " + std::to_string(j) + " and " +
                                        std::to_string(i) + " overlap");
            }
        }
    }
}

SyntheticDataset generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    auto tensor = ExpressionTensor::from_values(spec.dims, std::vector<double>(spec.dims.cell_count()));
    for (auto& v : tensor.values()) {
        v = spec.background == Background::uniform01 ? rng.uniform01() : rng.normal();
    }

    SyntheticDataset out;
    for (const auto& plant : spec.planted) {
        const auto& pc = plant.coords;
        const bool constant = plant.pattern == PlantPattern::constant;
        const bool additive = plant.pattern == PlantPattern::additive;
        const double base = constant ? uniform(rng, 0.2, 0.8) : uniform(rng, 0.3, 0.7);
        const double lo = additive ? -0.1 : 0.8;
        const double hi = additive ? 0.1 : 1.2;
        std::vector<double> gene_fx, cond_fx, time_fx;
        if (!constant) {
            gene_fx = draws(rng, pc.genes.size(), lo, hi);
            cond_fx = draws(rng, pc.conditions.size(), lo, hi);
            time_fx = draws(rng, pc.times.size(), lo, hi);
        }
        for (std::size_t gi = 0; gi < pc.genes.size(); ++gi) {
            for (std::size_t ci = 0; ci < pc.conditions.size(); ++ci) {
                for (std::size_t ti = 0; ti < pc.times.size(); ++ti) {
                    double v = base;
                    if (additive) {
                        v = base + gene_fx[gi] + cond_fx[ci] + time_fx[ti];
                    } else if (!constant) {
                        v = base * gene_fx[gi] * cond_fx[ci] * time_fx[ti];
                    }
                    if (spec.noise_sigma > 0.0) v += spec.noise_sigma * rng.normal();
                    tensor.at(pc.genes[gi], pc.conditions[ci], pc.times[ti]) = v;
                }
            }
        }
        out.truth.push_back(pc);
    }
    out.tensor = std::move(tensor);
    return out;
}

}  // namespace triea
