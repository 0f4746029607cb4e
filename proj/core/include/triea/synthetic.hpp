#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "triea/coords.hpp"
#include "triea/tensor.hpp"

namespace triea {

enum class PlantPattern { constant, additive, multiplicative };
enum class Background { uniform01, gaussian };

std::string_view to_string(PlantPattern pattern);
std::string_view to_string(Background background);
PlantPattern parse_plant_pattern(std::string_view text);
Background parse_background(std::string_view text);

struct PlantedRegion {
    TriclusterCoords coords;
    PlantPattern pattern = PlantPattern::additive;
};

struct SyntheticSpec {
    Shape dims;
    std::vector<PlantedRegion> planted;
    double noise_sigma = 0.0;
    Background background = Background::uniform01;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument for out-of-bounds plants or a negative
    /// noise level, PlantOverlapError when two plants share a cell.
    void validate() const;
};

class PlantOverlapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SyntheticDataset {
    ExpressionTensor tensor;
    std::vector<TriclusterCoords> truth;
};

// Background cells are U[0,1) or N(0,1). Planted regions are overwritten with
//   constant:        b                      b ~ U[0.2, 0.8]
//   additive:        b + a_g + b_c + d_t    b ~ U[0.3, 0.7], offsets ~ U[-0.1, 0.1]
//   multiplicative:  b * a_g * b_c * d_t    b ~ U[0.3, 0.7], factors ~ U[0.8, 1.2]
// and then receive N(0, noise_sigma^2) noise. Deterministic given spec.seed.
SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace triea
