#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "triea/archive.hpp"
#include "triea/chromosome.hpp"
#include "triea/quality.hpp"
#include "triea/rng.hpp"
#include "triea/tensor.hpp"

namespace triea {

struct GAConfig {
    std::size_t population_size = 20;
    std::size_t generations = 100;
    double p_crossover = 0.95;
    double p_mutation = 0.50;
    QualityWeights quality_weights;
    double delta = 1050.0;
    std::size_t n_triclusters = 20;
    SlopeMode slope_mode = SlopeMode::ols;
    std::uint64_t seed = 0;
    std::size_t elite_count = 1;

    /// Throws std::invalid_argument on out-of-range settings.
    void validate() const;
};

struct GenerationRecord {
    std::size_t generation = 0;  // 1-based; generation 1 is the initial population
    double best_f = 0.0;
    double mean_f = 0.0;
    FitnessBreakdown best;
};

struct GenerationTrace {
    std::vector<GenerationRecord> records;
};

struct EvolutionResult {
    TriclusterCoords coords;
    FitnessBreakdown breakdown;
    GenerationTrace trace;
};

struct TrieaResult {
    Archive archive;
    std::vector<EvolutionResult> runs;  // one per outer iteration, admitted or not
    std::vector<bool> admitted;
};

/// Random population that avoids indices already used by earlier
/// individuals and by the archive while such indices remain. Each segment
/// gets between 2 and its full length set bits.
std::vector<Chromosome> init_population(const Shape& shape, const GAConfig& config,
                                        const Archive& archive, Rng& rng);

/// Size-2 tournament over distinct individuals; lower fitness wins and ties
/// go to the lower index. Returns the winner's index.
std::size_t tournament_select(std::span<const double> fitnesses, Rng& rng);

/// Single-point crossover applied to each segment independently, with
/// probability p_c for the pair. Offspring are not repaired.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1, const Chromosome& p2, double p_c, Rng& rng);

/// Swaps tails of every segment at the given crosspoints (one per segment,
/// each in [1, length-1]; segments of length < 2 are copied).
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& p1, const Chromosome& p2,
                                               const std::size_t (&crosspoints)[3]);

/// With probability p_m flips exactly one uniformly chosen bit.
Chromosome mutate(Chromosome chrom, double p_m, Rng& rng);

/// Sets random unset bits in any segment holding fewer than two.
Chromosome repair(Chromosome chrom, Rng& rng);

/// One generational GA run against a frozen archive. The trace holds
/// `config.generations` records, the first for the initial population.
EvolutionResult evolve_one_tricluster(const ExpressionTensor& tensor, const GAConfig& config,
                                      const Archive& archive, Rng& rng);

using RunObserver = std::function<void(std::size_t run, const EvolutionResult&, bool admitted)>;

/// Sequential covering: `n_triclusters` GA runs, each best kept when its
/// LSL is below delta. Seeded from config.seed.
TrieaResult run_triea(const ExpressionTensor& tensor, const GAConfig& config,
                      const RunObserver& observer = {});

}  // namespace triea
