#include "triea/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace triea {
namespace {

// Draws k distinct elements of `pool` (k <= pool.size()); pool is reordered.
std::vector<std::size_t> sample(std::vector<std::size_t>& pool, std::size_t k, Rng& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(pool[i], pool[i + rng.index(pool.size() - i)]);
    }
    return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)};
}

void init_segment(std::span<std::uint8_t> seg, std::vector<bool>& used, const std::set<std::size_t>& covered,
                  Rng& rng) {
    const std::size_t length = seg.size();
    const std::size_t k = rng.between(std::min<std::size_t>(2, length), length);
    std::vector<std::size_t> fresh, stale;
    for (std::size_t i = 0; i < length; ++i) {
        (used[i] || covered.contains(i) ? stale : fresh).push_back(i);
    }
    std::vector<std::size_t> chosen;
    if (fresh.size() >= k) {
        chosen = sample(fresh, k, rng);
    } else {
        chosen = fresh;
        auto extra = sample(stale, k - fresh.size(), rng);
        chosen.insert(chosen.end(), extra.begin(), extra.end());
    }
    for (auto i : chosen) {
        seg[i] = 1;
        used[i] = true;
    }
}

void check_shape(const Shape& shape) {
    if (shape.genes < 2 || shape.conditions < 2 || shape.times < 2) {
        throw std::invalid_argument("triclustering needs at least two genes, conditions and time points");
    }
}

std::vector<FitnessBreakdown> evaluate(const ExpressionTensor& tensor, const std::vector<Chromosome>& pop,
                                       std::size_t first, const GAConfig& config, const Archive& archive,
                                       std::vector<FitnessBreakdown> out) {
    out.resize(pop.size());
    for (std::size_t i = first; i < pop.size(); ++i) {
        out[i] = fitness(tensor, decode(pop[i]), config.quality_weights, archive, config.slope_mode);
    }
    return out;
}

GenerationRecord summarize(std::size_t generation, const std::vector<FitnessBreakdown>& fits) {
    GenerationRecord rec;
    rec.generation = generation;
    std::size_t best = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < fits.size(); ++i) {
        sum += fits[i].f;
        if (fits[i].f < fits[best].f) best = i;
    }
    rec.best = fits[best];
    rec.best_f = fits[best].f;
    rec.mean_f = sum / static_cast<double>(fits.size());
    return rec;
}

}  // namespace

void GAConfig::validate() const {
    const auto probability = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
    if (population_size < 1 || generations < 1 || n_triclusters < 1 || elite_count < 1) {
        throw std::invalid_argument("GA config: population, generations, tricluster and elite counts must be >= 1");
    }
    if (elite_count > population_size) {
        throw std::invalid_argument("GA config: elite_count exceeds population_size");
    }
    if (!probability(p_crossover) || !probability(p_mutation)) {
        throw std::invalid_argument("GA config: probabilities must lie in [0, 1]");
    }
    if (std::isnan(delta) || delta < 0.0) throw std::invalid_argument("GA config: delta must be >= 0");
    quality_weights.validate();
}

std::vector<Chromosome> init_population(const Shape& shape, const GAConfig& config,
                                        const Archive& archive, Rng& rng) {
    check_shape(shape);
    std::vector<bool> used_genes(shape.genes), used_conditions(shape.conditions), used_times(shape.times);
    std::vector<Chromosome> population;
    population.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        Chromosome chrom(shape);
        init_segment(chrom.segment(Segment::genes), used_genes, archive.covered_genes(), rng);
        init_segment(chrom.segment(Segment::conditions), used_conditions, archive.covered_conditions(), rng);
        init_segment(chrom.segment(Segment::times), used_times, archive.covered_times(), rng);
        population.push_back(repair(std::move(chrom), rng));
    }
    return population;
}

std::size_t tournament_select(std::span<const double> fitnesses, Rng& rng) {
    if (fitnesses.empty()) throw std::invalid_argument("tournament_select: empty population");
    const std::size_t n = fitnesses.size();
    if (n == 1) return 0;
    std::size_t a = rng.index(n);
    std::size_t b = rng.index(n - 1);
    if (b >= a) ++b;
    if (b < a) std::swap(a, b);
    return fitnesses[b] < fitnesses[a] ? b : a;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& p1, const Chromosome& p2,
                                               const std::size_t (&crosspoints)[3]) {
    if (p1.shape() != p2.shape()) throw std::invalid_argument("crossover: parents differ in shape");
    Chromosome o1 = p1, o2 = p2;
    for (auto s : kSegments) {
        auto a = o1.segment(s);
        auto b = o2.segment(s);
        if (a.size() < 2) continue;
        const std::size_t cut = crosspoints[static_cast<int>(s)];
        if (cut < 1 || cut >= a.size()) throw std::out_of_range("crossover: crosspoint out of range");
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end(),
                         b.begin() + static_cast<std::ptrdiff_t>(cut));
    }
    return {std::move(o1), std::move(o2)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1, const Chromosome& p2, double p_c, Rng& rng) {
    if (p1.shape() != p2.shape()) throw std::invalid_argument("crossover: parents differ in shape");
    if (!rng.bernoulli(p_c)) return {p1, p2};
    std::size_t cuts[3] = {1, 1, 1};
    for (auto s : kSegments) {
        const std::size_t length = p1.segment(s).size();
        if (length >= 2) cuts[static_cast<int>(s)] = rng.between(1, length - 1);
    }
    return crossover_at(p1, p2, cuts);
}

Chromosome mutate(Chromosome chrom, double p_m, Rng& rng) {
    if (chrom.size() > 0 && rng.bernoulli(p_m)) chrom.flip(rng.index(chrom.size()));
    return chrom;
}

Chromosome repair(Chromosome chrom, Rng& rng) {
    for (auto s : kSegments) {
        auto seg = chrom.segment(s);
        const std::size_t need = std::min<std::size_t>(2, seg.size());
        std::size_t have = chrom.set_count(s);
        while (have < need) {
            std::vector<std::size_t> unset;
            for (std::size_t i = 0; i < seg.size(); ++i) {
                if (!seg[i]) unset.push_back(i);
            }
            seg[unset[rng.index(unset.size())]] = 1;
            ++have;
        }
    }
    return chrom;
}

EvolutionResult evolve_one_tricluster(const ExpressionTensor& tensor, const GAConfig& config,
                                      const Archive& archive, Rng& rng) {
    config.validate();
    auto population = init_population(tensor.shape(), config, archive, rng);
    auto fits = evaluate(tensor, population, 0, config, archive, {});

    EvolutionResult result;
    result.trace.records.reserve(config.generations);
    bool have_best = false;
    const auto keep_best = [&] {
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (!have_best || fits[i].f < result.breakdown.f) {
                result.breakdown = fits[i];
                result.coords = decode(population[i]);
                have_best = true;
            }
        }
    };
    keep_best();
    result.trace.records.push_back(summarize(1, fits));

    std::vector<double> scores(population.size());
    std::vector<std::size_t> order(population.size());
    for (std::size_t generation = 2; generation <= config.generations; ++generation) {
        for (std::size_t i = 0; i < fits.size(); ++i) scores[i] = fits[i].f;
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

        std::vector<Chromosome> next;
        std::vector<FitnessBreakdown> next_fits;
        next.reserve(config.population_size);
        for (std::size_t e = 0; e < config.elite_count; ++e) {
            next.push_back(population[order[e]]);
            next_fits.push_back(fits[order[e]]);
        }
        while (next.size() < config.population_size) {
            const auto& mother = population[tournament_select(scores, rng)];
            const auto& father = population[tournament_select(scores, rng)];
            auto [o1, o2] = crossover(mother, father, config.p_crossover, rng);
            next.push_back(repair(mutate(std::move(o1), config.p_mutation, rng), rng));
            if (next.size() < config.population_size) {
                next.push_back(repair(mutate(std::move(o2), config.p_mutation, rng), rng));
            }
        }
        fits = evaluate(tensor, next, config.elite_count, config, archive, std::move(next_fits));
        population = std::move(next);
        keep_best();
        result.trace.records.push_back(summarize(generation, fits));
    }
    return result;
}

TrieaResult run_triea(const ExpressionTensor& tensor, const GAConfig& config, const RunObserver& observer) {
    config.validate();
    check_shape(tensor.shape());
    Rng rng(config.seed);
    TrieaResult result;
    for (std::size_t run = 0; run < config.n_triclusters; ++run) {
        auto best = evolve_one_tricluster(tensor, config, result.archive, rng);
        const bool admitted = result.archive.admit(best.coords, best.breakdown, config.delta);
        if (observer) observer(run, best, admitted);
        result.admitted.push_back(admitted);
        result.runs.push_back(std::move(best));
    }
    return result;
}

}  // namespace triea
