#include "triea/quality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace triea {
namespace {

// Dense copy of the cells selected by a set of coords.
class Block {
public:
    Block(const ExpressionTensor& tensor, const TriclusterCoords& coords)
        : ng_(coords.genes.size()), nc_(coords.conditions.size()), nt_(coords.times.size()) {
        validate(coords, tensor.shape());
        values_.reserve(ng_ * nc_ * nt_);
        for (auto g : coords.genes) {
            for (auto c : coords.conditions) {
                for (auto t : coords.times) values_.push_back(tensor.at(g, c, t));
            }
        }
    }

    std::size_t genes() const { return ng_; }
    std::size_t conditions() const { return nc_; }
    std::size_t times() const { return nt_; }
    double operator()(std::size_t g, std::size_t c, std::size_t t) const {
        return values_[(g * nc_ + c) * nt_ + t];
    }

private:
    std::size_t ng_, nc_, nt_;
    std::vector<double> values_;
};

MeansDecomposition means_of(const Block& b) {
    const std::size_t ng = b.genes(), nc = b.conditions(), nt = b.times();
    MeansDecomposition m;
    m.n_genes = ng;
    m.n_conditions = nc;
    m.n_times = nt;
    m.over_genes_conditions.assign(nt, 0.0);
    m.over_genes_times.assign(nc, 0.0);
    m.over_conditions_times.assign(ng, 0.0);
    m.over_genes.assign(nc * nt, 0.0);
    m.over_conditions.assign(ng * nt, 0.0);
    m.over_times.assign(ng * nc, 0.0);

    double total = 0.0;
    for (std::size_t g = 0; g < ng; ++g) {
        for (std::size_t c = 0; c < nc; ++c) {
            for (std::size_t t = 0; t < nt; ++t) {
                const double v = b(g, c, t);
                m.over_genes_conditions[t] += v;
                m.over_genes_times[c] += v;
                m.over_conditions_times[g] += v;
                m.over_genes[c * nt + t] += v;
                m.over_conditions[g * nt + t] += v;
                m.over_times[g * nc + c] += v;
                total += v;
            }
        }
    }
    const auto scale = [](std::vector<double>& xs, std::size_t n) {
        for (auto& x : xs) x /= static_cast<double>(n);
    };
    scale(m.over_genes_conditions, ng * nc);
    scale(m.over_genes_times, ng * nt);
    scale(m.over_conditions_times, nc * nt);
    scale(m.over_genes, ng);
    scale(m.over_conditions, nc);
    scale(m.over_times, nt);
    m.grand = total / static_cast<double>(ng * nc * nt);
    return m;
}

double residual_at(const Block& b, const MeansDecomposition& m, std::size_t g, std::size_t c, std::size_t t) {
    const std::size_t nc = m.n_conditions, nt = m.n_times;
    return b(g, c, t) + m.over_genes_conditions[t] + m.over_genes_times[c] + m.over_conditions_times[g] -
           m.over_genes[c * nt + t] - m.over_conditions[g * nt + t] - m.over_times[g * nc + c] - m.grand;
}

double msr_of(const Block& b) {
    const auto m = means_of(b);
    double sum = 0.0;
    for (std::size_t g = 0; g < b.genes(); ++g) {
        for (std::size_t c = 0; c < b.conditions(); ++c) {
            for (std::size_t t = 0; t < b.times(); ++t) {
                const double r = residual_at(b, m, g, c, t);
                sum += r * r;
            }
        }
    }
    return sum / static_cast<double>(b.genes() * b.conditions() * b.times());
}

// Sums of positions 0..n-1 and of their squares.
void position_sums(std::size_t n, double& sum, double& sum_sq) {
    sum = 0.0;
    sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += static_cast<double>(i);
        sum_sq += static_cast<double>(i) * static_cast<double>(i);
    }
}

ViewSlopes slopes_of(const Block& b, ViewAxis axis, SlopeMode mode) {
    const std::size_t ng = b.genes(), nc = b.conditions(), nt = b.times();
    const std::size_t x_extent = axis == ViewAxis::gene ? nt : ng;
    if (x_extent < 2) {
        throw CoordsError(std::string("view '") + std::string(to_string(axis)) +
                          "' needs at least two x positions");
    }
    const std::size_t lines = axis == ViewAxis::time ? nt : nc;

    std::vector<LeastSquaresAccumulator> acc(lines);
    for (std::size_t g = 0; g < ng; ++g) {
        for (std::size_t c = 0; c < nc; ++c) {
            for (std::size_t t = 0; t < nt; ++t) {
                const double x = static_cast<double>(axis == ViewAxis::gene ? t : g);
                acc[axis == ViewAxis::time ? t : c].add(x, b(g, c, t));
            }
        }
    }

    ViewSlopes out{axis, {}};
    out.slopes.reserve(lines);
    for (auto& line : acc) {
        if (mode == SlopeMode::paper_literal) {
            // x-sums and the count range over the x axis alone while the
            // y-sums keep every plotted point.
            position_sums(x_extent, line.sum_x, line.sum_xx);
            line.n_points = x_extent;
        }
        out.slopes.push_back(line.slope());
    }
    return out;
}

double lsl_of(const Block& b, SlopeMode mode) {
    if (b.genes() < 2 || b.conditions() < 2 || b.times() < 2) {
        throw CoordsError("lsl requires at least two genes, two conditions and two times");
    }
    const double tr = mean_pairwise_distance(slopes_of(b, ViewAxis::time, mode).slopes);
    const double cr = mean_pairwise_distance(slopes_of(b, ViewAxis::condition, mode).slopes);
    const double gr = mean_pairwise_distance(slopes_of(b, ViewAxis::gene, mode).slopes);
    return (tr + cr + gr) / 3.0;
}

std::size_t position_of(const std::vector<std::size_t>& axis, std::size_t index, const char* name) {
    auto it = std::lower_bound(axis.begin(), axis.end(), index);
    if (it == axis.end() || *it != index) {
        throw CoordsBoundsError(std::string(name) + " index " + std::to_string(index) +
                                " is not part of the tricluster");
    }
    return static_cast<std::size_t>(it - axis.begin());
}

std::size_t uncovered(const std::vector<std::size_t>& idx, const std::set<std::size_t>& covered) {
    return static_cast<std::size_t>(
        std::count_if(idx.begin(), idx.end(), [&](std::size_t i) { return !covered.contains(i); }));
}

}  // namespace

void QualityWeights::validate() const {
    for (double w : {w_gene, w_condition, w_time, wd_gene, wd_condition, wd_time}) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("quality weights must be finite and non-negative");
        }
    }
}

std::string_view to_string(SlopeMode mode) {
    return mode == SlopeMode::ols ? "ols" : "paper-literal";
}

std::string_view to_string(ViewAxis axis) {
    switch (axis) {
        case ViewAxis::time: return "time";
        case ViewAxis::condition: return "condition";
        case ViewAxis::gene: return "gene";
    }
    return "?";
}

SlopeMode parse_slope_mode(std::string_view text) {
    if (text == "ols") return SlopeMode::ols;
    if (text == "paper-literal") return SlopeMode::paper_literal;
    throw std::invalid_argument("unknown slope mode '" + std::string(text) + "'");
}

double LeastSquaresAccumulator::slope() const {
    const double n = static_cast<double>(n_points);
    const double denom = n * sum_xx - sum_x * sum_x;
    if (!(denom > 0.0)) throw std::domain_error("least squares: x coordinates are all equal");
    return (n * sum_xy - sum_x * sum_y) / denom;
}

MeansDecomposition compute_means(const ExpressionTensor& tensor, const TriclusterCoords& coords) {
    return means_of(Block(tensor, coords));
}

double residual(const ExpressionTensor& tensor, const TriclusterCoords& coords,
                std::size_t g, std::size_t c, std::size_t t) {
    const std::size_t gi = position_of(coords.genes, g, "gene");
    const std::size_t ci = position_of(coords.conditions, c, "condition");
    const std::size_t ti = position_of(coords.times, t, "time");
    const Block b(tensor, coords);
    return residual_at(b, means_of(b), gi, ci, ti);
}

double msr3d(const ExpressionTensor& tensor, const TriclusterCoords& coords) {
    return msr_of(Block(tensor, coords));
}

ViewSlopes view_slopes(const ExpressionTensor& tensor, const TriclusterCoords& coords,
                       ViewAxis axis, SlopeMode mode) {
    return slopes_of(Block(tensor, coords), axis, mode);
}

double mean_pairwise_distance(const std::vector<double>& slopes) {
    const std::size_t n = slopes.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) sum += std::abs(slopes[i] - slopes[j]);
    }
    return 2.0 * sum / static_cast<double>((n - 1) * n);
}

double lsl(const ExpressionTensor& tensor, const TriclusterCoords& coords, SlopeMode mode) {
    return lsl_of(Block(tensor, coords), mode);
}

double weights_term(const TriclusterCoords& coords, const QualityWeights& w) {
    return static_cast<double>(coords.gene_count()) * w.w_gene +
           static_cast<double>(coords.condition_count()) * w.w_condition +
           static_cast<double>(coords.time_count()) * w.w_time;
}

double distinction_term(const TriclusterCoords& coords, const Archive& archive, const QualityWeights& w) {
    const auto fraction = [](std::size_t part, std::size_t whole) {
        return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
    };
    return fraction(uncovered(coords.genes, archive.covered_genes()), coords.gene_count()) * w.wd_gene +
           fraction(uncovered(coords.conditions, archive.covered_conditions()), coords.condition_count()) *
               w.wd_condition +
           fraction(uncovered(coords.times, archive.covered_times()), coords.time_count()) * w.wd_time;
}

FitnessBreakdown fitness(const ExpressionTensor& tensor, const TriclusterCoords& coords,
                         const QualityWeights& w, const Archive& archive, SlopeMode mode) {
    const Block b(tensor, coords);
    return FitnessBreakdown::compose(msr_of(b), lsl_of(b, mode), weights_term(coords, w),
                                     distinction_term(coords, archive, w));
}

}  // namespace triea
