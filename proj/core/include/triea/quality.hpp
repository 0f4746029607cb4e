#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "triea/archive.hpp"
#include "triea/breakdown.hpp"
#include "triea/coords.hpp"
#include "triea/tensor.hpp"

namespace triea {

/// The seven mean families of the 3D residual, each indexed by position
/// within the coords subsets (not by raw tensor index).
struct MeansDecomposition {
    std::size_t n_genes = 0;
    std::size_t n_conditions = 0;
    std::size_t n_times = 0;

    std::vector<double> over_genes_conditions;   // [t]     M_GC(t)
    std::vector<double> over_genes_times;        // [c]     M_GT(c)
    std::vector<double> over_conditions_times;   // [g]     M_CT(g)
    std::vector<double> over_genes;              // [c][t]  M_G(c,t)
    std::vector<double> over_conditions;         // [g][t]  M_C(g,t)
    std::vector<double> over_times;              // [g][c]  M_T(g,c)
    double grand = 0.0;                          //         M_GCT
};

MeansDecomposition compute_means(const ExpressionTensor& tensor, const TriclusterCoords& coords);

/// Residual of cell (g, c, t), given as raw tensor indices that must belong
/// to `coords`. Throws CoordsBoundsError otherwise.
double residual(const ExpressionTensor& tensor, const TriclusterCoords& coords,
                std::size_t g, std::size_t c, std::size_t t);

/// Mean squared residue of the subtensor. Zero iff it is exactly additive.
double msr3d(const ExpressionTensor& tensor, const TriclusterCoords& coords);

enum class SlopeMode {
    ols,            ///< exact least-squares slope over every plotted point
    paper_literal,  ///< the published closed form, x-sums over the x axis only
};

enum class ViewAxis {
    time,       ///< one line per time; x = gene position, points over (g, c)
    condition,  ///< one line per condition; x = gene position, points over (t, g)
    gene,       ///< one line per condition; x = time position, points over (t, g)
};

std::string_view to_string(SlopeMode mode);
std::string_view to_string(ViewAxis axis);
/// Accepts "ols" and "paper-literal"; throws std::invalid_argument otherwise.
SlopeMode parse_slope_mode(std::string_view text);

/// Running sums for one regression line.
struct LeastSquaresAccumulator {
    double sum_x = 0.0;
    double sum_xx = 0.0;
    double sum_xy = 0.0;
    double sum_y = 0.0;
    std::size_t n_points = 0;

    void add(double x, double y) {
        sum_x += x;
        sum_xx += x * x;
        sum_xy += x * y;
        sum_y += y;
        ++n_points;
    }

    /// (n*Sxy - Sx*Sy) / (n*Sxx - Sx^2). Throws std::domain_error when the
    /// denominator is not positive (all x equal).
    double slope() const;
};

struct ViewSlopes {
    ViewAxis axis = ViewAxis::time;
    std::vector<double> slopes;
};

/// Requires at least two gene positions (time and condition views) or two
/// time positions (gene view); throws CoordsError otherwise.
ViewSlopes view_slopes(const ExpressionTensor& tensor, const TriclusterCoords& coords,
                       ViewAxis axis, SlopeMode mode = SlopeMode::ols);

/// Sum of |s_i - s_j| over ordered pairs i != j, divided by n(n-1).
double mean_pairwise_distance(const std::vector<double>& slopes);

/// Average over the three views of the mean pairwise slope distance.
/// Every axis of `coords` needs at least two indices (CoordsError otherwise).
double lsl(const ExpressionTensor& tensor, const TriclusterCoords& coords,
           SlopeMode mode = SlopeMode::ols);

double weights_term(const TriclusterCoords& coords, const QualityWeights& w);

/// Novelty reward: fraction of each axis' indices not covered by any
/// archived tricluster, weighted by wd_*.
double distinction_term(const TriclusterCoords& coords, const Archive& archive, const QualityWeights& w);

FitnessBreakdown fitness(const ExpressionTensor& tensor, const TriclusterCoords& coords,
                         const QualityWeights& w, const Archive& archive,
                         SlopeMode mode = SlopeMode::ols);

}  // namespace triea
