#pragma once

// Generators and brute-force oracles shared by the unit and acceptance
// suites. The oracles recompute everything from raw cells and do not call
// into the quality module.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "triea/coords.hpp"
#include "triea/rng.hpp"
#include "triea/tensor.hpp"

namespace triea::testing {

inline ExpressionTensor random_tensor(Shape shape, Rng& rng, double lo = 0.0, double hi = 1.0) {
    std::vector<double> values(shape.cell_count());
    for (auto& v : values) v = lo + (hi - lo) * rng.uniform01();
    return ExpressionTensor::from_values(shape, std::move(values));
}

template <typename F>
ExpressionTensor tensor_from(Shape shape, F&& value_at) {
    std::vector<double> values;
    values.reserve(shape.cell_count());
    for (std::size_t g = 0; g < shape.genes; ++g)
        for (std::size_t c = 0; c < shape.conditions; ++c)
            for (std::size_t t = 0; t < shape.times; ++t) values.push_back(value_at(g, c, t));
    return ExpressionTensor::from_values(shape, std::move(values));
}

inline std::vector<std::size_t> fixed_subset(std::size_t extent, std::size_t k, Rng& rng) {
    std::vector<std::size_t> all(extent);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.index(extent - i)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

inline std::vector<std::size_t> random_subset(std::size_t extent, std::size_t min_size, Rng& rng) {
    return fixed_subset(extent, rng.between(std::min(min_size, extent), extent), rng);
}

inline TriclusterCoords random_coords(const Shape& shape, Rng& rng, std::size_t min_size = 2) {
    return {random_subset(shape.genes, min_size, rng), random_subset(shape.conditions, min_size, rng),
            random_subset(shape.times, min_size, rng)};
}

/// Mean squared residue with every mean recomputed by its own loop for every cell.
inline double naive_msr3d(const ExpressionTensor& x, const TriclusterCoords& tc) {
    const auto& G = tc.genes;
    const auto& C = tc.conditions;
    const auto& T = tc.times;
    double total = 0.0;
    for (auto g : G) {
        for (auto c : C) {
            for (auto t : T) {
                double m_gc_t = 0, m_gt_c = 0, m_ct_g = 0, m_g_ct = 0, m_c_gt = 0, m_t_gc = 0, m_gct = 0;
                for (auto gg : G)
                    for (auto cc : C) m_gc_t += x.at(gg, cc, t);
                for (auto gg : G)
                    for (auto tt : T) m_gt_c += x.at(gg, c, tt);
                for (auto cc : C)
                    for (auto tt : T) m_ct_g += x.at(g, cc, tt);
                for (auto gg : G) m_g_ct += x.at(gg, c, t);
                for (auto cc : C) m_c_gt += x.at(g, cc, t);
                for (auto tt : T) m_t_gc += x.at(g, c, tt);
                for (auto gg : G)
                    for (auto cc : C)
                        for (auto tt : T) m_gct += x.at(gg, cc, tt);
                const double ng = G.size(), nc = C.size(), nt = T.size();
                const double r = x.at(g, c, t) + m_gc_t / (ng * nc) + m_gt_c / (ng * nt) + m_ct_g / (nc * nt) -
                                 m_g_ct / ng - m_c_gt / nc - m_t_gc / nt - m_gct / (ng * nc * nt);
                total += r * r;
            }
        }
    }
    return total / static_cast<double>(tc.cell_count());
}

struct Point {
    double x;
    double y;
};

/// Two-pass OLS slope: cov(x, y) / var(x) about the sample means.
inline double two_pass_slope(const std::vector<Point>& pts) {
    double mx = 0, my = 0;
    for (const auto& p : pts) {
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (const auto& p : pts) {
        sxy += (p.x - mx) * (p.y - my);
        sxx += (p.x - mx) * (p.x - mx);
    }
    return sxy / sxx;
}

enum class OracleView { time, condition, gene };

/// Materializes the scatter of every line of a view: time view plots one line
/// per time with gene position on x; condition view one line per condition
/// with gene position on x; gene view one line per condition with time
/// position on x.
inline std::vector<std::vector<Point>> view_points(const ExpressionTensor& x, const TriclusterCoords& tc,
                                                   OracleView view) {
    const auto& G = tc.genes;
    const auto& C = tc.conditions;
    const auto& T = tc.times;
    std::vector<std::vector<Point>> lines;
    if (view == OracleView::time) {
        for (auto t : T) {
            std::vector<Point> pts;
            for (std::size_t gi = 0; gi < G.size(); ++gi)
                for (auto c : C) pts.push_back({static_cast<double>(gi), x.at(G[gi], c, t)});
            lines.push_back(std::move(pts));
        }
    } else {
        for (auto c : C) {
            std::vector<Point> pts;
            for (std::size_t ti = 0; ti < T.size(); ++ti)
                for (std::size_t gi = 0; gi < G.size(); ++gi) {
                    const double xpos = view == OracleView::condition ? static_cast<double>(gi) : static_cast<double>(ti);
                    pts.push_back({xpos, x.at(G[gi], c, T[ti])});
                }
            lines.push_back(std::move(pts));
        }
    }
    return lines;
}

/// The closed form that sums x over the x axis only inflates the OLS slope by
/// the number of points stacked above each x position.
inline double replication(const TriclusterCoords& tc, OracleView view) {
    switch (view) {
        case OracleView::time: return static_cast<double>(tc.conditions.size());
        case OracleView::condition: return static_cast<double>(tc.times.size());
        case OracleView::gene: return static_cast<double>(tc.genes.size());
    }
    return 1.0;
}

inline std::vector<double> oracle_slopes(const ExpressionTensor& x, const TriclusterCoords& tc, OracleView view,
                                         bool paper_literal) {
    std::vector<double> slopes;
    for (const auto& pts : view_points(x, tc, view)) {
        const double s = two_pass_slope(pts);
        slopes.push_back(paper_literal ? replication(tc, view) * s : s);
    }
    return slopes;
}

inline double oracle_pairwise(const std::vector<double>& s) {
    double sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j) sum += std::abs(s[i] - s[j]);
    return sum / static_cast<double>((s.size() - 1) * s.size());
}

inline double oracle_lsl(const ExpressionTensor& x, const TriclusterCoords& tc, bool paper_literal) {
    return (oracle_pairwise(oracle_slopes(x, tc, OracleView::time, paper_literal)) +
            oracle_pairwise(oracle_slopes(x, tc, OracleView::condition, paper_literal)) +
            oracle_pairwise(oracle_slopes(x, tc, OracleView::gene, paper_literal))) /
           3.0;
}

inline bool near_rel(double a, double b, double rel, double abs_floor = 1e-12) {
    return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace triea::testing
