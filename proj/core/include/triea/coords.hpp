#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "triea/tensor.hpp"

namespace triea {

/// Thrown when coordinates break a size precondition (too few indices,
/// unsorted or duplicated entries).
class CoordsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an index lies outside the tensor it is applied to.
class CoordsBoundsError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Gene, condition and time index subsets of a tricluster, each sorted
/// ascending without duplicates.
struct TriclusterCoords {
    std::vector<std::size_t> genes;
    std::vector<std::size_t> conditions;
    std::vector<std::size_t> times;

    std::size_t gene_count() const { return genes.size(); }
    std::size_t condition_count() const { return conditions.size(); }
    std::size_t time_count() const { return times.size(); }
    std::size_t cell_count() const { return genes.size() * conditions.size() * times.size(); }

    bool contains(std::size_t g, std::size_t c, std::size_t t) const;

    /// Whole-tensor coordinates.
    static TriclusterCoords full(const Shape& shape);

    friend bool operator==(const TriclusterCoords&, const TriclusterCoords&) = default;
};

/// Checks ordering and bounds. Every axis must hold at least `min_size`
/// indices. Throws CoordsError or CoordsBoundsError.
void validate(const TriclusterCoords& coords, const Shape& shape, std::size_t min_size = 1);

/// Sorts and deduplicates each axis in place.
void canonicalize(TriclusterCoords& coords);

/// |cells(a) ∩ cells(b)| / |cells(a) ∪ cells(b)| over the Cartesian cell sets.
double jaccard3d(const TriclusterCoords& a, const TriclusterCoords& b);

/// Number of cells shared by the two triclusters.
std::size_t shared_cells(const TriclusterCoords& a, const TriclusterCoords& b);

std::string to_string(const TriclusterCoords& coords);

}  // namespace triea
