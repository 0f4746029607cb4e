#include "triea/coords.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

namespace triea {
namespace {

std::size_t intersection_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t n = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++n;
            ++ia;
            ++ib;
        }
    }
    return n;
}

void check_axis(const std::vector<std::size_t>& idx, std::size_t extent, std::size_t min_size,
                const char* axis) {
    if (idx.size() < min_size) {
        throw CoordsError(std::string(axis) + " axis has " + std::to_string(idx.size()) +
                          " indices, at least " + std::to_string(min_size) + " required");
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= extent) {
            throw CoordsBoundsError(std::string(axis) + " index " + std::to_string(idx[i]) +
                                    " out of range [0, " + std::to_string(extent) + ")");
        }
        if (i > 0 && idx[i] <= idx[i - 1]) {
            throw CoordsError(std::string(axis) + " indices must be strictly increasing");
        }
    }
}

void list(std::ostream& os, const std::vector<std::size_t>& idx) {
    os << '{';
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << '}';
}

}  // namespace

bool TriclusterCoords::contains(std::size_t g, std::size_t c, std::size_t t) const {
    return std::binary_search(genes.begin(), genes.end(), g) &&
           std::binary_search(conditions.begin(), conditions.end(), c) &&
           std::binary_search(times.begin(), times.end(), t);
}

TriclusterCoords TriclusterCoords::full(const Shape& shape) {
    TriclusterCoords coords;
    coords.genes.resize(shape.genes);
    coords.conditions.resize(shape.conditions);
    coords.times.resize(shape.times);
    std::iota(coords.genes.begin(), coords.genes.end(), 0);
    std::iota(coords.conditions.begin(), coords.conditions.end(), 0);
    std::iota(coords.times.begin(), coords.times.end(), 0);
    return coords;
}

void validate(const TriclusterCoords& coords, const Shape& shape, std::size_t min_size) {
    check_axis(coords.genes, shape.genes, min_size, "gene");
    check_axis(coords.conditions, shape.conditions, min_size, "condition");
    check_axis(coords.times, shape.times, min_size, "time");
}

void canonicalize(TriclusterCoords& coords) {
    for (auto* axis : {&coords.genes, &coords.conditions, &coords.times}) {
        std::sort(axis->begin(), axis->end());
        axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
    }
}

std::size_t shared_cells(const TriclusterCoords& a, const TriclusterCoords& b) {
    return intersection_size(a.genes, b.genes) * intersection_size(a.conditions, b.conditions) *
           intersection_size(a.times, b.times);
}

double jaccard3d(const TriclusterCoords& a, const TriclusterCoords& b) {
    const std::size_t inter = shared_cells(a, b);
    const std::size_t uni = a.cell_count() + b.cell_count() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::string to_string(const TriclusterCoords& coords) {
    std::ostringstream os;
    os << "G";
    list(os, coords.genes);
    os << " C";
    list(os, coords.conditions);
    os << " T";
    list(os, coords.times);
    return os.str();
}

}  // namespace triea
