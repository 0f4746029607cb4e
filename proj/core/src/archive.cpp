#include "triea/archive.hpp"

namespace triea {

bool Archive::admit(const TriclusterCoords& coords, const FitnessBreakdown& breakdown, double delta) {
    if (!(breakdown.lsl < delta)) return false;
    add(coords, breakdown);
    return true;
}

void Archive::add(const TriclusterCoords& coords, const FitnessBreakdown& breakdown) {
    entries_.push_back({coords, breakdown});
    genes_.insert(coords.genes.begin(), coords.genes.end());
    conditions_.insert(coords.conditions.begin(), coords.conditions.end());
    times_.insert(coords.times.begin(), coords.times.end());
}

}  // namespace triea
