#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "triea/breakdown.hpp"
#include "triea/coords.hpp"

namespace triea {

struct ArchiveEntry {
    TriclusterCoords coords;
    FitnessBreakdown breakdown;
};

/// Accepted triclusters in discovery order, plus the union of their
/// coordinates per axis.
class Archive {
public:
    /// Appends the entry when breakdown.lsl < delta. Returns whether it was stored.
    bool admit(const TriclusterCoords& coords, const FitnessBreakdown& breakdown, double delta);

    /// Unconditional append (used when restoring a saved archive).
    void add(const TriclusterCoords& coords, const FitnessBreakdown& breakdown);

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const std::set<std::size_t>& covered_genes() const { return genes_; }
    const std::set<std::size_t>& covered_conditions() const { return conditions_; }
    const std::set<std::size_t>& covered_times() const { return times_; }

private:
    std::vector<ArchiveEntry> entries_;
    std::set<std::size_t> genes_;
    std::set<std::size_t> conditions_;
    std::set<std::size_t> times_;
};

}  // namespace triea
