#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triea/coords.hpp"
#include "triea/tensor.hpp"

namespace triea {

enum class Segment { genes = 0, conditions = 1, times = 2 };

/// Membership mask over genes | conditions | times, one bit per index.
class Chromosome {
public:
    Chromosome() = default;
    explicit Chromosome(const Shape& shape);

    /// Parses "10110|10001|11001"; the separators fix the segment lengths.
    static Chromosome parse(std::string_view text);

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return bits_.size(); }

    std::span<std::uint8_t> segment(Segment s);
    std::span<const std::uint8_t> segment(Segment s) const;
    std::size_t set_count(Segment s) const;

    std::span<const std::uint8_t> bits() const { return bits_; }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void flip(std::size_t i) { bits_[i] ^= 1U; }

    std::string to_string() const;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;

private:
    std::size_t offset(Segment s) const;
    std::size_t length(Segment s) const;

    Shape shape_;
    std::vector<std::uint8_t> bits_;
};

inline constexpr Segment kSegments[] = {Segment::genes, Segment::conditions, Segment::times};

Chromosome encode(const TriclusterCoords& coords, const Shape& shape);

/// Indices of set bits per segment. Throws CoordsError when a segment has
/// fewer than two set bits.
TriclusterCoords decode(const Chromosome& chrom);

}  // namespace triea
