#include "triea/chromosome.hpp"

#include <algorithm>
#include <stdexcept>

namespace triea {

Chromosome::Chromosome(const Shape& shape)
    : shape_(shape), bits_(shape.genes + shape.conditions + shape.times, 0) {}

Chromosome Chromosome::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '|') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3) throw std::invalid_argument("chromosome: expected three '|'-separated segments");
    Chromosome chrom(Shape{parts[0].size(), parts[1].size(), parts[2].size()});
    std::size_t k = 0;
    for (auto part : parts) {
        for (char ch : part) {
            if (ch != '0' && ch != '1') throw std::invalid_argument("chromosome: bits must be 0 or 1");
            chrom.bits_[k++] = ch == '1' ? 1 : 0;
        }
    }
    return chrom;
}

std::size_t Chromosome::offset(Segment s) const {
    switch (s) {
        case Segment::genes: return 0;
        case Segment::conditions: return shape_.genes;
        case Segment::times: return shape_.genes + shape_.conditions;
    }
    return 0;
}

std::size_t Chromosome::length(Segment s) const {
    switch (s) {
        case Segment::genes: return shape_.genes;
        case Segment::conditions: return shape_.conditions;
        case Segment::times: return shape_.times;
    }
    return 0;
}

std::span<std::uint8_t> Chromosome::segment(Segment s) {
    return std::span<std::uint8_t>(bits_).subspan(offset(s), length(s));
}

std::span<const std::uint8_t> Chromosome::segment(Segment s) const {
    return std::span<const std::uint8_t>(bits_).subspan(offset(s), length(s));
}

std::size_t Chromosome::set_count(Segment s) const {
    auto seg = segment(s);
    return static_cast<std::size_t>(std::count(seg.begin(), seg.end(), std::uint8_t{1}));
}

std::string Chromosome::to_string() const {
    std::string out;
    out.reserve(bits_.size() + 2);
    for (auto s : kSegments) {
        if (s != Segment::genes) out.push_back('|');
        for (auto b : segment(s)) out.push_back(b ? '1' : '0');
    }
    return out;
}

Chromosome encode(const TriclusterCoords& coords, const Shape& shape) {
    validate(coords, shape, 0);
    Chromosome chrom(shape);
    for (auto g : coords.genes) chrom.segment(Segment::genes)[g] = 1;
    for (auto c : coords.conditions) chrom.segment(Segment::conditions)[c] = 1;
    for (auto t : coords.times) chrom.segment(Segment::times)[t] = 1;
    return chrom;
}

TriclusterCoords decode(const Chromosome& chrom) {
    TriclusterCoords coords;
    std::vector<std::size_t>* axes[] = {&coords.genes, &coords.conditions, &coords.times};
    for (auto s : kSegments) {
        auto seg = chrom.segment(s);
        auto& axis = *axes[static_cast<int>(s)];
        for (std::size_t i = 0; i < seg.size(); ++i) {
            if (seg[i]) axis.push_back(i);
        }
        if (axis.size() < 2) {
            throw CoordsError("decode: segment " + std::to_string(static_cast<int>(s)) +
                              " has fewer than two set bits; repair the chromosome first");
        }
    }
    return coords;
}

}  // namespace triea
