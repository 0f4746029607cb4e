#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "triea/tensor.hpp"

namespace triea {

/// Raised for any problem with the content of an input dataset.
/// `line()` is the 1-based line number of the offending row, or 0 when the
/// problem is not tied to a single row (e.g. a ragged time grid).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line = 0);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct DatasetDescriptor {
    /// Keep only the first N genes in order of first appearance.
    std::optional<std::size_t> genes_limit;
};

// Long-format CSV with header exactly `gene,condition,time,value`.
//
// Genes and conditions are ordered by first appearance. Time labels are
// sorted numerically when every label parses as a number, lexically
// otherwise. Empty value fields and (gene, condition, time) triples that
// never appear are flagged missing. No imputation happens here.
ExpressionTensor load_dataset(const std::filesystem::path& path,
                              const DatasetDescriptor& descriptor = {});
ExpressionTensor read_dataset(std::istream& in, const DatasetDescriptor& descriptor = {});

/// Writes every cell in (gene, condition, time) order; missing cells get an
/// empty value field. Values use shortest round-trip formatting.
void export_csv(const ExpressionTensor& tensor, std::ostream& out);

/// Min-max rescaling of every (condition, time) column over genes.
/// Missing cells are ignored and left untouched; a constant column maps to 0.
ExpressionTensor normalize_minmax(const ExpressionTensor& tensor);

/// Fills missing cells with uniform draws from [0, 1). The missing mask is kept.
ExpressionTensor impute_missing(const ExpressionTensor& tensor, std::uint64_t seed);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace triea
