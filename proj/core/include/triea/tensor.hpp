#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace triea {

/// Extent of an expression tensor along its three axes.
struct Shape {
    std::size_t genes = 0;
    std::size_t conditions = 0;
    std::size_t times = 0;

    std::size_t cell_count() const { return genes * conditions * times; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Dense genes x conditions x times array of expression values.
///
/// Values are stored gene-major: index = (g * conditions + c) * times + t.
/// Cells flagged in the missing mask carry NaN until imputed; the mask is
/// kept afterwards so callers can tell which values were filled in.
class ExpressionTensor {
public:
    ExpressionTensor() = default;

    /// Throws std::invalid_argument when the label lists contain duplicates,
    /// an axis is empty, or the value/mask sizes disagree with the labels.
    ExpressionTensor(std::vector<std::string> gene_ids,
                     std::vector<std::string> condition_ids,
                     std::vector<std::string> time_labels,
                     std::vector<double> values,
                     std::vector<bool> missing_mask);

    /// Tensor with default labels ("g0", "c0", "0", ...) and no missing cells.
    static ExpressionTensor from_values(Shape shape, std::vector<double> values);

    const Shape& shape() const { return shape_; }

    std::size_t index(std::size_t g, std::size_t c, std::size_t t) const {
        return (g * shape_.conditions + c) * shape_.times + t;
    }

    double at(std::size_t g, std::size_t c, std::size_t t) const { return values_[index(g, c, t)]; }
    double& at(std::size_t g, std::size_t c, std::size_t t) { return values_[index(g, c, t)]; }

    bool is_missing(std::size_t g, std::size_t c, std::size_t t) const {
        return missing_[index(g, c, t)];
    }
    void set_missing(std::size_t g, std::size_t c, std::size_t t, bool missing) {
        missing_[index(g, c, t)] = missing;
    }
    std::size_t missing_count() const;

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    const std::vector<bool>& missing_mask() const { return missing_; }

    const std::vector<std::string>& gene_ids() const { return gene_ids_; }
    const std::vector<std::string>& condition_ids() const { return condition_ids_; }
    const std::vector<std::string>& time_labels() const { return time_labels_; }

private:
    Shape shape_;
    std::vector<std::string> gene_ids_;
    std::vector<std::string> condition_ids_;
    std::vector<std::string> time_labels_;
    std::vector<double> values_;
    std::vector<bool> missing_;
};

}  // namespace triea
