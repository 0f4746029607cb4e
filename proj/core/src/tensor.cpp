#include "triea/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace triea {
namespace {

void require_unique(const std::vector<std::string>& labels, const char* axis) {
    if (labels.empty()) {
        throw std::invalid_argument(std::string("expression tensor: empty ") + axis + " axis");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw std::invalid_argument(std::string("expression tensor: duplicate ") + axis +
                                        " label '" + label + "'");
        }
    }
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

}  // namespace

ExpressionTensor::ExpressionTensor(std::vector<std::string> gene_ids,
                                   std::vector<std::string> condition_ids,
                                   std::vector<std::string> time_labels,
                                   std::vector<double> values,
                                   std::vector<bool> missing_mask)
    : shape_{gene_ids.size(), condition_ids.size(), time_labels.size()},
      gene_ids_(std::move(gene_ids)),
      condition_ids_(std::move(condition_ids)),
      time_labels_(std::move(time_labels)),
      values_(std::move(values)),
      missing_(std::move(missing_mask)) {
    require_unique(gene_ids_, "gene");
    require_unique(condition_ids_, "condition");
    require_unique(time_labels_, "time");
    if (values_.size() != shape_.cell_count()) {
        throw std::invalid_argument("expression tensor: value count does not match label dimensions");
    }
    if (missing_.empty()) {
        missing_.assign(values_.size(), false);
    } else if (missing_.size() != values_.size()) {
        throw std::invalid_argument("expression tensor: missing mask size does not match values");
    }
}

ExpressionTensor ExpressionTensor::from_values(Shape shape, std::vector<double> values) {
    return ExpressionTensor(numbered("g", shape.genes), numbered("c", shape.conditions),
                            numbered("", shape.times), std::move(values), {});
}

std::size_t ExpressionTensor::missing_count() const {
    return static_cast<std::size_t>(std::count(missing_.begin(), missing_.end(), true));
}

}  // namespace triea
