#include "triea/tensor_io.hpp"

#include "triea/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace triea {
namespace {

constexpr std::string_view kHeader = "gene,condition,time,value";

std::optional<double> parse_number(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

struct Row {
    std::size_t gene;
    std::size_t condition;
    std::string time;
    std::optional<double> value;
    std::size_t line;
};

// Interns labels in order of first appearance.
class LabelIndex {
public:
    std::size_t intern(std::string_view label) {
        auto [it, inserted] = index_.try_emplace(std::string(label), labels_.size());
        if (inserted) labels_.emplace_back(label);
        return it->second;
    }
    std::optional<std::size_t> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::string> labels_;
};

std::vector<std::string> sort_time_labels(std::vector<std::string> labels) {
    std::vector<double> numeric;
    numeric.reserve(labels.size());
    for (const auto& label : labels) {
        auto v = parse_number(label);
        if (!v) {
            std::sort(labels.begin(), labels.end());
            return labels;
        }
        numeric.push_back(*v);
    }
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
    std::vector<std::string> sorted;
    sorted.reserve(labels.size());
    for (auto i : order) sorted.push_back(std::move(labels[i]));
    return sorted;
}

}  // namespace

FormatError::FormatError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

ExpressionTensor load_dataset(const std::filesystem::path& path, const DatasetDescriptor& descriptor) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open dataset '" + path.string() + "'");
    return read_dataset(in, descriptor);
}

ExpressionTensor read_dataset(std::istream& in, const DatasetDescriptor& descriptor) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw FormatError("empty dataset, expected header", 1);
    ++line_no;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) {
        throw FormatError("header must be exactly '" + std::string(kHeader) + "', got '" + line + "'", 1);
    }

    LabelIndex genes;
    LabelIndex conditions;
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != 4) {
            throw FormatError("expected 4 fields, found " + std::to_string(fields.size()), line_no);
        }
        if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
            throw FormatError("gene, condition and time must be non-empty", line_no);
        }
        std::optional<double> value;
        if (!fields[3].empty()) {
            value = parse_number(fields[3]);
            if (!value) {
                throw FormatError("value '" + std::string(fields[3]) + "' is not a finite number", line_no);
            }
        }
        const std::size_t gene = genes.intern(fields[0]);
        if (descriptor.genes_limit && gene >= *descriptor.genes_limit) continue;
        rows.push_back(Row{gene, conditions.intern(fields[1]), std::string(fields[2]), value, line_no});
    }
    if (rows.empty()) throw FormatError("dataset contains no data rows", line_no);

    std::vector<std::string> time_first_seen;
    {
        LabelIndex times;
        for (const auto& row : rows) times.intern(row.time);
        time_first_seen = times.labels();
    }
    auto time_labels = sort_time_labels(time_first_seen);
    std::unordered_map<std::string, std::size_t> time_index;
    for (std::size_t i = 0; i < time_labels.size(); ++i) time_index.emplace(time_labels[i], i);

    std::vector<std::string> gene_labels = genes.labels();
    if (descriptor.genes_limit && gene_labels.size() > *descriptor.genes_limit) {
        gene_labels.resize(*descriptor.genes_limit);
    }

    const Shape shape{gene_labels.size(), conditions.size(), time_labels.size()};
    std::vector<double> values(shape.cell_count(), std::numeric_limits<double>::quiet_NaN());
    std::vector<bool> missing(shape.cell_count(), true);
    std::vector<bool> seen(shape.cell_count(), false);
    std::vector<bool> grid(shape.conditions * shape.times, false);

    for (const auto& row : rows) {
        const std::size_t t = time_index.at(row.time);
        const std::size_t idx = (row.gene * shape.conditions + row.condition) * shape.times + t;
        if (seen[idx]) {
            throw FormatError("duplicate entry for gene '" + gene_labels[row.gene] + "', condition '" +
                                  conditions.labels()[row.condition] + "', time '" + row.time + "'",
                              row.line);
        }
        seen[idx] = true;
        grid[row.condition * shape.times + t] = true;
        if (row.value) {
            values[idx] = *row.value;
            missing[idx] = false;
        }
    }

    for (std::size_t c = 0; c < shape.conditions; ++c) {
        for (std::size_t t = 0; t < shape.times; ++t) {
            if (!grid[c * shape.times + t]) {
                throw FormatError("ragged time grid: condition '" + conditions.labels()[c] +
                                  "' has no rows for time '" + time_labels[t] + "'");
            }
        }
    }

    return ExpressionTensor(std::move(gene_labels), conditions.labels(), std::move(time_labels),
                            std::move(values), std::move(missing));
}

void export_csv(const ExpressionTensor& tensor, std::ostream& out) {
    const auto& shape = tensor.shape();
    out << kHeader << '\n';
    for (std::size_t g = 0; g < shape.genes; ++g) {
        for (std::size_t c = 0; c < shape.conditions; ++c) {
            for (std::size_t t = 0; t < shape.times; ++t) {
                out << tensor.gene_ids()[g] << ',' << tensor.condition_ids()[c] << ','
                    << tensor.time_labels()[t] << ',';
                if (!tensor.is_missing(g, c, t)) out << format_double(tensor.at(g, c, t));
                out << '\n';
            }
        }
    }
}

ExpressionTensor normalize_minmax(const ExpressionTensor& tensor) {
    ExpressionTensor out = tensor;
    const auto& shape = tensor.shape();
    for (std::size_t c = 0; c < shape.conditions; ++c) {
        for (std::size_t t = 0; t < shape.times; ++t) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            for (std::size_t g = 0; g < shape.genes; ++g) {
                if (tensor.is_missing(g, c, t)) continue;
                lo = std::min(lo, tensor.at(g, c, t));
                hi = std::max(hi, tensor.at(g, c, t));
            }
            if (lo > hi) continue;  // column entirely missing
            const double range = hi - lo;
            for (std::size_t g = 0; g < shape.genes; ++g) {
                if (tensor.is_missing(g, c, t)) continue;
                out.at(g, c, t) = range > 0.0 ? (tensor.at(g, c, t) - lo) / range : 0.0;
            }
        }
    }
    return out;
}

ExpressionTensor impute_missing(const ExpressionTensor& tensor, std::uint64_t seed) {
    ExpressionTensor out = tensor;
    Rng rng(seed);
    auto values = out.values();
    const auto& mask = out.missing_mask();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (mask[i]) values[i] = rng.uniform01();
    }
    return out;
}

}  // namespace triea
