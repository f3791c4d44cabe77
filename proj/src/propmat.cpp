#include "relprop/propmat.hpp"

#include <algorithm>

#include "relprop/errors.hpp"
#include "relprop/subsume.hpp"

namespace relprop {

std::vector<int> FeatureMatrix::restricted_row(std::size_t row,
                                               const std::vector<int>& subset) const {
    std::vector<int> r(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        r[i] = bit(row, static_cast<std::size_t>(subset[i])) ? 1 : 0;
    }
    return r;
}

std::vector<int> FeatureMatrix::full_row(std::size_t row) const {
    std::vector<int> r(cols_);
    for (std::size_t c = 0; c < cols_; ++c) r[c] = bit(row, c) ? 1 : 0;
    return r;
}

FeatureMatrix build_matrix(const Dataset& data, const FeatureSet& features) {
    FeatureMatrix m(data.examples.size(), features.size());
    m.num_classes = data.num_classes;
    for (std::size_t row = 0; row < data.examples.size(); ++row) {
        ExampleIndex index(data.examples[row]);
        for (std::size_t col = 0; col < features.size(); ++col) {
            if (oi_subsumes(features.queries[col], index)) m.set_bit(row, col, true);
        }
        m.labels[row] = data.examples[row].label;
    }
    return m;
}

FeatureMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows,
                               const std::vector<int>& labels) {
    if (rows.size() != labels.size()) {
        throw ConfigError("matrix_from_rows: row and label counts differ");
    }
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FeatureMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw ConfigError("matrix_from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c]) m.set_bit(r, c, true);
        }
        m.labels[r] = labels[r];
    }
    m.num_classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    return m;
}

double column_mean(const FeatureMatrix& m, std::size_t col) {
    int ones = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.bit(r, col)) ++ones;
    }
    return static_cast<double>(ones) / static_cast<int>(m.rows());
}

std::string matrix_to_csv(const FeatureMatrix& m) {
    std::string text;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        text += 'q' + std::to_string(c);
        text += ',';
    }
    text += "label\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            text += m.bit(r, c) ? '1' : '0';
            text += ',';
        }
        text += std::to_string(m.labels[r]);
        text += '\n';
    }
    return text;
}

}  // namespace relprop
