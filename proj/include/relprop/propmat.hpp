#ifndef RELPROP_PROPMAT_HPP
#define RELPROP_PROPMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relprop/logic.hpp"
#include "relprop/miner.hpp"

namespace relprop {

/// Boolean propositionalized view of a dataset: bit (k, i) is 1 iff query i
/// subsumes example k. Rows are bit-packed: subset scoring touches every row
/// thousands of times during the search.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t cols)
        : labels(rows, 0),
          rows_(rows),
          cols_(cols),
          words_per_row_((cols + 63) / 64),
          bits_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool bit(std::size_t row, std::size_t col) const {
        return (bits_[row * words_per_row_ + col / 64] >> (col % 64)) & 1u;
    }
    void set_bit(std::size_t row, std::size_t col, bool value) {
        std::uint64_t& word = bits_[row * words_per_row_ + col / 64];
        std::uint64_t mask = std::uint64_t{1} << (col % 64);
        word = value ? (word | mask) : (word & ~mask);
    }

    /// Row restricted to the given feature indices, as 0/1 ints.
    std::vector<int> restricted_row(std::size_t row, const std::vector<int>& subset) const;
    std::vector<int> full_row(std::size_t row) const;

    std::vector<int> labels;  // 1-based class index per row (0 = unknown)
    int num_classes = 0;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Propositionalizes a dataset: one row per example, one column per query,
/// in the FeatureSet's order.
FeatureMatrix build_matrix(const Dataset& data, const FeatureSet& features);

/// Builds a matrix directly from 0/1 rows; num_classes is the largest label.
FeatureMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows,
                               const std::vector<int>& labels);

/// Fraction of ones in a column; equals the feature's mined support when the
/// matrix was built from the mining dataset.
double column_mean(const FeatureMatrix& m, std::size_t col);

/// CSV export: `q0,...,q<d-1>,label` header, one 0/1 row per example.
std::string matrix_to_csv(const FeatureMatrix& m);

}  // namespace relprop

#endif
