#pragma once

#include <vector>

#include "cmc/field.hpp"

namespace cmc {

/// Dense matrix over a coefficient field, row-major.
class ScalarMatrix {
  public:
    ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<Scalar>& row);

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(ScalarMatrix& m);
std::size_t rank(ScalarMatrix m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m);

} // namespace cmc
