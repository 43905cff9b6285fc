#pragma once

#include <string>
#include <vector>

#include "cmc/polynomial.hpp"

namespace cmc {

/// Rectangular matrix of polynomials over one ring, row-major.
class PolyMatrix {
  public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);
    static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
    static PolyMatrix identity(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const std::vector<Polynomial>& entries() const { return entries_; }

    std::vector<Polynomial> row(std::size_t i) const;
    std::vector<Polynomial> column(std::size_t j) const;

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    bool is_zero() const;
    /// Entrywise ring map or any other polynomial transform.
    template <class F>
    PolyMatrix map(RingPtr target, F&& f) const {
        PolyMatrix out(target, rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = f(entries_[k]);
        return out;
    }

    /// Adjoins columns of `o` on the right.
    PolyMatrix hconcat(const PolyMatrix& o) const;
    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    /// Determinant by Laplace expansion along the first row.
    Polynomial determinant() const;

    /// All k x k minors. Rows i1<..<ik and columns j1<..<jk enumerated in
    /// lexicographic order (row subsets outer), each minor the determinant of
    /// the submatrix with rows/columns kept in increasing order, no extra sign.
    std::vector<Polynomial> minors(std::size_t k) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    std::string to_string() const;

  private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

} // namespace cmc
