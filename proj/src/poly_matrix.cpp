#include "cmc/poly_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "cmc/kernels.hpp"

namespace cmc {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match shape");
    for (const auto& e : entries_)
        if (!same_ring(e.ring(), ring_)) throw RingMismatch();
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    std::vector<Polynomial> e;
    for (const auto& r : rows) {
        if (r.size() != c) throw std::invalid_argument("ragged matrix rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return PolyMatrix(std::move(ring), rows.size(), c, std::move(e));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
    return m;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<long>(i * cols_), entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const { return kernels::matmul(*this, o); }

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("row count mismatch");
    PolyMatrix r(ring_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    PolyMatrix r(ring_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
    return r;
}

Polynomial PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    if (rows_ == 0) return Polynomial::constant(ring_, 1);
    if (rows_ == 1) return entries_[0];
    if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    Polynomial det(ring_);
    std::vector<std::size_t> rest_rows;
    for (std::size_t i = 1; i < rows_; ++i) rest_rows.push_back(i);
    for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(0, j).is_zero()) continue;
        std::vector<std::size_t> rest_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (c != j) rest_cols.push_back(c);
        Polynomial term = (*this)(0, j) * submatrix(rest_rows, rest_cols).determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::vector<Polynomial> PolyMatrix::minors(std::size_t k) const {
    if (k == 0 || k > std::min(rows_, cols_)) throw std::out_of_range("minor size out of range");
    return kernels::minors(*this, k);
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    }
    os << ']';
    return os.str();
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace cmc
