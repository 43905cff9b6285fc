#include "cmc/kernels.hpp"

#include <stdexcept>

namespace cmc::kernels {

namespace {

void check_product_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

Polynomial product_entry(const PolyMatrix& a, const PolyMatrix& b, std::size_t i, std::size_t j) {
    Polynomial s(a.ring());
    for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
    return s;
}

// Eliminates column `col` from every row except `pivot_row`; the pivot row
// is already normalized.
void eliminate_column(ScalarMatrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_col) {
    const Field& F = m.field();
    const long rows = static_cast<long>(m.rows());
#pragma omp parallel for schedule(static)
    for (long r = 0; r < rows; ++r) {
        auto ur = static_cast<std::size_t>(r);
        if (ur == pivot_row || F.is_zero(m(ur, col))) continue;
        Scalar factor = F.neg(m(ur, col));
        for (std::size_t c = first_col; c < m.cols(); ++c)
            if (!F.is_zero(m(pivot_row, c))) F.add_mul(m(ur, c), factor, m(pivot_row, c));
    }
}

template <bool Parallel>
std::vector<std::size_t> rref(ScalarMatrix& m) {
    const Field& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && F.is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        Scalar inv = F.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
        if constexpr (Parallel) {
            eliminate_column(m, row, col, col);
        } else {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (r == row || F.is_zero(m(r, col))) continue;
                Scalar factor = F.neg(m(r, col));
                for (std::size_t c = col; c < m.cols(); ++c)
                    if (!F.is_zero(m(row, c))) F.add_mul(m(r, c), factor, m(row, c));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    check_product_shape(a, b);
    PolyMatrix out(a.ring(), a.rows(), b.cols());
    const long n = static_cast<long>(a.rows() * b.cols());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        auto i = static_cast<std::size_t>(k) / b.cols(), j = static_cast<std::size_t>(k) % b.cols();
        out(i, j) = product_entry(a, b, i, j);
    }
    return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
    auto rsets = k_subsets(m.rows(), k);
    auto csets = k_subsets(m.cols(), k);
    std::vector<Polynomial> out(rsets.size() * csets.size(), Polynomial(m.ring()));
    const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < n; ++idx) {
        auto u = static_cast<std::size_t>(idx);
        out[u] = m.submatrix(rsets[u / csets.size()], csets[u % csets.size()]).determinant();
    }
    return out;
}

std::vector<std::size_t> row_reduce(ScalarMatrix& m) { return rref<true>(m); }

namespace serial {

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    check_product_shape(a, b);
    PolyMatrix out(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = product_entry(a, b, i, j);
    return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
    std::vector<Polynomial> out;
    for (const auto& rs : k_subsets(m.rows(), k))
        for (const auto& cs : k_subsets(m.cols(), k)) out.push_back(m.submatrix(rs, cs).determinant());
    return out;
}

std::vector<std::size_t> row_reduce(ScalarMatrix& m) { return rref<false>(m); }

} // namespace serial

} // namespace cmc::kernels
