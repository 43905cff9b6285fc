#include "cmc/linalg.hpp"

#include <stdexcept>

#include "cmc/kernels.hpp"

namespace cmc {

void ScalarMatrix::append_row(const std::vector<Scalar>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> row_reduce(ScalarMatrix& m) { return kernels::row_reduce(m); }

std::size_t rank(ScalarMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m) {
    const Field& F = m.field();
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cmc
