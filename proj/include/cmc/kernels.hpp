#pragma once

// Data-parallel kernels (OpenMP) and the serial reference versions they are
// tested and benchmarked against. Results are bit-identical between the two.

#include <vector>

#include "cmc/linalg.hpp"
#include "cmc/poly_matrix.hpp"

namespace cmc::kernels {

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);
std::vector<std::size_t> row_reduce(ScalarMatrix& m);

namespace serial {

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);
std::vector<std::size_t> row_reduce(ScalarMatrix& m);

} // namespace serial

} // namespace cmc::kernels
