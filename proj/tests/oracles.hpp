#pragma once

// Brute-force references for the test suite. They use only field and
// polynomial arithmetic plus their own dense elimination, never the
// Gröbner machinery.

#include <gmpxx.h>
#include <vector>

#include "cmc/poly_matrix.hpp"

namespace oracle {

using cmc::Field;
using cmc::Polynomial;
using cmc::RingPtr;
using cmc::Scalar;
using Row = std::vector<Scalar>;
using Exponents = std::vector<int>;

/// All exponent vectors of total degree d in n variables.
std::vector<Exponents> monomials(std::size_t n, int d);

/// Gauss-Jordan elimination in place; returns the pivot column of each
/// nonzero row, the rows themselves left in reduced echelon form on top.
std::vector<std::size_t> echelon(std::vector<Row>& rows, const Field& F);
std::size_t rank(std::vector<Row> rows, const Field& F);
/// Basis of {v : sum_j v_j rows[j] = 0}.
std::vector<Row> left_kernel(const std::vector<Row>& rows, std::size_t width, const Field& F);

/// Coefficients of a homogeneous f on the degree-deg(f) monomial basis.
Row coordinates(const Polynomial& f, int d);

/// Is homogeneous f in the span of the degree-deg(f) multiples of gens?
bool member(const Polynomial& f, const std::vector<Polynomial>& gens);
/// dim_k (S/(gens))_d.
long hilbert_function(const RingPtr& ring, const std::vector<Polynomial>& gens, int d);
/// Coefficients (constant first) of the polynomial through the points.
std::vector<mpq_class> interpolate(const std::vector<std::pair<long, long>>& points);
/// Hilbert polynomial from the function at degrees from..from+nvars.
std::vector<mpq_class> hilbert_polynomial(const RingPtr& ring, const std::vector<Polynomial>& gens, int from);

/// dim_k Hom(I, S/I)_0 from the linear conditions imposed by all relations
/// among generator multiples up to degree `top`.
std::size_t tangent_dimension(const std::vector<Polynomial>& gens, int top);

/// Sum over permutations with signs.
Polynomial leibniz_determinant(const cmc::PolyMatrix& M);

/// Equality of ideals with homogeneous generators by mutual membership.
bool same_homogeneous_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

} // namespace oracle
