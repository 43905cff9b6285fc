#pragma once

// Seeded randomized property checks of the kernel, with oracles that avoid
// Gröbner bases where possible.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmc/idealops.hpp"

namespace cmc {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    /// A rendering of the first failing instance.
    std::string counterexample;
};

/// Random homogeneous polynomial of degree d with about `terms` terms.
Polynomial random_form(const RingPtr& ring, int d, std::mt19937_64& rng, int terms = 4);

/// f homogeneous lies in (gens) iff it is in the span of the degree-deg(f)
/// multiples of homogeneous generators. Pure linear algebra.
bool linear_algebra_member(const Polynomial& f, const std::vector<Polynomial>& gens);

/// dim_k (S/(gens))_d for homogeneous generators, by linear algebra.
long linear_algebra_hilbert_function(const std::vector<Polynomial>& gens, int d);

/// Ideal membership from Gröbner bases against linear_algebra_member, for
/// test polynomials up to max generator degree + 4.
PropertyResult property_membership(int cases, std::uint64_t seed, const Field& field);
/// Fitt^n unchanged by elementary row/column operations and by adding a unit
/// block.
PropertyResult property_fitting_invariance(int cases, std::uint64_t seed, const Field& field);
/// (I : m^inf) is idempotent and agrees with iterated colons.
PropertyResult property_saturation(int cases, std::uint64_t seed, const Field& field);
/// Every computed syzygy s of (v_1..v_k) has sum s_i v_i = 0.
PropertyResult property_syzygies(int cases, std::uint64_t seed, const Field& field);
/// det(matrix_factorization(Q, s, t)) = -Q.
PropertyResult property_factorization(int cases, std::uint64_t seed, const Field& field);
/// Parallel and serial Buchberger give the same reduced basis.
PropertyResult property_parallel_serial(int cases, std::uint64_t seed, const Field& field);

} // namespace cmc
