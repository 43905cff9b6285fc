#pragma once

// Colon ideals, saturation, elimination, intersection, Hilbert data,
// Fitting ideals and annihilators of finitely presented modules.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cmc/groebner.hpp"

namespace cmc {

/// A fresh variable name for `ring` starting from `stem`.
std::string fresh_name(const Ring& ring, const std::string& stem);

/// I ∩ k[remaining variables], returned in I's ring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(const std::vector<Ideal>& ideals);

/// (I : h) = (I ∩ (h)) / h.
Ideal quotient(const Ideal& I, const Polynomial& h);
/// (I : J) as the intersection of the colons by J's generators.
Ideal quotient(const Ideal& I, const Ideal& J);

/// (I : h^∞) through the auxiliary-variable elimination (I, 1 - t h) ∩ R.
Ideal saturate(const Ideal& I, const Polynomial& h);
/// (I : J^∞). For the irrelevant ideal of a homogeneous I this intersects
/// per-variable saturations read off revlex bases with that variable last;
/// otherwise it intersects the saturations by J's generators.
Ideal saturate(const Ideal& I, const Ideal& J);
/// Reference route: colon by J repeatedly until the ideal stops growing.
Ideal saturate_by_colons(const Ideal& I, const Ideal& J);

struct HilbertData {
    std::size_t nvars = 0;
    /// K(T) = numerator(T) / (1 - T)^nvars, coefficients from T^0.
    std::vector<long> numerator;
    /// (degree, dim_k (S/I)_degree) for degree = 0, 1, ...
    std::vector<std::pair<int, long>> table;
    /// Coefficients of the Hilbert polynomial in t, constant term first.
    std::vector<mpq_class> polynomial;
    /// Krull dimension of S/I.
    int dimension = 0;
    /// Smallest tabulated degree from which the table follows the polynomial.
    int regularity_index = 0;

    long function_at(int d) const;
    mpq_class polynomial_at(long t) const;
    /// True when the polynomial is c_0 + c_1 t + ... for the given integers.
    bool polynomial_is(const std::vector<long>& coeffs) const;
    /// Rendered as e.g. "3t+1".
    std::string polynomial_string() const;
};

/// Numerator N(T) of the Hilbert series of S/M for a monomial ideal M in
/// `nvars` variables, by pivot recursion.
std::vector<long> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Hilbert data of S/I for homogeneous I. The table runs at least to
/// `table_depth` and far enough that its tail is polynomial.
HilbertData hilbert(const Ideal& I, int table_depth = 8);

/// Cokernel of relations : R^cols -> R^rows. Column j is the j-th relation
/// among the rows-many generators.
struct ModulePresentation {
    RingPtr ring;
    std::vector<int> generator_degrees;
    PolyMatrix relations;
    bool graded = false;

    ModulePresentation(PolyMatrix rel, std::vector<int> degrees = {}, bool is_graded = false);
    std::size_t generators() const { return relations.rows(); }
    /// Every relation column is homogeneous for the generator degrees.
    bool is_graded_consistent() const;
};

/// Ideal of (g - n)-minors of the relation matrix; (1) when n >= g.
Ideal fitting_ideal(const ModulePresentation& P, std::size_t n = 0);

/// Ann of the cokernel, intersecting (relations : e_i) over generators.
Ideal annihilator(const ModulePresentation& P);

/// Generators of (I : t) that do not lie in I.
std::vector<Polynomial> torsion_witnesses(const Ideal& I, const std::string& var);

} // namespace cmc
