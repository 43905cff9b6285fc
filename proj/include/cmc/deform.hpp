#pragma once

// Normal modules, graded tangent dimensions and lifting of perturbed
// presentations.

#include <string>
#include <vector>

#include "cmc/idealops.hpp"

namespace cmc {

/// A perturbed product left * right over a ring containing deformation
/// variables. For a generator vector the left factor has one row.
struct DeformationSetup {
    RingPtr ring;
    PolyMatrix left;
    PolyMatrix right;
    Ideal obstruction;
    std::vector<std::string> deformation_variables;
    int truncation_degree = 3;

    DeformationSetup(PolyMatrix l, PolyMatrix r, Ideal J, std::vector<std::string> vars, int truncation = 3);
    /// One-row left factor from a generator vector.
    static PolyMatrix row_of(const FreeModuleVector& v);
    /// Both factors with every deformation variable set to zero.
    std::pair<PolyMatrix, PolyMatrix> undeformed() const;
};

struct LiftReport {
    PolyMatrix product;
    /// The product without terms of deformation degree >= the truncation.
    PolyMatrix residue;
    bool zero_mod_obstruction = false;
};

/// Terms of p whose degree in `vars` is below `bound`.
Polynomial truncate_below(const Polynomial& p, const std::vector<std::string>& vars, int bound);

LiftReport lift_check(const DeformationSetup& setup);

struct TangentReport {
    std::size_t dimension = 0;
    /// Images of the generators under a basis of degree-0 homomorphisms.
    std::vector<FreeModuleVector> basis;
};

/// Generators of Hom(I, S/I), as images of I's generators reduced modulo I:
/// the syzygies, modulo I, of the rows of the relation matrix. Entries with
/// a total degree above `degree_bound` are dropped when it is nonnegative.
std::vector<FreeModuleVector> normal_module_generators(const Ideal& I, int degree_bound = -1);

/// Dimension of the degree-0 part of Hom(I, S/I) for homogeneous saturated I,
/// by exact linear algebra on standard monomials.
TangentReport tangent_space(const Ideal& I);
std::size_t tangent_dimension(const Ideal& I);

/// The same dimension from the degree-0 span of normal_module_generators.
std::size_t tangent_dimension_from_generators(const Ideal& I);

/// Monomials of degree d in n variables, in decreasing order for `ring`.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d);
/// Degree-d monomials outside the leading-term ideal of I.
std::vector<Monomial> standard_monomials(const Ideal& I, int d);

} // namespace cmc
