#pragma once

// Gröbner bases of submodules of free modules R^r under the term-over-position
// order extending the ring's monomial order. Ideals are the rank-1 case.

#include <cstdint>
#include <vector>

#include "cmc/polynomial.hpp"

namespace cmc::gb {

struct ModTerm {
    Monomial mono;
    std::uint32_t comp;
    Scalar coeff;
};

/// Sparse module element, terms strictly decreasing in term-over-position
/// order (larger monomial first; equal monomials: smaller component first).
using Vec = std::vector<ModTerm>;

int compare_terms(const Ring& R, const ModTerm& a, const ModTerm& b);
void sort_vec(const Ring& R, Vec& v);
/// a + s * m * b
Vec axpy(const Ring& R, const Vec& a, const Scalar& s, const Monomial& m, const Vec& b, std::size_t a_start = 0);
Vec scale(const Ring& R, const Vec& v, const Scalar& s, const Monomial& m);
/// p * v for a polynomial p (same ring).
Vec poly_times(const Ring& R, const Polynomial& p, const Vec& v);
Vec add(const Ring& R, const Vec& a, const Vec& b);
bool vec_equal(const Ring& R, const Vec& a, const Vec& b);

Vec from_polynomial(const Polynomial& p, std::uint32_t comp = 0);
/// Component `comp` as a polynomial.
Polynomial component(const RingPtr& R, const Vec& v, std::uint32_t comp);
std::vector<Polynomial> to_components(const RingPtr& R, const Vec& v, std::size_t rank);
Vec from_components(const std::vector<Polynomial>& comps);
Vec unit_vector(const Ring& R, std::uint32_t comp);

struct Element {
    Vec vec;
    /// Representation in terms of the input generators (component = input index).
    Vec rep;
    Monomial lead;
    std::uint32_t lead_comp = 0;
    std::uint32_t lead_support = 0;
};

struct Options {
    bool track = false;
    bool parallel = true;
};

struct Stats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t product_criterion = 0;
    std::size_t chain_criterion = 0;
    std::size_t zero_reductions = 0;
};

/// Full reduction of f modulo the basis. When `rep` is given it is updated
/// alongside f (rep(f) -= c*m*rep(g)); when `quotients` is given it collects
/// c*m at component = basis index.
Vec reduce(const Ring& R, Vec f, const std::vector<Element>& basis, Vec* rep = nullptr, Vec* quotients = nullptr);

/// Buchberger's algorithm, normal selection strategy, product and chain
/// criteria. Returns a (non-reduced) Gröbner basis; input i has rep e_i.
std::vector<Element> buchberger(const RingPtr& ring, const std::vector<Vec>& gens, const Options& opts = {},
                                Stats* stats = nullptr);

/// Serial reference: one pair at a time, same criteria.
std::vector<Element> buchberger_serial(const RingPtr& ring, const std::vector<Vec>& gens, bool track = false,
                                       Stats* stats = nullptr);

/// Minimal, fully inter-reduced, monic basis, sorted by increasing leading term.
std::vector<Vec> reduced_basis(const RingPtr& ring, std::vector<Element> basis);

/// Convenience: reduced Gröbner basis of the generated submodule.
std::vector<Vec> reduced_groebner(const RingPtr& ring, const std::vector<Vec>& gens, bool parallel = true);

std::vector<Element> as_elements(const Ring& R, const std::vector<Vec>& basis);

/// Every S-pair reduces to zero (test oracle for the criteria).
bool is_groebner(const RingPtr& ring, const std::vector<Element>& basis);

/// Generators of {s : sum s_i gens_i = 0}, via representation-tracked
/// Buchberger and Schreyer's S-pair syzygies.
std::vector<Vec> syzygies(const RingPtr& ring, const std::vector<Vec>& gens);

/// When enabled, every syzygy computation re-checks sum s_i v_i = 0 and
/// throws std::logic_error on failure. Test binaries switch it on.
void set_self_check(bool on);
bool self_check();

} // namespace cmc::gb
