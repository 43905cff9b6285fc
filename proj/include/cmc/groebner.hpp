#pragma once

// Ideals with cached reduced Gröbner bases, free-module vectors, division,
// syzygies and submodule membership.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cmc/module_gb.hpp"
#include "cmc/poly_matrix.hpp"

namespace cmc {

/// Remainder of multivariate division of f by the list G (any list, not
/// necessarily a Gröbner basis). Divisors are tried in list order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

class Ideal {
  public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
    Ideal(RingPtr ring, std::vector<Polynomial> generators);
    /// Ideal in the ring shared by the (nonempty) list.
    explicit Ideal(std::vector<Polynomial> generators);

    static Ideal unit(RingPtr ring);
    /// The ideal generated by the listed variables.
    static Ideal of_variables(RingPtr ring, const std::vector<std::string>& names);
    /// (x_1, ..., x_n).
    static Ideal irrelevant(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    /// Nonzero generators as given.
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced Gröbner basis under the ring's order. Computed once; concurrent
    /// callers may race the computation but all observe the first result.
    std::vector<Polynomial> groebner() const;
    bool has_cached_groebner() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const;

    Ideal operator+(const Ideal& o) const;
    Ideal operator*(const Ideal& o) const;
    Ideal with(const std::vector<Polynomial>& more) const;

    /// The same generators in another ring (matched by variable name).
    Ideal map_to(const RingPtr& target) const;

    std::string to_string() const;

  private:
    struct Basis {
        std::vector<Polynomial> polys;
        std::vector<gb::Element> elements;
    };
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const Basis> gb;
    };
    std::shared_ptr<const Basis> basis() const;
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Reduced Gröbner basis of I under `order`, living in the reordered ring.
std::vector<Polynomial> buchberger(const Ideal& I, const MonomialOrder& order);

/// Equality as ideals: mutual membership via normal forms.
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Element of R^rank with optional degree shifts for graded work.
struct FreeModuleVector {
    RingPtr ring;
    std::vector<Polynomial> components;
    std::vector<int> shifts;

    FreeModuleVector(RingPtr r, std::vector<Polynomial> comps, std::vector<int> degree_shifts = {});
    /// Zero vector of the given rank.
    static FreeModuleVector zero(RingPtr r, std::size_t rank);
    static FreeModuleVector unit(RingPtr r, std::size_t rank, std::size_t i);

    std::size_t rank() const { return components.size(); }
    bool is_zero() const;
    const Polynomial& operator[](std::size_t i) const { return components.at(i); }

    gb::Vec to_vec() const;
    static FreeModuleVector from_vec(const RingPtr& r, const gb::Vec& v, std::size_t rank);

    std::string to_string() const;
};

FreeModuleVector operator+(const FreeModuleVector& a, const FreeModuleVector& b);
FreeModuleVector operator*(const Polynomial& p, const FreeModuleVector& v);
bool operator==(const FreeModuleVector& a, const FreeModuleVector& b);

/// Columns of M as vectors.
std::vector<FreeModuleVector> columns_of(const PolyMatrix& M);
/// Vectors as the columns of a matrix (all of one rank).
PolyMatrix matrix_of(const RingPtr& ring, std::size_t rank, const std::vector<FreeModuleVector>& cols);

/// Generators of {s : sum s_i v_i = 0}.
std::vector<FreeModuleVector> syzygies(const std::vector<FreeModuleVector>& vectors);
std::vector<FreeModuleVector> syzygies(const std::vector<Polynomial>& polys);

/// Generators of {s : sum s_i v_i in I * R^rank}.
std::vector<FreeModuleVector> syzygies_modulo(const std::vector<FreeModuleVector>& vectors, const Ideal& I);

/// Submodule of R^rank with a reduced Gröbner basis, optionally taken
/// modulo I * R^rank.
class Submodule {
  public:
    Submodule(RingPtr ring, std::size_t rank, std::vector<FreeModuleVector> gens, const Ideal* modulo = nullptr);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<FreeModuleVector>& generators() const { return gens_; }
    const std::vector<gb::Vec>& basis() const { return basis_; }

    FreeModuleVector normal_form(const FreeModuleVector& v) const;
    bool contains(const FreeModuleVector& v) const;
    bool contains(const Submodule& o) const;
    bool equals(const Submodule& o) const { return contains(o) && o.contains(*this); }

  private:
    RingPtr ring_;
    std::size_t rank_;
    std::vector<FreeModuleVector> gens_;
    std::vector<gb::Vec> basis_;
    std::vector<gb::Element> elements_;
};

/// Intersection of the submodule generated by `gens` with the free module
/// over the subring omitting `vars`. Result lives in `gens`' ring.
std::vector<FreeModuleVector> module_eliminate(const RingPtr& ring, std::size_t rank,
                                               const std::vector<FreeModuleVector>& gens,
                                               const std::vector<std::string>& vars);

} // namespace cmc
