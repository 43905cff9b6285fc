#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cmc/ring.hpp"

namespace cmc {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse polynomial. Terms are strictly decreasing in the ring's order with
/// nonzero coefficients; zero has no terms.
class Polynomial {
  public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    /// Normalizes arbitrary input (any order, duplicates, zeros).
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial constant(RingPtr ring, long c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Scalar& leading_coeff() const { return terms_.front().coeff; }

    /// Total degree; -1 for zero.
    int degree() const;
    /// Degree counting only the listed variables (weight 1 each).
    int degree_in(const std::vector<std::size_t>& vars) const;
    bool is_homogeneous() const;
    bool involves(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(unsigned e) const;
    /// Divides by the leading coefficient.
    Polynomial monic() const;
    /// Exact quotient by the monomial m; throws if some term is not divisible.
    Polynomial divide_monomial(const Monomial& m) const;

    /// Coefficient of m (zero if absent).
    Scalar coeff(const Monomial& m) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const;

    /// Rebuilds in `target`, matching variables by name. Every variable that
    /// occurs must exist in the target ring.
    Polynomial map_to(const RingPtr& target) const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

Polynomial operator*(long c, const Polynomial& p);

/// Ring homomorphism given by images of the source variables; variables
/// without an entry map to the same-named variable of the target ring.
class RingMap {
  public:
    RingMap(RingPtr source, RingPtr target) : source_(std::move(source)), target_(std::move(target)) {}

    RingMap& set(const std::string& var, Polynomial image);
    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }

    Polynomial operator()(const Polynomial& f) const;

  private:
    RingPtr source_, target_;
    std::map<std::size_t, Polynomial> images_;
};

/// Substitution inside one ring: unlisted variables stay fixed.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images);

Polynomial derivative(const Polynomial& f, std::size_t var);
/// One formal partial per ring variable.
std::vector<Polynomial> partial_derivatives(const Polynomial& f);

/// Degree-d homogenization with respect to `var` (terms are padded with
/// var^(d - deg)). Requires d >= degree(f).
Polynomial homogenize(const Polynomial& f, std::size_t var, int d);

} // namespace cmc
