#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cmc {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with inline storage. Slots past the ring's variable count
/// stay zero, so equality, divisibility and lcm never need the count.
class Monomial {
  public:
    Monomial() { exps_.fill(0); }
    explicit Monomial(const std::vector<int>& exps);

    static Monomial var(std::size_t i, int e = 1) {
        Monomial m;
        m.exps_[i] = static_cast<std::uint16_t>(e);
        m.deg_ = e;
        return m;
    }

    int operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, int e);
    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    /// Bit i set iff variable i occurs; a cheap divisibility prefilter.
    std::uint32_t support() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other, *this).
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::size_t hash() const;

  private:
    std::array<std::uint16_t, kMaxVars> exps_;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A total, multiplicative order. Weight rows are compared first (in order),
/// then the base order breaks ties. Variable precedence is the ring's
/// declaration order.
class MonomialOrder {
  public:
    enum class Kind { Lex, DegRevLex };

    MonomialOrder() = default;
    static MonomialOrder degrevlex() { return MonomialOrder(); }
    static MonomialOrder lex();
    /// Weighted degree first, then degrevlex. Weights must be positive.
    static MonomialOrder weighted_degrevlex(std::vector<int> weights);
    /// Block order: total degree in `eliminated` first, then degrevlex.
    static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated);

    Kind kind() const { return kind_; }
    const std::vector<std::vector<int>>& weight_rows() const { return rows_; }

    /// -1, 0, 1 as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

    /// True when every weight row is nonnegative and the first row gives the
    /// total degree, i.e. the order refines the standard grading.
    bool is_degree_compatible() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.rows_ == b.rows_;
    }

  private:
    Kind kind_ = Kind::DegRevLex;
    std::vector<std::vector<int>> rows_;
};

} // namespace cmc
