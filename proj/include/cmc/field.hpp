#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cmc {

/// Exact coefficient. Prime-field elements are residues in [0, p); rationals
/// are kept canonical (reduced, positive denominator) by GMP.
using Scalar = std::variant<std::uint64_t, mpq_class>;

class FieldError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (characteristic 0) or F_p.
class Field {
  public:
    Field() = default;

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    /// Parses a decimal integer or a fraction "a/b".
    Scalar from_string(const std::string& text) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, unsigned e) const;

    /// In-place a += s*b, the hot path of every elimination loop.
    void add_mul(Scalar& a, const Scalar& s, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;
    /// "q" or "fp:<p>", the CLI spelling.
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

  private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Parses "q", "0", "fp:<p>" or a bare prime.
Field parse_field(const std::string& spec);

bool is_prime(std::uint64_t n);

} // namespace cmc
