#include "cmc/field.hpp"

#include <limits>

namespace cmc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 62)) throw FieldError("prime too large");
    return Field(p);
}

Scalar Field::zero() const {
    if (p_) return std::uint64_t{0};
    return mpq_class(0);
}

Scalar Field::one() const {
    if (p_) return std::uint64_t{1} % p_;
    return mpq_class(1);
}

Scalar Field::from_int(long v) const {
    if (!p_) return mpq_class(v);
    long m = v % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return static_cast<std::uint64_t>(m);
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (!p_) return mpq_class(v);
    return static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

Scalar Field::from_string(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_mpz(mpz_class(text));
        Scalar num = from_mpz(mpz_class(text.substr(0, slash)));
        Scalar den = from_mpz(mpz_class(text.substr(slash + 1)));
        return div(num, den);
    } catch (const std::invalid_argument&) {
        throw FieldError("malformed number '" + text + "'");
    }
}

bool Field::is_zero(const Scalar& a) const {
    if (p_) return std::get<std::uint64_t>(a) == 0;
    return sgn(std::get<mpq_class>(a)) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (p_) return std::get<std::uint64_t>(a) == 1 % p_;
    return std::get<mpq_class>(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    if (p_) return std::get<std::uint64_t>(a) == std::get<std::uint64_t>(b);
    return std::get<mpq_class>(a) == std::get<mpq_class>(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_) {
        std::uint64_t s = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
        return s >= p_ ? s - p_ : s;
    }
    return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (p_) {
        std::uint64_t x = std::get<std::uint64_t>(a), y = std::get<std::uint64_t>(b);
        return x >= y ? x - y : x + p_ - y;
    }
    return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_) return mulmod(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b), p_);
    return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (p_) {
        std::uint64_t x = std::get<std::uint64_t>(a);
        return x == 0 ? x : p_ - x;
    }
    return mpq_class(-std::get<mpq_class>(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw FieldError("division by zero");
    if (p_) return powmod(std::get<std::uint64_t>(a), p_ - 2, p_);
    return mpq_class(1 / std::get<mpq_class>(a));
}

Scalar Field::pow(const Scalar& a, unsigned e) const {
    Scalar r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

void Field::add_mul(Scalar& a, const Scalar& s, const Scalar& b) const {
    if (p_) {
        auto& x = std::get<std::uint64_t>(a);
        x = (x + mulmod(std::get<std::uint64_t>(s), std::get<std::uint64_t>(b), p_)) % p_;
        return;
    }
    std::get<mpq_class>(a) += std::get<mpq_class>(s) * std::get<mpq_class>(b);
}

std::string Field::to_string(const Scalar& a) const {
    if (p_) return std::to_string(std::get<std::uint64_t>(a));
    return std::get<mpq_class>(a).get_str();
}

std::string Field::name() const { return p_ ? "fp:" + std::to_string(p_) : "q"; }

Field parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q" || spec == "0") return Field::rationals();
    std::string digits = spec.rfind("fp:", 0) == 0 ? spec.substr(3) : spec;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw FieldError("unknown field '" + spec + "' (expected q or fp:<p>)");
    return Field::prime(std::stoull(digits));
}

} // namespace cmc
