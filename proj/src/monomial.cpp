#include "cmc/monomial.hpp"

#include <algorithm>
#include <limits>

namespace cmc {

namespace {

constexpr int kMaxExponent = std::numeric_limits<std::uint16_t>::max();

void check_exponent(long e) {
    if (e < 0 || e > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
}

} // namespace

Monomial::Monomial(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
    exps_.fill(0);
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, int e) {
    check_exponent(e);
    deg_ += e - exps_[i];
    exps_[i] = static_cast<std::uint16_t>(e);
}

std::uint32_t Monomial::support() const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps_[i]) s |= std::uint32_t{1} << i;
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        int e = exps_[i] + other.exps_[i];
        check_exponent(e);
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.deg_ = deg_ + other.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        int e = exps_[i] - other.exps_[i];
        check_exponent(e);
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.deg_ = deg_ - other.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    int d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exps_[i] = std::max(exps_[i], other.exps_[i]);
        d += r.exps_[i];
    }
    r.deg_ = d;
    return r;
}

bool Monomial::coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    return o;
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<int> weights) {
    for (int w : weights)
        if (w <= 0) throw std::invalid_argument("weighted degrevlex needs positive weights");
    MonomialOrder o;
    o.rows_.push_back(std::move(weights));
    return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated) {
    MonomialOrder o;
    std::vector<int> row(nvars, 0);
    for (auto v : eliminated) row.at(v) = 1;
    o.rows_.push_back(std::move(row));
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    for (const auto& row : rows_) {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            wa += static_cast<long>(row[i]) * a[i];
            wb += static_cast<long>(row[i]) * b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    if (kind_ == Kind::Lex) {
        for (std::size_t i = 0; i < nvars; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = nvars; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

bool MonomialOrder::is_degree_compatible() const {
    if (kind_ == Kind::Lex) return false;
    if (rows_.empty()) return true;
    // weighted-degrevlex is compatible with its own grading only
    return std::all_of(rows_.front().begin(), rows_.front().end(), [](int w) { return w == 1; });
}

} // namespace cmc
