#include "cmc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cmc {

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatch();
}

} // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const Ring& R = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = R.field().add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && R.field().is_zero(out.back().coeff)) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && R.field().is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
    auto s = ring->field().from_int(c);
    return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::var(i), ring->field().one()});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    auto i = ring->require(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::degree_in(const std::vector<std::size_t>& vars) const {
    int d = -1;
    for (const auto& t : terms_) {
        int e = 0;
        for (auto v : vars) e += t.mono[v];
        d = std::max(d, e);
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

bool Polynomial::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] > 0; });
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same(ring_, o.ring_);
    const Ring& R = *ring_;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = R.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            auto s = R.field().add(terms_[i].coeff, o.terms_[j].coeff);
            if (!R.field().is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<long>(i), terms_.end());
    r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<long>(j), o.terms_.end());
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same(ring_, o.ring_);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, field().mul(a.coeff, b.coeff)});
    return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // multiplication by a monomial preserves the order
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!m.divides(t.mono)) throw std::invalid_argument("monomial does not divide every term");
        r.terms_.push_back({t.mono / m, t.coeff});
    }
    return r;
}

Scalar Polynomial::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return field().zero();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff))
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = field();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = F.to_string(t.coeff);
        bool negative = F.is_rational() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = c == "1";
        if (!unit || t.mono.is_one()) os << c;
        bool need_star = !unit;
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            int e = t.mono[v];
            if (!e) continue;
            if (need_star) os << '*';
            os << ring_->name(v);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
    if (same_ring(ring_, target)) return *this;
    if (!(ring_->field() == target->field())) throw RingMismatch();
    std::vector<std::size_t> idx(ring_->nvars(), kMaxVars);
    for (std::size_t v = 0; v < ring_->nvars(); ++v)
        if (auto j = target->index_of(ring_->name(v))) idx[v] = *j;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            if (!t.mono[v]) continue;
            if (idx[v] == kMaxVars)
                throw std::invalid_argument("variable '" + ring_->name(v) + "' is missing from the target ring");
            m.set(idx[v], t.mono[v]);
        }
        out.push_back({m, t.coeff});
    }
    return Polynomial(target, std::move(out));
}

Polynomial operator*(long c, const Polynomial& p) { return p.scaled(p.field().from_int(c)); }

RingMap& RingMap::set(const std::string& var, Polynomial image) {
    if (!same_ring(image.ring(), target_)) throw RingMismatch();
    images_.insert_or_assign(source_->require(var), std::move(image));
    return *this;
}

Polynomial RingMap::operator()(const Polynomial& f) const {
    if (!same_ring(f.ring(), source_)) throw RingMismatch();
    const std::size_t n = source_->nvars();
    std::vector<Polynomial> img;
    img.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto it = images_.find(v);
        if (it != images_.end())
            img.push_back(it->second);
        else
            img.push_back(Polynomial::variable(target_, target_->require(source_->name(v))));
    }
    // cache powers per variable; most images are linear forms
    std::vector<std::vector<Polynomial>> powers(n);
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
        auto& p = powers[v];
        if (p.empty()) p.push_back(Polynomial::constant(target_, 1));
        while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * img[v]);
        return p[static_cast<std::size_t>(e)];
    };
    Polynomial out(target_);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target_, t.coeff);
        for (std::size_t v = 0; v < n; ++v)
            if (t.mono[v]) term = term * power(v, t.mono[v]);
        out += term;
    }
    return out;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images) {
    RingMap map(f.ring(), f.ring());
    for (const auto& [name, img] : images) map.set(name, img);
    return map(f);
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
    const Field& F = f.field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        int e = t.mono[var];
        if (!e) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, F.mul(t.coeff, F.from_int(e))});
    }
    return Polynomial(f.ring(), std::move(out));
}

std::vector<Polynomial> partial_derivatives(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) out.push_back(derivative(f, v));
    return out;
}

Polynomial homogenize(const Polynomial& f, std::size_t var, int d) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.mono.degree() > d) throw std::invalid_argument("homogenization degree below polynomial degree");
        Monomial m = t.mono;
        m.set(var, m[var] + d - t.mono.degree());
        out.push_back({m, t.coeff});
    }
    return Polynomial(f.ring(), std::move(out));
}

} // namespace cmc
