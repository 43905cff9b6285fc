#include "cmc/idealops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmc {

namespace {

// I (living in a larger ring) intersected with the subring of `target`'s
// variables, returned in `target`.
Ideal eliminate_into(const Ideal& I, const std::vector<std::string>& vars, const RingPtr& target) {
    const RingPtr& R = I.ring();
    std::vector<std::size_t> idx;
    std::uint32_t mask = 0;
    for (const auto& v : vars) {
        idx.push_back(R->require(v));
        mask |= 1u << idx.back();
    }
    auto E = R->with_order(MonomialOrder::elimination(R->nvars(), idx));
    std::vector<Polynomial> kept;
    for (const auto& g : I.map_to(E).groebner())
        if ((g.leading_monomial().support() & mask) == 0) kept.push_back(g.map_to(target));
    return Ideal(target, std::move(kept));
}

Polynomial exact_quotient(const Polynomial& g, const Polynomial& h) {
    const Ring& R = *g.ring();
    auto elems = gb::as_elements(R, {gb::from_polynomial(h)});
    gb::Vec q;
    auto rem = gb::reduce(R, gb::from_polynomial(g), elems, nullptr, &q);
    if (!rem.empty()) throw std::logic_error("inexact polynomial division");
    return gb::component(g.ring(), q, 0).scaled(R.field().inv(h.leading_coeff()));
}

using IntPoly = std::vector<long>;

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

IntPoly shift(const IntPoly& a, int k) {
    IntPoly out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), a.begin(), a.end());
    trim(out);
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& m : gens)
        if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); })) out.push_back(m);
    return out;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

std::string fresh_name(const Ring& ring, const std::string& stem) {
    if (!ring.index_of(stem)) return stem;
    for (int i = 1;; ++i) {
        std::string s = stem + std::to_string(i);
        if (!ring.index_of(s)) return s;
    }
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) { return eliminate_into(I, vars, I.ring()); }

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw RingMismatch();
    if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
    const RingPtr& R = I.ring();
    const std::string t = fresh_name(*R, "t");
    auto Rt = R->extended({t});
    auto tv = Polynomial::variable(Rt, t);
    auto one_minus = Polynomial::constant(Rt, 1) - tv;
    std::vector<Polynomial> g;
    for (const auto& a : I.generators()) g.push_back(tv * a.map_to(Rt));
    for (const auto& b : J.generators()) g.push_back(one_minus * b.map_to(Rt));
    return eliminate_into(Ideal(Rt, std::move(g)), {t}, R);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
    Ideal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& h) {
    if (!same_ring(I.ring(), h.ring())) throw RingMismatch();
    if (h.is_zero()) return Ideal::unit(I.ring());
    Ideal both = intersect(I, Ideal(I.ring(), {h}));
    std::vector<Polynomial> g;
    for (const auto& p : both.generators()) g.push_back(exact_quotient(p, h));
    return Ideal(I.ring(), std::move(g));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw RingMismatch();
    if (J.is_zero()) return Ideal::unit(I.ring());
    std::vector<Ideal> parts;
    for (const auto& h : J.generators()) parts.push_back(quotient(I, h));
    return intersect(parts);
}

Ideal saturate(const Ideal& I, const Polynomial& h) {
    if (!same_ring(I.ring(), h.ring())) throw RingMismatch();
    if (h.is_zero()) return Ideal::unit(I.ring());
    if (h.is_constant()) return I;
    const RingPtr& R = I.ring();
    const std::string t = fresh_name(*R, "t");
    auto Rt = R->extended({t});
    auto aux = Polynomial::constant(Rt, 1) - Polynomial::variable(Rt, t) * h.map_to(Rt);
    return eliminate_into(I.map_to(Rt).with({aux}), {t}, R);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw RingMismatch();
    const RingPtr& R = I.ring();
    if (J.is_zero()) return Ideal::unit(R);
    if (J.is_unit()) return I;
    if (I.is_homogeneous() && ideal_equal(J, Ideal::irrelevant(R))) {
        // revlex with x_i last: the x_i-saturation divides x_i out of the basis
        std::vector<Ideal> parts;
        for (std::size_t i = 0; i < R->nvars(); ++i) {
            std::vector<std::string> names;
            for (std::size_t k = 0; k < R->nvars(); ++k)
                if (k != i) names.push_back(R->name(k));
            names.push_back(R->name(i));
            auto Ri = Ring::make(R->field(), names, MonomialOrder::degrevlex());
            const std::size_t last = names.size() - 1;
            std::vector<Polynomial> g;
            for (const auto& p : I.map_to(Ri).groebner()) {
                int e = p.leading_monomial()[last];
                for (const auto& t : p.terms()) e = std::min<int>(e, t.mono[last]);
                g.push_back(p.divide_monomial(Monomial::var(last, e)).map_to(R));
            }
            parts.emplace_back(R, std::move(g));
        }
        return intersect(parts);
    }
    std::vector<Ideal> parts;
    for (const auto& h : J.generators()) parts.push_back(saturate(I, h));
    return intersect(parts);
}

Ideal saturate_by_colons(const Ideal& I, const Ideal& J) {
    Ideal K = I;
    for (;;) {
        Ideal next = quotient(K, J);
        if (K.contains(next)) return K;
        K = next;
    }
}

long HilbertData::function_at(int d) const {
    for (const auto& [deg, val] : table)
        if (deg == d) return val;
    mpz_class v = 0;
    const long n = static_cast<long>(nvars);
    for (std::size_t k = 0; k < numerator.size(); ++k) v += numerator[k] * binomial(d - static_cast<long>(k) + n - 1, n - 1);
    return v.get_si();
}

mpq_class HilbertData::polynomial_at(long t) const {
    mpq_class v = 0, p = 1;
    for (const auto& c : polynomial) {
        v += c * p;
        p *= t;
    }
    return v;
}

bool HilbertData::polynomial_is(const std::vector<long>& coeffs) const {
    std::size_t n = std::max(coeffs.size(), polynomial.size());
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class a = i < polynomial.size() ? polynomial[i] : mpq_class(0);
        mpq_class b = i < coeffs.size() ? mpq_class(coeffs[i]) : mpq_class(0);
        if (a != b) return false;
    }
    return true;
}

std::string HilbertData::polynomial_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = polynomial.size(); k-- > 0;) {
        const mpq_class& c = polynomial[k];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<long> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {0};
    std::vector<int> count(nvars, 0);
    bool coprime = true;
    std::uint32_t seen = 0;
    for (const auto& m : gens) {
        std::uint32_t s = m.support();
        if (s & seen) coprime = false;
        seen |= s;
        for (std::size_t i = 0; i < nvars; ++i)
            if (m[i]) ++count[i];
    }
    if (coprime) {
        IntPoly acc{1};
        for (const auto& m : gens) {
            IntPoly f(static_cast<std::size_t>(m.degree()) + 1, 0);
            f[0] = 1;
            f.back() -= 1;
            acc = mul(acc, f);
        }
        return acc;
    }
    std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    int e = 0;
    for (const auto& m : gens)
        if (m[x] && (e == 0 || m[x] < e)) e = m[x];
    Monomial p = Monomial::var(x, e);
    std::vector<Monomial> plus = gens, colon;
    plus.push_back(p);
    for (const auto& m : gens) {
        Monomial q = m;
        q.set(x, std::max(0, m[x] - e));
        colon.push_back(q);
    }
    return add(hilbert_numerator(std::move(plus), nvars), shift(hilbert_numerator(std::move(colon), nvars), e));
}

HilbertData hilbert(const Ideal& I, int table_depth) {
    if (!I.is_homogeneous()) throw std::invalid_argument("hilbert requires a homogeneous ideal");
    const std::size_t n = I.ring()->nvars();
    std::vector<Monomial> leads;
    for (const auto& g : I.groebner()) leads.push_back(g.leading_monomial());

    HilbertData H;
    H.nvars = n;
    H.numerator = hilbert_numerator(std::move(leads), n);

    // strip factors (1 - T)
    IntPoly q = H.numerator;
    std::size_t r = 0;
    bool zero = q.size() == 1 && q[0] == 0;
    while (!zero && r < n) {
        long s = 0;
        for (long c : q) s += c;
        if (s != 0) break;
        // synthetic division by (1 - T)
        IntPoly out(q.size() - 1, 0);
        long carry = 0;
        for (std::size_t k = 0; k + 1 < q.size(); ++k) {
            carry += q[k];
            out[k] = carry;
        }
        q = out.empty() ? IntPoly{0} : out;
        ++r;
    }
    const long d = zero ? -1 : static_cast<long>(n - r);
    H.dimension = static_cast<int>(d);

    if (d > 0) {
        std::vector<mpq_class> poly(static_cast<std::size_t>(d), 0);
        mpz_class fact = 1;
        for (long j = 2; j <= d - 1; ++j) fact *= j;
        for (std::size_t k = 0; k < q.size(); ++k) {
            // C(t - k + d - 1, d - 1) = prod_{j=1}^{d-1} (t - k + j) / (d-1)!
            std::vector<mpq_class> b{mpq_class(1)};
            for (long j = 1; j <= d - 1; ++j) {
                mpq_class c0 = j - static_cast<long>(k);
                std::vector<mpq_class> nb(b.size() + 1, 0);
                for (std::size_t i = 0; i < b.size(); ++i) {
                    nb[i] += b[i] * c0;
                    nb[i + 1] += b[i];
                }
                b = std::move(nb);
            }
            for (std::size_t i = 0; i < b.size(); ++i) poly[i] += q[k] * b[i] / fact;
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        H.polynomial = std::move(poly);
    }

    // the function agrees with the polynomial from deg N - n + 1 on
    const long stable_from = std::max<long>(0, static_cast<long>(H.numerator.size()) - 1 - static_cast<long>(n) + 1);
    const long depth = std::max<long>(table_depth, stable_from + std::max<long>(d, 1));
    for (long k = 0; k <= depth; ++k) {
        mpz_class v = 0;
        for (std::size_t j = 0; j < H.numerator.size(); ++j)
            v += H.numerator[j] * binomial(k - static_cast<long>(j) + static_cast<long>(n) - 1, static_cast<long>(n) - 1);
        if (v < 0) throw std::logic_error("negative Hilbert function value");
        H.table.emplace_back(static_cast<int>(k), v.get_si());
    }

    // interpolate on the last d entries and confirm against the closed form
    if (d > 0) {
        const std::size_t m = static_cast<std::size_t>(d);
        std::vector<mpq_class> interp(m, 0);
        for (std::size_t a = 0; a < m; ++a) {
            const long xa = depth - static_cast<long>(a);
            std::vector<mpq_class> basis{mpq_class(1)};
            mpq_class denom = 1;
            for (std::size_t b = 0; b < m; ++b) {
                if (b == a) continue;
                const long xb = depth - static_cast<long>(b);
                std::vector<mpq_class> nb(basis.size() + 1, 0);
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    nb[i] -= basis[i] * xb;
                    nb[i + 1] += basis[i];
                }
                basis = std::move(nb);
                denom *= xa - xb;
            }
            mpq_class ya = H.table[static_cast<std::size_t>(xa)].second;
            for (std::size_t i = 0; i < basis.size(); ++i) interp[i] += ya * basis[i] / denom;
        }
        while (!interp.empty() && interp.back() == 0) interp.pop_back();
        if (interp != H.polynomial) throw std::logic_error("interpolated Hilbert polynomial disagrees with the series");
    }

    int reg = static_cast<int>(depth) + 1;
    for (long k = depth; k >= 0; --k) {
        if (H.polynomial_at(k) != H.table[static_cast<std::size_t>(k)].second) break;
        reg = static_cast<int>(k);
    }
    H.regularity_index = reg;
    return H;
}

ModulePresentation::ModulePresentation(PolyMatrix rel, std::vector<int> degrees, bool is_graded)
    : ring(rel.ring()), generator_degrees(std::move(degrees)), relations(std::move(rel)), graded(is_graded) {
    if (generator_degrees.empty()) generator_degrees.assign(relations.rows(), 0);
    if (generator_degrees.size() != relations.rows()) throw std::invalid_argument("one degree per generator");
}

bool ModulePresentation::is_graded_consistent() const {
    for (std::size_t j = 0; j < relations.cols(); ++j) {
        std::optional<int> deg;
        for (std::size_t i = 0; i < relations.rows(); ++i) {
            const Polynomial& p = relations(i, j);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return false;
            int d = p.degree() + generator_degrees[i];
            if (deg && *deg != d) return false;
            deg = d;
        }
    }
    return true;
}

Ideal fitting_ideal(const ModulePresentation& P, std::size_t n) {
    const std::size_t g = P.generators();
    if (n >= g) return Ideal::unit(P.ring);
    const std::size_t k = g - n;
    if (k > P.relations.cols()) return Ideal(P.ring);
    return Ideal(P.ring, P.relations.minors(k));
}

Ideal annihilator(const ModulePresentation& P) {
    const std::size_t g = P.generators();
    if (g == 0) return Ideal::unit(P.ring);
    auto cols = columns_of(P.relations);
    std::vector<Ideal> parts;
    for (std::size_t i = 0; i < g; ++i) {
        std::vector<FreeModuleVector> vs{FreeModuleVector::unit(P.ring, g, i)};
        vs.insert(vs.end(), cols.begin(), cols.end());
        std::vector<Polynomial> first;
        for (const auto& s : syzygies(vs)) first.push_back(s[0]);
        parts.emplace_back(P.ring, std::move(first));
    }
    return intersect(parts);
}

std::vector<Polynomial> torsion_witnesses(const Ideal& I, const std::string& var) {
    auto t = Polynomial::variable(I.ring(), var);
    std::vector<Polynomial> out;
    for (const auto& g : quotient(I, t).groebner())
        if (!I.contains(g)) out.push_back(g);
    return out;
}

} // namespace cmc
