#include "cmc/deform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cmc/linalg.hpp"

namespace cmc {

namespace {

std::vector<std::size_t> indices_of(const Ring& R, const std::vector<std::string>& vars) {
    std::vector<std::size_t> idx;
    for (const auto& v : vars) idx.push_back(R.require(v));
    return idx;
}

void enumerate(std::size_t n, int d, std::size_t pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == n) {
        cur.set(pos, d);
        out.push_back(cur);
        cur.set(pos, 0);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.set(pos, e);
        enumerate(n, d - e, pos + 1, cur, out);
    }
    cur.set(pos, 0);
}

// Homogeneous pieces of a vector, keyed by deg(component term) - shift.
std::map<int, FreeModuleVector> graded_parts(const FreeModuleVector& v, const std::vector<int>& shifts) {
    std::map<int, std::vector<std::vector<Term>>> acc;
    for (std::size_t i = 0; i < v.rank(); ++i)
        for (const auto& t : v[i].terms()) {
            int e = t.mono.degree() - shifts[i];
            auto& slot = acc[e];
            if (slot.empty()) slot.resize(v.rank());
            slot[i].push_back(t);
        }
    std::map<int, FreeModuleVector> out;
    for (auto& [e, comps] : acc) {
        std::vector<Polynomial> c;
        for (auto& terms : comps) c.emplace_back(v.ring, std::move(terms));
        out.emplace(e, FreeModuleVector(v.ring, std::move(c)));
    }
    return out;
}

void check_graded_saturated(const Ideal& I) {
    if (!I.is_homogeneous()) throw std::invalid_argument("tangent dimension needs a homogeneous ideal");
    if (!ideal_equal(saturate(I, Ideal::irrelevant(I.ring())), I))
        throw std::invalid_argument("tangent dimension needs a saturated ideal");
}

// Coordinates of homomorphism images on (generator, standard monomial).
class Coordinates {
  public:
    explicit Coordinates(const Ideal& I) : I_(I) {
        for (std::size_t i = 0; i < I.generators().size(); ++i) {
            int d = I.generators()[i].degree();
            for (const auto& m : standard_monomials(I, d)) {
                index_[{i, m}] = slots_.size();
                slots_.push_back({i, m});
            }
        }
    }
    std::size_t size() const { return slots_.size(); }
    const std::pair<std::size_t, Monomial>& slot(std::size_t k) const { return slots_[k]; }

    /// Coordinates of v after reduction modulo I.
    std::vector<Scalar> of(const FreeModuleVector& v) const {
        const Field& F = I_.ring()->field();
        std::vector<Scalar> out(slots_.size(), F.zero());
        for (std::size_t i = 0; i < v.rank(); ++i) {
            Polynomial r = I_.normal_form(v[i]);
            for (const auto& t : r.terms()) {
                auto it = index_.find({i, t.mono});
                if (it == index_.end()) throw std::logic_error("homomorphism image of the wrong degree");
                out[it->second] = t.coeff;
            }
        }
        return out;
    }

  private:
    struct Less {
        bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            for (std::size_t k = 0; k < kMaxVars; ++k)
                if (a.second[k] != b.second[k]) return a.second[k] < b.second[k];
            return false;
        }
    };
    const Ideal& I_;
    std::vector<std::pair<std::size_t, Monomial>> slots_;
    std::map<std::pair<std::size_t, Monomial>, std::size_t, Less> index_;
};

} // namespace

DeformationSetup::DeformationSetup(PolyMatrix l, PolyMatrix r, Ideal J, std::vector<std::string> vars, int truncation)
    : ring(l.ring()), left(std::move(l)), right(std::move(r)), obstruction(std::move(J)),
      deformation_variables(std::move(vars)), truncation_degree(truncation) {
    if (left.cols() != right.rows()) throw std::invalid_argument("factor shapes do not compose");
    if (!same_ring(left.ring(), right.ring()) || !same_ring(left.ring(), obstruction.ring())) throw RingMismatch();
    indices_of(*ring, deformation_variables);
}

PolyMatrix DeformationSetup::row_of(const FreeModuleVector& v) {
    return PolyMatrix(v.ring, 1, v.rank(), v.components);
}

std::pair<PolyMatrix, PolyMatrix> DeformationSetup::undeformed() const {
    std::map<std::string, Polynomial> zero;
    for (const auto& v : deformation_variables) zero.emplace(v, Polynomial(ring));
    auto kill = [&](const Polynomial& p) { return substitute(p, zero); };
    return {left.map(ring, kill), right.map(ring, kill)};
}

Polynomial truncate_below(const Polynomial& p, const std::vector<std::string>& vars, int bound) {
    auto idx = indices_of(*p.ring(), vars);
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        int d = 0;
        for (auto i : idx) d += t.mono[i];
        if (d < bound) kept.push_back(t);
    }
    return Polynomial(p.ring(), std::move(kept));
}

LiftReport lift_check(const DeformationSetup& s) {
    PolyMatrix product = s.left * s.right;
    PolyMatrix residue =
        product.map(s.ring, [&](const Polynomial& p) { return truncate_below(p, s.deformation_variables, s.truncation_degree); });
    bool zero = std::all_of(product.entries().begin(), product.entries().end(),
                            [&](const Polynomial& p) { return s.obstruction.contains(p); });
    return {std::move(product), std::move(residue), zero};
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    const std::size_t n = ring.nvars();
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial cur;
    enumerate(n, d, 0, cur, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
    return out;
}

std::vector<Monomial> standard_monomials(const Ideal& I, int d) {
    std::vector<Monomial> leads;
    for (const auto& g : I.groebner()) leads.push_back(g.leading_monomial());
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(*I.ring(), d))
        if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) out.push_back(m);
    return out;
}

std::vector<FreeModuleVector> normal_module_generators(const Ideal& I, int degree_bound) {
    const RingPtr& R = I.ring();
    const auto& gens = I.generators();
    const std::size_t k = gens.size();
    if (k == 0) return {};
    auto rel = syzygies(gens);
    std::vector<FreeModuleVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Polynomial> row;
        for (const auto& s : rel) row.push_back(s[i]);
        rows.emplace_back(R, std::move(row));
    }
    std::vector<FreeModuleVector> raw;
    if (rel.empty()) {
        for (std::size_t i = 0; i < k; ++i) raw.push_back(FreeModuleVector::unit(R, k, i));
    } else {
        raw = syzygies_modulo(rows, I);
    }
    std::vector<FreeModuleVector> out;
    for (const auto& h : raw) {
        std::vector<Polynomial> c;
        for (const auto& p : h.components) c.push_back(I.normal_form(p));
        FreeModuleVector v(R, std::move(c));
        if (v.is_zero()) continue;
        if (degree_bound >= 0 && std::any_of(v.components.begin(), v.components.end(),
                                             [&](const Polynomial& p) { return p.degree() > degree_bound; }))
            continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
    return out;
}

TangentReport tangent_space(const Ideal& I) {
    check_graded_saturated(I);
    const RingPtr& R = I.ring();
    const Field& F = R->field();
    const auto& gens = I.generators();
    std::vector<int> shifts, negated;
    for (const auto& g : gens) {
        shifts.push_back(g.degree());
        negated.push_back(-g.degree());
    }

    Coordinates unknowns(I);
    // constraint rows keyed by (homogeneous syzygy piece, monomial)
    std::vector<std::vector<Scalar>> columns(unknowns.size());
    std::size_t nrows = 0;
    for (const auto& s : syzygies(gens)) {
        for (const auto& [e, piece] : graded_parts(s, negated)) {
            (void)e;
            std::map<std::vector<std::uint16_t>, std::size_t> row_of;
            std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries(unknowns.size());
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                const auto& [i, m] = unknowns.slot(u);
                if (piece[i].is_zero()) continue;
                Polynomial img = I.normal_form(piece[i] * Polynomial::monomial(R, m, F.one()));
                for (const auto& t : img.terms()) {
                    std::vector<std::uint16_t> key(R->nvars());
                    for (std::size_t v = 0; v < key.size(); ++v) key[v] = static_cast<std::uint16_t>(t.mono[v]);
                    auto [it, fresh] = row_of.emplace(key, row_of.size());
                    (void)fresh;
                    entries[u].push_back({it->second, t.coeff});
                }
            }
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                columns[u].resize(nrows + row_of.size(), F.zero());
                for (const auto& [r, c] : entries[u]) columns[u][nrows + r] = c;
            }
            nrows += row_of.size();
        }
    }
    ScalarMatrix A(F, nrows, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        for (std::size_t r = 0; r < nrows; ++r) A(r, u) = columns[u][r];

    TangentReport rep;
    for (const auto& v : nullspace(A)) {
        std::vector<std::vector<Term>> comps(gens.size());
        for (std::size_t u = 0; u < v.size(); ++u)
            if (!F.is_zero(v[u])) comps[unknowns.slot(u).first].push_back({unknowns.slot(u).second, v[u]});
        std::vector<Polynomial> c;
        for (auto& t : comps) c.emplace_back(R, std::move(t));
        rep.basis.emplace_back(R, std::move(c), shifts);
    }
    rep.dimension = rep.basis.size();
    return rep;
}

std::size_t tangent_dimension(const Ideal& I) { return tangent_space(I).dimension; }

std::size_t tangent_dimension_from_generators(const Ideal& I) {
    check_graded_saturated(I);
    const RingPtr& R = I.ring();
    const Field& F = R->field();
    std::vector<int> shifts;
    for (const auto& g : I.generators()) shifts.push_back(g.degree());
    Coordinates coords(I);
    ScalarMatrix span(F, 0, coords.size());
    for (const auto& h : normal_module_generators(I)) {
        for (const auto& [e, piece] : graded_parts(h, shifts)) {
            if (e > 0) continue;
            for (const auto& m : monomials_of_degree(*R, -e))
                span.append_row(coords.of(Polynomial::monomial(R, m, F.one()) * piece));
        }
    }
    return rank(span);
}

} // namespace cmc
