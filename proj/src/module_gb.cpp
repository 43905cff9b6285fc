#include "cmc/module_gb.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

namespace cmc::gb {

namespace {

std::atomic<bool> g_self_check{false};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

Element make_element(const Ring& R, Vec v, Vec rep) {
    Element e;
    // monic
    const Field& F = R.field();
    if (!F.is_one(v.front().coeff)) {
        Scalar inv = F.inv(v.front().coeff);
        v = scale(R, v, inv, Monomial());
        if (!rep.empty()) rep = scale(R, rep, inv, Monomial());
    }
    e.lead = v.front().mono;
    e.lead_comp = v.front().comp;
    e.lead_support = e.lead.support();
    e.vec = std::move(v);
    e.rep = std::move(rep);
    return e;
}

long find_divisor(const std::vector<Element>& basis, const ModTerm& t) {
    const std::uint32_t sup = t.mono.support();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Element& g = basis[k];
        if (g.lead_comp != t.comp || (g.lead_support & ~sup) != 0) continue;
        if (g.lead.divides(t.mono)) return static_cast<long>(k);
    }
    return -1;
}

Vec s_vector(const Ring& R, const Element& a, const Element& b, const Monomial& lcm, Vec* rep) {
    const Field& F = R.field();
    Monomial ma = lcm / a.lead, mb = lcm / b.lead;
    Vec s = axpy(R, scale(R, a.vec, F.one(), ma), F.neg(F.one()), mb, b.vec);
    if (rep) *rep = axpy(R, scale(R, a.rep, F.one(), ma), F.neg(F.one()), mb, b.rep);
    return s;
}

// Pending pairs ordered by (lcm degree, i, j): the normal strategy with a
// deterministic tie-break.
struct PairKey {
    int degree;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (j != o.j) return j < o.j;
        return i < o.i;
    }
};

class PairQueue {
  public:
    void push(const Pair& p) {
        keys_.insert({p.lcm.degree(), p.i, p.j});
        live_.insert({p.i, p.j});
        lcms_.push_back(p);
    }
    bool empty() const { return keys_.empty(); }
    int min_degree() const { return keys_.begin()->degree; }
    PairKey pop() {
        PairKey k = *keys_.begin();
        keys_.erase(keys_.begin());
        live_.erase({k.i, k.j});
        return k;
    }
    bool pending(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return live_.count({a, b}) > 0;
    }

  private:
    std::set<PairKey> keys_;
    std::set<std::pair<std::size_t, std::size_t>> live_;
    std::vector<Pair> lcms_;
};

class Engine {
  public:
    Engine(const RingPtr& ring, bool track, std::size_t rank_hint, Stats* stats)
        : ring_(ring), R_(*ring), track_(track), rank1_(rank_hint <= 1), stats_(stats) {}

    void add_inputs(const std::vector<Vec>& gens) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].empty()) continue;
            Vec rep;
            if (track_) rep = unit_vector(R_, static_cast<std::uint32_t>(i));
            insert(make_element(R_, gens[i], std::move(rep)));
        }
    }

    // Returns true when the pair survives the criteria and must be reduced.
    bool decide(const PairKey& k) {
        if (stats_) ++stats_->pairs_considered;
        const Element& a = basis_[k.i];
        const Element& b = basis_[k.j];
        if (rank1_ && a.lead.coprime(b.lead)) {
            if (stats_) ++stats_->product_criterion;
            return false;
        }
        Monomial l = a.lead.lcm(b.lead);
        for (std::size_t t = 0; t < basis_.size(); ++t) {
            if (t == k.i || t == k.j) continue;
            const Element& c = basis_[t];
            if (c.lead_comp != a.lead_comp || !c.lead.divides(l)) continue;
            if (!queue_.pending(k.i, t) && !queue_.pending(k.j, t)) {
                if (stats_) ++stats_->chain_criterion;
                return false;
            }
        }
        return true;
    }

    struct Reduced {
        Vec vec, rep;
    };

    Reduced reduce_pair(const PairKey& k) const {
        const Element& a = basis_[k.i];
        const Element& b = basis_[k.j];
        Reduced r;
        Vec s = s_vector(R_, a, b, a.lead.lcm(b.lead), track_ ? &r.rep : nullptr);
        r.vec = reduce(R_, std::move(s), basis_, track_ ? &r.rep : nullptr);
        return r;
    }

    void accept(Reduced r) {
        if (stats_) ++stats_->pairs_reduced;
        if (r.vec.empty()) {
            if (stats_) ++stats_->zero_reductions;
            return;
        }
        insert(make_element(R_, std::move(r.vec), std::move(r.rep)));
    }

    void run_serial() {
        while (!queue_.empty()) {
            PairKey k = queue_.pop();
            if (decide(k)) accept(reduce_pair(k));
        }
    }

    void run_parallel() {
        while (!queue_.empty()) {
            const int d = queue_.min_degree();
            std::vector<PairKey> batch;
            while (!queue_.empty() && queue_.min_degree() == d && batch.size() < kMaxBatch) {
                PairKey k = queue_.pop();
                if (decide(k)) batch.push_back(k);
            }
            std::vector<Reduced> out(batch.size());
            const long n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic)
            for (long b = 0; b < n; ++b) out[static_cast<std::size_t>(b)] = reduce_pair(batch[static_cast<std::size_t>(b)]);
            const std::size_t before = basis_.size();
            for (auto& r : out) {
                // elements added earlier in this batch may reduce r further
                if (!r.vec.empty() && basis_.size() > before)
                    r.vec = reduce(R_, std::move(r.vec), basis_, track_ ? &r.rep : nullptr);
                accept(std::move(r));
            }
        }
    }

    std::vector<Element> take() { return std::move(basis_); }

  private:
    static constexpr std::size_t kMaxBatch = 64;

    void insert(Element e) {
        const std::size_t n = basis_.size();
        basis_.push_back(std::move(e));
        const Element& fresh = basis_.back();
        for (std::size_t i = 0; i < n; ++i) {
            if (basis_[i].lead_comp != fresh.lead_comp) continue;
            queue_.push({i, n, basis_[i].lead.lcm(fresh.lead)});
        }
    }

    RingPtr ring_;
    const Ring& R_;
    bool track_;
    bool rank1_;
    Stats* stats_;
    std::vector<Element> basis_;
    PairQueue queue_;
};

std::size_t max_comp(const std::vector<Vec>& gens) {
    std::size_t r = 0;
    for (const auto& v : gens)
        for (const auto& t : v) r = std::max<std::size_t>(r, t.comp + 1);
    return r;
}

} // namespace

void set_self_check(bool on) { g_self_check = on; }
bool self_check() { return g_self_check; }

int compare_terms(const Ring& R, const ModTerm& a, const ModTerm& b) {
    int c = R.compare(a.mono, b.mono);
    if (c) return c;
    if (a.comp == b.comp) return 0;
    return a.comp < b.comp ? 1 : -1;
}

void sort_vec(const Ring& R, Vec& v) {
    std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return compare_terms(R, a, b) > 0; });
    Vec out;
    out.reserve(v.size());
    const Field& F = R.field();
    for (auto& t : v) {
        if (!out.empty() && out.back().mono == t.mono && out.back().comp == t.comp) {
            out.back().coeff = F.add(out.back().coeff, t.coeff);
            if (F.is_zero(out.back().coeff)) out.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            out.push_back(std::move(t));
        }
    }
    v = std::move(out);
}

Vec axpy(const Ring& R, const Vec& a, const Scalar& s, const Monomial& m, const Vec& b, std::size_t a_start) {
    const Field& F = R.field();
    Vec out;
    out.reserve(a.size() - a_start + b.size());
    std::size_t i = a_start, j = 0;
    while (i < a.size() && j < b.size()) {
        ModTerm bt{b[j].mono * m, b[j].comp, F.zero()};
        int c = compare_terms(R, a[i], bt);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            bt.coeff = F.mul(s, b[j].coeff);
            out.push_back(std::move(bt));
            ++j;
        } else {
            Scalar v = a[i].coeff;
            F.add_mul(v, s, b[j].coeff);
            if (!F.is_zero(v)) out.push_back({a[i].mono, a[i].comp, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono * m, b[j].comp, F.mul(s, b[j].coeff)});
    return out;
}

Vec scale(const Ring& R, const Vec& v, const Scalar& s, const Monomial& m) {
    const Field& F = R.field();
    Vec out;
    if (F.is_zero(s)) return out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back({t.mono * m, t.comp, F.mul(t.coeff, s)});
    return out;
}

Vec poly_times(const Ring& R, const Polynomial& p, const Vec& v) {
    Vec out;
    for (const auto& t : p.terms()) out = axpy(R, out, t.coeff, t.mono, v);
    return out;
}

Vec add(const Ring& R, const Vec& a, const Vec& b) { return axpy(R, a, R.field().one(), Monomial(), b); }

bool vec_equal(const Ring& R, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].mono != b[i].mono || a[i].comp != b[i].comp || !R.field().equal(a[i].coeff, b[i].coeff))
            return false;
    return true;
}

Vec from_polynomial(const Polynomial& p, std::uint32_t comp) {
    Vec v;
    v.reserve(p.size());
    for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coeff});
    return v;
}

Polynomial component(const RingPtr& R, const Vec& v, std::uint32_t comp) {
    std::vector<Term> terms;
    for (const auto& t : v)
        if (t.comp == comp) terms.push_back({t.mono, t.coeff});
    return Polynomial(R, std::move(terms));
}

std::vector<Polynomial> to_components(const RingPtr& R, const Vec& v, std::size_t rank) {
    std::vector<std::vector<Term>> parts(rank);
    for (const auto& t : v) {
        if (t.comp >= rank) throw std::out_of_range("module component beyond rank");
        parts[t.comp].push_back({t.mono, t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(rank);
    for (auto& p : parts) out.emplace_back(R, std::move(p));
    return out;
}

Vec from_components(const std::vector<Polynomial>& comps) {
    if (comps.empty()) return {};
    const Ring& R = *comps.front().ring();
    Vec v;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (const auto& t : comps[c].terms()) v.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
    sort_vec(R, v);
    return v;
}

Vec unit_vector(const Ring& R, std::uint32_t comp) { return {ModTerm{Monomial(), comp, R.field().one()}}; }

Vec reduce(const Ring& R, Vec f, const std::vector<Element>& basis, Vec* rep, Vec* quotients) {
    const Field& F = R.field();
    Vec rem;
    std::size_t start = 0;
    while (start < f.size()) {
        const ModTerm& lt = f[start];
        long k = find_divisor(basis, lt);
        if (k < 0) {
            rem.push_back(lt);
            ++start;
            continue;
        }
        const Element& g = basis[static_cast<std::size_t>(k)];
        Monomial q = lt.mono / g.lead;
        // basis elements are monic
        Scalar c = F.neg(lt.coeff);
        if (rep) *rep = axpy(R, *rep, c, q, g.rep);
        if (quotients) *quotients = axpy(R, *quotients, lt.coeff, q, {ModTerm{Monomial(), static_cast<std::uint32_t>(k), F.one()}});
        // the leading terms cancel exactly; skip it and merge the rest
        Vec tail(g.vec.begin() + 1, g.vec.end());
        f = axpy(R, f, c, q, tail, start + 1);
        start = 0;
    }
    return rem;
}

std::vector<Element> buchberger(const RingPtr& ring, const std::vector<Vec>& gens, const Options& opts, Stats* stats) {
    Engine e(ring, opts.track, max_comp(gens), stats);
    e.add_inputs(gens);
    if (opts.parallel)
        e.run_parallel();
    else
        e.run_serial();
    return e.take();
}

std::vector<Element> buchberger_serial(const RingPtr& ring, const std::vector<Vec>& gens, bool track, Stats* stats) {
    return buchberger(ring, gens, Options{track, false}, stats);
}

std::vector<Vec> reduced_basis(const RingPtr& ring, std::vector<Element> basis) {
    const Ring& R = *ring;
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].lead_comp != basis[i].lead_comp) continue;
            if (!basis[j].lead.divides(basis[i].lead)) continue;
            // equal leading terms: keep the earliest
            redundant = basis[j].lead != basis[i].lead || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Vec> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Vec head{minimal[i].vec.front()};
        Vec tail(minimal[i].vec.begin() + 1, minimal[i].vec.end());
        Vec red = reduce(R, std::move(tail), others);
        red.insert(red.begin(), head.front());
        out.push_back(std::move(red));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return compare_terms(R, a.front(), b.front()) < 0; });
    return out;
}

std::vector<Vec> reduced_groebner(const RingPtr& ring, const std::vector<Vec>& gens, bool parallel) {
    return reduced_basis(ring, buchberger(ring, gens, Options{false, parallel}));
}

std::vector<Element> as_elements(const Ring& R, const std::vector<Vec>& basis) {
    std::vector<Element> out;
    for (const auto& v : basis)
        if (!v.empty()) out.push_back(make_element(R, v, {}));
    return out;
}

bool is_groebner(const RingPtr& ring, const std::vector<Element>& basis) {
    const Ring& R = *ring;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].lead_comp != basis[j].lead_comp) continue;
            Vec s = s_vector(R, basis[i], basis[j], basis[i].lead.lcm(basis[j].lead), nullptr);
            if (!reduce(R, std::move(s), basis).empty()) return false;
        }
    return true;
}

std::vector<Vec> syzygies(const RingPtr& ring, const std::vector<Vec>& gens) {
    const Ring& R = *ring;
    const Field& F = R.field();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].empty()) out.push_back(unit_vector(R, static_cast<std::uint32_t>(i)));

    std::vector<Element> G = buchberger(ring, gens, Options{true, true});

    // translate a syzygy among G into one among the inputs
    auto translate = [&](const Vec& over_g) {
        Vec s;
        for (const auto& t : over_g) s = axpy(R, s, t.coeff, t.mono, G[t.comp].rep);
        return s;
    };

    for (std::size_t k = 0; k < G.size(); ++k)
        for (std::size_t l = k + 1; l < G.size(); ++l) {
            if (G[k].lead_comp != G[l].lead_comp) continue;
            Monomial lcm = G[k].lead.lcm(G[l].lead);
            Vec s = s_vector(R, G[k], G[l], lcm, nullptr);
            Vec quot;
            Vec rem = reduce(R, std::move(s), G, nullptr, &quot);
            if (!rem.empty()) throw std::logic_error("S-vector of a Gröbner basis did not reduce to zero");
            Vec over_g;
            over_g.push_back({lcm / G[k].lead, static_cast<std::uint32_t>(k), F.one()});
            over_g.push_back({lcm / G[l].lead, static_cast<std::uint32_t>(l), F.neg(F.one())});
            sort_vec(R, over_g);
            over_g = axpy(R, over_g, F.neg(F.one()), Monomial(), quot);
            Vec syz = translate(over_g);
            if (!syz.empty()) out.push_back(std::move(syz));
        }

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].empty()) continue;
        Vec quot;
        Vec rem = reduce(R, gens[i], G, nullptr, &quot);
        if (!rem.empty()) throw std::logic_error("generator not reduced to zero by its own Gröbner basis");
        Vec syz = axpy(R, unit_vector(R, static_cast<std::uint32_t>(i)), F.neg(F.one()), Monomial(), translate(quot));
        if (!syz.empty()) out.push_back(std::move(syz));
    }

    // drop duplicates up to scalars
    std::vector<Vec> unique;
    for (auto& v : out) {
        Vec m = scale(R, v, F.inv(v.front().coeff), Monomial());
        bool seen = std::any_of(unique.begin(), unique.end(), [&](const Vec& u) { return vec_equal(R, u, m); });
        if (!seen) unique.push_back(std::move(m));
    }

    if (self_check()) {
        for (const auto& s : unique) {
            Vec sum;
            for (const auto& t : s) sum = axpy(R, sum, t.coeff, t.mono, gens[t.comp]);
            if (!sum.empty()) throw std::logic_error("syzygy check failed: sum s_i v_i != 0");
        }
    }
    return unique;
}

} // namespace cmc::gb
