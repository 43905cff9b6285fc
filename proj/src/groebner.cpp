#include "cmc/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmc {

namespace {

std::vector<gb::Vec> as_vecs(const std::vector<Polynomial>& polys) {
    std::vector<gb::Vec> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(gb::from_polynomial(p));
    return out;
}

std::vector<gb::Vec> as_vecs(const std::vector<FreeModuleVector>& vs) {
    std::vector<gb::Vec> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(v.to_vec());
    return out;
}

void check_rank(const std::vector<FreeModuleVector>& vs, std::size_t rank) {
    for (const auto& v : vs)
        if (v.rank() != rank) throw std::invalid_argument("module vectors of different ranks");
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    const RingPtr& R = f.ring();
    std::vector<Polynomial> divisors;
    for (const auto& g : G) {
        if (!same_ring(g.ring(), R)) throw RingMismatch();
        if (!g.is_zero()) divisors.push_back(g);
    }
    auto elems = gb::as_elements(*R, as_vecs(divisors));
    return gb::component(R, gb::reduce(*R, gb::from_polynomial(f), elems), 0);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_)) throw RingMismatch();
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal::Ideal(std::vector<Polynomial> generators)
    : Ideal(generators.empty() ? throw std::invalid_argument("ideal needs a ring") : generators.front().ring(),
            std::move(generators)) {}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
}

Ideal Ideal::of_variables(RingPtr ring, const std::vector<std::string>& names) {
    std::vector<Polynomial> g;
    for (const auto& n : names) g.push_back(Polynomial::variable(ring, n));
    return Ideal(std::move(ring), std::move(g));
}

Ideal Ideal::irrelevant(RingPtr ring) { return of_variables(ring, ring->names()); }

std::shared_ptr<const Ideal::Basis> Ideal::basis() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->gb) return cache_->gb;
    }
    auto vecs = gb::reduced_groebner(ring_, as_vecs(gens_));
    auto fresh = std::make_shared<Basis>();
    for (const auto& v : vecs) fresh->polys.push_back(gb::component(ring_, v, 0));
    fresh->elements = gb::as_elements(*ring_, vecs);
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = std::move(fresh);
    return cache_->gb;
}

std::vector<Polynomial> Ideal::groebner() const { return basis()->polys; }

bool Ideal::has_cached_groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->gb != nullptr;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch();
    auto B = basis();
    return gb::component(ring_, gb::reduce(*ring_, gb::from_polynomial(f), B->elements), 0);
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    if (!same_ring(other.ring_, ring_)) throw RingMismatch();
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
    auto B = basis();
    return B->polys.size() == 1 && B->polys.front().is_constant();
}

bool Ideal::is_homogeneous() const {
    // a homogeneous generating set, or a reduced basis that is homogeneous
    if (std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); })) return true;
    if (!ring_->order().is_degree_compatible()) return false;
    const auto& G = groebner();
    return std::all_of(G.begin(), G.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::operator+(const Ideal& o) const {
    if (!same_ring(o.ring_, ring_)) throw RingMismatch();
    return with(o.gens_);
}

Ideal Ideal::operator*(const Ideal& o) const {
    if (!same_ring(o.ring_, ring_)) throw RingMismatch();
    std::vector<Polynomial> g;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) g.push_back(a * b);
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const std::vector<Polynomial>& more) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), more.begin(), more.end());
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::map_to(const RingPtr& target) const {
    std::vector<Polynomial> g;
    for (const auto& p : gens_) g.push_back(p.map_to(target));
    return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
    os << ")";
    return os.str();
}

std::vector<Polynomial> buchberger(const Ideal& I, const MonomialOrder& order) {
    auto R = I.ring()->with_order(order);
    return I.map_to(R).groebner();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw RingMismatch();
    return I.contains(J) && J.contains(I);
}

FreeModuleVector::FreeModuleVector(RingPtr r, std::vector<Polynomial> comps, std::vector<int> degree_shifts)
    : ring(std::move(r)), components(std::move(comps)), shifts(std::move(degree_shifts)) {
    if (shifts.empty()) shifts.assign(components.size(), 0);
    if (shifts.size() != components.size()) throw std::invalid_argument("shift count differs from rank");
    for (const auto& c : components)
        if (!same_ring(c.ring(), ring)) throw RingMismatch();
}

FreeModuleVector FreeModuleVector::zero(RingPtr r, std::size_t rank) {
    std::vector<Polynomial> c(rank, Polynomial(r));
    return FreeModuleVector(r, std::move(c));
}

FreeModuleVector FreeModuleVector::unit(RingPtr r, std::size_t rank, std::size_t i) {
    auto v = zero(r, rank);
    v.components.at(i) = Polynomial::constant(r, 1);
    return v;
}

bool FreeModuleVector::is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

gb::Vec FreeModuleVector::to_vec() const { return gb::from_components(components); }

FreeModuleVector FreeModuleVector::from_vec(const RingPtr& r, const gb::Vec& v, std::size_t rank) {
    return FreeModuleVector(r, gb::to_components(r, v, rank));
}

std::string FreeModuleVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < components.size(); ++i) os << (i ? ", " : "") << components[i].to_string();
    os << ")";
    return os.str();
}

FreeModuleVector operator+(const FreeModuleVector& a, const FreeModuleVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < a.rank(); ++i) c.push_back(a[i] + b[i]);
    return FreeModuleVector(a.ring, std::move(c), a.shifts);
}

FreeModuleVector operator*(const Polynomial& p, const FreeModuleVector& v) {
    std::vector<Polynomial> c;
    for (const auto& x : v.components) c.push_back(p * x);
    return FreeModuleVector(v.ring, std::move(c), v.shifts);
}

bool operator==(const FreeModuleVector& a, const FreeModuleVector& b) { return a.components == b.components; }

std::vector<FreeModuleVector> columns_of(const PolyMatrix& M) {
    std::vector<FreeModuleVector> out;
    for (std::size_t j = 0; j < M.cols(); ++j) out.emplace_back(M.ring(), M.column(j));
    return out;
}

PolyMatrix matrix_of(const RingPtr& ring, std::size_t rank, const std::vector<FreeModuleVector>& cols) {
    check_rank(cols, rank);
    PolyMatrix M(ring, rank, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rank; ++i) M(i, j) = cols[j][i];
    return M;
}

std::vector<FreeModuleVector> syzygies(const std::vector<FreeModuleVector>& vectors) {
    if (vectors.empty()) return {};
    const RingPtr& R = vectors.front().ring;
    check_rank(vectors, vectors.front().rank());
    std::vector<FreeModuleVector> out;
    for (const auto& s : gb::syzygies(R, as_vecs(vectors)))
        out.push_back(FreeModuleVector::from_vec(R, s, vectors.size()));
    return out;
}

std::vector<FreeModuleVector> syzygies(const std::vector<Polynomial>& polys) {
    std::vector<FreeModuleVector> vs;
    for (const auto& p : polys) vs.emplace_back(p.ring(), std::vector<Polynomial>{p});
    return syzygies(vs);
}

std::vector<FreeModuleVector> syzygies_modulo(const std::vector<FreeModuleVector>& vectors, const Ideal& I) {
    if (vectors.empty()) return {};
    const RingPtr& R = vectors.front().ring;
    const std::size_t rank = vectors.front().rank();
    const std::size_t m = vectors.size();
    check_rank(vectors, rank);
    std::vector<gb::Vec> aug = as_vecs(vectors);
    const auto& G = I.map_to(R).groebner();
    for (std::size_t c = 0; c < rank; ++c)
        for (const auto& g : G) aug.push_back(gb::from_polynomial(g, static_cast<std::uint32_t>(c)));
    std::vector<FreeModuleVector> out;
    for (const auto& s : gb::syzygies(R, aug)) {
        gb::Vec head;
        for (const auto& t : s)
            if (t.comp < m) head.push_back(t);
        if (head.empty()) continue;
        out.push_back(FreeModuleVector::from_vec(R, head, m));
    }
    if (gb::self_check()) {
        for (const auto& s : out) {
            auto sum = FreeModuleVector::zero(R, rank);
            for (std::size_t i = 0; i < m; ++i) sum = sum + s[i] * vectors[i];
            for (const auto& c : sum.components)
                if (!I.map_to(R).contains(c)) throw std::logic_error("syzygy modulo check failed");
        }
    }
    return out;
}

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<FreeModuleVector> gens, const Ideal* modulo)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
    check_rank(gens_, rank_);
    std::vector<gb::Vec> all = as_vecs(gens_);
    if (modulo) {
        const auto& G = modulo->map_to(ring_).groebner();
        for (std::size_t c = 0; c < rank_; ++c)
            for (const auto& g : G) all.push_back(gb::from_polynomial(g, static_cast<std::uint32_t>(c)));
    }
    basis_ = gb::reduced_groebner(ring_, all);
    elements_ = gb::as_elements(*ring_, basis_);
}

FreeModuleVector Submodule::normal_form(const FreeModuleVector& v) const {
    if (v.rank() != rank_) throw std::invalid_argument("rank mismatch");
    return FreeModuleVector::from_vec(ring_, gb::reduce(*ring_, v.to_vec(), elements_), rank_);
}

bool Submodule::contains(const FreeModuleVector& v) const { return normal_form(v).is_zero(); }

bool Submodule::contains(const Submodule& o) const {
    if (o.rank_ != rank_) return false;
    for (const auto& v : o.basis_)
        if (!gb::reduce(*ring_, v, elements_).empty()) return false;
    return true;
}

std::vector<FreeModuleVector> module_eliminate(const RingPtr& ring, std::size_t rank,
                                               const std::vector<FreeModuleVector>& gens,
                                               const std::vector<std::string>& vars) {
    check_rank(gens, rank);
    std::vector<std::size_t> idx;
    for (const auto& v : vars) idx.push_back(ring->require(v));
    auto E = ring->with_order(MonomialOrder::elimination(ring->nvars(), idx));
    std::vector<gb::Vec> mapped;
    for (const auto& g : gens) {
        std::vector<Polynomial> c;
        for (const auto& p : g.components) c.push_back(p.map_to(E));
        mapped.push_back(gb::from_components(c));
    }
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= 1u << i;
    std::vector<FreeModuleVector> out;
    for (const auto& v : gb::reduced_groebner(E, mapped)) {
        if (v.empty()) continue;
        if (v.front().mono.support() & mask) continue;
        std::vector<Polynomial> c;
        for (const auto& p : gb::to_components(E, v, rank)) c.push_back(p.map_to(ring));
        out.emplace_back(ring, std::move(c));
    }
    return out;
}

} // namespace cmc
