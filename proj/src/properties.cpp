#include "cmc/properties.hpp"

#include <functional>
#include <unordered_map>

#include "cmc/cmcurves.hpp"
#include "cmc/deform.hpp"
#include "cmc/linalg.hpp"

namespace cmc {

namespace {

RingPtr plane(const Field& F) { return Ring::make(F, {"x", "y", "z"}); }

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string render(const std::vector<Polynomial>& ps) {
    std::string out = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
    return out + ")";
}

// Runs `body` per case; a false return or an exception is a failure.
PropertyResult run(const std::string& name, int cases, std::uint64_t seed,
                   const std::function<bool(std::mt19937_64&, std::string&)>& body) {
    PropertyResult res{name, cases, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        std::string instance;
        bool ok = false;
        try {
            ok = body(rng, instance);
        } catch (const std::exception& e) {
            instance += std::string(" threw: ") + e.what();
        }
        if (!ok && res.failures++ == 0) res.counterexample = instance;
    }
    return res;
}

std::vector<Polynomial> random_forms(const RingPtr& R, std::mt19937_64& rng, int count, int lo, int hi) {
    std::vector<Polynomial> out;
    while (static_cast<int>(out.size()) < count) {
        auto f = random_form(R, pick(rng, lo, hi), rng, pick(rng, 1, 4));
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

// Dense coefficient rows of the degree-d multiples of `gens`.
ScalarMatrix multiples(const std::vector<Polynomial>& gens, int d, const RingPtr& R,
                       std::unordered_map<Monomial, std::size_t, MonomialHash>& index) {
    auto basis = monomials_of_degree(*R, d);
    index.clear();
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    const Field& F = R->field();
    ScalarMatrix A(F, 0, basis.size());
    for (const auto& g : gens) {
        if (g.degree() > d) continue;
        for (const auto& m : monomials_of_degree(*R, d - g.degree())) {
            std::vector<Scalar> row(basis.size(), F.zero());
            for (const auto& t : g.terms()) row[index.at(t.mono * m)] = t.coeff;
            A.append_row(row);
        }
    }
    return A;
}

} // namespace

Polynomial random_form(const RingPtr& ring, int d, std::mt19937_64& rng, int terms) {
    auto basis = monomials_of_degree(*ring, d);
    Polynomial f(ring);
    for (int i = 0; i < terms; ++i) {
        const auto& m = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
        f += Polynomial::monomial(ring, m, random_scalar(ring->field(), rng, true));
    }
    return f;
}

bool linear_algebra_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw std::invalid_argument("linear algebra membership needs a homogeneous polynomial");
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw std::invalid_argument("linear algebra membership needs homogeneous generators");
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    ScalarMatrix A = multiples(gens, f.degree(), f.ring(), index);
    const std::size_t r = rank(A);
    std::vector<Scalar> row(A.cols(), f.field().zero());
    for (const auto& t : f.terms()) row[index.at(t.mono)] = t.coeff;
    A.append_row(row);
    return rank(std::move(A)) == r;
}

long linear_algebra_hilbert_function(const std::vector<Polynomial>& gens, int d) {
    if (gens.empty()) throw std::invalid_argument("needs at least one generator for the ring");
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    ScalarMatrix A = multiples(gens, d, gens.front().ring(), index);
    return static_cast<long>(A.cols() - rank(A));
}

PropertyResult property_membership(int cases, std::uint64_t seed, const Field& field) {
    auto R = plane(field);
    return run("membership", cases, seed, [&](std::mt19937_64& rng, std::string& inst) {
        auto gens = random_forms(R, rng, pick(rng, 1, 3), 1, 3);
        int top = 0;
        for (const auto& g : gens) top = std::max(top, g.degree());
        const int d = pick(rng, top, top + 4);
        Polynomial f(R);
        switch (pick(rng, 0, 2)) {
        case 0: // a combination, hence a member
            for (const auto& g : gens)
                if (g.degree() <= d) f += random_form(R, d - g.degree(), rng) * g;
            break;
        case 1:
            f = random_form(R, d, rng, pick(rng, 1, 5));
            break;
        default: // a member plus one monomial
            for (const auto& g : gens)
                if (g.degree() <= d) f += random_form(R, d - g.degree(), rng) * g;
            f += random_form(R, d, rng, 1);
        }
        inst = render(gens) + " f=" + f.to_string();
        return Ideal(R, gens).contains(f) == linear_algebra_member(f, gens);
    });
}

PropertyResult property_fitting_invariance(int cases, std::uint64_t seed, const Field& field) {
    auto R = plane(field);
    const Field& F = R->field();
    return run("fitting-invariance", cases, seed, [&](std::mt19937_64& rng, std::string& inst) {
        PolyMatrix M(R, 2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) M(i, j) = random_form(R, pick(rng, 1, 2), rng, pick(rng, 1, 2));
        const std::size_t n = static_cast<std::size_t>(pick(rng, 0, 1));
        PolyMatrix N = M;
        auto h = random_form(R, 1, rng, 2);
        switch (pick(rng, 0, 3)) {
        case 0:
            for (std::size_t j = 0; j < 3; ++j) N(0, j) += h * N(1, j);
            break;
        case 1:
            for (std::size_t i = 0; i < 2; ++i) N(i, 2) += h * N(i, 0);
            break;
        case 2: {
            auto c = Polynomial::constant(R, random_scalar(F, rng, true));
            for (std::size_t j = 0; j < 3; ++j) N(1, j) = c * N(1, j);
            break;
        }
        default: { // M (+) (1)
            PolyMatrix S(R, 3, 4);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 3; ++j) S(i, j) = M(i, j);
            S(2, 3) = Polynomial::constant(R, 1);
            N = S;
        }
        }
        inst = M.to_string() + " vs " + N.to_string() + " n=" + std::to_string(n);
        return ideal_equal(fitting_ideal(ModulePresentation(M), n), fitting_ideal(ModulePresentation(N), n));
    });
}

PropertyResult property_saturation(int cases, std::uint64_t seed, const Field& field) {
    auto R = plane(field);
    auto m = Ideal::irrelevant(R);
    return run("saturation", cases, seed, [&](std::mt19937_64& rng, std::string& inst) {
        auto J = random_forms(R, rng, pick(rng, 1, 2), 1, 2);
        // J times a power of the maximal ideal, plus a random extra form
        std::vector<Polynomial> gens;
        const int k = pick(rng, 1, 2);
        for (const auto& g : J)
            for (const auto& mono : monomials_of_degree(*R, k)) gens.push_back(g * Polynomial::monomial(R, mono, R->field().one()));
        if (pick(rng, 0, 1)) gens.push_back(random_form(R, pick(rng, 2, 3), rng, 2));
        Ideal I(R, gens);
        inst = I.to_string();
        Ideal S = saturate(I, m);
        return ideal_equal(saturate(S, m), S) && ideal_equal(S, saturate_by_colons(I, m)) &&
               S.contains(Ideal(R, J)) && S.contains(I);
    });
}

PropertyResult property_syzygies(int cases, std::uint64_t seed, const Field& field) {
    auto R = plane(field);
    return run("syzygy-exactness", cases, seed, [&](std::mt19937_64& rng, std::string& inst) {
        const std::size_t rk = static_cast<std::size_t>(pick(rng, 1, 2));
        const int k = pick(rng, 2, 4);
        std::vector<FreeModuleVector> vs;
        for (int i = 0; i < k; ++i) {
            std::vector<Polynomial> c;
            for (std::size_t j = 0; j < rk; ++j) {
                auto p = random_form(R, pick(rng, 1, 2), rng, pick(rng, 1, 3));
                if (pick(rng, 0, 3) == 0) p += Polynomial::constant(R, random_scalar(R->field(), rng));
                c.push_back(p);
            }
            vs.emplace_back(R, std::move(c));
            inst += vs.back().to_string() + " ";
        }
        auto syz = syzygies(vs);
        for (const auto& s : syz) {
            auto acc = FreeModuleVector::zero(R, rk);
            for (std::size_t i = 0; i < vs.size(); ++i) acc = acc + s[i] * vs[i];
            if (!acc.is_zero()) return false;
        }
        if (rk == 1 && !syz.empty()) {
            // the Koszul relations lie in the computed module
            Submodule Z(R, vs.size(), syz);
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    std::vector<Polynomial> c(vs.size(), Polynomial(R));
                    c[i] = vs[j][0];
                    c[j] = -vs[i][0];
                    if (!Z.contains(FreeModuleVector(R, c))) return false;
                }
        }
        return true;
    });
}

PropertyResult property_factorization(int cases, std::uint64_t seed, const Field& field) {
    auto P = Ring::make(field, {"x", "y", "w"});
    return run("factorization-determinant", cases, seed, [&](std::mt19937_64& rng, std::string& inst) {
        auto sc = random_singular_section(P, rng);
        inst = "Q=" + sc.Q.to_string() + " s=" + sc.s.to_string() + " t=" + sc.t.to_string();
        auto M = matrix_factorization(sc);
        return M.determinant() == -sc.Q;
    });
}

PropertyResult property_parallel_serial(int cases, std::uint64_t seed, const Field& field) {
    auto R = Ring::make(field, {"x", "y", "z", "w"});
    return run("parallel-serial", cases, seed, [&](std::mt19937_64& rng, std::string& inst) {
        auto gens = random_forms(R, rng, pick(rng, 2, 4), 1, 3);
        inst = render(gens);
        std::vector<gb::Vec> vs;
        for (const auto& g : gens) vs.push_back(gb::from_polynomial(g));
        auto par = gb::reduced_groebner(R, vs, true);
        auto ser = gb::reduced_basis(R, gb::buchberger_serial(R, vs));
        if (par.size() != ser.size()) return false;
        for (std::size_t i = 0; i < par.size(); ++i)
            if (!gb::vec_equal(*R, par[i], ser[i])) return false;
        return true;
    });
}

} // namespace cmc
