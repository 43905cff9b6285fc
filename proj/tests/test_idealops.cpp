#include <doctest.h>

#include <random>

#include "cmc/cmcurves.hpp"
#include "cmc/properties.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cmc;
using support::ideal;
using support::polys;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

// A random invertible linear change of the variables over the ring's field.
std::map<std::string, Polynomial> random_coordinates(const RingPtr& R, std::mt19937_64& rng) {
    const Field& F = R->field();
    const std::size_t n = R->nvars();
    for (;;) {
        std::vector<oracle::Row> A(n, oracle::Row(n));
        for (auto& row : A)
            for (auto& c : row) c = random_scalar(F, rng);
        if (oracle::rank(A, F) < n) continue;
        std::map<std::string, Polynomial> images;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial img(R);
            for (std::size_t j = 0; j < n; ++j) img += Polynomial::variable(R, j).scaled(A[i][j]);
            images.emplace(R->name(i), img);
        }
        return images;
    }
}

Ideal transformed(const Ideal& I, const std::map<std::string, Polynomial>& images) {
    std::vector<Polynomial> g;
    for (const auto& p : I.generators()) g.push_back(substitute(p, images));
    return Ideal(I.ring(), g);
}

} // namespace

TEST_CASE("colon ideal examples") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z"});
    CHECK(ideal_equal(quotient(ideal(R, {"x^2"}), ideal(R, {"x"})), ideal(R, {"x"})));
    auto I = ideal(R, {"x*y - z^2", "y^3"});
    CHECK(ideal_equal(quotient(I, Ideal::unit(R)), I));
    CHECK(ideal_equal(quotient(ideal(R, {"x^2*y"}), P(R, "x")), ideal(R, {"x*y"})));
}

TEST_CASE("saturation examples") {
    auto R = support::ring(Field::rationals(), {"x", "y"});
    CHECK(ideal_equal(saturate(ideal(R, {"x^2*y"}), ideal(R, {"y"})), ideal(R, {"x^2"})));
    auto I = ideal(R, {"x^2*y", "y^3 - x"});
    CHECK(ideal_equal(saturate(I, Ideal::unit(R)), I));
}

TEST_CASE("saturating the plane cubic with an embedded point") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z", "w"});
    const char* C = "(x^3+y^3+w^3)";
    std::string xc = std::string("x*") + C, yc = std::string("y*") + C;
    auto gens = polys(R, {"z*x", "z*y", "z^2", "z*w^2"});
    gens.push_back(P(R, xc.c_str()));
    gens.push_back(P(R, yc.c_str()));
    Ideal I(R, gens);
    Ideal S = saturate(I, Ideal::irrelevant(R));
    // z is killed by every quadratic monomial, so it enters the saturation,
    // while the cubic itself does not (w^k C never lies in I).
    for (const auto& m : oracle::monomials(4, 2))
        CHECK(oracle::member(P(R, "z") * Polynomial::monomial(R, Monomial(m), R->field().one()), gens));
    CHECK_FALSE(oracle::member(P(R, "z*w"), gens));
    CHECK_FALSE(oracle::member(P(R, "w^6") * P(R, C), gens));
    std::vector<Polynomial> expected{P(R, "z"), P(R, xc.c_str()), P(R, yc.c_str())};
    CHECK(ideal_equal(S, Ideal(R, expected)));
    CHECK(ideal_equal(S, saturate_by_colons(I, Ideal::irrelevant(R))));
    // frozen: a plane cubic and an isolated point
    CHECK(hilbert(S).polynomial_string() == "3t+1");
    CHECK(oracle::hilbert_polynomial(R, expected, 6) == std::vector<mpq_class>{1, 3});
    CHECK_FALSE(ideal_equal(S, I));
}

TEST_CASE("elimination examples") {
    auto R = support::ring(Field::rationals(), {"x", "y"});
    CHECK(eliminate(ideal(R, {"x - y"}), {"x"}).is_zero());
    CHECK(ideal_equal(eliminate(ideal(R, {"x", "y"}), {"x"}), ideal(R, {"y"})));
    // Relations (u + g1) s + g2 t and f1 s + (u + f2) t at f1 = x, f2 = g1 = g2 = 0:
    // away from s = t = 0 the section coordinates eliminate to (u + f2)(u + g1) = g2 f1.
    auto S = support::ring(Field::rationals(), {"s", "t", "x", "y", "u", "w"});
    Ideal rel = ideal(S, {"u*s", "x*s + u*t"});
    Ideal E = eliminate(saturate(rel, Ideal::of_variables(S, {"s", "t"})), {"s", "t"});
    CHECK(E.contains(P(S, "u^2")));
    CHECK(ideal_equal(E, ideal(S, {"u^2"})));
}

TEST_CASE("Hilbert data of the degenerate twisted cubic") {
    auto R = support::ring(Field::rationals(), {"x", "y", "u", "w"});
    auto I = ideal(R, {"u^2", "u*y-x^2", "x*u"});
    auto H = hilbert(I);
    CHECK(H.polynomial_string() == "3t+1");
    CHECK(H.polynomial_is({1, 3}));
    const std::vector<std::pair<int, long>> frozen{{0, 1}, {1, 4}, {2, 7}, {3, 10}};
    for (const auto& [d, v] : frozen) {
        CHECK(H.function_at(d) == v);
        CHECK(oracle::hilbert_function(R, I.generators(), d) == v);
    }
    CHECK(H.dimension == 2);
    CHECK(H.numerator == std::vector<long>{1, 0, -3, 2});
}

TEST_CASE("Hilbert polynomials of a polynomial ring and a plane cubic") {
    auto R = support::ring(Field::rationals(), {"x", "y"});
    CHECK(hilbert(Ideal(R)).polynomial_string() == "t+1");
    auto P2 = support::ring(Field::rationals(), {"x", "y", "w"});
    CHECK(hilbert(ideal(P2, {"w*(y^2 - x^2) - x^3"})).polynomial_string() == "3t");
    CHECK_THROWS_AS(hilbert(ideal(P2, {"x^2 - y"})), std::invalid_argument);
}

TEST_CASE("Hilbert tables match linear algebra on random ideals") {
    for (const auto& F : {Field::prime(32003), Field::prime(2)}) {
        auto R = support::ring(F, {"x", "y", "z", "w"});
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 2 + trial % 3; ++k) gens.push_back(random_form(R, 1 + (trial + k) % 3, rng, 3));
            auto H = hilbert(Ideal(R, gens), 6);
            for (int d = 0; d <= 6; ++d) CHECK(H.function_at(d) == oracle::hilbert_function(R, gens, d));
            // series numerator reproduces the table
            for (const auto& [d, v] : H.table) {
                mpz_class sum = 0;
                for (std::size_t k = 0; k < H.numerator.size() && static_cast<int>(k) <= d; ++k) {
                    mpz_class binom;
                    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - static_cast<int>(k) + 3), 3);
                    sum += H.numerator[k] * binom;
                }
                CHECK(sum == v);
            }
            for (const auto& [d, v] : H.table)
                if (d >= H.regularity_index) CHECK(H.polynomial_at(d) == v);
        }
    }
}

TEST_CASE("Hilbert polynomial survives a linear change of coordinates") {
    auto R = support::ring(Field::prime(32003), {"x", "y", "u", "w"});
    std::mt19937_64 rng(37);
    const std::vector<Ideal> cases{ideal(R, {"u^2", "u*y-x^2", "x*u"}), ideal(R, {"u^2", "u*x", "u*y", "x^3"}),
                                   ideal(R, {"x*u - y^2", "y*w - u^2", "x*w - y*u"})};
    for (const auto& I : cases) {
        const auto expected = hilbert(I).polynomial;
        for (int trial = 0; trial < 5; ++trial) CHECK(hilbert(transformed(I, random_coordinates(R, rng))).polynomial == expected);
    }
}

TEST_CASE("Fitting ideal of the flat two-generator presentation") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z", "w", "b"});
    auto M = fitting_flat_presentation(P(R, "b"), P(R, "x"), Polynomial(R), P(R, "w"));
    auto expected = ideal(R, {"x^3 - w*y^2", "z^2 - b^2*x*w", "z*x + b*w*y", "z*y + b*x^2"});
    CHECK(ideal_equal(fitting_ideal(ModulePresentation(M)), expected));
}

TEST_CASE("Fitting ideals of trivial presentations") {
    auto R = support::ring(Field::rationals(), {"x", "y"});
    CHECK(fitting_ideal(ModulePresentation(PolyMatrix::identity(R, 2))).is_unit());
    auto M = PolyMatrix::from_rows(R, {polys(R, {"x", "y"})});
    CHECK(fitting_ideal(ModulePresentation(M), 1).is_unit());
    CHECK(ideal_equal(fitting_ideal(ModulePresentation(M)), ideal(R, {"x", "y"})));
}

TEST_CASE("Fitting ideal of the non-flat genus two family") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z", "t"});
    auto I = fitting_ideal(ModulePresentation(quintic_family_presentation(R, P(R, "t"))));
    auto expected = ideal(R, {"z^3 - t^3*x*(y^2+1)", "z^2*x - t^2*y*(y^2+1)", "z*x^3 - t*y^2*(y^2+1)",
                              "x^5 - y^3*(y^2+1)", "(y*z - t*x^2)*x", "(y*z - t*x^2)*y", "(y*z - t*x^2)*z",
                              "(y*z - t*x^2)*t"});
    CHECK(ideal_equal(I, expected));
    auto witness = P(R, "y*z - t*x^2");
    Ideal colon = quotient(I, P(R, "t"));
    CHECK(colon.contains(witness));
    CHECK_FALSE(I.contains(witness));
    CHECK(colon.contains(I));
    bool found = false;
    for (const auto& w : torsion_witnesses(I, "t")) {
        CHECK_FALSE(I.contains(w));
        found = found || ideal_equal(Ideal(R, {w}) + I, Ideal(R, {witness}) + I);
    }
    CHECK(found);
}

TEST_CASE("annihilator examples") {
    auto R = support::ring(Field::rationals(), {"x", "y"});
    // the quotient B/A for B generated by 1, u with g + x u = 0, f + y u = 0
    auto K = PolyMatrix::from_rows(R, {polys(R, {"y^2", "x^2", "1"}), polys(R, {"x", "y", "0"})});
    CHECK(ideal_equal(annihilator(ModulePresentation(K)), ideal(R, {"x", "y"})));
    CHECK(annihilator(ModulePresentation(PolyMatrix::identity(R, 2))).is_unit());
    CHECK(annihilator(ModulePresentation(PolyMatrix(R, 1, 0))).is_zero());
    auto M = PolyMatrix::from_rows(R, {polys(R, {"x^2", "x*y"})});
    CHECK(ideal_equal(annihilator(ModulePresentation(M)), ideal(R, {"x^2", "x*y"})));
}

TEST_CASE("torsion witness edge cases") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z", "t"});
    CHECK(torsion_witnesses(ideal(R, {"x^2 - y*z"}), "t").empty());
    auto w = torsion_witnesses(ideal(R, {"t*x"}), "t");
    REQUIRE(w.size() == 1);
    CHECK(ideal_equal(Ideal(R, w), ideal(R, {"x"})));
}

TEST_CASE("colon and saturation containments") {
    auto R = support::ring(Field::prime(32003), {"x", "y", "z"});
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        Ideal I(R, {random_form(R, 2, rng, 3) * random_form(R, 1, rng, 2), random_form(R, 3, rng, 3)});
        Ideal J(R, {random_form(R, 1, rng, 2), random_form(R, 1, rng, 2)});
        Ideal colon = quotient(I, J);
        Ideal sat = saturate(I, J);
        CHECK(colon.contains(I));
        CHECK(sat.contains(colon));
        CHECK(ideal_equal(saturate(sat, J), sat));
        // every generator of the colon times J lies in I
        for (const auto& c : colon.generators())
            for (const auto& j : J.generators()) CHECK(I.contains(c * j));
    }
}

TEST_CASE("Fitt0 annihilates the module") {
    auto R = support::ring(Field::prime(32003), {"x", "y", "z"});
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t g = 1 + trial % 2, c = g + trial % 2;
        PolyMatrix M(R, g, c);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < c; ++j) M(i, j) = random_form(R, 1 + (i + j) % 2, rng, 2);
        ModulePresentation Pm(M);
        Ideal F0 = fitting_ideal(Pm);
        CHECK(annihilator(Pm).contains(F0));
        // each minor times each generator lies in the relation module
        Submodule rel(R, g, columns_of(M));
        for (const auto& m : F0.generators())
            for (std::size_t i = 0; i < g; ++i) CHECK(rel.contains(m * FreeModuleVector::unit(R, g, i)));
    }
}
