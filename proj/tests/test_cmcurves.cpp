#include <doctest.h>

#include <random>

#include "cmc/cmcurves.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cmc;
using support::ideal;
using support::polys;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(R, s); }

void check_decomposition(const SingularCubicSection& sc, const CubicDecomposition& d) {
    CHECK(sc.s * sc.s * d.f1 + sc.s * sc.t * (d.f2 - d.g1) - sc.t * sc.t * d.g2 == sc.Q);
}

// The curve over Q = x^3 - w y^2 with f1 = x, g1 = 0, g2 = w.
Ideal flat_curve(const RingPtr& plane) {
    SingularCubicSection sc{P(plane, "x^3 - w*y^2"), P(plane, "x"), P(plane, "y")};
    return curve_from_factorization(sc, {P(plane, "x"), Polynomial(plane), Polynomial(plane), P(plane, "w")});
}

Polynomial var(const Ideal& I, const char* v) { return Polynomial::variable(I.ring(), v); }

} // namespace

TEST_CASE("twisted cubic family at the origin and at random points") {
    auto S = support::ring(Field::rationals(), {"x", "y", "u", "w"});
    std::vector<Polynomial> a(12, Polynomial(S));
    CHECK(ideal_equal(twisted_cubic_family(S, a), ideal(S, {"u^2", "u*y - x^2", "x*u"})));
    a[6] = Polynomial::constant(S, 1);
    Ideal a7 = twisted_cubic_family(S, a);
    CHECK(hilbert(a7).polynomial_string() == "3t+1");
    CHECK(tangent_dimension(a7) == 12);

    const Field Fp = Field::prime(32003);
    auto sym = twisted_cubic_family_symbolic(Fp);
    auto T = support::ring(Fp, {"x", "y", "u", "w"});
    std::mt19937_64 rng(61);
    for (int k = 0; k < 5; ++k) {
        RingMap m(sym.ring(), T);
        for (int i = 1; i <= 12; ++i) m.set("a" + std::to_string(i), Polynomial::constant(T, random_scalar(Fp, rng)));
        std::vector<Polynomial> g;
        for (const auto& p : sym.generators()) g.push_back(m(p));
        CHECK(hilbert(Ideal(T, g)).polynomial_string() == "3t+1");
        CHECK(oracle::hilbert_polynomial(T, g, 3) == std::vector<mpq_class>{1, 3});
    }
}

TEST_CASE("decomposing singular cubics") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    SingularCubicSection cusp{P(Pl, "x^3"), P(Pl, "x"), P(Pl, "y")};
    auto d = decompose_singular_cubic(cusp);
    CHECK(d.f1 == P(Pl, "x"));
    CHECK((d.f2.is_zero() && d.g1.is_zero() && d.g2.is_zero()));
    check_decomposition(cusp, d);

    SingularCubicSection cone{P(Pl, "x^2*w"), P(Pl, "x"), P(Pl, "y")};
    auto e = decompose_singular_cubic(cone);
    CHECK(e.f1 == P(Pl, "w"));
    CHECK((e.f2.is_zero() && e.g1.is_zero() && e.g2.is_zero()));

    SingularCubicSection node{P(Pl, "w*(y^2 - x^2) - x^3"), P(Pl, "x"), P(Pl, "y")};
    auto n = decompose_singular_cubic(node);
    CHECK(n.f1 == P(Pl, "-(w + x)"));
    CHECK(n.g2 == P(Pl, "-w"));
    CHECK((n.f2.is_zero() && n.g1.is_zero()));
    check_decomposition(node, n);

    SingularCubicSection skew{P(Pl, "(x+y)^2*w + (x+y)*(x-y)*y"), P(Pl, "x+y"), P(Pl, "x-y")};
    check_decomposition(skew, decompose_singular_cubic(skew));

    SingularCubicSection smooth{P(Pl, "x*w^2 + y^3"), P(Pl, "x"), P(Pl, "y")};
    CHECK_THROWS_AS(decompose_singular_cubic(smooth), std::domain_error);
    SingularCubicSection dependent{P(Pl, "x^3"), P(Pl, "x"), P(Pl, "2*x")};
    CHECK_THROWS_AS(decompose_singular_cubic(dependent), std::invalid_argument);
}

TEST_CASE("matrix factorizations") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    SingularCubicSection cusp{P(Pl, "x^3"), P(Pl, "x"), P(Pl, "y")};
    auto M = matrix_factorization(cusp);
    CHECK(M == PolyMatrix::from_rows(Pl, {polys(Pl, {"0", "x^2"}), polys(Pl, {"x", "y"})}));
    CHECK(M.determinant() == P(Pl, "-x^3"));
    SingularCubicSection cone{P(Pl, "x^2*w"), P(Pl, "x"), P(Pl, "y")};
    CHECK(matrix_factorization(cone) == PolyMatrix::from_rows(Pl, {polys(Pl, {"0", "x*w"}), polys(Pl, {"x", "y"})}));
    auto Fp = support::ring(Field::prime(32003), {"x", "y", "w"});
    std::mt19937_64 rng(67);
    for (int k = 0; k < 30; ++k) {
        auto sc = random_singular_section(Fp, rng);
        CHECK(oracle::leibniz_determinant(matrix_factorization(sc)) == -sc.Q);
    }
}

TEST_CASE("curves from factorizations") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    Ideal X = curve_from_factorization({P(Pl, "x^3"), P(Pl, "x"), P(Pl, "y")});
    auto C = X.ring();
    CHECK(C->names() == std::vector<std::string>{"x", "y", "u", "w"});
    // the degenerate curve with u replaced by -u
    CHECK(ideal_equal(X, ideal(C, {"u^2", "-u*y - x^2", "-x*u"})));
    CHECK(avoids_u_point(X));
    CHECK_FALSE(avoids_u_point(ideal(C, {"x", "y"})));

    auto Fp = support::ring(Field::prime(32003), {"x", "y", "w"});
    std::mt19937_64 rng(71);
    for (int k = 0; k < 10; ++k) {
        auto sc = random_singular_section(Fp, rng);
        Ideal Y = curve_from_factorization(sc);
        CHECK(hilbert(Y).polynomial_string() == "3t+1");
        CHECK(avoids_u_point(Y));
        // non-immersion: the image is the cubic and the double point has length one
        auto c = plane_projection(Y, Fp);
        CHECK(ideal_equal(schematic_image(c), Ideal(Fp, {sc.Q})));
        CHECK(plain_double_point_length(c) == 1);
    }
}

TEST_CASE("ring condition on 2x2 presentations") {
    auto R = support::ring(Field::rationals(), {"x", "y"});
    auto n = ideal(R, {"x", "y"});
    auto pres = [&](std::initializer_list<const char*> e) { return ModulePresentation(PolyMatrix(R, 2, 2, polys(R, e))); };
    CHECK(ring_condition_check(pres({"y^2", "x^2", "x", "y"}), n));
    CHECK_FALSE(ring_condition_check(pres({"1", "0", "x", "y"}), n));
    CHECK(ring_condition_check(pres({"0", "0", "x", "y"}), n));
    CHECK_THROWS(ring_condition_check(ModulePresentation(PolyMatrix(R, 2, 3)), n));
}

TEST_CASE("length of the double point") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    Ideal X = flat_curve(Pl);
    CHECK(plain_double_point_length(plane_projection(X, Pl)) == 1);
    CHECK(plain_double_point_length(CMCurvePresentation::identity(X)) == 0);
    // three concurrent lines in space projected to three concurrent lines
    auto C = support::ring(Field::rationals(), {"x", "y", "u", "w"});
    Ideal lines = ideal(C, {"x*y", "x*u", "y*u"});
    CMCurvePresentation tp(lines, Pl, polys(C, {"x + u", "y + u", "w"}));
    CHECK(plain_double_point_length(tp) == 1);
    CHECK(ideal_equal(schematic_image(tp), ideal(Pl, {"x*y*(x - y)"})));
}

TEST_CASE("round trips through the curve") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    auto r = roundtrip_check({P(Pl, "x^3"), P(Pl, "x"), P(Pl, "y")});
    CHECK(r.hilbert_ok);
    CHECK(r.avoids_point);
    CHECK(r.image_matches_q);
    CHECK(r.section_matches_annihilator);
    CHECK(r.relations_match_factorization);
    CHECK(r.ring_condition);
    CHECK(roundtrip_check({P(Pl, "w*(y^2 - x^2) - x^3"), P(Pl, "x"), P(Pl, "y")}).all());
    CHECK_THROWS_AS(roundtrip_check({P(Pl, "x*w^2 + y^3"), P(Pl, "x"), P(Pl, "y")}), std::domain_error);
    auto Fp = support::ring(Field::prime(32003), {"x", "y", "w"});
    std::mt19937_64 rng(73);
    for (int k = 0; k < 10; ++k) CHECK(roundtrip_check(random_singular_section(Fp, rng)).all());
}

TEST_CASE("critical loci") {
    auto f = universal_ternary_cubic(Field::rationals());
    auto L = critical_locus(f, {"x", "y", "w"});
    CHECK(L.generators().size() == 4);
    CHECK(L.generators().front() == f);
    auto R = support::ring(Field::rationals(), {"x"});
    CHECK(ideal_equal(critical_locus(P(R, "x^2")), ideal(R, {"x"})));
    auto R3 = support::ring(Field::prime(3), {"x", "y", "w"});
    auto g = P(R3, "x^3 + y^3 + w^3");
    CHECK(ideal_equal(critical_locus(g), Ideal(R3, {g})));
}

TEST_CASE("Fitting images of projections") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    auto T = support::ring(Field::rationals(), {"x", "y", "z", "w"});
    Ideal X = flat_curve(Pl);
    CMCurvePresentation planar(X, T, {var(X, "x"), var(X, "y"), Polynomial(X.ring()), var(X, "w")});
    CHECK(ideal_equal(fitting_image(planar), ideal(T, {"x^3 - w*y^2", "z^2", "z*x", "z*y"})));
    CHECK(ideal_equal(fitting_image(CMCurvePresentation::identity(X)), X));
    CMCurvePresentation scaled(X, T, {var(X, "x"), var(X, "y"), 3 * var(X, "u"), var(X, "w")});
    CHECK(ideal_equal(fitting_image(scaled), ideal(T, {"x^3 - w*y^2", "z^2 - 9*x*w", "z*x + 3*w*y", "z*y + 3*x^2"})));
    auto pres = pushforward_presentation(scaled);
    CHECK(pres.generators() == 2);
    CHECK(hilbert(fitting_image(scaled)).polynomial_string() == "3t+1");
}

TEST_CASE("Fitting ideals commute with specializing the parameters") {
    const Field F = Field::prime(32003);
    std::vector<std::string> names{"x", "y", "z", "w", "b"};
    for (int i = 0; i < 9; ++i) names.push_back("p" + std::to_string(i));
    auto G = Ring::make(F, names);
    auto T = support::ring(F, {"x", "y", "z", "w"});
    auto lin = [&](int k) {
        return Polynomial::variable(G, "p" + std::to_string(k)) * P(G, "x") +
               Polynomial::variable(G, "p" + std::to_string(k + 1)) * P(G, "y") +
               Polynomial::variable(G, "p" + std::to_string(k + 2)) * P(G, "w");
    };
    auto generic = fitting_ideal(ModulePresentation(fitting_flat_presentation(P(G, "b"), lin(0), lin(3), lin(6))));
    std::mt19937_64 rng(79);
    for (int k = 0; k < 5; ++k) {
        RingMap spec(G, T);
        for (std::size_t i = 4; i < names.size(); ++i) spec.set(names[i], Polynomial::constant(T, random_scalar(F, rng)));
        std::vector<Polynomial> specialized;
        for (const auto& g : generic.generators()) specialized.push_back(spec(g));
        auto fiber = fitting_ideal(ModulePresentation(fitting_flat_presentation(spec(P(G, "b")), spec(lin(0)), spec(lin(3)), spec(lin(6)))));
        CHECK(ideal_equal(Ideal(T, specialized), fiber));
    }
}

TEST_CASE("planar image Fitting ideals in higher projective spaces") {
    auto Pl = support::ring(Field::rationals(), {"x", "y", "w"});
    auto four = planar_image_fitting_pn(4, P(Pl, "y^2"), P(Pl, "x^2"));
    CHECK(four.hilbert.polynomial_string() == "3t+2");
    auto R = four.ideal.ring();
    CHECK(R->names() == std::vector<std::string>{"x", "y", "z1", "z2", "w"});
    auto pattern = ideal(R, {"z1^2", "z2^2", "z1*z2", "z1*x", "z1*y", "z2*x", "z2*y", "y^3 - x^3"});
    CHECK(ideal_equal(four.ideal, pattern));
    CHECK(oracle::same_homogeneous_ideal(four.ideal.generators(), pattern.generators()));
    auto five = planar_image_fitting_pn(5, P(Pl, "y^2"), P(Pl, "x^2"));
    CHECK(five.hilbert.polynomial_string() == "3t+3");
    CHECK(ideal_equal(five.ideal, five.pattern));
    for (int d = 2; d <= 5; ++d) CHECK(oracle::hilbert_function(five.ideal.ring(), five.ideal.generators(), d) == 3 * d + 3);
}

TEST_CASE("stable sheaf presentation restricted to the twisted cubic component") {
    const Field F = Field::prime(32003);
    auto s = stable_sheaf_presentation(F, true);
    auto T = support::ring(F, {"x", "y", "z", "w"});
    std::mt19937_64 rng(83);
    for (int k = 0; k < 3; ++k) {
        RingMap m(s.ring, T);
        for (const auto& v : s.ring->names()) {
            if (T->index_of(v)) continue;
            m.set(v, Polynomial::constant(T, (v == "c13" || v == "c14") ? F.zero() : random_scalar(F, rng)));
        }
        auto A = s.left.map(T, [&](const Polynomial& p) { return m(p); });
        Ideal F0 = fitting_ideal(ModulePresentation(A));
        CHECK(F0.is_homogeneous());
        CHECK(hilbert(F0).polynomial_string() == "3t+1");
    }
}

TEST_CASE("the genus two family changes Hilbert polynomial at t = 0") {
    auto H = support::ring(Field::rationals(), {"x", "y", "z", "w"});
    auto fiber = [&](long t) {
        Ideal J = fitting_ideal(ModulePresentation(quintic_family_presentation(H, Polynomial::constant(H, t)), {0, 1, 2}, true));
        return hilbert(saturate(J, Ideal::irrelevant(H)));
    };
    auto one = fiber(1), zero = fiber(0);
    CHECK(one.polynomial_string() == "5t-1");
    CHECK(zero.polynomial_string() == "5t");
}
