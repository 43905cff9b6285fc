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

FreeModuleVector vec(const RingPtr& R, std::initializer_list<const char*> comps) {
    return FreeModuleVector(R, polys(R, comps));
}

PolyMatrix matrix(const RingPtr& R, std::size_t rows, std::size_t cols, std::initializer_list<const char*> entries) {
    return PolyMatrix(R, rows, cols, polys(R, entries));
}

} // namespace

TEST_CASE("tangent dimensions 16, 15 and 12 in every characteristic") {
    for (const auto& F : support::small_fields()) {
        CAPTURE(F.name());
        auto R = support::ring(F, {"x", "y", "z", "w"});
        auto singular = ideal(R, {"z^2", "z*x", "z*y", "x^3"});
        auto smooth = ideal(R, {"z^2", "z*x", "z*y", "x*w^2"});
        CHECK(tangent_dimension(singular) == 16);
        CHECK(tangent_dimension(smooth) == 15);
        CHECK(tangent_dimension_from_generators(singular) == 16);
        CHECK(tangent_dimension_from_generators(smooth) == 15);
        CHECK(oracle::tangent_dimension(singular.generators(), 5) == 16);
        CHECK(oracle::tangent_dimension(smooth.generators(), 5) == 15);
        auto S = support::ring(F, {"x", "y", "u", "w"});
        auto curve = ideal(S, {"u^2", "u*y-x^2", "x*u"});
        CHECK(tangent_dimension(curve) == 12);
        CHECK(tangent_dimension_from_generators(curve) == 12);
        CHECK(oracle::tangent_dimension(curve.generators(), 5) == 12);
    }
}

TEST_CASE("tangent basis vectors are independent homomorphisms") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z", "w"});
    auto I = ideal(R, {"z^2", "z*x", "z*y", "x^3"});
    auto T = tangent_space(I);
    REQUIRE(T.basis.size() == T.dimension);
    auto syz = syzygies(I.generators());
    for (const auto& h : T.basis)
        for (const auto& s : syz) {
            Polynomial acc(R);
            for (std::size_t i = 0; i < s.rank(); ++i) acc += s[i] * h[i];
            CHECK(I.contains(acc));
        }
    // independence modulo I, read off on normal forms
    std::vector<oracle::Row> rows;
    for (const auto& h : T.basis) {
        oracle::Row r;
        for (std::size_t i = 0; i < h.rank(); ++i) {
            auto c = oracle::coordinates(I.normal_form(h[i]), I.generators()[i].degree());
            r.insert(r.end(), c.begin(), c.end());
        }
        rows.push_back(r);
    }
    CHECK(oracle::rank(rows, R->field()) == T.dimension);
}

TEST_CASE("tangent dimension rejects unsaturated or inhomogeneous input") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z", "w"});
    CHECK_THROWS(tangent_dimension(ideal(R, {"z*x", "z*y", "z^2", "z*w^2", "x*(x^3+y^3+w^3)", "y*(x^3+y^3+w^3)"})));
    CHECK_THROWS(tangent_dimension(ideal(R, {"z^2 - x", "z*y"})));
}

TEST_CASE("tangent dimension on random cubics through and off the singular point") {
    auto R = support::ring(Field::prime(32003), {"x", "y", "z", "w"});
    std::mt19937_64 rng(47);
    auto x = P(R, "x"), y = P(R, "y"), w = P(R, "w");
    for (int trial = 0; trial < 6; ++trial) {
        // Q in (x, y)^2 is singular at (0:0:1); adding w^2 (a x + b y) makes it smooth there.
        Polynomial Q = x * x * random_linear_form(R, rng, {"x", "y", "w"}) + x * y * random_linear_form(R, rng, {"x", "y", "w"}) +
                       y * y * random_linear_form(R, rng, {"x", "y", "w"});
        auto gens = polys(R, {"z^2", "z*x", "z*y"});
        gens.push_back(Q);
        CHECK(tangent_dimension(Ideal(R, gens)) == 16);
        gens.back() = Q + w * w * random_linear_form(R, rng, {"x", "y"});
        CHECK(tangent_dimension(Ideal(R, gens)) == 15);
    }
}

TEST_CASE("tangent dimension survives a linear change of coordinates") {
    auto R = support::ring(Field::prime(32003), {"x", "y", "u", "w"});
    std::mt19937_64 rng(53);
    auto I = ideal(R, {"u^2", "u*y-x^2", "x*u"});
    for (int trial = 0; trial < 4; ++trial) {
        std::map<std::string, Polynomial> images;
        for (const auto& v : R->names()) images.emplace(v, random_linear_form(R, rng));
        std::vector<Polynomial> g;
        for (const auto& p : I.generators()) g.push_back(substitute(p, images));
        Ideal J(R, g);
        if (hilbert(J).polynomial_string() != "3t+1") continue; // singular change of coordinates
        CHECK(tangent_dimension(J) == 12);
    }
}

TEST_CASE("normal module of the triple-line ideal in the affine chart") {
    auto R = support::ring(Field::rationals(), {"x", "y", "z"});
    // Q = x f - y g with f = x^2, g = 0
    auto I = ideal(R, {"z*x", "z*y", "z^2", "x^3"});
    std::vector<FreeModuleVector> expected{vec(R, {"z", "0", "0", "0"}), vec(R, {"0", "z", "0", "0"}),
                                           vec(R, {"0", "0", "z", "0"}), vec(R, {"0", "0", "0", "z"}),
                                           vec(R, {"0", "0", "0", "x"}), vec(R, {"0", "0", "0", "y"}),
                                           vec(R, {"x", "y", "0", "0"}), vec(R, {"0", "x^2", "0", "0"})};
    auto N = normal_module_generators(I);
    CHECK(Submodule(R, 4, N, &I).equals(Submodule(R, 4, expected, &I)));
    // smooth case, Q = x w^2 in the chart: f = 1, g = 0
    auto J = ideal(R, {"z*x", "z*y", "z^2", "x"});
    std::vector<FreeModuleVector> smooth{vec(R, {"z", "0", "0", "1"}), vec(R, {"0", "z", "0", "0"}),
                                         vec(R, {"0", "0", "z", "0"}), vec(R, {"0", "0", "0", "z"}),
                                         vec(R, {"0", "0", "0", "x"}), vec(R, {"0", "0", "0", "y"}),
                                         vec(R, {"x", "y", "0", "0"})};
    CHECK(Submodule(R, 4, normal_module_generators(J), &J).equals(Submodule(R, 4, smooth, &J)));
}

TEST_CASE("normal module of the degenerate twisted cubic comes from perturbing the matrix") {
    auto E = support::ring(Field::rationals(), {"x", "y", "u", "e11", "e12", "e13", "e21", "e22", "e23"});
    auto M = PolyMatrix::from_rows(E, {polys(E, {"x + e11", "e12", "u + e13"}), polys(E, {"y + e21", "u + e22", "x + e23"})});
    auto m = M.minors(2); // columns 01, 02, 12
    // (u^2, y u - x^2, x u) = (-m12, -m02, m01)
    std::vector<Polynomial> phi{-m[2], -m[1], m[0]};
    auto R = support::ring(Field::rationals(), {"x", "y", "u"});
    std::map<std::string, Polynomial> zero;
    for (const char* e : {"e11", "e12", "e13", "e21", "e22", "e23"}) zero.emplace(e, Polynomial(E));
    auto action = [&](const char* e) {
        std::vector<Polynomial> c;
        for (const auto& p : phi) c.push_back(substitute(derivative(p, E->require(e)), zero).map_to(R));
        return FreeModuleVector(R, c);
    };
    CHECK(action("e11") == vec(R, {"0", "-x", "u"}));
    CHECK(action("e12") == vec(R, {"-x", "0", "-y"}));
    CHECK(action("e13") == vec(R, {"u", "y", "0"}));
    CHECK(action("e21") == vec(R, {"0", "u", "0"}));
    CHECK(action("e22") == vec(R, {"u", "0", "x"}));
    CHECK(action("e23") == vec(R, {"0", "-x", "0"}));
    auto I = ideal(R, {"u^2", "y*u - x^2", "x*u"});
    std::vector<FreeModuleVector> perturbations;
    for (const char* e : {"e11", "e12", "e13", "e21", "e22", "e23"}) perturbations.push_back(action(e));
    CHECK(Submodule(R, 3, normal_module_generators(I), &I).equals(Submodule(R, 3, perturbations, &I)));
    // products with linear forms modulo I
    Submodule zero_mod_I(R, 3, {}, &I);
    auto u = P(R, "u"), x = P(R, "x"), y = P(R, "y");
    CHECK(zero_mod_I.contains(u * action("e11")));
    CHECK(zero_mod_I.contains(x * action("e21")));
    CHECK(zero_mod_I.normal_form(u * action("e13")) == zero_mod_I.normal_form(vec(R, {"0", "x^2", "0"})));
    CHECK(zero_mod_I.normal_form(y * action("e22")) == zero_mod_I.normal_form(vec(R, {"x^2", "0", "x*y"})));
    CHECK(zero_mod_I.normal_form((-x) * action("e12")) == zero_mod_I.normal_form(vec(R, {"x^2", "0", "x*y"})));
    CHECK(zero_mod_I.normal_form((-y) * action("e12")) == zero_mod_I.normal_form(vec(R, {"x*y", "0", "y^2"})));
}

TEST_CASE("normal module of a single variable") {
    auto R = support::ring(Field::rationals(), {"x"});
    auto I = ideal(R, {"x"});
    CHECK(Submodule(R, 1, normal_module_generators(I), &I).equals(Submodule(R, 1, {vec(R, {"1"})}, &I)));
}

TEST_CASE("obstruction residue for the triple-line family in every characteristic") {
    for (const auto& F : support::small_fields()) {
        CAPTURE(F.name());
        auto s = ps_obstruction_setup(F);
        auto rep = lift_check(s);
        CHECK(rep.residue == matrix(s.ring, 1, 4, {"b12*c16*x^2", "0", "b12*c13*x + b12*c14*y + b12*c15*z", "b12*c14*x^2"}));
        CHECK(rep.zero_mod_obstruction);
        CHECK_FALSE(rep.product.is_zero());
        auto [phi0, R0] = s.undeformed();
        CHECK((phi0 * R0).is_zero());
        auto h = ps_obstruction_setup_homogeneous(F);
        CHECK(lift_check(h).zero_mod_obstruction);
        CHECK((h.undeformed().first * h.undeformed().second).is_zero());
    }
}

TEST_CASE("obstruction for the stable sheaf presentation in every characteristic") {
    for (const auto& F : support::small_fields()) {
        CAPTURE(F.name());
        auto s = stable_sheaf_presentation(F);
        auto rep = lift_check(s);
        CHECK(rep.product == matrix(s.ring, 2, 2, {"-A6*b12*c13", "-A3*b12*c13 + b12*c14*(x + a8)", "b12*c14", "-b12*c13"}));
        CHECK(rep.zero_mod_obstruction);
        auto [A0, B0] = s.undeformed();
        CHECK(A0 == matrix(s.ring, 2, 4, {"z", "0", "0", "-x^2", "0", "z", "x", "y"}));
        CHECK((A0 * B0).is_zero());
        CHECK(lift_check(stable_sheaf_presentation(F, true)).zero_mod_obstruction);
    }
}

TEST_CASE("lifting against the zero ideal detects exactly the zero product") {
    auto s = ps_obstruction_setup(Field::rationals());
    DeformationSetup bare(s.left, s.right, Ideal(s.ring), s.deformation_variables, 3);
    CHECK_FALSE(lift_check(bare).zero_mod_obstruction);
    auto [l, r] = s.undeformed();
    CHECK(lift_check(DeformationSetup(l, r, Ideal(s.ring), s.deformation_variables)).zero_mod_obstruction);
    auto R = support::ring(Field::prime(32003), {"x", "y", "e"});
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix L(R, 1, 2), Rm(R, 2, 1);
        L(0, 0) = random_form(R, 1, rng, 2);
        L(0, 1) = random_form(R, 1, rng, 2);
        Rm(0, 0) = L(0, 1);
        Rm(1, 0) = -L(0, 0);
        if (trial % 2) Rm(1, 0) += P(R, "e*x");
        auto rep = lift_check(DeformationSetup(L, Rm, Ideal(R), {"e"}));
        CHECK(rep.zero_mod_obstruction == (L * Rm).is_zero());
    }
}

TEST_CASE("truncation drops terms of high deformation degree") {
    auto R = support::ring(Field::rationals(), {"x", "a", "b"});
    CHECK(truncate_below(P(R, "x^5 + a*x + a*b + a^2*b"), {"a", "b"}, 2) == P(R, "x^5 + a*x"));
    CHECK_THROWS(lift_check(DeformationSetup(PolyMatrix(R, 1, 2), PolyMatrix(R, 3, 1), Ideal(R), {"a"})));
}
