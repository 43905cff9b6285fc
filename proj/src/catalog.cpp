#include "cmc/catalog.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "cmc/cmcurves.hpp"
#include "cmc/parser.hpp"
#include "cmc/properties.hpp"

namespace cmc {

namespace {

const Field kRandomField = Field::prime(32003);

Polynomial P(const RingPtr& R, const std::string& text) { return parse_polynomial(R, text); }

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& texts) {
    std::vector<Polynomial> g;
    for (const auto& t : texts) g.push_back(P(R, t));
    return Ideal(R, std::move(g));
}

std::string tag(const Field& F) { return "[" + F.name() + "] "; }

// Equal as lists of polynomials up to the sign of each entry.
bool same_up_to_sign(std::vector<Polynomial> a, std::vector<Polynomial> b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const Polynomial& q) { return q == p || q == -p; });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

void determinantal_fiber(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto S = Ring::make(F, {"x", "y", "u", "w"});
        Ideal I = twisted_cubic_family(S, std::vector<Polynomial>(12, Polynomial(S)));
        Ideal expected = ideal_of(S, {"u^2", "u*y - x^2", "x*u"});
        ctx.expect(tag(F) + "minors at a = 0", ideal_equal(I, expected), I.to_string());
        ctx.expect(tag(F) + "minors equal the generators up to sign",
                   same_up_to_sign(I.generators(), expected.generators()));
        auto h = hilbert(I);
        ctx.expect(tag(F) + "Hilbert polynomial", h.polynomial_is({1, 3}), h.polynomial_string());
    }
}

void tangent_dimensions(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto R = Ring::make(F, {"x", "y", "z", "w"});
        auto S = Ring::make(F, {"x", "y", "u", "w"});
        struct Case {
            std::string label;
            Ideal I;
            std::size_t expected;
        };
        std::vector<Case> cases{
            {"(z^2,zx,zy,x^3)", ideal_of(R, {"z^2", "z*x", "z*y", "x^3"}), 16},
            {"(z^2,zx,zy,x*w^2+y^3)", ideal_of(R, {"z^2", "z*x", "z*y", "x*w^2 + y^3"}), 15},
            {"(z^2,zx,zy,x*w^2)", ideal_of(R, {"z^2", "z*x", "z*y", "x*w^2"}), 15},
            {"(u^2,uy-x^2,xu)", ideal_of(S, {"u^2", "u*y - x^2", "x*u"}), 12},
        };
        for (const auto& c : cases) {
            auto d1 = tangent_dimension(c.I);
            auto d2 = tangent_dimension_from_generators(c.I);
            ctx.expect(tag(F) + "tangent " + c.label, d1 == c.expected && d2 == c.expected,
                       std::to_string(d1) + " / " + std::to_string(d2));
        }
    }
}

void ps_obstruction(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto s = ps_obstruction_setup(F);
        auto rep = lift_check(s);
        ctx.expect(tag(F) + "quadratic residue", rep.residue == ps_expected_residue(s), rep.residue.to_string());
        ctx.expect(tag(F) + "phi R in J", rep.zero_mod_obstruction, s.obstruction.to_string());
        auto [phi0, R0] = s.undeformed();
        ctx.expect(tag(F) + "undeformed phi R = 0", (phi0 * R0).is_zero(), phi0.to_string());
        auto h = ps_obstruction_setup_homogeneous(F);
        ctx.expect(tag(F) + "homogeneous phi R in J", lift_check(h).zero_mod_obstruction);
    }
}

void ft_obstruction(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto s = stable_sheaf_presentation(F);
        auto rep = lift_check(s);
        ctx.expect(tag(F) + "A B", rep.product == stable_sheaf_expected_product(s), rep.product.to_string());
        ctx.expect(tag(F) + "A B in J", rep.zero_mod_obstruction, s.obstruction.to_string());
        auto [A0, B0] = s.undeformed();
        const auto& R = s.ring;
        ctx.expect(tag(F) + "undeformed A", A0 == PolyMatrix(R, 2, 4, {P(R, "z"), P(R, "0"), P(R, "0"), P(R, "-x^2"),
                                                                      P(R, "0"), P(R, "z"), P(R, "x"), P(R, "y")}),
                   A0.to_string());
        ctx.expect(tag(F) + "undeformed B",
                   B0 == PolyMatrix(R, 4, 2, {P(R, "0"), P(R, "x^2"), P(R, "-x"), P(R, "-y"), P(R, "z"), P(R, "0"),
                                              P(R, "0"), P(R, "z")}),
                   B0.to_string());
        ctx.expect(tag(F) + "A B = 0 at zero parameters", (A0 * B0).is_zero());
        auto h = stable_sheaf_presentation(F, true);
        auto hrep = lift_check(h);
        ctx.expect(tag(F) + "homogeneous A B", hrep.product == stable_sheaf_expected_product(h, true));
        ctx.expect(tag(F) + "homogeneous A B in J", hrep.zero_mod_obstruction);
    }
    // c13 = c14 = 0 at random points: Fitt^0 of A is a twisted cubic degeneration
    std::mt19937_64 rng(ctx.options.seed);
    auto s = stable_sheaf_presentation(kRandomField, true);
    auto T = Ring::make(kRandomField, {"x", "y", "z", "w"});
    int good = 0;
    const int points = 10;
    for (int k = 0; k < points; ++k) {
        RingMap m(s.ring, T);
        for (const auto& v : s.deformation_variables)
            m.set(v, Polynomial::constant(T, v == "c13" || v == "c14" ? kRandomField.zero()
                                                                       : random_scalar(kRandomField, rng)));
        auto A = s.left.map(T, [&](const Polynomial& p) { return m(p); });
        if (hilbert(fitting_ideal(ModulePresentation(A, {0, 1}, true))).polynomial_is({1, 3})) ++good;
    }
    ctx.expect("[fp:32003] Fitt^0 with c13 = c14 = 0 has Hilbert polynomial 3t+1", good == points,
               std::to_string(good) + "/" + std::to_string(points));
}

// The curve of the flat family with z = beta u; b is a parameter when symbolic.
Ideal flat_family_curve(const RingPtr& C, const Polynomial& f1, const Polynomial& g1, const Polynomial& g2) {
    auto x = Polynomial::variable(C, "x"), y = Polynomial::variable(C, "y"), u = Polynomial::variable(C, "u");
    return Ideal(C, PolyMatrix::from_rows(C, {{x, -g2, u}, {y, u + g1, -f1}}).minors(2));
}

void fitting_image_planar(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto C = Ring::make(F, {"x", "y", "u", "w"});
        auto T = Ring::make(F, {"x", "y", "z", "w"});
        auto X = flat_family_curve(C, P(C, "x"), Polynomial(C), P(C, "w"));
        auto var = [&](const char* v) { return Polynomial::variable(C, v); };
        CMCurvePresentation planar(X, T, {var("x"), var("y"), Polynomial(C), var("w")});
        Ideal fit = fitting_image(planar);
        ctx.expect(tag(F) + "beta = 0 image", ideal_equal(fit, ideal_of(T, {"x^3 - w*y^2", "z^2", "z*x", "z*y"})),
                   fit.to_string());
        ctx.expect(tag(F) + "closed immersion returns the source",
                   ideal_equal(fitting_image(CMCurvePresentation::identity(X)), X));

        // symbolic beta
        auto Cb = Ring::make(F, {"x", "y", "u", "w", "b"});
        auto Tb = Ring::make(F, {"x", "y", "z", "w", "b"});
        auto Xb = flat_family_curve(Cb, P(Cb, "x"), Polynomial(Cb), P(Cb, "w"));
        auto vb = [&](const char* v) { return Polynomial::variable(Cb, v); };
        CMCurvePresentation family(Xb, Tb, {vb("x"), vb("y"), vb("b") * vb("u"), vb("w"), vb("b")});
        auto closed = Ideal(Tb, fitting_flat_closed_form(P(Tb, "b"), P(Tb, "x"), Polynomial(Tb), P(Tb, "w")));
        Ideal fb = fitting_image(family);
        ctx.expect(tag(F) + "family image equals (Q, F1, F2, F3)", ideal_equal(fb, closed), closed.to_string());
        Ideal fm = fitting_ideal(
            ModulePresentation(fitting_flat_presentation(P(Tb, "b"), P(Tb, "x"), Polynomial(Tb), P(Tb, "w"))));
        ctx.expect(tag(F) + "presentation minors equal (Q, F1, F2, F3)", ideal_equal(fm, closed));
    }

    std::mt19937_64 rng(ctx.options.seed);
    auto T = Ring::make(kRandomField, {"x", "y", "z", "w"});
    auto C = Ring::make(kRandomField, {"x", "y", "u", "w"});
    const std::vector<std::string> plane{"x", "y", "w"};
    int hp_ok = 0, push_ok = 0, base_change_ok = 0;
    const int points = 20, pushed = 5;
    // symbolic coefficients for the base-change comparison
    std::vector<std::string> names{"x", "y", "z", "w", "b"};
    for (int i = 0; i < 9; ++i) names.push_back("p" + std::to_string(i));
    auto G = Ring::make(kRandomField, names);
    auto lin = [&](int k) {
        return P(G, "p" + std::to_string(k) + "*x + p" + std::to_string(k + 1) + "*y + p" + std::to_string(k + 2) + "*w");
    };
    auto generic_minors = fitting_flat_presentation(P(G, "b"), lin(0), lin(3), lin(6)).minors(2);
    for (int k = 0; k < points; ++k) {
        auto beta = Polynomial::constant(T, random_scalar(kRandomField, rng, true));
        auto f1 = random_linear_form(T, rng, plane), g1 = random_linear_form(T, rng, plane),
             g2 = random_linear_form(T, rng, plane);
        Ideal fit = fitting_ideal(ModulePresentation(fitting_flat_presentation(beta, f1, g1, g2), {0, 1}, true));
        if (hilbert(fit).polynomial_is({1, 3}) && ideal_equal(fit, Ideal(T, fitting_flat_closed_form(beta, f1, g1, g2))))
            ++hp_ok;
        if (k < pushed) {
            auto X = flat_family_curve(C, f1.map_to(C), g1.map_to(C), g2.map_to(C));
            auto v = [&](const char* n) { return Polynomial::variable(C, n); };
            CMCurvePresentation c(X, T, {v("x"), v("y"), beta.map_to(C) * v("u"), v("w")});
            if (ideal_equal(fitting_image(c), fit)) ++push_ok;
            // specialize the generic minors at the same point
            RingMap spec(G, T);
            spec.set("b", beta);
            int idx = 0;
            for (const auto& l : {f1, g1, g2})
                for (const char* vname : {"x", "y", "w"})
                    spec.set("p" + std::to_string(idx++), Polynomial::constant(T, l.coeff(Monomial::var(T->require(vname)))));
            std::vector<Polynomial> sm;
            for (const auto& g : generic_minors) sm.push_back(spec(g));
            if (ideal_equal(Ideal(T, sm), fit)) ++base_change_ok;
        }
    }
    ctx.expect("[fp:32003] Hilbert polynomial 3t+1 and closed form at random points", hp_ok == points,
               std::to_string(hp_ok) + "/" + std::to_string(points));
    ctx.expect("[fp:32003] pushforward Fitting ideal equals the presentation's", push_ok == pushed,
               std::to_string(push_ok) + "/" + std::to_string(pushed));
    ctx.expect("[fp:32003] Fitting ideal commutes with specialization", base_change_ok == pushed,
               std::to_string(base_change_ok) + "/" + std::to_string(pushed));
}

void nonflat(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto A = Ring::make(F, {"x", "y", "z", "t"});
        Ideal I = fitting_ideal(ModulePresentation(quintic_family_presentation(A, P(A, "t"))));
        ctx.expect(tag(F) + "Fitt^0 equals the eight known generators",
                   ideal_equal(I, Ideal(A, quintic_family_fitting_generators(A))));
        auto witness = P(A, "y*z - t*x^2");
        Ideal colon = quotient(I, P(A, "t"));
        ctx.expect(tag(F) + "witness in (Fitt^0 : t) but not in Fitt^0", colon.contains(witness) && !I.contains(witness),
                   witness.to_string());
        auto tors = torsion_witnesses(I, "t");
        std::string listed;
        for (const auto& p : tors) listed += (listed.empty() ? "" : ", ") + p.to_string();
        ctx.expect(tag(F) + "t-torsion", !tors.empty() && colon.contains(I) && !I.contains(colon), listed);

        auto H = Ring::make(F, {"x", "y", "z", "w"});
        auto fiber = [&](long tv) {
            Ideal J = fitting_ideal(
                ModulePresentation(quintic_family_presentation(H, Polynomial::constant(H, tv)), {0, 1, 2}, true));
            return hilbert(saturate(J, Ideal::irrelevant(H)));
        };
        auto h1 = fiber(1), h0 = fiber(0);
        ctx.expect(tag(F) + "t = 1 fiber", h1.polynomial_is({-1, 5}), h1.polynomial_string());
        ctx.note(tag(F) + "t = 0 fiber", h0.polynomial_string());
        ctx.expect(tag(F) + "fiber Hilbert polynomials differ", h1.polynomial != h0.polynomial);
    }
}

void roundtrip(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto Pl = Ring::make(F, {"x", "y", "w"});
        SingularCubicSection cusp{P(Pl, "x^3"), P(Pl, "x"), P(Pl, "y")};
        auto d = decompose_singular_cubic(cusp);
        ctx.expect(tag(F) + "x^3 decomposition", d.f1 == P(Pl, "x") && d.f2.is_zero() && d.g1.is_zero() && d.g2.is_zero());
        ctx.expect(tag(F) + "x^3 factorization", matrix_factorization(cusp) == PolyMatrix::from_rows(Pl, {{P(Pl, "0"), P(Pl, "x^2")}, {P(Pl, "x"), P(Pl, "y")}}));
        Ideal X = curve_from_factorization(cusp);
        auto C = X.ring();
        // the degenerate curve (u^2, uy - x^2, xu) after u -> -u
        RingMap flip(C, C);
        flip.set("u", -Polynomial::variable(C, "u"));
        Ideal degenerate = ideal_of(C, {"u^2", "u*y - x^2", "x*u"});
        std::vector<Polynomial> flipped;
        for (const auto& g : degenerate.generators()) flipped.push_back(flip(g));
        ctx.expect(tag(F) + "x^3 curve is the degenerate curve up to u -> -u", ideal_equal(X, Ideal(C, flipped)),
                   X.to_string());
        ctx.expect(tag(F) + "x^3 round trip", roundtrip_check(cusp).all());

        SingularCubicSection node{P(Pl, "w*(y^2 - x^2) - x^3"), P(Pl, "x"), P(Pl, "y")};
        auto dn = decompose_singular_cubic(node);
        ctx.expect(tag(F) + "nodal decomposition",
                   dn.f1 == P(Pl, "-(w + x)") && dn.g2 == P(Pl, "-w") && dn.f2.is_zero() && dn.g1.is_zero());
        ctx.expect(tag(F) + "nodal round trip", roundtrip_check(node).all());

        SingularCubicSection smooth{P(Pl, "x^3 + y^3 + w^3 - x*y*w"), P(Pl, "x"), P(Pl, "y")};
        bool rejected = false;
        try {
            decompose_singular_cubic(smooth);
        } catch (const std::domain_error&) {
            rejected = true;
        }
        ctx.expect(tag(F) + "non-singular section rejected", rejected);
    }

    std::mt19937_64 rng(ctx.options.seed);
    auto Pl = Ring::make(kRandomField, {"x", "y", "w"});
    const int cases = 50, deep = 5;
    int good = 0, lengths = 0;
    std::string first_bad;
    for (int k = 0; k < cases; ++k) {
        auto sc = random_singular_section(Pl, rng);
        auto r = roundtrip_check(sc);
        if (r.all()) {
            ++good;
        } else if (first_bad.empty()) {
            first_bad = sc.Q.to_string();
        }
        if (k < deep) {
            auto X = curve_from_factorization(sc);
            auto c = plane_projection(X, Pl);
            if (plain_double_point_length(c) == 1 && hilbert(schematic_image(c)).polynomial_is({0, 3})) ++lengths;
        }
    }
    ctx.expect("[fp:32003] random round trips", good == cases,
               std::to_string(good) + "/" + std::to_string(cases) + (first_bad.empty() ? "" : " first failure Q=" + first_bad));
    ctx.expect("[fp:32003] plain double point length 1 and image 3t", lengths == deep,
               std::to_string(lengths) + "/" + std::to_string(deep));
}

void pn_planar(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto Pl = Ring::make(F, {"x", "y", "w"});
        for (int n : {4, 5}) {
            auto r = planar_image_fitting_pn(n, P(Pl, "y^2"), P(Pl, "x^2"));
            ctx.expect(tag(F) + "n = " + std::to_string(n) + " Hilbert polynomial", r.hilbert.polynomial_is({n - 2, 3}),
                       r.hilbert.polynomial_string());
            ctx.expect(tag(F) + "n = " + std::to_string(n) + " pattern", ideal_equal(r.ideal, r.pattern), r.pattern.to_string());
        }
    }
}

void kernel_properties(CheckContext& ctx) {
    using Prop = PropertyResult (*)(int, std::uint64_t, const Field&);
    const std::vector<Prop> props{property_membership, property_fitting_invariance, property_saturation,
                                  property_syzygies, property_factorization, property_parallel_serial};
    std::vector<std::pair<Field, int>> runs{{kRandomField, ctx.options.property_cases}};
    if (ctx.options.all_characteristics) {
        runs.push_back({Field::prime(2), ctx.options.property_cases / 4});
        runs.push_back({Field::prime(3), ctx.options.property_cases / 4});
    } else if (!(ctx.options.field == kRandomField)) {
        runs.push_back({ctx.options.field, ctx.options.property_cases / 4});
    }
    for (const auto& [F, cases] : runs)
        for (auto prop : props) {
            auto r = prop(cases, ctx.options.seed, F);
            ctx.expect(tag(F) + r.name, r.failures == 0,
                       std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
                           (r.failures ? " first failure: " + r.counterexample : ""));
        }
}

void normal_module(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto R = Ring::make(F, {"x", "y", "z", "w"});
        Ideal I = ideal_of(R, {"z*x", "z*y", "z^2", "x^3"});
        auto gens = normal_module_generators(I);
        auto vec = [&](std::vector<std::string> c) {
            std::vector<Polynomial> p;
            for (const auto& s : c) p.push_back(P(R, s));
            return FreeModuleVector(R, p);
        };
        std::vector<FreeModuleVector> expected{vec({"z", "0", "0", "0"}), vec({"0", "z", "0", "0"}),
                                                vec({"0", "0", "z", "0"}), vec({"0", "0", "0", "z"}),
                                                vec({"0", "0", "0", "x"}), vec({"0", "0", "0", "y"}),
                                                vec({"x", "y", "0", "0"}), vec({"0", "x^2", "0", "0"})};
        bool equal = Submodule(R, 4, gens, &I).equals(Submodule(R, 4, expected, &I));
        ctx.expect(tag(F) + "Hom(I, S/I) generators", equal, std::to_string(gens.size()) + " computed");
    }
}

void critical(CheckContext& ctx) {
    auto f = universal_ternary_cubic(ctx.options.field);
    auto L = critical_locus(f, {"x", "y", "w"});
    ctx.expect("universal cubic: f and three partials", L.generators().size() == 4, L.to_string().substr(0, 120) + "...");
    auto Q1 = Ring::make(Field::rationals(), {"x"});
    ctx.expect("[q] x^2", ideal_equal(critical_locus(P(Q1, "x^2")), ideal_of(Q1, {"x"})));
    auto F3 = Ring::make(Field::prime(3), {"x", "y", "w"});
    auto fermat = P(F3, "x^3 + y^3 + w^3");
    ctx.expect("[fp:3] Fermat cubic", ideal_equal(critical_locus(fermat), Ideal(F3, {fermat})));
}

void double_points(CheckContext& ctx) {
    for (const auto& F : ctx.fields()) {
        auto Pl = Ring::make(F, {"x", "y", "w"});
        SingularCubicSection cusp{P(Pl, "x^3"), P(Pl, "x"), P(Pl, "y")};
        auto X = curve_from_factorization(cusp);
        ctx.expect(tag(F) + "degenerate curve, planar projection", plain_double_point_length(plane_projection(X, Pl)) == 1);
        ctx.expect(tag(F) + "closed immersion", plain_double_point_length(CMCurvePresentation::identity(X)) == 0);
        auto C = X.ring();
        Ideal lines = ideal_of(C, {"x*y", "x*u", "y*u"});
        CMCurvePresentation tp(lines, Pl, {P(C, "x + u"), P(C, "y + u"), P(C, "w")});
        auto img = schematic_image(tp);
        ctx.expect(tag(F) + "three concurrent lines", plain_double_point_length(tp) == 1, img.to_string());
    }
}

void twisted_generic(CheckContext& ctx) {
    std::mt19937_64 rng(ctx.options.seed);
    auto sym = twisted_cubic_family_symbolic(kRandomField);
    auto S = Ring::make(kRandomField, {"x", "y", "u", "w"});
    const int points = 20;
    int good = 0;
    for (int k = 0; k < points; ++k) {
        RingMap m(sym.ring(), S);
        for (int i = 1; i <= 12; ++i) m.set("a" + std::to_string(i), Polynomial::constant(S, random_scalar(kRandomField, rng)));
        std::vector<Polynomial> g;
        for (const auto& p : sym.generators()) g.push_back(m(p));
        if (hilbert(Ideal(S, g)).polynomial_is({1, 3})) ++good;
    }
    ctx.expect("[fp:32003] generic fibers have Hilbert polynomial 3t+1", good == points,
               std::to_string(good) + "/" + std::to_string(points));
    for (const auto& F : ctx.fields()) {
        auto R = Ring::make(F, {"x", "y", "u", "w"});
        std::vector<Polynomial> a(12, Polynomial(R));
        a[6] = Polynomial::constant(R, 1);
        auto I = twisted_cubic_family(R, a);
        ctx.expect(tag(F) + "a7 = 1 tangent dimension", tangent_dimension(I) == 12, I.to_string());
    }
}

} // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "error";
    }
}

void CheckContext::note(const std::string& label, const std::string& value) { details_.emplace_back(label, value); }

bool CheckContext::expect(const std::string& label, bool ok, const std::string& value) {
    details_.emplace_back(label, (ok ? "ok" : "FAILED") + (value.empty() ? std::string() : ": " + value));
    ok_ = ok_ && ok;
    return ok;
}

std::vector<Field> CheckContext::fields() const {
    if (options.all_characteristics) return {Field::rationals(), Field::prime(2), Field::prime(3)};
    return {options.field};
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"determinantal-fiber", "special fiber of the twelve-parameter family", determinantal_fiber},
        {"tangent-12-15-16", "tangent dimensions 16, 15 and 12", tangent_dimensions},
        {"ps-obstruction", "quadratic obstruction for the singular plane cubic family", ps_obstruction},
        {"ft-obstruction", "obstruction for the stable sheaf presentation", ft_obstruction},
        {"fitting-image-planar", "Fitting images of projected curves", fitting_image_planar},
        {"nonflat-5t-1", "a Fitting family that is not flat", nonflat},
        {"roundtrip-sc", "curves from cubics with a singular section and back", roundtrip},
        {"pn-planar-fitting", "planar Fitting images in P^n", pn_planar},
        {"kernel-properties", "randomized kernel properties", kernel_properties},
        {"normal-module", "generators of Hom(I, S/I)", normal_module},
        {"critical-locus", "critical loci of cubic families", critical},
        {"plain-double-point", "length of the double point cokernel", double_points},
        {"twisted-cubic-generic", "generic fibers of the twelve-parameter family", twisted_generic},
    };
    return entries;
}

const CatalogEntry* find_check(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

VerificationReport run_check(const CatalogEntry& entry, const CatalogOptions& opts) {
    VerificationReport rep;
    rep.id = entry.id;
    CheckContext ctx(opts);
    const auto start = std::chrono::steady_clock::now();
    try {
        entry.body(ctx);
        rep.status = ctx.ok() ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
        ctx.note("exception", e.what());
        rep.status = CheckStatus::error;
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    rep.details = ctx.take_details();
    return rep;
}

std::vector<VerificationReport> run_checks(const std::vector<std::string>& ids, const CatalogOptions& opts,
                                           const std::function<void(const VerificationReport&)>& emit,
                                           unsigned threads) {
    std::vector<const CatalogEntry*> entries;
    for (const auto& id : ids) {
        const CatalogEntry* e = find_check(id);
        if (!e) throw std::invalid_argument("unknown check: " + id);
        entries.push_back(e);
    }
    std::vector<VerificationReport> out(entries.size());
    std::vector<bool> done(entries.size(), false);
    std::mutex mu;
    std::size_t emitted = 0;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
            auto rep = run_check(*entries[i], opts);
            std::lock_guard lock(mu);
            out[i] = std::move(rep);
            done[i] = true;
            while (emitted < entries.size() && done[emitted]) {
                if (emit) emit(out[emitted]);
                ++emitted;
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(entries.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

} // namespace cmc
