#include "cmc/cmcurves.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmc/linalg.hpp"
#include "cmc/parser.hpp"

namespace cmc {

namespace {

Polynomial var(const RingPtr& R, const std::string& name) { return Polynomial::variable(R, name); }

PolyMatrix parse_matrix(const RingPtr& R, std::size_t rows, std::size_t cols, const std::vector<std::string>& cells) {
    std::vector<Polynomial> entries;
    for (const auto& c : cells) entries.push_back(parse_polynomial(R, c));
    return PolyMatrix(R, rows, cols, std::move(entries));
}

std::string unused_name(const std::vector<std::string>& taken, std::string stem) {
    while (std::find(taken.begin(), taken.end(), stem) != taken.end()) stem = "_" + stem;
    return stem;
}

bool is_linear_form(const Polynomial& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) { return t.mono.degree() == 1; });
}

// Coefficient vector of a linear form on the ring variables.
std::vector<Scalar> coefficients(const Polynomial& l) {
    const RingPtr& R = l.ring();
    std::vector<Scalar> c(R->nvars(), R->field().zero());
    for (const auto& t : l.terms())
        for (std::size_t v = 0; v < R->nvars(); ++v)
            if (t.mono[v]) c[v] = t.coeff;
    return c;
}

// Graph ring of a map: source variables, then target variables that are not
// identified with a same-named source variable.
struct Graph {
    RingPtr ring;
    Ideal ideal;
    std::vector<std::string> target_names; // names in `ring` per target variable
    std::vector<std::string> eliminated;   // source-only variables
    RingMap back;

    explicit Graph(const CMCurvePresentation& c) : ideal(c.target), back(c.target, c.target) {
        const RingPtr& S = c.source.ring();
        const RingPtr& T = c.target;
        std::vector<std::string> names = S->names();
        std::vector<bool> identified(T->nvars(), false);
        for (std::size_t k = 0; k < T->nvars(); ++k) {
            const std::string& v = T->name(k);
            if (S->index_of(v) && c.images[k] == var(S, v)) {
                identified[k] = true;
                target_names.push_back(v);
            } else {
                target_names.push_back(unused_name(names, v));
                names.push_back(target_names.back());
            }
        }
        for (const auto& v : S->names())
            if (std::find(target_names.begin(), target_names.end(), v) == target_names.end()) eliminated.push_back(v);
        ring = Ring::make(S->field(), names);
        std::vector<Polynomial> gens;
        for (const auto& g : c.source.generators()) gens.push_back(g.map_to(ring));
        for (std::size_t k = 0; k < T->nvars(); ++k)
            if (!identified[k]) gens.push_back(var(ring, target_names[k]) - c.images[k].map_to(ring));
        ideal = Ideal(ring, std::move(gens));
        back = RingMap(ring, T);
        for (std::size_t k = 0; k < T->nvars(); ++k) back.set(target_names[k], Polynomial::variable(T, k));
        for (const auto& v : eliminated) back.set(v, Polynomial(T));
    }
};

bool graded_map(const CMCurvePresentation& c) {
    return c.source.is_homogeneous() && c.images_are_linear() &&
           std::all_of(c.module_generators.begin(), c.module_generators.end(),
                       [](const Polynomial& m) { return m.is_homogeneous(); });
}

} // namespace

CMCurvePresentation::CMCurvePresentation(Ideal X, RingPtr target_ring, std::vector<Polynomial> pullbacks,
                                         std::vector<Polynomial> generators)
    : source(std::move(X)), target(std::move(target_ring)), images(std::move(pullbacks)),
      module_generators(std::move(generators)) {
    if (images.size() != target->nvars()) throw std::invalid_argument("one pullback per target variable");
    for (const auto& p : images)
        if (!same_ring(p.ring(), source.ring())) throw RingMismatch();
    if (module_generators.empty()) {
        const RingPtr& S = source.ring();
        module_generators.push_back(Polynomial::constant(S, 1));
        if (S->index_of("u")) module_generators.push_back(var(S, "u"));
    }
}

CMCurvePresentation CMCurvePresentation::identity(const Ideal& X) {
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k < X.ring()->nvars(); ++k) images.push_back(Polynomial::variable(X.ring(), k));
    return CMCurvePresentation(X, X.ring(), std::move(images), {Polynomial::constant(X.ring(), 1)});
}

bool CMCurvePresentation::images_are_linear() const { return std::all_of(images.begin(), images.end(), is_linear_form); }

ModulePresentation pushforward_presentation(const CMCurvePresentation& c) {
    Graph G(c);
    const std::size_t g = c.module_generators.size();
    std::vector<FreeModuleVector> gens;
    for (const auto& m : c.module_generators) gens.emplace_back(G.ring, std::vector<Polynomial>{m.map_to(G.ring)});
    auto rel = module_eliminate(G.ring, g, syzygies_modulo(gens, G.ideal), G.eliminated);
    std::vector<FreeModuleVector> cols;
    for (const auto& v : rel) {
        std::vector<Polynomial> comps;
        for (const auto& p : v.components) comps.push_back(G.back(p));
        cols.emplace_back(c.target, std::move(comps));
    }
    std::vector<int> degrees;
    for (const auto& m : c.module_generators) degrees.push_back(m.is_zero() ? 0 : m.degree());
    return ModulePresentation(matrix_of(c.target, g, cols), degrees, graded_map(c));
}

Ideal fitting_image(const CMCurvePresentation& c) { return fitting_ideal(pushforward_presentation(c)); }

Ideal schematic_image(const CMCurvePresentation& c) {
    Graph G(c);
    Ideal eliminated = eliminate(G.ideal, G.eliminated);
    std::vector<Polynomial> kept;
    for (const auto& p : eliminated.generators()) kept.push_back(G.back(p));
    Ideal image(c.target, std::move(kept));
    if (graded_map(c)) image = saturate(image, Ideal::irrelevant(c.target));
    return image;
}

long plain_double_point_length(const CMCurvePresentation& c) {
    auto hx = hilbert(c.source);
    auto hd = hilbert(schematic_image(c));
    const std::size_t n = std::max(hx.polynomial.size(), hd.polynomial.size());
    mpq_class constant;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class a = i < hx.polynomial.size() ? hx.polynomial[i] : mpq_class(0);
        mpq_class b = i < hd.polynomial.size() ? hd.polynomial[i] : mpq_class(0);
        if (i == 0) {
            constant = a - b;
        } else if (a != b) {
            throw std::domain_error("image has a different Hilbert polynomial degree or leading data");
        }
    }
    if (constant.get_den() != 1) throw std::logic_error("non-integral length");
    return constant.get_num().get_si();
}

PolyMatrix twisted_cubic_family_matrix(const RingPtr& R, const std::vector<Polynomial>& a) {
    if (a.size() != 12) throw std::invalid_argument("the family has twelve parameters");
    auto x = var(R, "x"), y = var(R, "y"), u = var(R, "u"), w = var(R, "w");
    for (const auto& p : a)
        if (!same_ring(p.ring(), R)) throw RingMismatch();
    return PolyMatrix::from_rows(R, {{x + a[1] * w, a[6] * y + a[5] * w, u + a[11] * x + a[10] * y + a[9] * u + a[8] * w},
                                     {y + a[0] * w, u + a[4] * x + a[3] * y + a[2] * w, x + a[7] * w}});
}

Ideal twisted_cubic_family(const RingPtr& ring, const std::vector<Polynomial>& a) {
    return Ideal(ring, twisted_cubic_family_matrix(ring, a).minors(2));
}

Ideal twisted_cubic_family_symbolic(const Field& field) {
    std::vector<std::string> names{"x", "y", "u", "w"};
    for (int i = 1; i <= 12; ++i) names.push_back("a" + std::to_string(i));
    auto R = Ring::make(field, names);
    std::vector<Polynomial> a;
    for (int i = 1; i <= 12; ++i) a.push_back(var(R, "a" + std::to_string(i)));
    return twisted_cubic_family(R, a);
}

CubicDecomposition decompose_singular_cubic(const SingularCubicSection& sc) {
    const RingPtr& P = sc.Q.ring();
    const Field& F = P->field();
    if (P->nvars() != 3) throw std::invalid_argument("a plane cubic needs three variables");
    if (!same_ring(sc.s.ring(), P) || !same_ring(sc.t.ring(), P)) throw RingMismatch();
    if (sc.s.is_zero() || sc.t.is_zero() || !is_linear_form(sc.s) || !is_linear_form(sc.t))
        throw std::invalid_argument("the section must be cut by linear forms");
    if (sc.Q.is_zero() || !sc.Q.is_homogeneous() || sc.Q.degree() != 3) throw std::invalid_argument("Q must be a cubic form");

    // complete s, t to a basis with the first coordinate vector that works
    auto cs = coefficients(sc.s), ct = coefficients(sc.t);
    ScalarMatrix A(F, 3, 3);
    std::size_t r = 3;
    for (std::size_t k = 0; k < 3 && r == 3; ++k) {
        ScalarMatrix trial(F, 0, 3);
        trial.append_row(cs);
        trial.append_row(ct);
        std::vector<Scalar> e(3, F.zero());
        e[k] = F.one();
        trial.append_row(e);
        if (rank(trial) == 3) {
            r = k;
            A = trial;
        }
    }
    if (r == 3) throw std::invalid_argument("s and t are linearly dependent");

    // invert A through the reduced echelon form of [A | 1]
    ScalarMatrix aug(F, 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) aug(i, j) = A(i, j);
        aug(i, 3 + i) = F.one();
    }
    row_reduce(aug);

    auto N = Ring::make(F, {"S", "T", "R"});
    RingMap to_new(P, N);
    for (std::size_t v = 0; v < 3; ++v) {
        Polynomial img(N);
        for (std::size_t j = 0; j < 3; ++j)
            img += Polynomial::monomial(N, Monomial::var(j), aug(v, 3 + j));
        to_new.set(P->name(v), img);
    }
    Polynomial q = to_new(sc.Q);

    std::vector<Term> f1, f2, g2;
    for (const auto& t : q.terms()) {
        int ds = t.mono[0], dt = t.mono[1];
        if (ds + dt < 2) throw std::domain_error("Q is not in (s,t)^2: the section is not singular");
        if (ds >= 2) {
            f1.push_back({t.mono / Monomial::var(0, 2), t.coeff});
        } else if (dt >= 2) {
            g2.push_back({t.mono / Monomial::var(1, 2), F.neg(t.coeff)});
        } else {
            f2.push_back({t.mono / (Monomial::var(0) * Monomial::var(1)), t.coeff});
        }
    }
    RingMap back(N, P);
    back.set("S", sc.s).set("T", sc.t).set("R", Polynomial::variable(P, r));
    return {back(Polynomial(N, std::move(f1))), back(Polynomial(N, std::move(f2))), Polynomial(P),
            back(Polynomial(N, std::move(g2)))};
}

PolyMatrix matrix_factorization(const SingularCubicSection& sc, const CubicDecomposition& d) {
    return PolyMatrix::from_rows(sc.Q.ring(), {{d.g1 * sc.s + d.g2 * sc.t, d.f1 * sc.s + d.f2 * sc.t}, {sc.s, sc.t}});
}

PolyMatrix matrix_factorization(const SingularCubicSection& sc) {
    return matrix_factorization(sc, decompose_singular_cubic(sc));
}

RingPtr curve_ring(const RingPtr& plane) {
    auto names = plane->names();
    if (names.empty()) throw std::invalid_argument("empty plane ring");
    std::string u = unused_name(names, "u");
    names.insert(names.end() - 1, u);
    return Ring::make(plane->field(), names);
}

Ideal curve_from_factorization(const SingularCubicSection& sc, const CubicDecomposition& d) {
    auto C = curve_ring(sc.Q.ring());
    auto u = Polynomial::variable(C, C->nvars() - 2);
    auto up = [&](const Polynomial& p) { return p.map_to(C); };
    auto M = PolyMatrix::from_rows(C, {{up(sc.s), -up(d.g2), u + up(d.f2)}, {up(sc.t), u + up(d.g1), -up(d.f1)}});
    return Ideal(C, M.minors(2));
}

Ideal curve_from_factorization(const SingularCubicSection& sc) {
    return curve_from_factorization(sc, decompose_singular_cubic(sc));
}

CMCurvePresentation plane_projection(const Ideal& X, const RingPtr& plane) {
    const RingPtr& C = X.ring();
    std::vector<Polynomial> images;
    for (const auto& v : plane->names()) images.push_back(var(C, v));
    const std::string& u = C->name(C->nvars() - 2);
    return CMCurvePresentation(X, plane, std::move(images), {Polynomial::constant(C, 1), var(C, u)});
}

bool avoids_u_point(const Ideal& X) {
    const RingPtr& C = X.ring();
    const std::size_t u = C->index_of("u") ? *C->index_of("u") : C->nvars() - 2;
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < C->nvars(); ++k)
        if (k != u) others.push_back(Polynomial::variable(C, k));
    return saturate(X.with(others), Ideal::irrelevant(C)).is_unit();
}

bool ring_condition_check(const ModulePresentation& P, const Ideal& n) {
    if (P.relations.rows() != 2 || P.relations.cols() != 2) throw std::invalid_argument("expected a 2x2 presentation");
    return n.contains(P.relations(0, 0)) && n.contains(P.relations(0, 1));
}

RoundtripReport roundtrip_check(const SingularCubicSection& sc) {
    RoundtripReport rep;
    const RingPtr& P = sc.Q.ring();
    auto d = decompose_singular_cubic(sc);
    auto M = matrix_factorization(sc, d);
    Ideal X = curve_from_factorization(sc, d);
    rep.hilbert_ok = hilbert(X).polynomial_is({1, 3});
    rep.avoids_point = avoids_u_point(X);

    auto c = plane_projection(X, P);
    Ideal Qideal(P, {sc.Q});
    rep.image_matches_q = ideal_equal(schematic_image(c), Qideal);

    auto push = pushforward_presentation(c);
    rep.relations_match_factorization =
        Submodule(P, 2, columns_of(push.relations)).equals(Submodule(P, 2, columns_of(M)));
    // cokernel of O_D -> i_* O_X: kill the generator 1
    auto K = push.relations.hconcat(PolyMatrix(P, 2, 1, {Polynomial::constant(P, 1), Polynomial(P)}));
    Ideal ann = annihilator(ModulePresentation(K, push.generator_degrees, push.graded));
    rep.section_matches_annihilator = ideal_equal(ann + Qideal, Ideal(P, {sc.s, sc.t}));
    rep.ring_condition = ring_condition_check(ModulePresentation(M), Ideal(P, {sc.s, sc.t}));
    return rep;
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        Scalar c = field.is_rational()
                       ? field.from_int(std::uniform_int_distribution<long>(-9, 9)(rng))
                       : field.from_int(static_cast<long>(
                             std::uniform_int_distribution<std::uint64_t>(0, field.characteristic() - 1)(rng)));
        if (!nonzero || !field.is_zero(c)) return c;
    }
}

Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng, const std::vector<std::string>& vars) {
    std::vector<std::size_t> idx;
    if (vars.empty()) {
        for (std::size_t k = 0; k < ring->nvars(); ++k) idx.push_back(k);
    } else {
        for (const auto& v : vars) idx.push_back(ring->require(v));
    }
    Polynomial out(ring);
    for (auto k : idx) out += Polynomial::monomial(ring, Monomial::var(k), random_scalar(ring->field(), rng));
    return out;
}

SingularCubicSection random_singular_section(const RingPtr& plane, std::mt19937_64& rng) {
    const Field& F = plane->field();
    for (;;) {
        auto s = random_linear_form(plane, rng), t = random_linear_form(plane, rng);
        ScalarMatrix st(F, 0, plane->nvars());
        st.append_row(coefficients(s));
        st.append_row(coefficients(t));
        if (s.is_zero() || t.is_zero() || rank(st) < 2) continue;
        auto Q = s * s * random_linear_form(plane, rng) + s * t * random_linear_form(plane, rng) +
                 t * t * random_linear_form(plane, rng);
        if (!Q.is_zero()) return {Q, s, t};
    }
}

Ideal critical_locus(const Polynomial& f, const std::vector<std::string>& vars) {
    const RingPtr& R = f.ring();
    std::vector<Polynomial> gens{f};
    if (vars.empty()) {
        for (std::size_t k = 0; k < R->nvars(); ++k) gens.push_back(derivative(f, k));
    } else {
        for (const auto& v : vars) gens.push_back(derivative(f, R->require(v)));
    }
    return Ideal(R, std::move(gens));
}

Polynomial universal_ternary_cubic(const Field& field) {
    std::vector<std::string> names{"x", "y", "w"};
    for (int i = 0; i < 10; ++i) names.push_back("c" + std::to_string(i));
    auto R = Ring::make(field, names);
    Polynomial f(R);
    int i = 0;
    for (int a = 3; a >= 0; --a)
        for (int b = 3 - a; b >= 0; --b) {
            Monomial m = Monomial::var(0, a) * Monomial::var(1, b) * Monomial::var(2, 3 - a - b) *
                         Monomial::var(3 + static_cast<std::size_t>(i++));
            f += Polynomial::monomial(R, m, field.one());
        }
    return f;
}

PlanarFitting planar_image_fitting_pn(int n, const Polynomial& g, const Polynomial& f) {
    if (n < 4) throw std::invalid_argument("n must be at least 4");
    std::vector<std::string> names{"x", "y"};
    for (int i = 1; i <= n - 2; ++i) names.push_back("z" + std::to_string(i));
    names.push_back("w");
    auto R = Ring::make(g.ring()->field(), names);
    auto gg = g.map_to(R), ff = f.map_to(R);
    auto x = var(R, "x"), y = var(R, "y");
    const std::size_t cols = 2 * static_cast<std::size_t>(n - 2) + 2;
    PolyMatrix M(R, 2, cols);
    std::vector<Polynomial> pattern;
    for (int i = 0; i < n - 2; ++i) {
        auto zi = var(R, names[2 + i]);
        M(0, 2 * i) = zi;
        M(1, 2 * i + 1) = zi;
        pattern.push_back(zi * x);
        pattern.push_back(zi * y);
        for (int j = i; j < n - 2; ++j) pattern.push_back(zi * var(R, names[2 + j]));
    }
    M(0, cols - 2) = gg;
    M(1, cols - 2) = x;
    M(0, cols - 1) = ff;
    M(1, cols - 1) = y;
    pattern.push_back(y * gg - x * ff);
    Ideal I = fitting_ideal(ModulePresentation(M, {0, 1}, true));
    auto h = hilbert(I);
    return {std::move(I), std::move(h), Ideal(R, std::move(pattern))};
}

PolyMatrix fitting_flat_presentation(const Polynomial& beta, const Polynomial& f1, const Polynomial& g1,
                                     const Polynomial& g2) {
    const RingPtr& R = f1.ring();
    auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
    return PolyMatrix::from_rows(R, {{z, -(beta * f1 * g2), g1 * x + g2 * y, f1 * x}, {-beta, z + beta * g1, x, y}});
}

std::vector<Polynomial> fitting_flat_closed_form(const Polynomial& beta, const Polynomial& f1, const Polynomial& g1,
                                                 const Polynomial& g2) {
    const RingPtr& R = f1.ring();
    auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
    return {f1 * x * x - g1 * x * y - g2 * y * y, z * z + beta * g1 * z - beta * beta * f1 * g2,
            z * x + beta * g1 * x + beta * g2 * y, z * y + beta * f1 * x};
}

PolyMatrix quintic_family_presentation(const RingPtr& R, const Polynomial& t) {
    auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
    auto one = Polynomial::constant(R, 1);
    auto w = R->index_of("w") ? var(R, "w") : one;
    auto q = y * y + w * w;
    Polynomial zero(R);
    return PolyMatrix::from_rows(R, {{z, zero, -(t * x * q), zero, x * x, -(y * q)},
                                     {-t, z, zero, x * x, -y, zero},
                                     {zero, -t, z, -y, zero, x}});
}

std::vector<Polynomial> quintic_family_fitting_generators(const RingPtr& R) {
    std::vector<Polynomial> out;
    for (const char* g : {"z^3 - t^3*x*(y^2+1)", "z^2*x - t^2*y*(y^2+1)", "z*x^3 - t*y^2*(y^2+1)", "x^5 - y^3*(y^2+1)",
                          "(y*z - t*x^2)*x", "(y*z - t*x^2)*y", "(y*z - t*x^2)*z", "(y*z - t*x^2)*t"})
        out.push_back(parse_polynomial(R, g));
    return out;
}

DeformationSetup ps_obstruction_setup(const Field& field) {
    auto R = Ring::make(field, {"x", "y", "z", "A3", "A6", "a8", "b12", "c13", "c14", "c15", "c16"});
    auto phi = parse_matrix(R, 1, 4,
                            {"z*x + b12*A3*x - b12*A6*y", "z*y - b12*x*(x + a8)",
                             "z^2 + c16*z + b12*A3*z - b12^2*A6*(x + a8)",
                             "x^3 + A3*x*y - A6*y^2 + a8*x^2 + c13*x + c14*y + c15*z + c15*c16"});
    auto rel = parse_matrix(R, 4, 4,
                            {"-b12*(x + a8)", "z + c16", "-y", "-x*(x + a8) - c13",         //
                             "-z - c16 - b12*A3", "b12*A6", "x", "-c14 - A3*x + A6*y",      //
                             "y", "-x", "0", "-c15",                                        //
                             "0", "0", "b12", "z"});
    Ideal J(R, {parse_polynomial(R, "b12*c13"), parse_polynomial(R, "b12*c14"), parse_polynomial(R, "b12*c15"),
                parse_polynomial(R, "b12*c16")});
    return DeformationSetup(phi, rel, J, {"A3", "A6", "a8", "b12", "c13", "c14", "c15", "c16"}, 3);
}

PolyMatrix ps_expected_residue(const DeformationSetup& s) {
    return parse_matrix(s.ring, 1, 4, {"b12*c16*x^2", "0", "b12*c13*x + b12*c14*y + b12*c15*z", "b12*c14*x^2"});
}

namespace {

// Parses cells written in adapted symbols X, Y, Z, T3, T6 and expands them
// into the homogeneous coordinates of `R`.
PolyMatrix adapted_matrix(const RingPtr& R, std::size_t rows, std::size_t cols, const std::vector<std::string>& cells) {
    auto E = R->extended({"X", "Y", "Z", "T3", "T6"});
    RingMap expand(E, R);
    expand.set("X", parse_polynomial(R, "x + a2*w"))
        .set("Y", parse_polynomial(R, "y + a1*w"))
        .set("Z", parse_polynomial(R, "z + a11*w + a9*x + a10*y"))
        .set("T3", parse_polynomial(R, "a3*w + a4*y + a5*x"))
        .set("T6", parse_polynomial(R, "a6*w + a7*y"));
    return parse_matrix(E, rows, cols, cells).map(R, [&](const Polynomial& p) { return expand(p); });
}

std::vector<std::string> homogeneous_names(int last_c) {
    std::vector<std::string> names{"x", "y", "z", "w"};
    for (int i = 1; i <= 11; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("b12");
    for (int i = 13; i <= last_c; ++i) names.push_back("c" + std::to_string(i));
    return names;
}

std::vector<std::string> parameters(const std::vector<std::string>& names) {
    return std::vector<std::string>(names.begin() + 4, names.end());
}

} // namespace

DeformationSetup ps_obstruction_setup_homogeneous(const Field& field) {
    auto names = homogeneous_names(16);
    auto R = Ring::make(field, names);
    auto phi = adapted_matrix(R, 1, 4,
                              {"Z*X + b12*T3*X - b12*T6*Y", "Z*Y - b12*X*(X + a8*w)",
                               "Z^2 + c16*Z*w + b12*T3*Z - b12^2*T6*(X + a8*w)",
                               "X^3 + T3*X*Y - T6*Y^2 + a8*X^2*w + c13*X*w^2 + c14*Y*w^2 + c15*Z*w^2 + c15*c16*w^3"});
    auto rel = adapted_matrix(R, 4, 4,
                              {"-b12*(X + a8*w)", "Z + c16*w", "-Y", "-X*(X + a8*w) - c13*w^2",     //
                               "-Z - c16*w - b12*T3", "b12*T6", "X", "-c14*w^2 - T3*X + T6*Y",      //
                               "Y", "-X", "0", "-c15*w^2",                                          //
                               "0", "0", "b12", "Z"});
    Ideal J(R, {parse_polynomial(R, "b12*c13"), parse_polynomial(R, "b12*c14"), parse_polynomial(R, "b12*c15"),
                parse_polynomial(R, "b12*c16")});
    return DeformationSetup(phi, rel, J, parameters(names), 3);
}

DeformationSetup stable_sheaf_presentation(const Field& field, bool homogeneous) {
    if (!homogeneous) {
        auto R = Ring::make(field, {"x", "y", "z", "A3", "A6", "a8", "b12", "c13", "c14"});
        auto A = parse_matrix(R, 2, 4,
                              {"z", "-b12*A6*(x + a8)", "A3*x - A6*y + c14", "-x*(x + a8) - c13",  //
                               "-b12", "z + b12*A3", "x", "y"});
        auto B = parse_matrix(R, 4, 2,
                              {"-A3*x + A6*y - c14", "x*(x + a8) + c13",  //
                               "-x", "-y",                                //
                               "z", "b12*(x + a8)",                       //
                               "b12*A6", "z + b12*A3"});
        Ideal J(R, {parse_polynomial(R, "b12*c13"), parse_polynomial(R, "b12*c14")});
        return DeformationSetup(A, B, J, {"A3", "A6", "a8", "b12", "c13", "c14"}, 3);
    }
    auto names = homogeneous_names(14);
    auto R = Ring::make(field, names);
    auto A = adapted_matrix(R, 2, 4,
                            {"Z", "-b12*T6*(X + a8*w)", "T3*X - T6*Y + c14*w^2", "-X*(X + a8*w) - c13*w^2",  //
                             "-b12", "Z + b12*T3", "X", "Y"});
    auto B = adapted_matrix(R, 4, 2,
                            {"-T3*X + T6*Y - c14*w^2", "X*(X + a8*w) + c13*w^2",  //
                             "-X", "-Y",                                          //
                             "Z", "b12*(X + a8*w)",                               //
                             "b12*T6", "Z + b12*T3"});
    Ideal J(R, {parse_polynomial(R, "b12*c13"), parse_polynomial(R, "b12*c14")});
    return DeformationSetup(A, B, J, parameters(names), 3);
}

PolyMatrix stable_sheaf_expected_product(const DeformationSetup& s, bool homogeneous) {
    if (!homogeneous)
        return parse_matrix(s.ring, 2, 2,
                            {"-A6*b12*c13", "-A3*b12*c13 + a8*b12*c14 + b12*c14*x",  //
                             "b12*c14", "-b12*c13"});
    return adapted_matrix(s.ring, 2, 2,
                          {"-T6*b12*c13*w^2", "-T3*b12*c13*w^2 + b12*c14*w^2*(X + a8*w)",  //
                           "b12*c14*w^2", "-b12*c13*w^2"});
}

} // namespace cmc
