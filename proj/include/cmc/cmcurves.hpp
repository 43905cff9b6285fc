#pragma once

// Curves with finite linear maps to projective space: pushforward
// presentations, Fitting images, singular cubic sections and their matrix
// factorizations, plus the explicit families used by the verification
// catalog.

#include <random>
#include <string>
#include <vector>

#include "cmc/deform.hpp"
#include "cmc/idealops.hpp"

namespace cmc {

/// A curve X with a linear map to the target space, given by the pullbacks of
/// the target coordinates.
struct CMCurvePresentation {
    Ideal source;
    RingPtr target;
    /// images[k] is the pullback of target variable k, a linear form.
    std::vector<Polynomial> images;
    /// Module generators of the pushforward; {1, u} when the source has u.
    std::vector<Polynomial> module_generators;

    CMCurvePresentation(Ideal X, RingPtr target_ring, std::vector<Polynomial> pullbacks,
                        std::vector<Polynomial> generators = {});
    /// X mapped isomorphically onto itself.
    static CMCurvePresentation identity(const Ideal& X);
    bool images_are_linear() const;
};

/// Relations over the target ring among the module generators of the
/// pushforward, from the graph of the map.
ModulePresentation pushforward_presentation(const CMCurvePresentation& c);

/// Fitt^0 of the pushforward.
Ideal fitting_image(const CMCurvePresentation& c);

/// Kernel of the induced map on coordinate rings, saturated when graded.
Ideal schematic_image(const CMCurvePresentation& c);

/// Hilbert polynomial of X minus that of its schematic image; must be
/// constant.
long plain_double_point_length(const CMCurvePresentation& c);

/// The 2x3 matrix of the twelve-parameter twisted cubic family over a ring
/// containing x, y, u, w and the entries of `a` (a[0] is a1).
PolyMatrix twisted_cubic_family_matrix(const RingPtr& ring, const std::vector<Polynomial>& a);
Ideal twisted_cubic_family(const RingPtr& ring, const std::vector<Polynomial>& a);
/// k[x, y, u, w, a1..a12] with the family over it.
Ideal twisted_cubic_family_symbolic(const Field& field);

/// A cubic form together with a section s = t = 0 through a singular point.
struct SingularCubicSection {
    Polynomial Q;
    Polynomial s;
    Polynomial t;
};

/// Linear forms with Q = s^2 f1 + s t (f2 - g1) - t^2 g2.
struct CubicDecomposition {
    Polynomial f1, f2, g1, g2;
};

/// Deterministic decomposition with g1 = 0; throws std::domain_error when Q is
/// not in (s, t)^2 and std::invalid_argument when s, t are dependent.
CubicDecomposition decompose_singular_cubic(const SingularCubicSection& sc);

/// [[g1 s + g2 t, f1 s + f2 t], [s, t]], whose determinant is -Q.
PolyMatrix matrix_factorization(const SingularCubicSection& sc);
PolyMatrix matrix_factorization(const SingularCubicSection& sc, const CubicDecomposition& d);

/// The cubic ring with u inserted before its last variable.
RingPtr curve_ring(const RingPtr& plane);

/// Maximal minors of [[s, -g2, u + f2], [t, u + g1, -f1]].
Ideal curve_from_factorization(const SingularCubicSection& sc);
Ideal curve_from_factorization(const SingularCubicSection& sc, const CubicDecomposition& d);

/// Projection of a curve in P^3 away from the u-point onto the plane.
CMCurvePresentation plane_projection(const Ideal& X, const RingPtr& plane);

/// (I + (x, y, w) : m^inf) = (1): X misses the point where only u is nonzero.
bool avoids_u_point(const Ideal& X);

/// Both first-row entries of a 2x2 presentation lie in n.
bool ring_condition_check(const ModulePresentation& P, const Ideal& n);

struct RoundtripReport {
    bool hilbert_ok = false;
    bool avoids_point = false;
    bool image_matches_q = false;
    bool section_matches_annihilator = false;
    bool relations_match_factorization = false;
    bool ring_condition = false;
    bool all() const {
        return hilbert_ok && avoids_point && image_matches_q && section_matches_annihilator &&
               relations_match_factorization && ring_condition;
    }
};

/// From (Q, s, t) to the curve and back to the image cubic and the section.
RoundtripReport roundtrip_check(const SingularCubicSection& sc);

/// A seeded random cubic in (s, t)^2 with independent random s, t, over a
/// three-variable ring.
SingularCubicSection random_singular_section(const RingPtr& plane, std::mt19937_64& rng);
/// A random nonzero scalar of the ring's field (small integers over Q).
Scalar random_scalar(const Field& field, std::mt19937_64& rng, bool nonzero = false);
/// A random linear form in the listed variables (all variables when empty).
Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng, const std::vector<std::string>& vars = {});

/// (f, df/dv for v in vars); every variable when vars is empty.
Ideal critical_locus(const Polynomial& f, const std::vector<std::string>& vars = {});

/// The cubic with ten coefficient symbols c0..c9 over k[x, y, w, c0..c9].
Polynomial universal_ternary_cubic(const Field& field);

/// Fitt^0 of [[z1, 0, .., z_{n-2}, 0, g, f], [0, z1, .., 0, z_{n-2}, x, y]]
/// over k[x, y, z1..z_{n-2}, w].
struct PlanarFitting {
    Ideal ideal;
    HilbertData hilbert;
    /// (z_i^2, z_i z_j, z_i x, z_i y, y g - x f).
    Ideal pattern;
};
PlanarFitting planar_image_fitting_pn(int n, const Polynomial& g, const Polynomial& f);

/// The two-generator presentation [[z, -b f1 g2, g1 x + g2 y, f1 x],
/// [-b, z + b g1, x, y]] of a curve projected from the u-point with z = b u.
PolyMatrix fitting_flat_presentation(const Polynomial& beta, const Polynomial& f1, const Polynomial& g1,
                                     const Polynomial& g2);
/// (Q, F1, F2, F3) with Q = f1 x^2 - g1 x y - g2 y^2.
std::vector<Polynomial> fitting_flat_closed_form(const Polynomial& beta, const Polynomial& f1, const Polynomial& g1,
                                                 const Polynomial& g2);

/// The three-generator presentation of the genus-two family in z = t u over a
/// ring with x, y, z (and w for the graded version, generator degrees 0,1,2).
PolyMatrix quintic_family_presentation(const RingPtr& ring, const Polynomial& t);
/// Eight generators of its Fitting ideal in k[x, y, z, t].
std::vector<Polynomial> quintic_family_fitting_generators(const RingPtr& ring);

/// phi R over k[x, y, z, A3, A6, a8, b12, c13..c16] with the four-element
/// obstruction ideal, in affine coordinates adapted to the family.
DeformationSetup ps_obstruction_setup(const Field& field);
/// The expected quadratic residue of ps_obstruction_setup as a 1x4 matrix.
PolyMatrix ps_expected_residue(const DeformationSetup& s);
/// The same family written in the original homogeneous coordinates.
DeformationSetup ps_obstruction_setup_homogeneous(const Field& field);

/// A B over k[x, y, z, A3, A6, a8, b, c13, c14] (affine) or over
/// k[x, y, z, w, a1..a11, b12, c13, c14] (homogeneous).
DeformationSetup stable_sheaf_presentation(const Field& field, bool homogeneous = false);
/// The expected 2x2 product for stable_sheaf_presentation.
PolyMatrix stable_sheaf_expected_product(const DeformationSetup& s, bool homogeneous = false);

} // namespace cmc
