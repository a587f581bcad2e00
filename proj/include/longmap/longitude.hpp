#pragma once

#include <vector>

#include "longmap/coloring.hpp"
#include "longmap/quaternion.hpp"
#include "longmap/tangle.hpp"

namespace longmap {

/// Element of the longitudinal group: the circle {e^{phi a}} about the
/// basepoint axis a (a = i for every coloring built by this library).
struct LongitudeValue {
  UnitQuaternion q;
  /// In (-pi, pi].
  double phi = 0.0;
};

/// Convert a coloring over S^2_psi to the isomorphic conjugation class
/// C_theta, theta = pi - psi/2. ConjClass colorings are returned unchanged.
Coloring to_conj_class(const Coloring& c);

/// Angle of L about `axis` via the two-argument arctangent. Throws NotInLambda
/// if L has a component orthogonal to the axis beyond 1e-9.
double longitude_angle(const UnitQuaternion& L, const SpherePoint& axis = SpherePoint::i());
double longitude_angle(const LongitudeValue& L);

/// Evaluates x_0^{-w} x_{kappa 1}^{eps 1} ... x_{kappa n}^{eps n} on the colors.
/// Sphere colorings are converted first. Throws NotInLambda if the result does
/// not commute with the basepoint, which happens only for an invalid coloring.
LongitudeValue eval_word(const TangleDiagram& d, const Coloring& c);

/// Second coordinates g_0..g_n of the unique lift of c to Eis(SU(2), x) with
/// g_0 = 1, built by g_i = x^{-eps i} g_{i-1} u_{kappa i}^{eps i}.
std::vector<UnitQuaternion> galex_lift_path(const TangleDiagram& d, const Coloring& c);
/// g_n, the terminal color of the lift to GAlex(SU(2), f_x).
UnitQuaternion galex_lift(const TangleDiagram& d, const Coloring& c);

/// -cos(2n theta) + sin(2n theta) i, or its inverse for the mirror image.
/// Throws OutOfInterval if theta admits no nontrivial coloring.
LongitudeValue t2n_closed_form(int n, double theta, bool mirror);

/// (cos 4t - cos 2t - 1) +- sqrt(-1 + 2cos 4t - 4cos 2t) sin 2t i for t in [pi/3, 2pi/3].
/// `branch` selects the sign belonging to fig8_coloring(2pi - 2t, branch).
LongitudeValue fig8_closed_form(double theta, int branch);
/// Sign of the imaginary part carried by each figure-eight branch.
int fig8_branch_sign(int branch);

struct QnCheck {
  /// q^n for q = q_0 q_1.
  UnitQuaternion qn;
  /// q_0^{-2n} q^n.
  UnitQuaternion longitude;
};

/// For a nontrivial coloring of torus2n(n, +1): returns q^n, which must be -1,
/// together with q_0^{-2n} q^n. Throws NotMinusOne if q^n is not -1.
QnCheck qn_check(int n, const Coloring& c);

}  // namespace longmap
