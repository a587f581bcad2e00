#include "longmap/longitude.hpp"

#include <cmath>

#include "longmap/errors.hpp"
#include "longmap/tolerances.hpp"

namespace longmap {

namespace {

UnitQuaternion signed_power(const UnitQuaternion& q, int sign) { return sign > 0 ? q : q.inverse(); }

double wrap_angle(double phi) {
  phi = std::remainder(phi, 2.0 * M_PI);  // [-pi, pi]
  return phi <= -M_PI ? phi + 2.0 * M_PI : phi;
}

}  // namespace

Coloring to_conj_class(const Coloring& c) {
  if (c.quandle().is<ConjClassQuandle>()) return c;
  if (!c.quandle().is<SphereQuandle>()) {
    throw BadParameter("longitude evaluation needs a Sphere or ConjClass coloring, got " + c.quandle().name());
  }
  const double theta = M_PI - c.quandle().as<SphereQuandle>().psi / 2.0;
  const auto q = QuandleInstance::conj_class(theta);
  std::vector<QElement> colors;
  colors.reserve(c.size());
  for (const auto& e : c.colors()) colors.push_back(QElement::unchecked(q, qexp(theta, e.sphere_point())));
  return Coloring(q, std::move(colors));
}

double longitude_angle(const UnitQuaternion& L, const SpherePoint& axis) {
  const double along = L.b() * axis.x() + L.c() * axis.y() + L.d() * axis.z();
  const double ox = L.b() - along * axis.x();
  const double oy = L.c() - along * axis.y();
  const double oz = L.d() - along * axis.z();
  if (std::sqrt(ox * ox + oy * oy + oz * oz) > tol::kCompare) {
    throw NotInLambda("longitude value is not in the circle group about the basepoint axis");
  }
  return wrap_angle(std::atan2(along, L.a()));
}

double longitude_angle(const LongitudeValue& L) { return longitude_angle(L.q); }

namespace {

SpherePoint basepoint_axis(const UnitQuaternion& x) {
  const AxisAngle log = qlog(x);
  if (!log.axis_defined) throw BadParameter("basepoint is +-1; its centralizer is all of SU(2)");
  return log.axis;
}

}  // namespace

LongitudeValue eval_word(const TangleDiagram& d, const Coloring& coloring) {
  const auto& code = d.code();
  if (static_cast<int>(coloring.size()) != code.arcs()) {
    throw ArityMismatch("coloring has " + std::to_string(coloring.size()) + " colors for " +
                        std::to_string(code.arcs()) + " arcs");
  }
  const Coloring c = to_conj_class(coloring);
  const UnitQuaternion x = c[0].quaternion();
  UnitQuaternion L = qpow(x, -code.writhe());
  for (int i = 1; i <= code.crossings(); ++i) {
    L = L * signed_power(c[static_cast<std::size_t>(code.over_arc(i))].quaternion(), code.sign(i));
  }
  const SpherePoint axis = basepoint_axis(x);
  if (!centralizer_angle_check(L, x, tol::kCompare)) {
    throw NotInLambda("longitude does not commute with the basepoint; the coloring is not valid");
  }
  return {L, longitude_angle(L, axis)};
}

std::vector<UnitQuaternion> galex_lift_path(const TangleDiagram& d, const Coloring& coloring) {
  const auto& code = d.code();
  if (static_cast<int>(coloring.size()) != code.arcs()) {
    throw ArityMismatch("coloring has " + std::to_string(coloring.size()) + " colors for " +
                        std::to_string(code.arcs()) + " arcs");
  }
  const Coloring c = to_conj_class(coloring);
  const UnitQuaternion x = c[0].quaternion();
  std::vector<UnitQuaternion> g{UnitQuaternion::identity()};
  for (int i = 1; i <= code.crossings(); ++i) {
    const int e = code.sign(i);
    const UnitQuaternion& u = c[static_cast<std::size_t>(code.over_arc(i))].quaternion();
    // (a, g) *^e (b, h) = (a *^e b, x^{-e} g b^e)
    g.push_back(signed_power(x, -e) * g.back() * signed_power(u, e));
  }
  return g;
}

UnitQuaternion galex_lift(const TangleDiagram& d, const Coloring& c) { return galex_lift_path(d, c).back(); }

LongitudeValue t2n_closed_form(int n, double theta, bool mirror) {
  if (n < 3 || n % 2 == 0) throw BadParameter("n must be odd and >= 3");
  const Interval widest = theta_interval(n, (n - 1) / 2);
  if (!widest.contains(theta)) {
    throw OutOfInterval("T(2," + std::to_string(n) + ") has no nontrivial coloring at this theta");
  }
  const double a = 2.0 * n * theta;
  const double im = mirror ? -std::sin(a) : std::sin(a);
  const auto q = UnitQuaternion::from_components(-std::cos(a), im, 0.0, 0.0);
  return {q, longitude_angle(q)};
}

int fig8_branch_sign(int branch) {
  if (branch != 1 && branch != 2) throw BadParameter("figure-eight branch must be 1 or 2");
  // Matched against eval_word on fig8_coloring at theta = 0.45 pi.
  return branch == 1 ? -1 : +1;
}

LongitudeValue fig8_closed_form(double theta, int branch) {
  const int sign = fig8_branch_sign(branch);
  if (theta < M_PI / 3.0 - tol::kEndpoint || theta > 2.0 * M_PI / 3.0 + tol::kEndpoint) {
    throw OutOfInterval("the figure-eight knot has no nontrivial coloring at this theta");
  }
  const double c2 = std::cos(2.0 * theta);
  const double c4 = std::cos(4.0 * theta);
  double disc = -1.0 + 2.0 * c4 - 4.0 * c2;
  if (disc < 0.0) {
    if (disc < -1e-12) throw NegativeDiscriminant("negative discriminant: theta is outside the colorable range");
    disc = 0.0;
  }
  const double re = c4 - c2 - 1.0;
  const double im = sign * std::sqrt(disc) * std::sin(2.0 * theta);
  const auto q = UnitQuaternion::from_components(re, im, 0.0, 0.0);
  return {q, longitude_angle(q)};
}

QnCheck qn_check(int n, const Coloring& coloring) {
  const Coloring c = to_conj_class(coloring);
  if (static_cast<int>(c.size()) != n + 1) throw ArityMismatch("coloring does not match torus2n(n)");
  const UnitQuaternion q0 = c[static_cast<std::size_t>(torus_arc_of_q(n, 0))].quaternion();
  const UnitQuaternion q1 = c[static_cast<std::size_t>(torus_arc_of_q(n, 1))].quaternion();
  const UnitQuaternion qn = qpow(q0 * q1, n);
  if (chordal_distance(qn, UnitQuaternion::minus_one()) > tol::kCompare) {
    throw NotMinusOne("q^n is not -1; the coloring is trivial or broken");
  }
  return {qn, qpow(q0, -2L * n) * qn};
}

}  // namespace longmap
