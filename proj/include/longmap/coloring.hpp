#pragma once

#include <utility>
#include <vector>

#include "longmap/quandle.hpp"
#include "longmap/tangle.hpp"
#include "longmap/tolerances.hpp"

namespace longmap {

/// Assignment of quandle elements to arcs 0..n of a tangle diagram.
class Coloring {
 public:
  /// Throws MixedQuandle if any color is not an element of `quandle`.
  Coloring(QuandleInstance quandle, std::vector<QElement> colors);

  const QuandleInstance& quandle() const noexcept { return quandle_; }
  const std::vector<QElement>& colors() const noexcept { return colors_; }
  const QElement& operator[](std::size_t arc) const { return colors_.at(arc); }
  std::size_t size() const noexcept { return colors_.size(); }

  /// Sphere points of a coloring over S^2_psi.
  std::vector<SpherePoint> sphere_points() const;
  /// Quaternions of a coloring over a conjugation class or GAlex.
  std::vector<UnitQuaternion> quaternions() const;

 private:
  QuandleInstance quandle_;
  std::vector<QElement> colors_;
};

struct Interval {
  double lo;
  double hi;
  bool contains(double v) const noexcept { return v > lo && v < hi; }
};

/// Open psi-interval in which the star coloring C_h of T(2,n) exists.
Interval torus_interval(int n, int h);
/// The same interval in theta = (2pi - psi) / 2.
Interval theta_interval(int n, int h);

/// Colors of the bridges fixed, remaining arcs filled in by the diagram's schedule.
/// Throws NoSchedule if the diagram has none and ArityMismatch on a wrong bridge count.
Coloring propagate(const TangleDiagram& d, const QuandleInstance& q, const std::vector<QElement>& bridge_colors);

/// Max over crossings i of d(color[i], color[i-1] *^{eps(i)} color[kappa(i)]).
double residual(const Coloring& c, const TangleDiagram& d);

/// Largest pairwise distance between colors; 0 for a constant coloring.
double spread(const Coloring& c);

/// Rotate every color of a sphere coloring about i by phi.
Coloring rotate_coloring(const Coloring& c, double phi);

/// Angle in [0, 2pi) of the rotation about the vertex taking the previous
/// star vertex to the next one, for a regular star n-gon stepping by h at latitude r.
double star_vertex_angle(int n, int h, double r);

/// Star polygon coloring C_h(q_i) = p_{hi} of torus2n(n, +1) over S^2_psi.
/// The arc of q_0 is colored i and the arc of q_1 lies on the half equator E
/// before the final rotation about i by base_rotation.
/// For sign -1 the same bridge colors are propagated through torus2n(n, -1),
/// giving the matched coloring of the mirror image.
Coloring star_polygon(int n, int h, double psi, double base_rotation = 0.0, int sign = +1);

/// Seed angles (beta_1, beta_2) of the two figure-eight colorings; psi in [2pi/3, 4pi/3].
std::pair<double, double> fig8_betas(double psi);

/// Figure-eight coloring with u_0 = i and u_2 = (cos beta, sin beta, 0), beta from fig8_betas.
Coloring fig8_coloring(double psi, int branch, double base_rotation = 0.0);

struct ColoringSeed {
  double beta;
};

struct SolvedColoring {
  ColoringSeed seed;
  double residual;
  Coloring coloring;
};

struct SolveResult {
  std::vector<SolvedColoring> solutions;
  /// Two accepted roots fell within two grid cells of each other; refine the grid.
  bool grid_too_coarse = false;
};

/// Finds the nontrivial seeds beta in (0, pi] such that bridges colored
/// (i, (cos beta, sin beta, 0)) propagate to a coloring of d over S^2_psi.
SolveResult solve_colorings(const TangleDiagram& d, double psi, int grid = tol::kDefaultGrid);

/// All colorings over the dihedral quandle R_m with arc 0 colored 0.
std::vector<Coloring> fox_colorings(const TangleDiagram& d, int m);

/// Angle of a sphere point on the half equator, measured from i, in [0, pi].
double seed_angle(const SpherePoint& u);

}  // namespace longmap
