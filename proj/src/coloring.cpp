#include "longmap/coloring.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "longmap/errors.hpp"

namespace longmap {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 star_vertex(int n, int index, double r) {
  const double s = std::sqrt(std::max(0.0, 1.0 - r * r));
  const double a = 2.0 * M_PI * static_cast<double>(index) / static_cast<double>(n);
  return {s * std::cos(a), s * std::sin(a), r};
}

void check_torus_params(int n, int h) {
  if (n < 3 || n % 2 == 0) throw BadParameter("n must be odd and >= 3");
  const int k = (n - 1) / 2;
  if (h < 1 || h > k) throw BadParameter("h must lie in 1.." + std::to_string(k));
}

}  // namespace

Coloring::Coloring(QuandleInstance quandle, std::vector<QElement> colors)
    : quandle_(std::move(quandle)), colors_(std::move(colors)) {
  for (const auto& c : colors_) {
    if (!(c.quandle() == quandle_)) {
      throw MixedQuandle("Coloring: color from " + c.quandle().name() + " in a coloring over " + quandle_.name());
    }
  }
}

std::vector<SpherePoint> Coloring::sphere_points() const {
  std::vector<SpherePoint> out;
  out.reserve(colors_.size());
  for (const auto& c : colors_) out.push_back(c.sphere_point());
  return out;
}

std::vector<UnitQuaternion> Coloring::quaternions() const {
  std::vector<UnitQuaternion> out;
  out.reserve(colors_.size());
  for (const auto& c : colors_) out.push_back(c.quaternion());
  return out;
}

Interval torus_interval(int n, int h) {
  check_torus_params(n, h);
  const double nn = static_cast<double>(n);
  return {(nn - 2.0 * h) * M_PI / nn, (nn + 2.0 * h) * M_PI / nn};
}

Interval theta_interval(int n, int h) {
  const Interval psi = torus_interval(n, h);
  // theta = (2pi - psi) / 2 reverses the endpoints.
  return {(2.0 * M_PI - psi.hi) / 2.0, (2.0 * M_PI - psi.lo) / 2.0};
}

Coloring propagate(const TangleDiagram& d, const QuandleInstance& q, const std::vector<QElement>& bridge_colors) {
  if (!d.has_schedule()) throw NoSchedule("diagram has no bridge schedule");
  if (bridge_colors.size() != d.bridges().size()) {
    throw ArityMismatch("expected " + std::to_string(d.bridges().size()) + " bridge colors, got " +
                        std::to_string(bridge_colors.size()));
  }
  const auto& code = d.code();
  std::vector<QElement> colors(static_cast<std::size_t>(code.arcs()), bridge_colors.front());
  for (std::size_t b = 0; b < d.bridges().size(); ++b) {
    colors[static_cast<std::size_t>(d.bridges()[b])] = bridge_colors[b];
  }
  for (const auto& step : d.schedule()) {
    const auto& over = colors[static_cast<std::size_t>(code.over_arc(step.crossing))];
    const int sign = code.sign(step.crossing);
    if (step.arc == step.crossing) {
      colors[static_cast<std::size_t>(step.arc)] =
          op_signed(q, colors[static_cast<std::size_t>(step.crossing - 1)], over, sign);
    } else {
      colors[static_cast<std::size_t>(step.arc)] =
          op_signed(q, colors[static_cast<std::size_t>(step.crossing)], over, -sign);
    }
  }
  return Coloring(q, std::move(colors));
}

double residual(const Coloring& c, const TangleDiagram& d) {
  const auto& code = d.code();
  if (static_cast<int>(c.size()) != code.arcs()) {
    throw ArityMismatch("coloring has " + std::to_string(c.size()) + " colors for " + std::to_string(code.arcs()) +
                        " arcs");
  }
  double worst = 0.0;
  for (int i = 1; i <= code.crossings(); ++i) {
    const QElement expected = op_signed(c.quandle(), c[static_cast<std::size_t>(i - 1)],
                                        c[static_cast<std::size_t>(code.over_arc(i))], code.sign(i));
    worst = std::max(worst, element_distance(c[static_cast<std::size_t>(i)], expected));
  }
  return worst;
}

double spread(const Coloring& c) {
  double worst = 0.0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) worst = std::max(worst, element_distance(c[a], c[b]));
  }
  return worst;
}

Coloring rotate_coloring(const Coloring& c, double phi) {
  std::vector<QElement> colors;
  colors.reserve(c.size());
  for (const auto& e : c.colors()) {
    colors.push_back(QElement::unchecked(c.quandle(), rotate(e.sphere_point(), phi, SpherePoint::i())));
  }
  return Coloring(c.quandle(), std::move(colors));
}

double star_vertex_angle(int n, int h, double r) {
  const Vec3 p0 = star_vertex(n, 0, r);
  const Vec3 prev = star_vertex(n, -h, r);
  const Vec3 next = star_vertex(n, h, r);
  const Vec3 a = sub(prev, scale(p0, dot(prev, p0)));
  const Vec3 b = sub(next, scale(p0, dot(next, p0)));
  double angle = std::atan2(dot(p0, cross(a, b)), dot(a, b));
  if (angle < 0.0) angle += 2.0 * M_PI;
  return angle;
}

Coloring star_polygon(int n, int h, double psi, double base_rotation, int sign) {
  const Interval iv = torus_interval(n, h);
  if (!iv.contains(psi)) {
    throw OutOfInterval("star polygon (n=" + std::to_string(n) + ", h=" + std::to_string(h) +
                        ") needs psi strictly inside its interval");
  }
  // The vertex angle increases from (n-2h)pi/n at r = -1 to (n+2h)pi/n at r = 1.
  double lo = -1.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (star_vertex_angle(n, h, mid) < psi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r = 0.5 * (lo + hi);
  if (std::abs(star_vertex_angle(n, h, r) - psi) > tol::kCompare) {
    throw NoConvergence("star polygon latitude did not converge");
  }

  // Frame taking p_0 to i and p_h into the half equator.
  const Vec3 e1 = star_vertex(n, 0, r);
  const Vec3 ph = star_vertex(n, h, r);
  const SpherePoint e2p = SpherePoint::from_vector(sub(ph, scale(e1, dot(ph, e1))));
  const Vec3 e2 = e2p.vec();
  const Vec3 e3 = cross(e1, e2);

  const auto q = QuandleInstance::sphere(psi);
  std::vector<QElement> colors;
  for (int arc = 0; arc <= n; ++arc) {
    const int vertex = (h * torus_q_of_arc(n, arc)) % n;
    const Vec3 p = star_vertex(n, vertex, r);
    const SpherePoint aligned = SpherePoint::from_vector(dot(p, e1), dot(p, e2), dot(p, e3));
    colors.push_back(QElement::unchecked(q, rotate(aligned, base_rotation, SpherePoint::i())));
  }
  // Arc 0 is exactly the basepoint.
  colors.front() = QElement::unchecked(q, SpherePoint::i());
  if (sign < 0) {
    const int k = (n - 1) / 2;
    return propagate(torus2n(n, -1), q, {colors[0], colors[static_cast<std::size_t>(k + 1)]});
  }
  return Coloring(q, std::move(colors));
}

std::pair<double, double> fig8_betas(double psi) {
  constexpr double kLo = 2.0 * M_PI / 3.0;
  constexpr double kHi = 4.0 * M_PI / 3.0;
  if (psi < kLo - tol::kEndpoint || psi > kHi + tol::kEndpoint) {
    throw OutOfInterval("figure-eight colorings are trivial for psi outside [2pi/3, 4pi/3]");
  }
  const double c = std::cos(psi);
  // 4c^2 - 4c - 3 = (2c - 3)(2c + 1) >= 0 on the interval. 2c + 1 is written as a
  // product of sines about the nearer endpoint e so it vanishes exactly there.
  const double e = psi <= M_PI ? kLo : kHi;
  // Within the endpoint slack psi is taken to be the endpoint itself: beta grows like
  // sqrt(psi - e), so one ulp of psi would otherwise move beta by about 1e-8.
  const double two_c_plus_1 =
      std::abs(psi - e) <= tol::kEndpoint ? 0.0 : -4.0 * std::sin(0.5 * (psi + e)) * std::sin(0.5 * (psi - e));
  const double root = std::sqrt(std::max(0.0, (2.0 * c - 3.0) * two_c_plus_1));
  const double den = 2.0 * (c - 1.0);
  const double beta1 = M_PI - std::acos(std::clamp((-1.0 + root) / den, -1.0, 1.0));
  const double beta2 = std::acos(std::clamp((1.0 + root) / den, -1.0, 1.0));
  return {beta1, beta2};
}

Coloring fig8_coloring(double psi, int branch, double base_rotation) {
  if (branch != 1 && branch != 2) throw BadParameter("figure-eight branch must be 1 or 2");
  const auto [b1, b2] = fig8_betas(psi);
  const double beta = branch == 1 ? b1 : b2;
  const auto q = QuandleInstance::sphere(psi);
  const QElement u0 = QElement::unchecked(q, SpherePoint::i());
  const QElement u2 = QElement::unchecked(q, SpherePoint::from_vector(std::cos(beta), std::sin(beta), 0.0));
  const QElement u1 = op(q, u0, u2);
  const QElement u3 = op(q, u0, u1);
  const QElement u4 = op_inv(q, u3, u1);
  Coloring c(q, {u0, u1, u2, u3, u4});
  const double res = residual(c, fig8());
  if (res > tol::kColoring) {
    throw ResidualTooLarge("figure-eight closed form leaves residual " + std::to_string(res));
  }
  return base_rotation == 0.0 ? c : rotate_coloring(c, base_rotation);
}

double seed_angle(const SpherePoint& u) { return std::atan2(std::hypot(u.y(), u.z()), u.x()); }

namespace {

struct SeedProblem {
  const TangleDiagram& d;
  QuandleInstance q;

  Coloring coloring(double beta) const {
    std::vector<QElement> bridges{
        QElement::unchecked(q, SpherePoint::i()),
        QElement::unchecked(q, SpherePoint::from_vector(std::cos(beta), std::sin(beta), 0.0)),
    };
    return propagate(d, q, bridges);
  }

  double defect(const Coloring& c) const {
    const auto& code = d.code();
    double worst = 0.0;
    for (int i : d.residual_crossings()) {
      const QElement expected = op_signed(q, c[static_cast<std::size_t>(i - 1)],
                                          c[static_cast<std::size_t>(code.over_arc(i))], code.sign(i));
      worst = std::max(worst, element_distance(c[static_cast<std::size_t>(i)], expected));
    }
    return worst;
  }

  double defect(double beta) const { return defect(coloring(beta)); }
};

// Golden-section search for the minimum of a unimodal function on [a, b].
template <class F>
double golden_minimum(F&& f, double a, double b, double width) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a);
  double x2 = a + g * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && b - a > width; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

SolveResult solve_colorings(const TangleDiagram& d, double psi, int grid) {
  if (!d.has_schedule()) throw NoSchedule("diagram has no bridge schedule");
  if (d.bridges().size() != 2) throw NoSchedule("the seed solver needs a 2-bridge schedule");
  if (grid < 3) throw BadParameter("grid must have at least 3 points");

  const SeedProblem problem{d, QuandleInstance::sphere(psi)};
  const double step = M_PI / static_cast<double>(grid - 1);
  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) values[static_cast<std::size_t>(j)] = problem.defect(step * j);

  std::vector<SolvedColoring> found;
  for (int j = 1; j < grid; ++j) {
    const double v = values[static_cast<std::size_t>(j)];
    const bool left_ok = v <= values[static_cast<std::size_t>(j - 1)];
    const bool right_ok = j + 1 >= grid || v <= values[static_cast<std::size_t>(j + 1)];
    if (!left_ok || !right_ok) continue;
    const double a = step * (j - 1);
    const double b = std::min(M_PI, step * (j + 1));
    const double beta = golden_minimum([&](double x) { return problem.defect(x); }, a, b, tol::kSeedRefine);
    if (beta < tol::kSeedDedup) continue;
    Coloring c = problem.coloring(beta);
    const double res = residual(c, d);
    if (res > tol::kColoring || spread(c) <= tol::kMinSpread) continue;
    found.push_back({ColoringSeed{beta}, res, std::move(c)});
  }

  std::sort(found.begin(), found.end(),
            [](const SolvedColoring& x, const SolvedColoring& y) { return x.seed.beta < y.seed.beta; });
  SolveResult out;
  for (auto& s : found) {
    if (!out.solutions.empty()) {
      auto& last = out.solutions.back();
      const double gap = s.seed.beta - last.seed.beta;
      if (gap <= tol::kSeedDedup) {
        if (s.residual < last.residual) last = std::move(s);
        continue;
      }
      if (gap < 2.0 * step) out.grid_too_coarse = true;
    }
    out.solutions.push_back(std::move(s));
  }
  return out;
}

std::vector<Coloring> fox_colorings(const TangleDiagram& d, int m) {
  if (m < 3) throw BadParameter("Fox colorings need m >= 3");
  if (!d.has_schedule()) throw NoSchedule("diagram has no bridge schedule");
  const auto q = QuandleInstance::dihedral(m);
  const std::size_t free_bridges = d.bridges().size() - 1;
  std::vector<int> digits(free_bridges, 0);
  std::vector<Coloring> out;
  for (;;) {
    std::vector<QElement> bridges{QElement::unchecked(q, 0)};
    for (int v : digits) bridges.push_back(QElement::unchecked(q, v));
    Coloring c = propagate(d, q, bridges);
    if (residual(c, d) == 0.0) out.push_back(std::move(c));
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == m) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

}  // namespace longmap
