#include "longmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "longmap/coloring.hpp"
#include "longmap/errors.hpp"
#include "longmap/longitude.hpp"
#include "longmap/quandle.hpp"

namespace longmap {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// theta samples strictly inside (lo, hi), `count` of them, keeping `margin` from each end.
std::vector<double> inner_samples(double lo, double hi, int count, double margin) {
  std::vector<double> out;
  const double a = lo + margin;
  const double b = hi - margin;
  for (int j = 0; j < count; ++j) out.push_back(a + (b - a) * (j + 0.5) / count);
  return out;
}

VerifyReport axioms_suite() {
  VerifyReport r{"axioms", {}};
  ElementSampler s(7);
  const std::vector<QuandleInstance> instances{
      QuandleInstance::sphere(2.0),
      QuandleInstance::conj_class(1.1),
      QuandleInstance::dihedral(9),
      QuandleInstance::galex(s.unit_quaternion()),
      QuandleInstance::eis(qexp(0.8, s.sphere_point())),
  };
  for (const auto& q : instances) {
    r.lines.push_back({q.name() + " (500 triples)", axiom_check(q, 500, 11).max_violation(), 1e-10});
  }
  for (int m : {3, 5, 7, 13}) {
    const auto q = QuandleInstance::dihedral(m);
    r.lines.push_back({q.name() + " exhaustive", axiom_check_exhaustive(q).max_violation(), 0.0});
  }
  return r;
}

VerifyReport torus_suite() {
  VerifyReport r{"torus", {}};
  for (int n : {3, 5, 7, 9}) {
    for (int h = 1; h <= (n - 1) / 2; ++h) {
      const Interval iv = theta_interval(n, h);
      const TangleDiagram d = torus2n(n, +1);
      for (double theta : inner_samples(iv.lo, iv.hi, 5, 0.02)) {
        const Coloring c = star_polygon(n, h, 2.0 * M_PI - 2.0 * theta);
        const LongitudeValue L = eval_word(d, c);
        const double dev = chordal_distance(L.q, t2n_closed_form(n, theta, false).q);
        r.lines.push_back({fmt("n=%.0f h=%.0f theta=%.6f", n, h, theta), dev, 1e-8});
      }
    }
  }
  return r;
}

VerifyReport fig8_suite() {
  VerifyReport r{"fig8", {}};
  const TangleDiagram d = fig8();
  for (int b = 1; b <= 2; ++b) {
    double worst = 0.0;
    for (double theta : inner_samples(M_PI / 3.0, 2.0 * M_PI / 3.0, 100, 0.02)) {
      const Coloring c = fig8_coloring(2.0 * M_PI - 2.0 * theta, b);
      worst = std::max(worst, chordal_distance(eval_word(d, c).q, fig8_closed_form(theta, b).q));
    }
    r.lines.push_back({fmt("branch %.0f, 100 theta samples", b), worst, 1e-8});
    const Coloring mid = fig8_coloring(M_PI, b);
    r.lines.push_back({fmt("branch %.0f at theta=pi/2 equals 1", b),
                       chordal_distance(eval_word(d, mid).q, UnitQuaternion::identity()), 1e-9});
  }
  return r;
}

VerifyReport lift_suite() {
  VerifyReport r{"lift", {}};
  auto gap = [](const TangleDiagram& d, const Coloring& c) {
    return chordal_distance(galex_lift(d, c), eval_word(d, c).q);
  };
  double torus_worst = 0.0;
  for (int n : {3, 5, 7, 9}) {
    for (int sign : {+1, -1}) {
      const TangleDiagram d = torus2n(n, sign);
      for (int h = 1; h <= (n - 1) / 2; ++h) {
        const Interval iv = theta_interval(n, h);
        for (double theta : inner_samples(iv.lo, iv.hi, 5, 0.02)) {
          torus_worst = std::max(torus_worst, gap(d, star_polygon(n, h, 2.0 * M_PI - 2.0 * theta, 0.3, sign)));
        }
      }
    }
  }
  r.lines.push_back({"torus star colorings and mirrors", torus_worst, 1e-9});

  double fig8_worst = 0.0;
  const TangleDiagram f = fig8();
  for (double theta : inner_samples(M_PI / 3.0, 2.0 * M_PI / 3.0, 40, 0.02)) {
    for (int b = 1; b <= 2; ++b) fig8_worst = std::max(fig8_worst, gap(f, fig8_coloring(2.0 * M_PI - 2.0 * theta, b)));
  }
  r.lines.push_back({"figure-eight colorings", fig8_worst, 1e-9});

  double solver_worst = 0.0;
  int found = 0;
  for (double psi : {2.2, 2.5, 2.9, 3.3, 3.7, 4.1}) {
    for (const auto& d : {torus2n(5), torus2n(7), fig8()}) {
      for (const auto& s : solve_colorings(d, psi, 400).solutions) {
        solver_worst = std::max(solver_worst, gap(d, s.coloring));
        ++found;
      }
    }
  }
  r.lines.push_back({fmt("%.0f solver colorings", found), solver_worst, 1e-9});
  return r;
}

VerifyReport mirror_suite() {
  VerifyReport r{"mirror", {}};
  for (int n : {3, 5, 7}) {
    const int k = (n - 1) / 2;
    const TangleDiagram plus = torus2n(n, +1);
    const TangleDiagram minus = torus2n(n, -1);
    const Interval iv = theta_interval(n, k);
    double closed = 0.0;
    double inverse = 0.0;
    for (double theta : inner_samples(iv.lo, iv.hi, 10, 0.02)) {
      // Largest h whose interval holds theta.
      int h = k;
      while (h > 1 && theta_interval(n, h - 1).contains(theta)) --h;
      const double psi = 2.0 * M_PI - 2.0 * theta;
      const LongitudeValue Lp = eval_word(plus, star_polygon(n, h, psi, 0.0, +1));
      const LongitudeValue Lm = eval_word(minus, star_polygon(n, h, psi, 0.0, -1));
      closed = std::max(closed, chordal_distance(Lm.q, t2n_closed_form(n, theta, true).q));
      inverse = std::max(inverse, chordal_distance(Lm.q, Lp.q.inverse()));
    }
    r.lines.push_back({fmt("n=%.0f mirror vs closed form", n), closed, 1e-8});
    r.lines.push_back({fmt("n=%.0f mirror vs inverse", n), inverse, 1e-8});
  }
  return r;
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass(); });
}

double VerifyReport::max_deviation() const noexcept {
  double worst = 0.0;
  for (const auto& l : lines) worst = std::max(worst, l.deviation);
  return worst;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"axioms", "torus", "fig8", "lift", "mirror"};
  return names;
}

VerifyReport run_verify(std::string_view suite) {
  if (suite == "axioms") return axioms_suite();
  if (suite == "torus") return torus_suite();
  if (suite == "fig8") return fig8_suite();
  if (suite == "lift") return lift_suite();
  if (suite == "mirror") return mirror_suite();
  throw BadParameter("unknown verify suite '" + std::string(suite) + "'");
}

void print_report(std::ostream& out, const VerifyReport& r) {
  char buf[256];
  for (const auto& l : r.lines) {
    std::snprintf(buf, sizeof buf, "  %-4s %-44s dev=%.3e tol=%.0e\n", l.pass() ? "ok" : "FAIL", l.label.c_str(),
                  l.deviation, l.tolerance);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%s: %s (max deviation %.3e)\n", r.suite.c_str(), r.passed() ? "PASS" : "FAIL",
                r.max_deviation());
  out << buf;
}

}  // namespace longmap
