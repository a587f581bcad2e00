#include "longmap/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "longmap/coloring.hpp"
#include "longmap/errors.hpp"
#include "longmap/longitude.hpp"
#include "longmap/tolerances.hpp"

namespace longmap {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw BadParameter("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

bool wanted(const SweepSpec& spec, int branch) {
  return spec.branches.empty() || std::find(spec.branches.begin(), spec.branches.end(), branch) != spec.branches.end();
}

SweepRow make_row(double theta, int branch, double beta, const LongitudeValue& L) {
  return {theta, branch, beta, L.q.a(), L.q.b(), L.phi};
}

std::vector<SweepRow> sample(const SweepSpec& spec, const TangleDiagram& d, double theta) {
  std::vector<SweepRow> rows;
  const double psi = 2.0 * M_PI - 2.0 * theta;
  if (spec.knot.family == KnotChoice::Family::Torus) {
    const int n = spec.knot.n;
    const int k = (n - 1) / 2;
    for (int h = 1; h <= k; ++h) {
      const Interval iv = theta_interval(n, h);
      if (!(theta > iv.lo + tol::kEndpoint && theta < iv.hi - tol::kEndpoint) || !wanted(spec, h)) continue;
      const Coloring c = star_polygon(n, h, psi, 0.0, spec.knot.sign);
      rows.push_back(make_row(theta, h, seed_angle(c[static_cast<std::size_t>(k + 1)].sphere_point()), eval_word(d, c)));
    }
  } else {
    if (theta >= M_PI / 3.0 - tol::kEndpoint && theta <= 2.0 * M_PI / 3.0 + tol::kEndpoint) {
      const auto betas = fig8_betas(psi);
      for (int b = 1; b <= 2; ++b) {
        if (!wanted(spec, b)) continue;
        const Coloring c = fig8_coloring(psi, b);
        rows.push_back(make_row(theta, b, b == 1 ? betas.first : betas.second, eval_word(d, c)));
      }
    }
  }
  if (rows.empty()) {
    SweepRow empty;
    empty.theta = theta;
    empty.beta = empty.L_re = empty.L_im = empty.phi = std::nan("");
    rows.push_back(empty);
  }
  return rows;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

KnotChoice KnotChoice::torus(int n, int sign) {
  if (n < 3 || n % 2 == 0) throw BadParameter("torus knot needs odd n >= 3");
  if (sign != 1 && sign != -1) throw BadParameter("torus sign must be +1 or -1");
  KnotChoice k;
  k.family = Family::Torus;
  k.n = n;
  k.sign = sign;
  return k;
}

KnotChoice KnotChoice::parse(std::string_view text) {
  if (text == "fig8") return fig8();
  constexpr std::string_view prefix = "torus:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw BadParameter("unknown knot '" + std::string(text) + "'; expected fig8 or torus:n[:sign]");
  }
  std::string_view rest = text.substr(prefix.size());
  int sign = +1;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    const std::string_view s = rest.substr(colon + 1);
    if (s == "+" || s == "+1" || s == "1") {
      sign = +1;
    } else if (s == "-" || s == "-1") {
      sign = -1;
    } else {
      throw BadParameter("bad torus sign '" + std::string(s) + "'");
    }
    rest = rest.substr(0, colon);
  }
  return torus(parse_int(rest, "torus n"), sign);
}

TangleDiagram KnotChoice::diagram() const { return family == Family::Fig8 ? longmap::fig8() : torus2n(n, sign); }

std::string KnotChoice::name() const {
  if (family == Family::Fig8) return "fig8";
  return "torus:" + std::to_string(n) + (sign > 0 ? ":+" : ":-");
}

void SweepSpec::validate() const {
  if (!(theta_min < theta_max)) throw BadParameter("sweep needs theta_min < theta_max");
  if (steps < 2) throw BadParameter("sweep needs at least 2 steps");
}

double SweepSpec::theta_at(int j) const {
  if (j == steps - 1) return theta_max;
  return theta_min + (theta_max - theta_min) * static_cast<double>(j) / static_cast<double>(steps - 1);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const TangleDiagram d = spec.knot.diagram();
  std::vector<std::vector<SweepRow>> per_theta(static_cast<std::size_t>(spec.steps));
  const int workers = std::clamp(threads, 1, spec.steps);
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      for (int j = w; j < spec.steps; j += workers) {
        per_theta[static_cast<std::size_t>(j)] = sample(spec, d, spec.theta_at(j));
      }
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::vector<SweepRow> rows;
  for (auto& block : per_theta) rows.insert(rows.end(), block.begin(), block.end());
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "theta,branch,beta,L_re,L_im,phi\n";
  for (const auto& r : rows) {
    out << fmt17(r.theta) << ',';
    if (!r.branch) {
      out << ",,,,\n";
      continue;
    }
    out << *r.branch << ',' << fmt17(r.beta) << ',' << fmt17(r.L_re) << ',' << fmt17(r.L_im) << ',' << fmt17(r.phi)
        << '\n';
  }
}

}  // namespace longmap
