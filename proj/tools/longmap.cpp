// longmap: quandle colorings and the longitudinal invariant over SU(2).
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "longmap/coloring.hpp"
#include "longmap/errors.hpp"
#include "longmap/longitude.hpp"
#include "longmap/sweep.hpp"
#include "longmap/tangle.hpp"
#include "longmap/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace longmap;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_radians(double v, bool deg) { return deg ? v * M_PI / 180.0 : v; }

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

TangleDiagram load_diagram(const std::string& knot, const std::string& file) {
  if (knot.empty() == file.empty()) throw UsageError("give exactly one of --knot and --file");
  if (!knot.empty()) return KnotChoice::parse(knot).diagram();
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tangle(ss.str());
}

int cmd_verify(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = verify_suite_names();
  } else {
    suites.push_back(suite);
  }
  bool ok = true;
  for (const auto& s : suites) {
    const VerifyReport r = run_verify(s);
    print_report(std::cout, r);
    ok = ok && r.passed();
  }
  return ok ? kOk : kFailed;
}

int cmd_color(const TangleDiagram& d, double psi, int grid, bool as_json) {
  const SolveResult res = solve_colorings(d, psi, grid);
  if (as_json) {
    json out;
    out["psi"] = psi;
    out["grid"] = grid;
    out["grid_too_coarse"] = res.grid_too_coarse;
    out["seeds"] = json::array();
    for (const auto& s : res.solutions) {
      json colors = json::array();
      for (const auto& u : s.coloring.sphere_points()) colors.push_back({u.x(), u.y(), u.z()});
      const LongitudeValue L = eval_word(d, s.coloring);
      out["seeds"].push_back({{"beta", s.seed.beta},
                              {"residual", s.residual},
                              {"colors", colors},
                              {"L", {L.q.a(), L.q.b(), L.q.c(), L.q.d()}},
                              {"phi", L.phi}});
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "psi = " << g17(psi) << ", " << res.solutions.size() << " seeds\n";
  if (res.grid_too_coarse) std::cout << "warning: seeds closer than two grid cells; raise --grid\n";
  int idx = 1;
  for (const auto& s : res.solutions) {
    const LongitudeValue L = eval_word(d, s.coloring);
    std::cout << "seed " << idx++ << ": beta = " << g17(s.seed.beta) << "  residual = " << s.residual
              << "  phi = " << g17(L.phi) << '\n';
    int arc = 0;
    for (const auto& u : s.coloring.sphere_points()) {
      std::cout << "  arc " << arc++ << ": (" << g17(u.x()) << ", " << g17(u.y()) << ", " << g17(u.z()) << ")\n";
    }
  }
  return kOk;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, bool as_json, int threads) {
  const auto rows = run_sweep(spec, threads);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    out = &file;
  }
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"theta", r.theta},
                     {"branch", r.branch ? json(*r.branch) : json(nullptr)},
                     {"beta", r.branch ? number_or_null(r.beta) : json(nullptr)},
                     {"L_re", r.branch ? number_or_null(r.L_re) : json(nullptr)},
                     {"L_im", r.branch ? number_or_null(r.L_im) : json(nullptr)},
                     {"phi", r.branch ? number_or_null(r.phi) : json(nullptr)}});
    }
    *out << arr.dump(2) << '\n';
  } else {
    write_csv(*out, rows);
  }
  if (!*out) throw std::runtime_error("write failed");
  return kOk;
}

int cmd_intervals(int n, bool as_json) {
  if (n < 3 || n % 2 == 0) throw BadParameter("n must be odd and >= 3");
  json arr = json::array();
  if (!as_json) std::cout << "h  psi_lo  psi_hi  theta_lo  theta_hi\n";
  for (int h = 1; h <= (n - 1) / 2; ++h) {
    const Interval p = torus_interval(n, h);
    const Interval t = theta_interval(n, h);
    if (as_json) {
      arr.push_back({{"h", h}, {"psi", {p.lo, p.hi}}, {"theta", {t.lo, t.hi}}});
    } else {
      std::cout << h << "  " << g17(p.lo) << "  " << g17(p.hi) << "  " << g17(t.lo) << "  " << g17(t.hi) << '\n';
    }
  }
  if (as_json) std::cout << arr.dump(2) << '\n';
  return kOk;
}

std::vector<int> parse_branches(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "all") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad branch '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle colorings of 1-tangles and the longitudinal invariant over SU(2)"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"axioms", "torus", "fig8", "lift", "mirror", "all"}));

  auto* color = app.add_subcommand("color", "solve for nontrivial colorings over S^2_psi");
  std::string knot;
  std::string file;
  double psi = 0.0;
  bool deg = false;
  int grid = tol::kDefaultGrid;
  bool color_json = false;
  color->add_option("--knot", knot, "fig8 | torus:n[:sign]");
  color->add_option("--file", file, "tangle file");
  color->add_option("--psi", psi, "rotation angle")->required();
  color->add_flag("--deg", deg, "angles in degrees");
  color->add_option("--grid", grid, "beta grid size")->check(CLI::Range(3, 10000000));
  color->add_flag("--json", color_json, "JSON output");

  auto* sweep = app.add_subcommand("sweep", "tabulate beta and the invariant over a theta grid");
  std::string sweep_knot;
  double theta_min = 0.0;
  double theta_max = 0.0;
  int steps = 200;
  std::string branches;
  std::string out_path;
  bool sweep_deg = false;
  bool sweep_json = false;
  int threads = 1;
  sweep->add_option("--knot", sweep_knot, "fig8 | torus:n[:sign]")->required();
  sweep->add_option("--theta-min", theta_min, "first theta")->required();
  sweep->add_option("--theta-max", theta_max, "last theta")->required();
  sweep->add_option("--steps", steps, "grid points, endpoints included");
  sweep->add_option("--branches", branches, "all | comma separated list");
  sweep->add_option("--out,-o", out_path, "output path, - for stdout");
  sweep->add_flag("--deg", sweep_deg, "angles in degrees");
  sweep->add_flag("--json", sweep_json, "JSON output");
  sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* intervals = app.add_subcommand("intervals", "coloring intervals of T(2,n)");
  int n = 0;
  bool intervals_json = false;
  intervals->add_option("n", n, "odd n >= 3")->required();
  intervals->add_flag("--json", intervals_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite);
    if (color->parsed()) {
      return cmd_color(load_diagram(knot, file), to_radians(psi, deg), grid, color_json);
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.knot = KnotChoice::parse(sweep_knot);
      spec.theta_min = to_radians(theta_min, sweep_deg);
      spec.theta_max = to_radians(theta_max, sweep_deg);
      spec.steps = steps;
      spec.branches = parse_branches(branches);
      spec.validate();
      return cmd_sweep(spec, out_path, sweep_json, threads);
    }
    if (intervals->parsed()) return cmd_intervals(n, intervals_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
