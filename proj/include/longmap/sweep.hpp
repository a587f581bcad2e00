#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "longmap/tangle.hpp"

namespace longmap {

/// Built-in knot families: torus(n, sign) for T(2,n) or its mirror, and fig8.
struct KnotChoice {
  enum class Family { Torus, Fig8 };
  Family family = Family::Fig8;
  int n = 0;
  int sign = +1;

  /// Parses "fig8", "torus:n" or "torus:n:sign" with sign one of +, -, +1, -1.
  /// Throws BadParameter.
  static KnotChoice parse(std::string_view text);
  static KnotChoice torus(int n, int sign = +1);
  static KnotChoice fig8() { return {}; }

  TangleDiagram diagram() const;
  std::string name() const;
};

struct SweepSpec {
  KnotChoice knot;
  double theta_min = 0.0;
  double theta_max = 0.0;
  int steps = 2;
  /// Empty means every branch.
  std::vector<int> branches;

  /// Throws BadParameter unless theta_min < theta_max and steps >= 2.
  void validate() const;
  /// Grid point j of steps, endpoints included.
  double theta_at(int j) const;
};

/// One (theta, branch) sample. For an uncolorable theta there is a single row
/// with no branch and NaN values.
struct SweepRow {
  double theta = 0.0;
  std::optional<int> branch;
  double beta = 0.0;
  double L_re = 0.0;
  double L_im = 0.0;
  double phi = 0.0;
};

/// Branches are h = 1..k for torus(n) and 1, 2 for fig8. psi = 2pi - 2theta.
/// The grid may be split over `threads` workers; rows come back ordered by (theta, branch).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 1);

/// Header theta,branch,beta,L_re,L_im,phi; 17 significant digits; empty fields
/// after theta on uncolorable rows.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace longmap
