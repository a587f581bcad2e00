#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace longmap {

/// Wirtinger code of a 1-tangle diagram with n crossings and arcs 0..n.
///
/// Crossings are numbered 1..n: at the end of arc i-1 the strand passes
/// under arc over_arc(i) with sign sign(i) and continues as arc i.
class WirtingerCode {
 public:
  WirtingerCode() = default;
  /// Throws ValidationError when lengths differ, an over-arc is outside 0..n,
  /// or a sign is not +-1.
  WirtingerCode(std::vector<int> kappa, std::vector<int> eps);

  int crossings() const noexcept { return static_cast<int>(kappa_.size()); }
  int arcs() const noexcept { return crossings() + 1; }
  int terminal_arc() const noexcept { return crossings(); }

  /// kappa(i) for crossing i in 1..n.
  int over_arc(int crossing) const { return kappa_.at(static_cast<std::size_t>(crossing - 1)); }
  /// epsilon(i) for crossing i in 1..n.
  int sign(int crossing) const { return eps_.at(static_cast<std::size_t>(crossing - 1)); }

  const std::vector<int>& kappa() const noexcept { return kappa_; }
  const std::vector<int>& eps() const noexcept { return eps_; }

  int writhe() const noexcept;

  friend bool operator==(const WirtingerCode&, const WirtingerCode&) = default;

 private:
  std::vector<int> kappa_;
  std::vector<int> eps_;
};

/// Defines `arc` from the relation at `crossing`. The target must be one of the
/// crossing's two under-arcs; the other under-arc and the over-arc must be known.
struct ScheduleStep {
  int arc;
  int crossing;
  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

/// A Wirtinger code plus a propagation schedule from its bridge arcs.
class TangleDiagram {
 public:
  /// Diagram without a schedule; it can be checked but not solved.
  explicit TangleDiagram(WirtingerCode code);
  /// Throws ValidationError if the schedule does not cover each non-bridge
  /// arc exactly once in dependency order.
  TangleDiagram(WirtingerCode code, std::vector<int> bridges, std::vector<ScheduleStep> schedule);

  const WirtingerCode& code() const noexcept { return code_; }
  const std::vector<int>& bridges() const noexcept { return bridges_; }
  const std::vector<ScheduleStep>& schedule() const noexcept { return schedule_; }
  /// Crossings not used by the schedule, in increasing order.
  const std::vector<int>& residual_crossings() const noexcept { return residual_; }
  bool has_schedule() const noexcept { return !bridges_.empty(); }

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

 private:
  WirtingerCode code_;
  std::vector<int> bridges_;
  std::vector<ScheduleStep> schedule_;
  std::vector<int> residual_;
};

/// Closed 2-braid T(2,n) for odd n >= 3, all crossings of the given sign.
///
/// Arc u_i carries q_{2i} and arc u_{k+i} carries q_{2i-1} (n = 2k+1), so for
/// sign +1 the colors obey q_{i+1} = q_i^{-1} q_{i-1} q_i. Bridges are the arcs of
/// q_0 and q_1. Sign -1 gives the mirror image.
TangleDiagram torus2n(int n, int sign = +1);

/// Arc of T(2,n) that carries q_index (indices mod n; q_n is the terminal arc).
int torus_arc_of_q(int n, int q_index);
/// Inverse of torus_arc_of_q; the terminal arc maps to n.
int torus_q_of_arc(int n, int arc);

/// Four-crossing figure-eight tangle with arcs u_0..u_3 and terminal arc 4.
/// Bridges are u_0 and u_2.
TangleDiagram fig8();

/// Longitude x_0^{-w} x_{kappa 1}^{eps 1} ... x_{kappa n}^{eps n} as a symbolic word.
struct LongitudeWord {
  struct Factor {
    int arc;
    int exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  /// Leading x_0^{-w} followed by the n over-arc factors.
  std::vector<Factor> factors;
};

LongitudeWord longitude_word(const WirtingerCode& code);

/// Line-based text format:
///   tangle n=<N>
///   kappa=<c0>,...,<c_{N-1}>
///   eps=<+|->,...
///   bridges=<a>,<b>            (optional)
///   schedule=<arc>:<crossing>;... (optional)
/// `#` starts a comment.
TangleDiagram parse_tangle(std::string_view text);
std::string serialize_tangle(const TangleDiagram& d);

}  // namespace longmap
