#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace longmap {

struct CheckLine {
  std::string label;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass() const noexcept { return deviation <= tolerance; }
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool passed() const noexcept;
  double max_deviation() const noexcept;
};

/// axioms, torus, fig8, lift, mirror.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite; "all" is not accepted here. Throws BadParameter on an unknown name.
VerifyReport run_verify(std::string_view suite);

void print_report(std::ostream& out, const VerifyReport& r);

}  // namespace longmap
