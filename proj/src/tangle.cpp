#include "longmap/tangle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "longmap/errors.hpp"

namespace longmap {

WirtingerCode::WirtingerCode(std::vector<int> kappa, std::vector<int> eps) : kappa_(std::move(kappa)), eps_(std::move(eps)) {
  if (kappa_.size() != eps_.size()) {
    throw ValidationError("kappa has " + std::to_string(kappa_.size()) + " entries but eps has " +
                          std::to_string(eps_.size()));
  }
  const int n = crossings();
  for (std::size_t i = 0; i < kappa_.size(); ++i) {
    if (kappa_[i] < 0 || kappa_[i] > n) {
      throw ValidationError("kappa(" + std::to_string(i + 1) + ") = " + std::to_string(kappa_[i]) +
                            " is outside 0.." + std::to_string(n));
    }
    if (eps_[i] != 1 && eps_[i] != -1) {
      throw ValidationError("eps(" + std::to_string(i + 1) + ") must be +1 or -1");
    }
  }
}

int WirtingerCode::writhe() const noexcept { return std::accumulate(eps_.begin(), eps_.end(), 0); }

TangleDiagram::TangleDiagram(WirtingerCode code) : code_(std::move(code)) {
  residual_.resize(static_cast<std::size_t>(code_.crossings()));
  std::iota(residual_.begin(), residual_.end(), 1);
}

TangleDiagram::TangleDiagram(WirtingerCode code, std::vector<int> bridges, std::vector<ScheduleStep> schedule)
    : code_(std::move(code)), bridges_(std::move(bridges)), schedule_(std::move(schedule)) {
  const int n = code_.crossings();
  const int arcs = code_.arcs();
  if (bridges_.empty()) {
    throw ValidationError("a schedule needs at least one bridge arc");
  }
  if (bridges_.front() != 0) {
    throw ValidationError("the first bridge must be the initial arc 0");
  }
  std::vector<bool> known(static_cast<std::size_t>(arcs), false);
  for (int b : bridges_) {
    if (b < 0 || b >= arcs) {
      throw ValidationError("bridge arc " + std::to_string(b) + " out of range");
    }
    if (known[static_cast<std::size_t>(b)]) {
      throw ValidationError("bridge arc " + std::to_string(b) + " listed twice");
    }
    known[static_cast<std::size_t>(b)] = true;
  }
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (const auto& step : schedule_) {
    const std::string where = "schedule step " + std::to_string(step.arc) + ":" + std::to_string(step.crossing);
    if (step.crossing < 1 || step.crossing > n) {
      throw ValidationError(where + ": crossing out of range");
    }
    if (used[static_cast<std::size_t>(step.crossing)]) {
      throw ValidationError(where + ": crossing used twice");
    }
    if (step.arc != step.crossing && step.arc != step.crossing - 1) {
      throw ValidationError(where + ": arc is not an under-arc of the crossing");
    }
    if (known[static_cast<std::size_t>(step.arc)]) {
      throw ValidationError(where + ": arc already defined");
    }
    const int other = step.arc == step.crossing ? step.crossing - 1 : step.crossing;
    const int over = code_.over_arc(step.crossing);
    if (!known[static_cast<std::size_t>(other)] || !known[static_cast<std::size_t>(over)]) {
      throw ValidationError(where + ": depends on an arc that is not yet defined");
    }
    used[static_cast<std::size_t>(step.crossing)] = true;
    known[static_cast<std::size_t>(step.arc)] = true;
  }
  for (int a = 0; a < arcs; ++a) {
    if (!known[static_cast<std::size_t>(a)]) {
      throw ValidationError("arc " + std::to_string(a) + " is neither a bridge nor a schedule target");
    }
  }
  for (int c = 1; c <= n; ++c) {
    if (!used[static_cast<std::size_t>(c)]) residual_.push_back(c);
  }
}

int torus_arc_of_q(int n, int q_index) {
  if (q_index == n) return n;
  const int j = ((q_index % n) + n) % n;
  const int k = (n - 1) / 2;
  return j % 2 == 0 ? j / 2 : k + (j + 1) / 2;
}

int torus_q_of_arc(int n, int arc) {
  const int k = (n - 1) / 2;
  return arc <= k ? 2 * arc : 2 * (arc - k) - 1;
}

TangleDiagram torus2n(int n, int sign) {
  if (n < 3 || n % 2 == 0) {
    throw BadParameter("torus2n requires odd n >= 3");
  }
  if (sign != 1 && sign != -1) {
    throw BadParameter("torus2n sign must be +1 or -1");
  }
  const int k = (n - 1) / 2;
  std::vector<int> kappa(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int over;
    if (i <= k) {
      over = k + i;  // q_{2i} = q_{2i-2} * q_{2i-1}
    } else if (i == k + 1) {
      over = 0;  // q_1 = q_{-1} * q_0
    } else {
      over = i - k - 1;  // q_{2j+1} = q_{2j-1} * q_{2j}
    }
    kappa[static_cast<std::size_t>(i - 1)] = over;
  }
  std::vector<int> eps(static_cast<std::size_t>(n), sign);
  // Every crossing is used forward, in the order q_2, q_3, ..., q_n; crossing k+1 is left over.
  std::vector<ScheduleStep> schedule;
  for (int j = 2; j <= n; ++j) {
    const int arc = torus_arc_of_q(n, j);
    schedule.push_back({arc, arc});
  }
  return TangleDiagram(WirtingerCode(std::move(kappa), std::move(eps)), {0, k + 1}, std::move(schedule));
}

TangleDiagram fig8() {
  // u0 * u2 = u1, u2 * u3 = u1 (negative), u2 * u0 = u3, u0 * u1 = u3 (negative; u4 = u0).
  WirtingerCode code({2, 3, 0, 1}, {+1, -1, +1, -1});
  return TangleDiagram(std::move(code), {0, 2}, {{1, 1}, {3, 3}, {4, 4}});
}

LongitudeWord longitude_word(const WirtingerCode& code) {
  LongitudeWord w;
  w.factors.push_back({0, -code.writhe()});
  for (int i = 1; i <= code.crossings(); ++i) {
    w.factors.push_back({code.over_arc(i), code.sign(i)});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  offset += b;
  return s.substr(b, e - b);
}

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Field> split(std::string_view s, char sep, std::size_t column) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::size_t off = 0;
      auto piece = trim(s.substr(start, i - start), off);
      out.push_back({piece, column + start + off});
      start = i + 1;
    }
  }
  return out;
}

int parse_int(const Field& f, std::size_t line) {
  int v = 0;
  const char* first = f.text.data();
  const char* last = first + f.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (f.text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, f.column, "expected an integer, got '" + std::string(f.text) + "'");
  }
  return v;
}

std::vector<int> parse_int_list(std::string_view value, std::size_t line, std::size_t column) {
  std::vector<int> out;
  if (value.empty()) return out;
  for (const auto& f : split(value, ',', column)) out.push_back(parse_int(f, line));
  return out;
}

}  // namespace

TangleDiagram parse_tangle(std::string_view text) {
  std::optional<int> n;
  std::optional<std::vector<int>> kappa, eps, bridges;
  std::optional<std::vector<ScheduleStep>> schedule;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t col0 = 0;
    const std::string_view line = trim(raw, col0);
    if (line.empty()) continue;
    const std::size_t col = col0 + 1;

    if (!n) {
      constexpr std::string_view kHeader = "tangle";
      if (line.substr(0, kHeader.size()) != kHeader) {
        throw ParseError(line_no, col, "expected header 'tangle n=<N>'");
      }
      std::size_t off = 0;
      const auto rest = trim(line.substr(kHeader.size()), off);
      if (rest.substr(0, 2) != "n=") {
        throw ParseError(line_no, col + kHeader.size() + off, "expected 'n=<N>'");
      }
      const Field f{rest.substr(2), col + kHeader.size() + off + 2};
      n = parse_int(f, line_no);
      if (*n < 1) throw ParseError(line_no, f.column, "crossing count must be positive");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, col, "expected 'key=value'");
    std::size_t koff = 0;
    const auto key = trim(line.substr(0, eq), koff);
    std::size_t voff = 0;
    const auto value = trim(line.substr(eq + 1), voff);
    const std::size_t vcol = col + eq + 1 + voff;

    auto once = [&](bool seen) {
      if (seen) throw ParseError(line_no, col, "duplicate key '" + std::string(key) + "'");
    };
    if (key == "kappa") {
      once(kappa.has_value());
      kappa = parse_int_list(value, line_no, vcol);
    } else if (key == "eps") {
      once(eps.has_value());
      std::vector<int> signs;
      for (const auto& f : split(value, ',', vcol)) {
        if (f.text == "+") {
          signs.push_back(+1);
        } else if (f.text == "-") {
          signs.push_back(-1);
        } else {
          throw ParseError(line_no, f.column, "sign must be '+' or '-'");
        }
      }
      eps = std::move(signs);
    } else if (key == "bridges") {
      once(bridges.has_value());
      bridges = parse_int_list(value, line_no, vcol);
    } else if (key == "schedule") {
      once(schedule.has_value());
      std::vector<ScheduleStep> steps;
      if (!value.empty()) {
        for (const auto& f : split(value, ';', vcol)) {
          const auto colon = f.text.find(':');
          if (colon == std::string_view::npos) throw ParseError(line_no, f.column, "expected '<arc>:<crossing>'");
          std::size_t o1 = 0;
          std::size_t o2 = 0;
          const Field a{trim(f.text.substr(0, colon), o1), f.column + o1};
          const Field c{trim(f.text.substr(colon + 1), o2), f.column + colon + 1 + o2};
          steps.push_back({parse_int(a, line_no), parse_int(c, line_no)});
        }
      }
      schedule = std::move(steps);
    } else {
      throw ParseError(line_no, col + koff, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!n) throw ParseError(line_no, 1, "missing 'tangle n=<N>' header");
  if (!kappa) throw ParseError(line_no, 1, "missing 'kappa' line");
  if (!eps) throw ParseError(line_no, 1, "missing 'eps' line");
  if (static_cast<int>(kappa->size()) != *n) {
    throw ValidationError("kappa has " + std::to_string(kappa->size()) + " entries, expected n=" + std::to_string(*n));
  }
  if (static_cast<int>(eps->size()) != *n) {
    throw ValidationError("eps has " + std::to_string(eps->size()) + " entries, expected n=" + std::to_string(*n));
  }
  WirtingerCode code(std::move(*kappa), std::move(*eps));
  if (bridges.has_value() != schedule.has_value()) {
    throw ValidationError("'bridges' and 'schedule' must be given together");
  }
  if (!bridges) return TangleDiagram(std::move(code));
  return TangleDiagram(std::move(code), std::move(*bridges), std::move(*schedule));
}

std::string serialize_tangle(const TangleDiagram& d) {
  std::ostringstream os;
  const auto& code = d.code();
  os << "tangle n=" << code.crossings() << "\n";
  os << "kappa=";
  for (std::size_t i = 0; i < code.kappa().size(); ++i) os << (i ? "," : "") << code.kappa()[i];
  os << "\neps=";
  for (std::size_t i = 0; i < code.eps().size(); ++i) os << (i ? "," : "") << (code.eps()[i] > 0 ? '+' : '-');
  os << "\n";
  if (d.has_schedule()) {
    os << "bridges=";
    for (std::size_t i = 0; i < d.bridges().size(); ++i) os << (i ? "," : "") << d.bridges()[i];
    os << "\nschedule=";
    for (std::size_t i = 0; i < d.schedule().size(); ++i) {
      os << (i ? ";" : "") << d.schedule()[i].arc << ":" << d.schedule()[i].crossing;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace longmap
