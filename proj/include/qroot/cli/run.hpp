#ifndef QROOT_CLI_RUN_HPP
#define QROOT_CLI_RUN_HPP

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/verify/emit.hpp"
#include "qroot/verify/formal_checks.hpp"
#include "qroot/verify/parallel.hpp"
#include "qroot/verify/root_checks.hpp"
#include "qroot/verify/sweep.hpp"

// The qroot-verify front end: a RunConfig selects a battery of checks, which
// run (optionally in parallel) and are emitted in deterministic order.

namespace qroot {

enum class Command { formal, theorem, corollary, certificates, base_cases, partial_fraction, sweep, all };

inline std::string_view to_string(Command c) {
  switch (c) {
    case Command::formal: return "formal";
    case Command::theorem: return "theorem";
    case Command::corollary: return "corollary";
    case Command::certificates: return "certificates";
    case Command::base_cases: return "base-cases";
    case Command::partial_fraction: return "partial-fraction";
    case Command::sweep: return "sweep";
    case Command::all: return "all";
  }
  return "?";
}

inline Command parse_command(std::string_view s) {
  for (Command c : {Command::formal, Command::theorem, Command::corollary, Command::certificates, Command::base_cases,
                    Command::partial_fraction, Command::sweep, Command::all}) {
    if (to_string(c) == s) return c;
  }
  throw UsageError("unknown command '" + std::string(s) + "'");
}

/// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = 0;

  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses "A..B" or "A" (both ends inclusive, either may be negative).
inline IntRange parse_range(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const int v = detail::parse_int(s, "range");
    return {v, v};
  }
  IntRange r{detail::parse_int(s.substr(0, dots), "range start"), detail::parse_int(s.substr(dots + 2), "range end")};
  if (r.hi < r.lo) throw UsageError("empty range '" + std::string(s) + "'");
  return r;
}

struct RunConfig {
  Command command = Command::all;
  std::optional<IntRange> n;   // per-command default when unset
  std::optional<int> t;        // default: every primitive root
  std::optional<int> l1;
  std::optional<int> l2;
  std::optional<IntRange> l;   // range for l (diagonal checks) or for both l1 and l2
  OutputFormat format = OutputFormat::text;
  unsigned jobs = 1;
  bool include_n1 = false;
  bool timing = false;

  /// Rejects inconsistent combinations; throws UsageError.
  void validate() const {
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    if (n && n->lo < 1) throw UsageError("n must be >= 1");
    if (n && n->hi < n->lo) throw UsageError("empty n range");
    if (l && l->hi < l->lo) throw UsageError("empty l range");
    if ((l1 || l2) && l) throw UsageError("--l cannot be combined with --l1/--l2");
    if (t && n && n->lo != n->hi) throw UsageError("--t requires a single n");
  }
};

/// Default n range per command.
inline IntRange default_n_range(Command c) {
  switch (c) {
    case Command::corollary: return {2, 6};
    case Command::partial_fraction: return {1, 20};
    case Command::sweep: return {2, 10};
    default: return {2, 8};
  }
}

/// Everything a run produced, in emission order.
struct RunResult {
  std::vector<VerificationReport> reports;
  std::vector<SweepGrid> grids;
  std::vector<std::string> notes;  // extra text lines (reduced sides for small theorem runs)
};

namespace detail {

inline std::vector<int> n_values(const RunConfig& cfg, Command c, bool allow_n1) {
  const IntRange r = cfg.n.value_or(default_n_range(c));
  std::vector<int> out;
  for (int n = r.lo; n <= r.hi; ++n) {
    if (n == 1 && !allow_n1) continue;
    out.push_back(n);
  }
  return out;
}

inline std::vector<SeriesScene> scenes(const RunConfig& cfg, int n) {
  std::vector<SeriesScene> out;
  for (const auto& r : roots_for(n, n == 1 ? std::nullopt : cfg.t)) out.emplace_back(r);
  return out;
}

/// (l1, l2) pairs: explicit values, else a range for both, else 1..n plus (0, 0).
inline std::vector<LSpec> pair_values(const RunConfig& cfg, int n) {
  if (cfg.l1 || cfg.l2) {
    if (!cfg.l1 || !cfg.l2) throw UsageError("--l1 and --l2 must be given together");
    return {LSpec{*cfg.l1, *cfg.l2}};
  }
  std::vector<LSpec> out;
  if (!cfg.l) out.push_back({0, 0});
  const IntRange r = cfg.l.value_or(IntRange{1, n});
  for (int a = r.lo; a <= r.hi; ++a) {
    for (int b = r.lo; b <= r.hi; ++b) out.push_back({a, b});
  }
  return out;
}

inline std::vector<int> diagonal_values(const RunConfig& cfg, IntRange fallback) {
  const IntRange r = cfg.l.value_or(cfg.l1 ? IntRange{*cfg.l1, *cfg.l1} : fallback);
  std::vector<int> out;
  for (int x = r.lo; x <= r.hi; ++x) out.push_back(x);
  return out;
}

inline void add_formal(std::vector<CheckTask>& tasks) {
  tasks.emplace_back([] { return check_formal5(); });
  tasks.emplace_back([] { return check_fourterm_termwise(); });
  tasks.emplace_back([] { return check_diag_certificate(); });
  tasks.emplace_back([] { return check_h_telescope(); });
}

inline void add_theorem(const RunConfig& cfg, std::vector<CheckTask>& tasks) {
  for (int n : n_values(cfg, Command::theorem, cfg.include_n1)) {
    for (const auto& s : scenes(cfg, n)) {
      for (const LSpec& ls : pair_values(cfg, n)) tasks.emplace_back([s, ls] { return check_theorem(s, ls); });
    }
  }
}

inline void add_corollary(const RunConfig& cfg, std::vector<CheckTask>& tasks) {
  for (int n : n_values(cfg, Command::corollary, cfg.include_n1)) {
    for (const LSpec& ls : pair_values(cfg, n)) {
      for (const auto& s : scenes(cfg, n)) tasks.emplace_back([s, ls] { return check_corollary(s, ls); });
      if (n >= 2 && !cfg.t) tasks.emplace_back([n, ls] { return check_corollary_t_independence(n, ls); });
    }
  }
}

inline void add_certificates(const RunConfig& cfg, std::vector<CheckTask>& tasks, bool with_formal = true) {
  if (with_formal) {
    tasks.emplace_back([] { return check_diag_certificate(); });
    tasks.emplace_back([] { return check_h_telescope(); });
  }
  for (int n : n_values(cfg, Command::certificates, false)) {
    for (const auto& s : scenes(cfg, n)) {
      for (int l : diagonal_values(cfg, {1, n - 1})) tasks.emplace_back([s, l] { return check_diag_annihilation(s, l); });
      tasks.emplace_back([s] { return check_H_recursion(s); });
      for (const LSpec& ls : pair_values(cfg, n)) {
        tasks.emplace_back([s, ls] { return check_eq4_on_sums(s, ls.l1, ls.l2); });
      }
    }
  }
}

/// `standalone` adds the theorem base cases and the H recursion, which `all`
/// already covers through other commands.
inline void add_base_cases(const RunConfig& cfg, std::vector<CheckTask>& tasks, bool standalone = true) {
  for (int n : n_values(cfg, Command::base_cases, false)) {
    for (const auto& s : scenes(cfg, n)) {
      if (standalone) {
        tasks.emplace_back([s] { return check_theorem(s, LSpec{0, 0}); });
        tasks.emplace_back([s] { return check_theorem(s, LSpec{1, 1}); });
      }
      for (int l = 1; l <= n; ++l) tasks.emplace_back([s, l] { return check_eq5(s, l); });
      if (standalone) tasks.emplace_back([s] { return check_H_recursion(s); });
      for (int l1 = 1; l1 < n; ++l1) {
        for (int l2 = 1; l2 < n; ++l2) tasks.emplace_back([s, l1, l2] { return check_short_sum(s, LSpec{l1, l2}); });
      }
    }
  }
}

inline void add_partial_fraction(const RunConfig& cfg, std::vector<CheckTask>& tasks) {
  for (int n : n_values(cfg, Command::partial_fraction, true)) {
    for (const auto& s : scenes(cfg, n)) tasks.emplace_back([s] { return check_partial_fraction(s); });
  }
}

/// Reflection of F and the G convention on 0 <= l1 <= n, 1 <= l2 <= n.
inline void add_conventions(const RunConfig& cfg, std::vector<CheckTask>& tasks, IntRange n_range) {
  RunConfig narrowed = cfg;
  if (!narrowed.n) narrowed.n = n_range;
  for (int n : n_values(narrowed, Command::all, false)) {
    for (const auto& s : scenes(cfg, n)) {
      for (int l1 = 0; l1 <= n; ++l1) {
        for (int l2 = 1; l2 <= n; ++l2) {
          tasks.emplace_back([s, l1, l2] { return check_reflection(s, LSpec{l1, l2}); });
          tasks.emplace_back([s, l1, l2] { return check_convention_G(s, LSpec{l1, l2}); });
        }
      }
    }
  }
}

/// For a handful of theorem checks, the reduced sides as text.
inline std::vector<std::string> theorem_sides_notes(const RunConfig& cfg) {
  std::vector<std::string> notes;
  for (int n : n_values(cfg, Command::theorem, cfg.include_n1)) {
    for (const auto& s : scenes(cfg, n)) {
      for (const LSpec& ls : pair_values(cfg, n)) {
        const std::string where = "n=" + std::to_string(n) + " t=" + std::to_string(s.t()) + " l1=" +
                                  std::to_string(ls.l1) + " l2=" + std::to_string(ls.l2);
        const CycloNum f1 = sum_F_at_one(ls, s);
        notes.push_back(where + "  F_n(1) = " + f1.to_string("z"));
        if (f1.is_zero()) continue;
        notes.push_back(where + "  F_n(a)/F_n(1) = " + (f1.inverse() * sum_F(ls, s)).reduced().to_string());
        notes.push_back(where + "  closed form  = " + (closed_form_factor(s) * product_G(ls, s)).reduced().to_string());
      }
    }
  }
  return notes;
}

}  // namespace detail

/// Builds and runs the battery for `cfg`; does not write output.
inline RunResult execute(const RunConfig& cfg) {
  cfg.validate();
  RunResult out;
  std::vector<CheckTask> tasks;
  switch (cfg.command) {
    case Command::formal: detail::add_formal(tasks); break;
    case Command::theorem:
      detail::add_theorem(cfg, tasks);
      if (tasks.size() <= 4) out.notes = detail::theorem_sides_notes(cfg);
      break;
    case Command::corollary: detail::add_corollary(cfg, tasks); break;
    case Command::certificates: detail::add_certificates(cfg, tasks); break;
    case Command::base_cases: detail::add_base_cases(cfg, tasks); break;
    case Command::partial_fraction: detail::add_partial_fraction(cfg, tasks); break;
    case Command::sweep: {
      SweepConfig sc;
      const IntRange r = cfg.n.value_or(default_n_range(Command::sweep));
      sc.n_min = r.lo;
      sc.n_max = r.hi;
      if (cfg.l) {
        sc.l_min = cfg.l->lo;
        sc.l_max = cfg.l->hi;
      }
      sc.t = cfg.t;
      sc.include_n1 = cfg.include_n1;
      sc.jobs = cfg.jobs;
      SweepResult sr = sweep_theorem(sc);
      out.reports = std::move(sr.reports);
      out.grids = std::move(sr.grids);
      return out;
    }
    case Command::all: {
      detail::add_formal(tasks);
      RunConfig sub = cfg;
      for (Command c : {Command::theorem, Command::corollary, Command::certificates, Command::base_cases,
                        Command::partial_fraction}) {
        sub.command = c;
        if (c == Command::theorem) detail::add_theorem(sub, tasks);
        if (c == Command::corollary) detail::add_corollary(sub, tasks);
        if (c == Command::certificates) detail::add_certificates(sub, tasks, false);
        if (c == Command::base_cases) detail::add_base_cases(sub, tasks, false);
        if (c == Command::partial_fraction) detail::add_partial_fraction(sub, tasks);
      }
      detail::add_conventions(cfg, tasks, {2, 6});
      break;
    }
  }
  out.reports = run_parallel(tasks, cfg.jobs);
  sort_reports(out.reports);
  return out;
}

/// Exit status: 0 when nothing failed, 1 on any failed check.
inline int exit_status(const RunResult& r) {
  for (const auto& rep : r.reports) {
    if (rep.failed()) return 1;
  }
  return 0;
}

/// Runs `cfg` and writes the report stream to `out` (and the summary to
/// `err` in structured mode). Returns the process exit status: 0 pass,
/// 1 some check failed, 2 usage error, 3 arithmetic or internal error.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = execute(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  const EmitOptions opt{cfg.format, cfg.timing};
  emit_reports(out, result.reports, opt);
  const std::string summary = summary_line(count_statuses(result.reports));
  if (cfg.format == OutputFormat::text) {
    for (const auto& g : result.grids) emit_grid(out, g);
    for (const auto& note : result.notes) out << note << '\n';
    out << summary << '\n';
  } else {
    err << summary << '\n';
  }
  return exit_status(result);
}

}  // namespace qroot

#endif  // QROOT_CLI_RUN_HPP
