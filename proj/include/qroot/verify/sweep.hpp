#ifndef QROOT_VERIFY_SWEEP_HPP
#define QROOT_VERIFY_SWEEP_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/verify/parallel.hpp"
#include "qroot/verify/root_checks.hpp"

// The theorem over a grid of (n, t, l1, l2), with negative parameters under
// the reciprocal-product convention, plus the reflection and G-convention
// records that explain the sign boundary.

namespace qroot {

struct SweepConfig {
  int n_min = 2;
  int n_max = 10;
  std::optional<int> l_min;  // default -(n + 2)
  std::optional<int> l_max;  // default n + 2
  std::optional<int> t;      // default: every primitive root
  bool include_n1 = false;
  bool with_reflection = true;
  unsigned jobs = 1;
};

/// Per-n outcome of the theorem grid. A cell's character summarizes it over
/// all t: '+' pass, '-' sign boundary, 'x' failure, 'i' inapplicable,
/// '.' informational, '?' mixed.
struct SweepGrid {
  int n = 0;
  int l_min = 0;
  int l_max = 0;
  std::map<std::pair<int, int>, char> cells;

  char at(int l1, int l2) const {
    auto it = cells.find({l1, l2});
    return it == cells.end() ? ' ' : it->second;
  }
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  std::vector<SweepGrid> grids;
};

inline char grid_symbol(Status s) {
  switch (s) {
    case Status::pass: return '+';
    case Status::boundary: return '-';
    case Status::fail: return 'x';
    case Status::inapplicable: return 'i';
    default: return '.';
  }
}

inline std::vector<PrimitiveRoot> roots_for(int n, std::optional<int> t) {
  auto ctx = make_cyclo_context(n);
  if (t) return {make_primitive_root(ctx, *t)};
  return primitive_roots(ctx);
}

inline SweepResult sweep_theorem(const SweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw UsageError("sweep: empty or invalid n range");
  if (cfg.l_min && cfg.l_max && *cfg.l_max < *cfg.l_min) throw UsageError("sweep: empty l range");
  std::vector<CheckTask> tasks;
  std::vector<SweepGrid> grids;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    if (n == 1 && !cfg.include_n1) continue;
    const int lo = cfg.l_min.value_or(-(n + 2));
    const int hi = cfg.l_max.value_or(n + 2);
    grids.push_back({n, lo, hi, {}});
    for (const auto& root : roots_for(n, n == 1 ? std::optional<int>{} : cfg.t)) {
      const SeriesScene s(root);
      for (int l1 = lo; l1 <= hi; ++l1) {
        for (int l2 = lo; l2 <= hi; ++l2) tasks.emplace_back([s, l1, l2] { return check_theorem(s, LSpec{l1, l2}); });
      }
      if (!cfg.with_reflection || n == 1) continue;
      for (int l1 = std::max(lo, 0); l1 <= hi; ++l1) {
        for (int l2 = std::max(lo, 1); l2 <= std::min(hi, n); ++l2) {
          tasks.emplace_back([s, l1, l2] { return check_reflection(s, LSpec{l1, l2}); });
          tasks.emplace_back([s, l1, l2] { return check_convention_G(s, LSpec{l1, l2}); });
        }
      }
    }
  }

  SweepResult out{run_parallel(tasks, cfg.jobs), std::move(grids)};
  for (const auto& r : out.reports) {
    if (r.id() != IdentityId::theorem) continue;
    const int n = *r.params().n;
    auto grid = std::find_if(out.grids.begin(), out.grids.end(), [n](const SweepGrid& g) { return g.n == n; });
    const std::pair<int, int> key{*r.params().l1, *r.params().l2};
    const char sym = grid_symbol(r.status());
    auto [it, fresh] = grid->cells.emplace(key, sym);
    if (!fresh && it->second != sym) it->second = '?';
  }
  sort_reports(out.reports);
  return out;
}

/// One-line count of the grid's cells by category.
inline std::string passing_region_summary(const SweepGrid& g) {
  int pass = 0, boundary = 0, other = 0;
  for (const auto& [key, sym] : g.cells) {
    if (sym == '+') ++pass;
    else if (sym == '-') ++boundary;
    else ++other;
  }
  return "n=" + std::to_string(g.n) + ": " + std::to_string(pass) + " pass, " + std::to_string(boundary) +
         " sign boundary, " + std::to_string(other) + " other, of " + std::to_string(g.cells.size()) + " cells";
}

}  // namespace qroot

#endif  // QROOT_VERIFY_SWEEP_HPP
