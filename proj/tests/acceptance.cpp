// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Runtime limits are wall-clock and pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qroot/cli/run.hpp"
#include "qroot/verify/emit.hpp"
#include "qroot/verify/formal_checks.hpp"
#include "qroot/verify/parallel.hpp"
#include "qroot/verify/root_checks.hpp"

namespace {

using qroot::CheckTask;
using qroot::Status;
using qroot::VerificationReport;

constexpr double kFormal5Seconds = 1.0;
constexpr double kFourtermSeconds = 10.0;
constexpr double kCertificateSeconds = 60.0;
constexpr double kTheoremSweepSeconds = 300.0;

struct Verdict {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

std::vector<int> ts(int n) {
  std::vector<int> out;
  for (const auto& r : qroot::primitive_roots(n)) out.push_back(r.t);
  return out;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string where(const VerificationReport& r) { return qroot::to_text(r); }

// Runs tasks in parallel and requires every report to have one of `allowed`.
void require_all(Verdict& v, const std::vector<CheckTask>& tasks, std::initializer_list<Status> allowed) {
  for (const auto& r : qroot::run_parallel(tasks, workers())) {
    bool hit = false;
    for (Status s : allowed) hit = hit || r.status() == s;
    v.require(hit, where(r));
  }
}

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.why = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s [%d] %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", id, name.c_str(), secs);
  if (!v.ok) {
    std::printf("    %s\n", v.why.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

// Times `check` and requires a pass within `limit` seconds.
Verdict timed_formal(const std::function<VerificationReport()>& check, double limit) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = check();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(r.status() == Status::pass, where(r));
  v.require(secs < limit, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  return v;
}

}  // namespace

int main() {
  criterion(1, "five-term identity expands to zero in (a,b,c,d,K), < 1 s",
            [] { return timed_formal([] { return qroot::check_formal5(); }, kFormal5Seconds); });

  criterion(2, "termwise four-term relation in (a,q,L1,L2,K), < 10 s",
            [] { return timed_formal([] { return qroot::check_fourterm_termwise(); }, kFourtermSeconds); });

  criterion(3, "diagonal operator with certificate in (a,q,L,K), < 60 s",
            [] { return timed_formal([] { return qroot::check_diag_certificate(); }, kCertificateSeconds); });

  criterion(4, "telescoping at roots of unity, n = 2..8, all t, l = 1..n-1", [] {
    Verdict v;
    std::vector<CheckTask> tasks;
    for (int n = 2; n <= 8; ++n) {
      for (int t : ts(n)) {
        for (int l = 1; l < n; ++l) tasks.emplace_back([=] { return qroot::check_diag_annihilation(n, t, l); });
      }
    }
    int passed = 0;
    for (const auto& r : qroot::run_parallel(tasks, workers())) {
      v.require(r.status() == Status::pass || r.status() == Status::degenerate, where(r));
      v.require(r.detail().rfind("(i) ok, (ii) ok, (iii) ok", 0) == 0, where(r) + " " + r.detail());
      if (r.status() == Status::pass) ++passed;
    }
    v.require(passed > 0, "no non-degenerate parameter");
    return v;
  });

  criterion(5, "main identity, n = 2..8, all t, 1 <= l1,l2 <= n and (0,0), < 300 s", [] {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckTask> tasks;
    for (int n = 2; n <= 8; ++n) {
      for (int t : ts(n)) {
        tasks.emplace_back([=] { return qroot::check_theorem(n, t, 0, 0); });
        for (int l1 = 1; l1 <= n; ++l1) {
          for (int l2 = 1; l2 <= n; ++l2) tasks.emplace_back([=] { return qroot::check_theorem(n, t, l1, l2); });
        }
      }
    }
    require_all(v, tasks, {Status::pass});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < kTheoremSweepSeconds, "sweep took " + std::to_string(secs) + " s");
    return v;
  });

  criterion(6, "fourth-power form, n = 2..6, identical for every primitive root", [] {
    Verdict v;
    std::vector<CheckTask> tasks;
    for (int n = 2; n <= 6; ++n) {
      for (int t : ts(n)) {
        tasks.emplace_back([=] { return qroot::check_corollary(n, t, 0, 0); });
        for (int l1 = 1; l1 <= n; ++l1) {
          for (int l2 = 1; l2 <= n; ++l2) tasks.emplace_back([=] { return qroot::check_corollary(n, t, l1, l2); });
        }
      }
      for (int l1 = 1; l1 <= n; ++l1) {
        for (int l2 = 1; l2 <= n; ++l2) {
          tasks.emplace_back([=] { return qroot::check_corollary_t_independence(n, {l1, l2}); });
        }
      }
    }
    require_all(v, tasks, {Status::pass});
    return v;
  });

  criterion(7, "base cases: eq5 for n <= 8, H recursion, partial fractions for n <= 20", [] {
    Verdict v;
    std::vector<CheckTask> tasks;
    for (int n = 2; n <= 8; ++n) {
      for (int t : ts(n)) {
        for (int l = 1; l <= n; ++l) tasks.emplace_back([=] { return qroot::check_eq5(n, t, l); });
        tasks.emplace_back([=] { return qroot::check_H_recursion(n, t); });
      }
    }
    for (int n = 1; n <= 20; ++n) {
      for (int t : ts(n)) tasks.emplace_back([=] { return qroot::check_partial_fraction(n, t); });
    }
    require_all(v, tasks, {Status::pass});
    return v;
  });

  criterion(8, "short sum equals the full sum at a = 1, n <= 8, 0 < l1,l2 < n", [] {
    Verdict v;
    std::vector<CheckTask> tasks;
    for (int n = 2; n <= 8; ++n) {
      for (int t : ts(n)) {
        for (int l1 = 1; l1 < n; ++l1) {
          for (int l2 = 1; l2 < n; ++l2) tasks.emplace_back([=] { return qroot::check_short_sum(n, t, l1, l2); });
        }
      }
    }
    require_all(v, tasks, {Status::pass});
    return v;
  });

  criterion(9, "boundary at n = 2, (0,1) and reflection recorded without failing", [] {
    Verdict v;
    VerificationReport b = qroot::check_theorem(2, 1, 0, 1);
    v.require(b.status() == Status::boundary, where(b));
    v.require(b.detail() == "LHS = -RHS", b.detail());
    // Hand expansion at n = 2: LHS + RHS cleared of denominators.
    v.require(b.witness() == "-8*a^6 - 24*a^5 - 16*a^4 + 16*a^3 + 24*a^2 + 8*a", b.witness());

    for (int n = 2; n <= 6; ++n) {
      for (int t : ts(n)) {
        for (int l1 = 1; l1 <= 3; ++l1) {
          for (int l2 = 0; l2 <= n; ++l2) {
            VerificationReport r = qroot::check_reflection(n, t, l1, l2);
            v.require(r.status() == Status::pass, where(r));
          }
        }
      }
    }

    qroot::RunConfig cfg;
    cfg.command = qroot::Command::sweep;
    cfg.n = qroot::IntRange{2, 4};
    cfg.l = qroot::IntRange{-2, 5};
    cfg.format = qroot::OutputFormat::structured;
    cfg.jobs = workers();
    std::ostringstream out, err;
    const int code = qroot::run(cfg, out, err);
    v.require(code == 0, "sweep exit status " + std::to_string(code));
    const std::string rec = R"({"identity_id":"theorem","n":2,"t":1,"l1":0,"l2":1,"status":"boundary",)"
                            R"("witness":"-8*a^6 - 24*a^5 - 16*a^4 + 16*a^3 + 24*a^2 + 8*a","detail":"LHS = -RHS")";
    v.require(out.str().find(rec) != std::string::npos, "boundary record missing from structured output");
    v.require(out.str().find(R"("identity_id":"reflection")") != std::string::npos,
              "reflection records missing from structured output");
    v.require(out.str().find(R"("identity_id":"convention-G")") != std::string::npos &&
                  out.str().find(R"("status":"boundary","witness":"ratio -1")") != std::string::npos,
              "G-side sign record missing from structured output");
    v.require(out.str().find(R"("status":"fail")") == std::string::npos, "sweep recorded a failure");
    return v;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
