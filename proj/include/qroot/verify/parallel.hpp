#ifndef QROOT_VERIFY_PARALLEL_HPP
#define QROOT_VERIFY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "qroot/core/errors.hpp"
#include "qroot/verify/report.hpp"

namespace qroot {

using CheckTask = std::function<VerificationReport()>;

/// Runs independent checks on `jobs` threads. Results come back in task
/// order regardless of scheduling; the first exception thrown by any task
/// is rethrown after all threads join.
inline std::vector<VerificationReport> run_parallel(const std::vector<CheckTask>& tasks, unsigned jobs = 1) {
  if (jobs == 0) throw UsageError("run_parallel: jobs must be >= 1");
  std::vector<std::optional<VerificationReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        slots[i].emplace(tasks[i]());
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = tasks.size();
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<VerificationReport> out;
  out.reserve(tasks.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Sorts reports by (identity, n, t, l1, l2); stable for equal keys.
inline void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& x, const VerificationReport& y) { return x.sort_key() < y.sort_key(); });
}

}  // namespace qroot

#endif  // QROOT_VERIFY_PARALLEL_HPP
