#ifndef QROOT_VERIFY_REPORT_HPP
#define QROOT_VERIFY_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "qroot/core/errors.hpp"

namespace qroot {

enum class IdentityId {
  formal5,
  fourterm_termwise,
  eq4_numeric,
  diag_certificate,
  diag_annihilation,
  h_telescope,
  H_recursion,
  eq5,
  partial_fraction,
  theorem,
  corollary,
  short_sum,
  reflection,
  convention_G,
};

inline std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::formal5: return "formal5";
    case IdentityId::fourterm_termwise: return "fourterm-termwise";
    case IdentityId::eq4_numeric: return "eq4-numeric";
    case IdentityId::diag_certificate: return "diag-certificate";
    case IdentityId::diag_annihilation: return "diag-annihilation";
    case IdentityId::h_telescope: return "h-telescope";
    case IdentityId::H_recursion: return "H-recursion";
    case IdentityId::eq5: return "eq5";
    case IdentityId::partial_fraction: return "partial-fraction";
    case IdentityId::theorem: return "theorem";
    case IdentityId::corollary: return "corollary";
    case IdentityId::short_sum: return "short-sum";
    case IdentityId::reflection: return "reflection";
    case IdentityId::convention_G: return "convention-G";
  }
  return "?";
}

/// pass/fail decide the exit status; the rest are reported categories that
/// never do.
enum class Status { pass, fail, degenerate, boundary, inapplicable, informational };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::degenerate: return "degenerate";
    case Status::boundary: return "boundary";
    case Status::inapplicable: return "inapplicable";
    case Status::informational: return "informational";
  }
  return "?";
}

inline bool is_informational(Status s) { return s != Status::pass && s != Status::fail; }

struct Params {
  std::optional<int> n;
  std::optional<int> t;
  std::optional<int> l1;
  std::optional<int> l2;

  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;
};

/// Outcome of one identity check. A failure always carries a nonzero witness
/// and a pass never does.
class VerificationReport {
 public:
  VerificationReport(IdentityId id, Params params, Status status, std::string witness = {}, std::string detail = {})
      : id_(id), params_(params), status_(status), witness_(std::move(witness)), detail_(std::move(detail)) {
    if (status_ == Status::fail && witness_.empty()) throw UsageError("VerificationReport: fail without witness");
    if (status_ == Status::pass && !witness_.empty()) throw UsageError("VerificationReport: pass with witness");
  }

  IdentityId id() const { return id_; }
  const Params& params() const { return params_; }
  Status status() const { return status_; }
  const std::string& witness() const { return witness_; }
  const std::string& detail() const { return detail_; }
  std::chrono::milliseconds elapsed() const { return elapsed_; }

  bool passed() const { return status_ == Status::pass; }
  bool failed() const { return status_ == Status::fail; }

  VerificationReport& with_elapsed(std::chrono::milliseconds ms) {
    elapsed_ = ms;
    return *this;
  }
  VerificationReport& with_detail(std::string d) {
    detail_ = std::move(d);
    return *this;
  }

  /// Ordering key for deterministic emission.
  auto sort_key() const { return std::tie(id_, params_); }

 private:
  IdentityId id_;
  Params params_;
  Status status_;
  std::string witness_;
  std::string detail_;
  std::chrono::milliseconds elapsed_{0};
};

/// Times a callable returning a VerificationReport.
template <class Fn>
VerificationReport timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r = std::forward<Fn>(fn)();
  r.with_elapsed(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start));
  return r;
}

/// Truncates long serialized witnesses to their first `max_chars` characters.
inline std::string clip_witness(std::string s, std::size_t max_chars = 400) {
  if (s.size() <= max_chars) return s;
  std::size_t total = s.size();
  s.resize(max_chars);
  return s + " ... [" + std::to_string(total) + " chars]";
}

}  // namespace qroot

#endif  // QROOT_VERIFY_REPORT_HPP
