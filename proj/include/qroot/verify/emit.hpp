#ifndef QROOT_VERIFY_EMIT_HPP
#define QROOT_VERIFY_EMIT_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qroot/verify/report.hpp"
#include "qroot/verify/sweep.hpp"

namespace qroot {

enum class OutputFormat { text, structured };

struct EmitOptions {
  OutputFormat format = OutputFormat::text;
  bool timing = false;  // structured output: include millis (otherwise null, for byte-stable output)
};

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool timing) {
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  nlohmann::ordered_json j;
  j["identity_id"] = std::string(to_string(r.id()));
  j["n"] = opt(r.params().n);
  j["t"] = opt(r.params().t);
  j["l1"] = opt(r.params().l1);
  j["l2"] = opt(r.params().l2);
  j["status"] = std::string(to_string(r.status()));
  j["witness"] = r.witness().empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.witness());
  j["detail"] = r.detail().empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.detail());
  j["millis"] = timing ? nlohmann::ordered_json(r.elapsed().count()) : nlohmann::ordered_json();
  return j;
}

inline std::string format_params(const Params& p) {
  std::string s;
  auto add = [&](const char* name, const std::optional<int>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += std::string(name) + "=" + std::to_string(*v);
  };
  add("n", p.n);
  add("t", p.t);
  add("l1", p.l1);
  add("l2", p.l2);
  return s;
}

inline std::string to_text(const VerificationReport& r) {
  std::string line = "[" + std::string(to_string(r.status())) + "] " + std::string(to_string(r.id()));
  const std::string params = format_params(r.params());
  if (!params.empty()) line += " " + params;
  line += " (" + std::to_string(r.elapsed().count()) + " ms)";
  if (!r.detail().empty()) line += " " + r.detail();
  if (!r.witness().empty()) line += "\n    witness: " + r.witness();
  return line;
}

struct StatusCounts {
  std::map<Status, int> by_status;
  int total() const {
    int t = 0;
    for (const auto& [s, c] : by_status) t += c;
    return t;
  }
  int failures() const {
    auto it = by_status.find(Status::fail);
    return it == by_status.end() ? 0 : it->second;
  }
};

inline StatusCounts count_statuses(const std::vector<VerificationReport>& reports) {
  StatusCounts c;
  for (const auto& r : reports) ++c.by_status[r.status()];
  return c;
}

inline std::string summary_line(const StatusCounts& c) {
  std::string s = "summary: " + std::to_string(c.total()) + (c.total() == 1 ? " check" : " checks");
  for (const auto& [status, count] : c.by_status) s += ", " + std::to_string(count) + " " + std::string(to_string(status));
  return s;
}

/// Writes one line (text) or one JSON record (structured) per report.
inline void emit_reports(std::ostream& os, const std::vector<VerificationReport>& reports, const EmitOptions& opt) {
  for (const auto& r : reports) {
    if (opt.format == OutputFormat::structured) {
      os << to_json(r, opt.timing).dump() << '\n';
    } else {
      os << to_text(r) << '\n';
    }
  }
}

/// Text rendering of a theorem grid: rows l1, columns l2.
inline void emit_grid(std::ostream& os, const SweepGrid& g) {
  os << "theorem grid n=" << g.n << " (rows l1, columns l2 = " << g.l_min << ".." << g.l_max
     << "; + pass, - sign boundary, x fail, i inapplicable, ? mixed)\n";
  for (int l1 = g.l_min; l1 <= g.l_max; ++l1) {
    std::string row = std::to_string(l1);
    row.insert(0, row.size() < 4 ? 4 - row.size() : 0, ' ');
    row += " ";
    for (int l2 = g.l_min; l2 <= g.l_max; ++l2) row += g.at(l1, l2);
    os << row << '\n';
  }
  os << passing_region_summary(g) << '\n';
}

}  // namespace qroot

#endif  // QROOT_VERIFY_EMIT_HPP
