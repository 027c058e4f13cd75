#ifndef QROOT_CLI_OPTIONS_HPP
#define QROOT_CLI_OPTIONS_HPP

#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qroot/cli/run.hpp"

// Command-line parsing for qroot-verify (requires the CLI11 single header).

namespace qroot {

struct ParsedArgs {
  RunConfig config;
  bool exit_now = false;  // help or version was printed
  int exit_code = 0;
};

/// Builds the option set into `app`, writing parsed values into `cfg`.
inline void configure_app(CLI::App& app, RunConfig& cfg, std::string& command, std::string& n, std::string& t,
                          std::string& l, std::string& format) {
  app.description("Exact verification of q-series identities at roots of unity.");
  app.add_option("command", command,
                 "formal | theorem | corollary | certificates | base-cases | partial-fraction | sweep | all")
      ->default_val("all");
  app.add_option("--n", n, "n or range A..B (default depends on the command)");
  app.add_option("--t", t, "primitive root exponent, or 'all' (default)")->default_val("all");
  app.add_option("--l1", cfg.l1, "first parameter");
  app.add_option("--l2", cfg.l2, "second parameter");
  app.add_option("--l", l, "parameter range A..B (diagonal l, or both l1 and l2)");
  app.add_option("--format", format, "text | structured")->default_val("text");
  app.add_option("--jobs", cfg.jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  app.add_flag("--include-n1", cfg.include_n1, "include n = 1 (informational) in theorem runs");
  app.add_flag("--timing", cfg.timing, "record millis in structured output");
}

/// Parses argv into a RunConfig. Throws UsageError on invalid values; CLI11
/// parse errors are reported through the returned exit code.
inline ParsedArgs parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParsedArgs parsed;
  CLI::App app{"", "qroot-verify"};
  std::string command, n, t, l, format;
  configure_app(app, parsed.config, command, n, t, l, format);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    parsed.exit_now = true;
    parsed.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    return parsed;
  }
  RunConfig& cfg = parsed.config;
  cfg.command = parse_command(command);
  if (!n.empty()) cfg.n = parse_range(n);
  if (t != "all") cfg.t = detail::parse_int(t, "--t");
  if (!l.empty()) cfg.l = parse_range(l);
  if (format == "text") cfg.format = OutputFormat::text;
  else if (format == "structured") cfg.format = OutputFormat::structured;
  else throw UsageError("unknown format '" + format + "'");
  cfg.validate();
  return parsed;
}

}  // namespace qroot

#endif  // QROOT_CLI_OPTIONS_HPP
