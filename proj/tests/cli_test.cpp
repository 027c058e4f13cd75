#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qroot/cli/options.hpp"
#include "qroot/cli/run.hpp"

using qroot::Command;
using qroot::IntRange;
using qroot::RunConfig;
using qroot::UsageError;

namespace {

qroot::ParsedArgs parse(std::vector<const char*> args) {
  args.insert(args.begin(), "qroot-verify");
  std::ostringstream out, err;
  return qroot::parse_args(static_cast<int>(args.size()), args.data(), out, err);
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = qroot::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliParse, Ranges) {
  EXPECT_EQ(qroot::parse_range("2..6"), (IntRange{2, 6}));
  EXPECT_EQ(qroot::parse_range("-2..8"), (IntRange{-2, 8}));
  EXPECT_EQ(qroot::parse_range("5"), (IntRange{5, 5}));
  EXPECT_THROW(qroot::parse_range("6..2"), UsageError);
  EXPECT_THROW(qroot::parse_range("x..2"), UsageError);
  EXPECT_THROW(qroot::parse_range("3.."), UsageError);
}

TEST(CliParse, Commands) {
  EXPECT_EQ(qroot::parse_command("base-cases"), Command::base_cases);
  EXPECT_EQ(qroot::parse_command("partial-fraction"), Command::partial_fraction);
  EXPECT_THROW(qroot::parse_command("prove-everything"), UsageError);
}

TEST(CliParse, FullFlagSet) {
  auto p = parse({"sweep", "--n", "2..6", "--l", "-2..8", "--format", "structured", "--jobs", "4", "--include-n1"});
  EXPECT_FALSE(p.exit_now);
  const RunConfig& c = p.config;
  EXPECT_EQ(c.command, Command::sweep);
  EXPECT_EQ(c.n, (IntRange{2, 6}));
  EXPECT_EQ(c.l, (IntRange{-2, 8}));
  EXPECT_EQ(c.format, qroot::OutputFormat::structured);
  EXPECT_EQ(c.jobs, 4u);
  EXPECT_TRUE(c.include_n1);
  EXPECT_FALSE(c.t.has_value());
}

TEST(CliParse, DefaultsToAll) {
  auto p = parse({});
  EXPECT_EQ(p.config.command, Command::all);
  EXPECT_EQ(p.config.jobs, 1u);
}

TEST(CliParse, SingleParameters) {
  auto p = parse({"theorem", "--n", "3", "--t", "2", "--l1", "1", "--l2", "-3"});
  EXPECT_EQ(p.config.t, 2);
  EXPECT_EQ(p.config.l1, 1);
  EXPECT_EQ(p.config.l2, -3);
}

TEST(CliParse, InvalidFlagsExitTwo) {
  auto p = parse({"--no-such-flag"});
  EXPECT_TRUE(p.exit_now);
  EXPECT_EQ(p.exit_code, 2);
  auto z = parse({"--jobs", "0"});
  EXPECT_TRUE(z.exit_now);
  EXPECT_EQ(z.exit_code, 2);
  auto h = parse({"--help"});
  EXPECT_TRUE(h.exit_now);
  EXPECT_EQ(h.exit_code, 0);
}

TEST(CliParse, InvalidValuesAreUsageErrors) {
  EXPECT_THROW(parse({"theorem", "--format", "xml"}), UsageError);
  EXPECT_THROW(parse({"bogus"}), UsageError);
  EXPECT_THROW(parse({"theorem", "--n", "2..5", "--t", "1"}), UsageError);
  EXPECT_THROW(parse({"theorem", "--l", "1..2", "--l1", "1"}), UsageError);
  EXPECT_THROW(parse({"theorem", "--n", "0..3"}), UsageError);
}

TEST(CliRun, FormalCommand) {
  RunConfig cfg;
  cfg.command = Command::formal;
  Outcome o = run(cfg);
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("summary: 4 checks, 4 pass\n"), std::string::npos) << o.out;
}

TEST(CliRun, TheoremPrintsBothSides) {
  RunConfig cfg;
  cfg.command = Command::theorem;
  cfg.n = IntRange{2, 2};
  cfg.l1 = 1;
  cfg.l2 = 1;
  Outcome o = run(cfg);
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("[pass] theorem n=2 t=1 l1=1 l2=1"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("F_n(a)/F_n(1) = (4*a) / (a^2 + 2*a + 1)"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("closed form  = (4*a) / (a^2 + 2*a + 1)"), std::string::npos) << o.out;
}

TEST(CliRun, BoundaryDoesNotFailTheRun) {
  RunConfig cfg;
  cfg.command = Command::theorem;
  cfg.n = IntRange{2, 2};
  cfg.l1 = 0;
  cfg.l2 = 1;
  Outcome o = run(cfg);
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("[boundary] theorem n=2 t=1 l1=0 l2=1"), std::string::npos);
}

TEST(CliRun, StructuredSweepIsByteStable) {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.n = IntRange{2, 3};
  cfg.l = IntRange{-2, 4};
  cfg.format = qroot::OutputFormat::structured;
  cfg.jobs = 3;
  Outcome a = run(cfg);
  cfg.jobs = 1;
  Outcome b = run(cfg);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(R"("identity_id":"theorem","n":2,"t":1,"l1":0,"l2":1,"status":"boundary")"), std::string::npos);
  EXPECT_NE(a.err.find("summary:"), std::string::npos);
  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line)) EXPECT_TRUE(nlohmann::json::parse(line).is_object());
}

TEST(CliRun, UsageErrorExitsTwo) {
  RunConfig cfg;
  cfg.command = Command::theorem;
  cfg.n = IntRange{3, 3};
  cfg.t = 3;  // not coprime to 3
  Outcome o = run(cfg);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("usage error"), std::string::npos);
}

TEST(CliRun, ExitStatusReflectsFailures) {
  qroot::RunResult r;
  r.reports.emplace_back(qroot::IdentityId::theorem, qroot::Params{}, qroot::Status::boundary, "w");
  EXPECT_EQ(qroot::exit_status(r), 0);
  r.reports.emplace_back(qroot::IdentityId::theorem, qroot::Params{}, qroot::Status::fail, "w");
  EXPECT_EQ(qroot::exit_status(r), 1);
}

TEST(CliRun, BaseCasesSmall) {
  RunConfig cfg;
  cfg.command = Command::base_cases;
  cfg.n = IntRange{2, 4};
  cfg.jobs = 2;
  Outcome o = run(cfg);
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out.find("[fail]"), std::string::npos);
}
