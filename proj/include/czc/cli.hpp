#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "czc/errors.hpp"

namespace czc::cli {

/// Bad command line: unknown subcommand, missing argument, unknown pattern.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kInternal = 4,
};

struct CommandReport {
  std::string command;
  nlohmann::json inputs;
  nlohmann::json result;
  bool exact = true;

  nlohmann::json to_json() const;
};

/// Runs one subcommand; `args` excludes the program name. Throws UsageError,
/// ParseError, PreconditionError or InvariantError.
CommandReport run_command(const std::vector<std::string>& args);

/// run_command plus rendering and error mapping to exit codes. Reports go
/// to `out` (JSON with --json, otherwise plain text); errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TheoremSummary {
  int max_edges = 0;
  long graphs = 0;
  long trivial = 0;
  long not_trivial = 0;
  long minor_steps_checked = 0;
  long family_checked = 0;
  long fixture_checks = 0;
  /// "K4" / "L3" when that graph was enumerated and found not trivial.
  std::vector<std::string> patterns_flagged;
  std::vector<std::string> violations;

  nlohmann::json to_json() const;
};

/// Enumerates stable graphs with at most max_edges edges and genus >= 2,
/// checks the classifier against the minor test, witness replay, minor
/// closure and block decomposition, compares algebraic and minor verdicts on
/// the subdivision family of K4 and L3, and re-checks the fixture identities.
/// Graphs are processed on `threads` workers (0 = hardware concurrency).
TheoremSummary verify_theorem(int max_edges, unsigned threads = 0);

}  // namespace czc::cli
