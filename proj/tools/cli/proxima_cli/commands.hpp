#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "proxima/instance.hpp"
#include "proxima/oracle.hpp"

namespace proxima::cli {

using json = nlohmann::ordered_json;

/// Exit-code contract of every command; exactly one applies per run.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,          // unparseable file, bad flags, bad start index
  kHypothesisViolation = 2, // some hypothesis of the theorem fails
  kNonConvergence = 3,      // iteration did not reach a verified answer
};

enum class Format { text, json };
enum class Method { induced, direct, both };

/// Flags shared by all commands. Unset values fall back to the instance
/// file, then to library defaults.
struct GlobalOptions {
  std::optional<double> tol;
  std::optional<double> eps_prox;
  std::size_t max_iter = 10'000;
  Format format = Format::text;
};

struct SolveOptions {
  std::optional<std::size_t> start;
  Method method = Method::induced;
  bool full_scan = false;
};

struct Outcome {
  int exit_code = kSuccess;
  json report;
};

Outcome solve(const Instance& instance, const GlobalOptions& global, const SolveOptions& opts);
Outcome certify(const Instance& instance, const GlobalOptions& global, bool full_scan = false);
Outcome oracle(const Instance& instance, const GlobalOptions& global);

/// Full command line, argv[0] excluded: parses, dispatches and prints the
/// report to `out` (diagnostics to `err`). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of any command's report. Traces longer than
/// 20 steps are shown as their first and last 10.
void render_text(const json& report, std::ostream& out);

}  // namespace proxima::cli
