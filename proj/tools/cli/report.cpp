#include <iomanip>
#include <ostream>

#include "proxima_cli/commands.hpp"

namespace proxima::cli {

namespace {

constexpr std::size_t kTraceHead = 10;

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void field(std::ostream& out, const char* label, const json& v, int indent = 2) {
  out << std::string(indent, ' ') << std::left << std::setw(27) << label << " " << scalar(v) << "\n";
}

void render_trace(const json& trace, std::ostream& out) {
  const auto& pts = trace["points"];
  const auto& gaps = trace["step_gaps"];
  const auto& res = trace["residuals"];
  const auto& bounds = trace["a_priori_bounds"];
  const std::size_t n = pts.size();
  out << "    trace (" << n << " points, stop: " << scalar(trace["stop_reason"]) << ")\n";
  out << "      " << std::setw(6) << "k" << std::setw(8) << "x_k" << std::setw(26) << "gap"
      << std::setw(26) << "residual" << std::setw(26) << "a-priori bound" << "\n";
  for (std::size_t k = 0; k < n; ++k) {
    if (n > 2 * kTraceHead && k == kTraceHead) {
      out << "      ... " << (n - 2 * kTraceHead) << " steps omitted ...\n";
      k = n - kTraceHead;
    }
    out << "      " << std::setw(6) << k << std::setw(8) << pts[k].dump() << std::setw(26)
        << (k < gaps.size() ? gaps[k].dump() : std::string("-")) << std::setw(26)
        << res[k].dump() << std::setw(26)
        << (k < bounds.size() ? bounds[k].dump() : std::string("-")) << "\n";
  }
}

}  // namespace

void render_text(const json& r, std::ostream& out) {
  out << "command: " << scalar(r.value("command", json("?"))) << "\n";
  for (const char* key : {"instance", "path", "method", "metric", "seed", "alpha_target"}) {
    if (r.contains(key)) field(out, key, r[key], 0);
  }
  if (r.contains("sizes")) {
    out << std::left << std::setw(24) << "sizes" << "|A| = " << r["sizes"]["A"] << ", |B| = "
        << r["sizes"]["B"] << "\n";
  }
  if (r.contains("tolerances")) {
    out << std::left << std::setw(24) << "tolerances" << "eps_prox = "
        << r["tolerances"]["eps_prox"] << ", tol = " << r["tolerances"]["tol"] << "\n";
  }
  for (const char* key : {"pair_distance", "a0_size", "b0_size", "fixed_point", "min_value",
                          "argmin", "argmin_points", "min_equals_pair_distance", "start"}) {
    if (r.contains(key)) field(out, key, r[key], 0);
  }

  if (r.contains("hypotheses")) {
    out << "hypotheses:\n";
    for (const auto& h : r["hypotheses"]) {
      out << "  [" << (h["holds"].get<bool>() ? "pass" : "FAIL") << "] "
          << h["name"].get<std::string>() << "\n";
      out << "         " << scalar(h["detail"]) << "\n";
    }
  }
  if (r.contains("certificate")) {
    out << "contraction certificate:\n";
    for (const auto& [k, v] : r["certificate"].items()) field(out, k.c_str(), v);
  }
  if (r.contains("runs")) {
    for (const auto& run : r["runs"]) {
      out << "run (" << scalar(run["method"]) << "): " << scalar(run["status"]) << "\n";
      for (const char* key : {"error", "failed_hypothesis", "witness"}) {
        if (run.contains(key)) field(out, key, run[key]);
      }
      if (run.contains("result")) {
        for (const auto& [k, v] : run["result"].items()) field(out, k.c_str(), v);
      }
      if (run.contains("verification")) {
        for (const auto& [k, v] : run["verification"].items()) {
          field(out, ("verify." + k).c_str(), v);
        }
      }
      if (run.contains("trace")) render_trace(run["trace"], out);
    }
  }
  if (r.contains("traces_equal")) field(out, "traces_equal", r["traces_equal"], 0);
  if (r.contains("error")) field(out, "error", r["error"], 0);
  field(out, "exit_code", r.value("exit_code", json(0)), 0);
}

}  // namespace proxima::cli
