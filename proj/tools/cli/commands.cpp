#include "proxima_cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "proxima/contraction.hpp"
#include "proxima/metric.hpp"
#include "proxima/pair_geometry.hpp"
#include "proxima_cli/instance_io.hpp"

namespace proxima::cli {

namespace {

constexpr std::size_t kMetricSampleBudget = 1000;

json point_json(const Point& p) {
  if (p.is_index()) return p.index();
  return p.coords();
}

json index_pair(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

Tolerances effective(const Instance& inst, const GlobalOptions& g) {
  Tolerances t = inst.tolerances;
  if (g.tol) t.tol = *g.tol;
  if (g.eps_prox) t.eps_prox = *g.eps_prox;
  return t;
}

// Geometry, the hypothesis checklist and the contraction certificate: the
// common part of solve and certify.
struct Analysis {
  Tolerances tol;
  PairGeometry geom;
  std::optional<InducedMap> induced;
  std::optional<ContractionCertificate> cert;
  bool all_hold = true;
  json report;
};

void add_hypothesis(Analysis& an, const std::string& name, bool holds, json detail) {
  an.all_hold = an.all_hold && holds;
  an.report["hypotheses"].push_back({{"name", name}, {"holds", holds}, {"detail", std::move(detail)}});
}

Analysis analyse(const Instance& inst, const GlobalOptions& g, bool full_scan) {
  Analysis an;
  an.tol = effective(inst, g);
  const SetPair& sp = inst.pair;
  an.geom = proximal_subsets(sp, an.tol.eps_prox);
  const auto& geom = an.geom;

  json& r = an.report;
  r["metric"] = to_string(sp.metric().kind());
  r["sizes"] = {{"A", sp.a().size()}, {"B", sp.b().size()}};
  r["tolerances"] = {{"eps_prox", an.tol.eps_prox}, {"tol", an.tol.tol}};
  r["pair_distance"] = geom.pair_distance;
  r["a0_size"] = geom.a0.size();
  r["b0_size"] = geom.b0.size();
  r["hypotheses"] = json::array();

  add_hypothesis(an, "A and B are non-void closed subsets", true,
                 "finite nonempty sets are closed");

  const MetricReport mr = validate_metric(sp.metric(), kMetricSampleBudget);
  json metric_detail = {{"exhaustive", mr.exhaustive}, {"triples_checked", mr.triples_checked}};
  if (mr.passed()) {
    metric_detail["note"] = "metric axioms hold; a finite metric space is complete";
  } else {
    json violations = json::array();
    for (const auto& v : mr.violations) {
      json w = json::array();
      for (const auto& p : v.witness) w.push_back(point_json(p));
      violations.push_back({{"axiom", to_string(v.axiom)}, {"witness", w}, {"detail", v.detail}});
    }
    metric_detail["violations"] = std::move(violations);
  }
  add_hypothesis(an, "(M, d) is a complete metric space", mr.passed(), std::move(metric_detail));

  const auto compact = check_approximative_compactness(sp);
  add_hypothesis(an, "B is approximatively compact with respect to A", true,
                 {{"verdict", "holds-trivially"}, {"justification", std::string(justification(compact))}});

  const bool nonvoid = !geom.a0.empty() && !geom.b0.empty();
  add_hypothesis(an, "A0 and B0 are non-void", nonvoid,
                 {{"a0_size", geom.a0.size()},
                  {"b0_size", geom.b0.size()},
                  {"note", "A0 is finite, hence closed"}});

  json escape = nullptr;
  for (std::size_t x : geom.a0) {
    const std::size_t y = inst.map(x);
    if (!geom.in_b0(y)) {
      escape = {{"a_index", x}, {"b_index", y}};
      break;
    }
  }
  add_hypothesis(an, "T(A0) ⊆ B0", escape.is_null(),
                 escape.is_null() ? json("every x in A0 has T(x) in B0") : escape);

  json contraction_detail;
  bool contraction_holds = false;
  try {
    an.induced = build_induced_map(geom, inst.map);
  } catch (const HypothesisViolation&) {
    // Already reported above; the wide certificate below needs no S.
  } catch (const NonUniquePartner& e) {
    contraction_detail["non_unique_partner"] = {{"a_index", e.a_index()},
                                                {"b_index", e.b_index()},
                                                {"partners", json::array({e.partners().first, e.partners().second})}};
  }
  const bool wide = full_scan || !an.induced;
  an.cert = wide ? certify_proximal_contraction(sp, geom, inst.map)
                 : certify_contraction(sp, *an.induced);
  const auto& cert = *an.cert;
  json cj = {{"scope", wide ? "A" : "A0"},
             {"alpha_hat", cert.alpha_hat},
             {"witness", index_pair(cert.witness)},
             {"witness_images", index_pair(cert.witness_images)},
             {"pair_count", cert.pair_count},
             {"verdict", to_string(cert.verdict)}};
  if (inst.declared_alpha) {
    cj["declared_alpha"] = *inst.declared_alpha;
    cj["declared_alpha_consistent"] = *inst.declared_alpha >= cert.alpha_hat;
  } else {
    cj["declared_alpha"] = nullptr;
    cj["declared_alpha_consistent"] = nullptr;
  }
  r["certificate"] = cj;
  contraction_holds = cert.is_contraction() && !contraction_detail.contains("non_unique_partner");
  contraction_detail["alpha_hat"] = cert.alpha_hat;
  contraction_detail["verdict"] = to_string(cert.verdict);
  contraction_detail["witness"] = index_pair(cert.witness);
  add_hypothesis(an, "T is a proximal contraction", contraction_holds, std::move(contraction_detail));
  return an;
}

json trace_json(const IterationTrace& t) {
  return {{"points", t.points},
          {"step_gaps", t.step_gaps},
          {"residuals", t.residuals},
          {"a_priori_bounds", t.a_priori_bounds},
          {"stop_reason", to_string(t.stop_reason)}};
}

struct Run {
  json report;
  std::optional<IterationTrace> trace;
  bool verified = false;
  bool hypothesis_error = false;
};

Run run_method(const char* name, const Instance& inst, const Analysis& an, std::size_t start,
               const GlobalOptions& g) {
  Run run;
  run.report["method"] = name;
  IterationOptions io{an.tol.tol, g.max_iter, std::nullopt};
  if (an.cert) io.alpha = an.cert->alpha_hat;
  const bool induced = std::string(name) == "induced";
  try {
    BestProximityResult res;
    if (induced) {
      if (!an.induced) {
        run.hypothesis_error = true;
        run.report["status"] = "error";
        run.report["error"] = "induced map S is undefined for this instance";
        return run;
      }
      res = banach_iterate(inst.pair, an.geom, inst.map, *an.induced, start, io);
    } else {
      res = direct_iterate(inst.pair, an.geom, inst.map, start, io);
    }
    const VerificationReport v = verify_result(res, inst.pair, an.geom, inst.map, an.tol.tol,
                                               an.induced ? &*an.induced : nullptr);
    run.verified = res.trace.stop_reason == StopReason::converged && v.passed();
    run.report["status"] = to_string(res.trace.stop_reason);
    run.report["result"] = {{"index", res.point},
                            {"point", point_json(inst.pair.a()[res.point])},
                            {"residual", res.residual},
                            {"iterations", res.iterations},
                            {"guaranteed", res.guaranteed}};
    run.report["verification"] = {{"residual", v.residual},
                                  {"residual_within_tol", v.residual_within_tol},
                                  {"lower_bound_holds", v.lower_bound_holds},
                                  {"fixed_under_s", v.fixed_under_s ? json(*v.fixed_under_s) : json(nullptr)},
                                  {"passed", v.passed()}};
    run.trace = std::move(res.trace);
  } catch (const HypothesisViolation& e) {
    run.hypothesis_error = true;
    run.report["status"] = "error";
    run.report["error"] = e.what();
    run.report["failed_hypothesis"] = std::string(e.hypothesis());
    run.report["witness"] = {{"a_index", e.a_index()}, {"b_index", e.b_index()}};
    run.trace = e.partial_trace();
  } catch (const NonUniquePartner& e) {
    run.hypothesis_error = true;
    run.report["status"] = "error";
    run.report["error"] = e.what();
    run.report["failed_hypothesis"] = "T is a proximal contraction";
    run.report["witness"] = {{"a_index", e.a_index()},
                             {"b_index", e.b_index()},
                             {"partners", json::array({e.partners().first, e.partners().second})}};
    run.trace = e.partial_trace();
  } catch (const MaxIterationsExceeded& e) {
    run.report["status"] = "max-iterations";
    run.report["error"] = e.what();
    run.trace = e.partial_trace();
  }
  if (run.trace) run.report["trace"] = trace_json(*run.trace);
  return run;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::induced: return "induced";
    case Method::direct: return "direct";
    case Method::both: return "both";
  }
  return "induced";
}

}  // namespace

Outcome solve(const Instance& inst, const GlobalOptions& g, const SolveOptions& opts) {
  Analysis an = analyse(inst, g, opts.full_scan);
  Outcome out;
  json& r = an.report;
  {
    json head = {{"command", "solve"}, {"method", method_name(opts.method)}};
    head.update(r);
    r = std::move(head);
  }

  if (opts.start && *opts.start >= inst.pair.a().size()) {
    r["error"] = "start index " + std::to_string(*opts.start) + " is outside A";
    out.exit_code = kUsageError;
  } else if (opts.start && !an.geom.in_a0(*opts.start)) {
    r["error"] = StartNotInA0(*opts.start).what();
    out.exit_code = kUsageError;
  } else if (an.geom.a0.empty()) {
    r["error"] = "A0 is empty; there is nothing to iterate";
    out.exit_code = kHypothesisViolation;
  } else {
    const std::size_t start = opts.start.value_or(an.geom.a0.front());
    r["start"] = start;
    r["runs"] = json::array();
    std::vector<Run> runs;
    if (opts.method != Method::direct) runs.push_back(run_method("induced", inst, an, start, g));
    if (opts.method != Method::induced) runs.push_back(run_method("direct", inst, an, start, g));
    bool verified = true;
    for (auto& run : runs) {
      verified = verified && run.verified;
      r["runs"].push_back(run.report);
    }
    bool equal = true;
    if (runs.size() == 2) {
      equal = runs[0].trace && runs[1].trace && runs[0].trace->points == runs[1].trace->points;
      r["traces_equal"] = equal;
    }
    const bool hyp_error = std::any_of(runs.begin(), runs.end(),
                                       [](const Run& x) { return x.hypothesis_error; });
    if (!an.all_hold || hyp_error) {
      out.exit_code = kHypothesisViolation;
    } else if (!verified || !equal) {
      out.exit_code = kNonConvergence;
    }
  }
  r["exit_code"] = out.exit_code;
  out.report = std::move(r);
  return out;
}

Outcome certify(const Instance& inst, const GlobalOptions& g, bool full_scan) {
  Analysis an = analyse(inst, g, full_scan);
  Outcome out;
  out.exit_code = an.all_hold ? kSuccess : kHypothesisViolation;
  json head = {{"command", "certify"}};
  head.update(an.report);
  an.report = std::move(head);
  an.report["exit_code"] = out.exit_code;
  out.report = std::move(an.report);
  return out;
}

Outcome oracle(const Instance& inst, const GlobalOptions& g) {
  const Tolerances tol = effective(inst, g);
  const OracleResult o = brute_force_solve(inst.pair, inst.map, tol.eps_prox);
  Outcome out;
  out.exit_code = o.best_proximity_exists ? kSuccess : kHypothesisViolation;
  json points = json::array();
  for (std::size_t i : o.argmin) points.push_back(point_json(inst.pair.a()[i]));
  out.report = {{"command", "oracle"},
                {"metric", to_string(inst.pair.metric().kind())},
                {"sizes", {{"A", inst.pair.a().size()}, {"B", inst.pair.b().size()}}},
                {"tolerances", {{"eps_prox", tol.eps_prox}, {"tol", tol.tol}}},
                {"pair_distance", o.pair_distance},
                {"min_value", o.min_value},
                {"argmin", o.argmin},
                {"argmin_points", points},
                {"min_equals_pair_distance", o.best_proximity_exists},
                {"exit_code", out.exit_code}};
  return out;
}

namespace {

void print(const Outcome& o, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << o.report.dump(2) << "\n";
  } else {
    render_text(o.report, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Best proximity points of proximal contractions via the induced self-map", "proxima"};
  app.require_subcommand(1);

  GlobalOptions g;
  double tol = 0.0;
  double eps = 0.0;
  std::string format = "text";
  auto* tol_opt = app.add_option("--tol", tol, "Convergence tolerance (default 1e-9)")
                      ->check(CLI::PositiveNumber);
  auto* eps_opt = app.add_option("--eps-prox", eps, "Proximity tolerance for d(x, y) = d(A, B)")
                      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-iter", g.max_iter, "Maximum iterations (default 10000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string path;
  SolveOptions sopts;
  std::size_t start = 0;
  std::string method = "induced";

  auto* solve_cmd = app.add_subcommand("solve", "Iterate to the best proximity point");
  solve_cmd->fallthrough();
  solve_cmd->add_option("instance", path, "Instance file")->required();
  auto* start_opt = solve_cmd->add_option("--start-index", start, "Position in A to start from");
  solve_cmd->add_option("--method", method, "Iteration scheme")
      ->check(CLI::IsMember({"induced", "direct", "both"}));
  solve_cmd->add_flag("--full-scan", sopts.full_scan, "Certify alpha over all of A");

  bool certify_full = false;
  auto* certify_cmd = app.add_subcommand("certify", "Check hypotheses and certify alpha");
  certify_cmd->fallthrough();
  certify_cmd->add_option("instance", path, "Instance file")->required();
  certify_cmd->add_flag("--full-scan", certify_full, "Certify alpha over all of A");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimisation of d(x, T(x))");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("instance", path, "Instance file")->required();

  GeneratorConfig cfg;
  std::string kind = "euclidean";
  std::string out_path;
  auto* gen_cmd = app.add_subcommand("generate", "Write a random instance with a known answer");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--seed", cfg.seed, "Generator seed");
  gen_cmd->add_option("--alpha", cfg.alpha_target, "Contraction constant in [0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--a-size", cfg.a_size, "Requested |A|")->check(CLI::PositiveNumber);
  auto* b_size_opt = gen_cmd->add_option("--b-size", cfg.b_size, "Requested slab points in B")
                         ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--decoys", cfg.decoy_count, "Far points added to B");
  gen_cmd->add_option("--gap", cfg.slab_gap, "Slab gap d(A, B)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--dimension", cfg.dimension, "Cross-section dimension")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--kind", kind, "Space kind")
      ->check(CLI::IsMember({"euclidean", "explicit-matrix"}));
  gen_cmd->add_option("--out,-o", out_path, "Output instance file")->required();

  std::vector<std::string> argv_store{"proxima"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kSuccess : kUsageError;
  }
  if (*tol_opt) g.tol = tol;
  if (*eps_opt) g.eps_prox = eps;
  g.format = format == "json" ? Format::json : Format::text;

  try {
    if (*gen_cmd) {
      if (cfg.alpha_target >= 1.0) {
        err << "error: --alpha must be < 1\n";
        return kUsageError;
      }
      if (!*b_size_opt) cfg.b_size = cfg.a_size;
      cfg.space_kind = kind == "euclidean" ? MetricKind::euclidean : MetricKind::explicit_matrix;
      GeneratedInstance gi = generate_instance(cfg);
      if (g.tol) gi.instance.tolerances.tol = *g.tol;
      if (g.eps_prox) gi.instance.tolerances.eps_prox = *g.eps_prox;
      save_instance(gi.instance, out_path);
      Outcome o;
      o.report = {{"command", "generate"},
                  {"path", out_path},
                  {"seed", cfg.seed},
                  {"alpha_target", cfg.alpha_target},
                  {"metric", kind},
                  {"sizes", {{"A", gi.instance.pair.a().size()}, {"B", gi.instance.pair.b().size()}}},
                  {"fixed_point", gi.fixed_point},
                  {"exit_code", kSuccess}};
      print(o, g.format, out);
      return kSuccess;
    }

    const Instance inst = load_instance(path);
    Outcome o;
    if (*solve_cmd) {
      if (*start_opt) sopts.start = start;
      sopts.method = method == "direct" ? Method::direct
                     : method == "both" ? Method::both
                                        : Method::induced;
      o = solve(inst, g, sopts);
    } else if (*certify_cmd) {
      o = certify(inst, g, certify_full);
    } else {
      o = oracle(inst, g);
    }
    o.report["instance"] = path;
    print(o, g.format, out);
    return o.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace proxima::cli
