// Batch harness: configured solver runs with verification checks, identity
// batteries, and rate comparisons. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or config error.
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "inclusion/inclusion.hpp"
#include "json.hpp"

using namespace inclusion;
using nlohmann::json;

namespace {

struct CheckFlags {
  bool v_descent = true;
  bool u_descent = true;
  bool identities = false;
  bool envelopes = true;
  bool sequence_bound = false;
  bool gap_examples = false;
};

struct Experiment {
  ProblemSpec problem;
  SolverConfig solver;
  std::vector<unsigned long> seeds = {0};
  std::string trace_name = "trace.csv";
  std::string report_name = "report.json";
  CheckFlags checks;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
}

ConstraintSpec parse_constraint(const json& j) {
  const std::string kind = j.value("kind", "none");
  if (kind == "none") return ConstraintSpec::none();
  if (kind == "box") {
    if (j.contains("lower") || j.contains("upper")) {
      const auto lo = j.at("lower").get<std::vector<double>>();
      const auto hi = j.at("upper").get<std::vector<double>>();
      return ConstraintSpec::box(
          Eigen::Map<const DenseVector>(lo.data(), Index(lo.size())),
          Eigen::Map<const DenseVector>(hi.data(), Index(hi.size())));
    }
    return ConstraintSpec::sym_box(j.value("halfwidth", 1.0));
  }
  if (kind == "ball") return ConstraintSpec::ball(j.value("radius", 1.0));
  throw ConfigError("constraint kind must be none, box, or ball; got " + kind);
}

ProblemSpec parse_problem(const json& j) {
  ProblemSpec spec;
  spec.name = j.at("name").get<std::string>();
  if (j.contains("scalars"))
    for (const auto& [key, value] : j.at("scalars").items())
      spec.scalars[key] = value.get<double>();
  if (j.contains("matrix")) {
    const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
    if (rows.empty() || rows[0].empty())
      throw ConfigError("problem.matrix must be a nonempty array of rows");
    Eigen::MatrixXd m(Index(rows.size()), Index(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size())
        throw ConfigError("problem.matrix rows have uneven lengths");
      for (size_t jj = 0; jj < rows[i].size(); ++jj)
        m(Index(i), Index(jj)) = rows[i][jj];
    }
    spec.matrix = std::move(m);
  } else if (j.contains("matrix_file")) {
    spec.matrix = load_matrix_text(j.at("matrix_file").get<std::string>());
  }
  if (j.contains("constraint"))
    spec.constraint = parse_constraint(j.at("constraint"));
  return spec;
}

SolverConfig parse_solver(const json& j) {
  SolverConfig c;
  const std::string alg = j.value("algorithm", "eag");
  const auto parsed = algorithm_from_name(alg);
  if (!parsed) throw ConfigError("solver.algorithm must be eag, as, or eg");
  c.algorithm = *parsed;
  c.eta = j.value("eta", 0.0);
  c.delta = j.value("delta", 0.0);
  c.max_iters = j.value("max_iters", 1000L);
  c.target_residual = j.value("target_residual", 0.0);
  c.fit_k_min = j.value("fit_k_min", 50L);
  c.check_envelope = j.value("check_envelope", true);
  if (j.contains("z0")) {
    const auto z = j.at("z0").get<std::vector<double>>();
    c.z0 = Eigen::Map<const DenseVector>(z.data(), Index(z.size()));
  }
  return c;
}

Experiment parse_experiment(const json& j) {
  Experiment e;
  e.problem = parse_problem(j.at("problem"));
  if (j.contains("solver")) e.solver = parse_solver(j.at("solver"));
  if (j.contains("seeds")) {
    e.seeds = j.at("seeds").get<std::vector<unsigned long>>();
    if (e.seeds.empty()) throw ConfigError("seeds must be nonempty when given");
  }
  if (j.contains("outputs")) {
    e.trace_name = j.at("outputs").value("trace", e.trace_name);
    e.report_name = j.at("outputs").value("report", e.report_name);
  }
  if (j.contains("checks")) {
    const json& c = j.at("checks");
    e.checks.v_descent = c.value("v_descent", e.checks.v_descent);
    e.checks.u_descent = c.value("u_descent", e.checks.u_descent);
    e.checks.identities = c.value("identities", e.checks.identities);
    e.checks.envelopes = c.value("envelopes", e.checks.envelopes);
    e.checks.sequence_bound = c.value("sequence_bound", e.checks.sequence_bound);
    e.checks.gap_examples = c.value("gap_examples", e.checks.gap_examples);
  }
  return e;
}

long thread_cap() {
  if (const char* env = std::getenv("INCLUSION_ACCEL_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1)
      throw ConfigError("INCLUSION_ACCEL_THREADS must be a positive integer");
    return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : long(hw);
}

std::string output_path(const std::string& out_dir, const std::string& name) {
  if (out_dir.empty()) return name;
  return (std::filesystem::path(out_dir) / name).string();
}

std::string seed_suffixed(const std::string& path, unsigned long seed,
                          bool multi) {
  if (!multi) return path;
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path();
  out /= p.stem().string() + "_seed" + std::to_string(seed) +
         p.extension().string();
  return out.string();
}

struct CheckOutcome {
  std::string name;
  std::string status;  // pass, fail, or skipped
  std::string detail;
};

DenseVector gaussian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  DenseVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

CheckOutcome check_identities_battery(unsigned long seed) {
  std::mt19937_64 rng(seed * 2654435761ULL + 11ULL);
  std::uniform_real_distribution<double> up_eag(0.05, 0.32);
  std::uniform_real_distribution<double> up_as(0.05, 0.9);
  std::uniform_real_distribution<double> uq(1.0, 30.0);
  std::uniform_real_distribution<double> ur(-0.35, 0.0);
  for (Index dim : {Index(1), Index(3), Index(8)}) {
    for (int s = 0; s < 100; ++s) {
      const IdentityCheck a = verify_identity_eag(
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), gaussian(dim, rng), up_eag(rng), uq(rng));
      const IdentityCheck b = verify_identity_as(
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), up_as(rng), uq(rng), ur(rng));
      if (!a.ok(1e-9) || !b.ok(1e-9))
        return {"identities", "fail",
                "imbalance at dim " + std::to_string(dim) + " draw " +
                    std::to_string(s)};
    }
  }
  return {"identities", "pass", "600 draws balanced"};
}

CheckOutcome check_gap_examples() {
  const ProblemInstance p = make_identity_1d();
  DenseVector x(1);
  x[0] = 0.5;
  if (natural_residual(p.f, p.a, x) != 0.5)
    return {"gap_examples", "fail", "natural residual is not exactly 0.5"};
  const double strong = gap_svi(p.f, p.projection_set(), {x, 1.0});
  if (std::abs(strong - 0.25) > 1e-10)
    return {"gap_examples", "fail", "strong gap " + std::to_string(strong)};
  const GapBound weak = gap_mvi_grid(p.f, p.projection_set(), {x, 1.0}, 10000);
  if (std::abs(weak.value - 0.0625) > 1e-3)
    return {"gap_examples", "fail", "weak gap " + std::to_string(weak.value)};
  return {"gap_examples", "pass", ""};
}

std::vector<CheckOutcome> run_checks(const ProblemInstance& problem,
                                     const Experiment& exp,
                                     const RunReport& rep,
                                     unsigned long seed) {
  std::vector<CheckOutcome> out;
  const Algorithm alg = rep.algorithm;

  if (rep.stop_reason == StopReason::NonFinite)
    out.push_back({"finite_run", "fail",
                   "iterates left the finite range at k > " +
                       std::to_string(rep.records.size())});

  if (exp.checks.v_descent) {
    if (alg != Algorithm::Eag) {
      out.push_back({"v_descent", "skipped", "only the anchored"
                     " extragradient method carries this guarantee"});
    } else {
      const PotentialTrace tr =
          check_v_descent(rep.records, rep.eta, problem.lipschitz);
      out.push_back(tr.violations == 0
                        ? CheckOutcome{"v_descent", "pass",
                                       std::to_string(tr.steps.size()) +
                                           " steps"}
                        : CheckOutcome{"v_descent", "fail",
                                       std::to_string(tr.violations) +
                                           " violations, worst excess " +
                                           std::to_string(tr.worst_excess)});
    }
  }

  if (exp.checks.u_descent) {
    if (alg != Algorithm::As) {
      out.push_back({"u_descent", "skipped",
                     "only the splitting method carries this guarantee"});
    } else {
      const PotentialTrace tr = check_u_descent(rep.records);
      out.push_back(tr.violations == 0
                        ? CheckOutcome{"u_descent", "pass",
                                       std::to_string(tr.steps.size()) +
                                           " steps"}
                        : CheckOutcome{"u_descent", "fail",
                                       std::to_string(tr.violations) +
                                           " violations"});
    }
  }

  if (exp.checks.envelopes) {
    switch (rep.envelope_verdict) {
      case EnvelopeVerdict::Pass:
        out.push_back({"envelopes", "pass",
                       "margin " + std::to_string(rep.envelope_margin)});
        break;
      case EnvelopeVerdict::NotAssessable:
        out.push_back({"envelopes", "skipped",
                       "no known solution or step size outside the window"});
        break;
      case EnvelopeVerdict::Fail:
        out.push_back({"envelopes", "fail",
                       "margin " + std::to_string(rep.envelope_margin)});
        break;
    }
  }

  if (exp.checks.identities) out.push_back(check_identities_battery(seed));

  if (exp.checks.sequence_bound) {
    const double el = rep.eta * problem.lipschitz;
    if (alg != Algorithm::Eag || !problem.z_star || rep.records.size() < 12 ||
        !(el > 0.0) || !(el < 1.0 / std::sqrt(3.0))) {
      out.push_back({"sequence_bound", "skipped",
                     "needs a conforming anchored-extragradient run with a "
                     "known solution"});
    } else {
      DenseVector z_begin =
          exp.solver.z0 ? *exp.solver.z0 : DenseVector::Ones(problem.dim());
      if (problem.projection_admissible())
        z_begin = problem.projection_set().project(z_begin);
      const double d2 = (z_begin - *problem.z_star).squaredNorm();
      std::vector<double> a;
      for (const auto& r : rep.records)
        if (r.k >= 2)
          a.push_back((rep.eta * r.cert_residual) *
                      (rep.eta * r.cert_residual) / d2);
      const SequenceVerdict v = check_sequence_bound(a, 11.0, el * el);
      out.push_back(
          v.status == SequenceVerdict::Status::Satisfied
              ? CheckOutcome{"sequence_bound", "pass", ""}
              : CheckOutcome{"sequence_bound", "fail",
                             "failed at k=" + std::to_string(v.first_failure_k)});
    }
  }

  if (exp.checks.gap_examples) out.push_back(check_gap_examples());
  return out;
}

struct SeedResult {
  unsigned long seed = 0;
  bool configured = false;  // run() was reached without config errors
  std::string error;        // config-class failure text
  RunReport rep;
  std::vector<CheckOutcome> checks;
  std::string trace_path;
};

json report_json(const Experiment& exp, const std::vector<SeedResult>& results) {
  json out;
  out["problem"] = exp.problem.name;
  out["algorithm"] = algorithm_name(exp.solver.algorithm);
  json per_seed = json::array();
  for (const SeedResult& r : results) {
    json entry;
    entry["seed"] = r.seed;
    entry["trace"] = r.trace_path;
    entry["eta"] = r.rep.eta;
    entry["rho"] = r.rep.rho;
    entry["iterations"] = r.rep.records.size();
    entry["initial_residual"] = r.rep.initial_residual;
    entry["final_residual"] =
        r.rep.records.empty() ? r.rep.initial_residual
                              : r.rep.records.back().cert_residual;
    entry["stop_reason"] = stop_reason_name(r.rep.stop_reason);
    if (r.rep.fitted_rate_exponent)
      entry["fitted_rate_exponent"] = *r.rep.fitted_rate_exponent;
    else
      entry["fitted_rate_exponent"] = nullptr;
    entry["envelope_verdict"] = envelope_verdict_name(r.rep.envelope_verdict);
    entry["envelope_margin"] = r.rep.envelope_margin;
    json checks = json::object();
    for (const CheckOutcome& c : r.checks) {
      checks[c.name] = {{"status", c.status}, {"detail", c.detail}};
    }
    entry["checks"] = checks;
    per_seed.push_back(entry);
  }
  out["runs"] = per_seed;
  json failures = json::array();
  for (const SeedResult& r : results)
    for (const CheckOutcome& c : r.checks)
      if (c.status == "fail")
        failures.push_back(
            {{"seed", r.seed}, {"check", c.name}, {"detail", c.detail}});
  out["failures"] = failures;
  return out;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  const Experiment exp = parse_experiment(load_json(config_path));
  const bool multi = exp.seeds.size() > 1;
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  // Validate once up front so config-class errors exit 2 before any run.
  {
    ProblemSpec probe = exp.problem;
    probe.seed = exp.seeds.front();
    const ProblemInstance p = make_problem(probe);
    validate_config(p, exp.solver);
  }

  std::vector<SeedResult> results(exp.seeds.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < exp.seeds.size();
         i = next.fetch_add(1)) {
      SeedResult& slot = results[i];
      slot.seed = exp.seeds[i];
      try {
        ProblemSpec spec = exp.problem;
        spec.seed = slot.seed;
        const ProblemInstance problem = make_problem(spec);
        SolverConfig solver = exp.solver;
        solver.seed = slot.seed;
        validate_config(problem, solver);
        slot.configured = true;
        slot.rep = run(problem, solver);
        slot.trace_path = output_path(
            out_dir, seed_suffixed(exp.trace_name, slot.seed, multi));
        write_file_atomic(slot.trace_path, trace_csv_string(slot.rep.records));
        slot.checks = run_checks(problem, exp, slot.rep, slot.seed);
      } catch (const std::exception& e) {
        slot.error = e.what();
      }
    }
  };
  const long pool =
      std::min<long>(thread_cap(), static_cast<long>(exp.seeds.size()));
  std::vector<std::thread> threads;
  for (long t = 1; t < pool; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  for (const SeedResult& r : results)
    if (!r.error.empty()) {
      std::fprintf(stderr, "seed %lu: %s\n", r.seed, r.error.c_str());
      return 2;
    }

  const json report = report_json(exp, results);
  const std::string report_path = output_path(out_dir, exp.report_name);
  write_file_atomic(report_path, report.dump(2) + "\n");

  int failed = 0;
  for (const SeedResult& r : results) {
    for (const CheckOutcome& c : r.checks) {
      std::printf("seed %lu  %-14s %-7s %s\n", r.seed, c.name.c_str(),
                  c.status.c_str(), c.detail.c_str());
      if (c.status == "fail") ++failed;
    }
    std::printf("seed %lu  trace %s (%zu records)\n", r.seed,
                r.trace_path.c_str(), r.rep.records.size());
  }
  std::printf("report %s\n", report_path.c_str());
  if (failed > 0) {
    std::printf("%d check(s) failed; see the failures list in the report\n",
                failed);
    return 1;
  }
  return 0;
}

int cmd_verify_identities(long trials, unsigned long seed, bool corrupt) {
  if (trials < 1) {
    std::fprintf(stderr, "--trials must be >= 1\n");
    return 2;
  }
  const double perturbation = corrupt ? 1e-3 : 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> up_eag(0.05, 0.32);
  std::uniform_real_distribution<double> up_as(0.05, 0.9);
  std::uniform_real_distribution<double> uq(1.0, 30.0);
  std::uniform_real_distribution<double> ur(-0.35, 0.0);
  double worst_eag = 0.0, worst_as = 0.0;
  long failures = 0;
  const auto tally = [&](const IdentityCheck& chk, double& worst) {
    worst = std::max(worst, chk.residual / (1.0 + chk.scale));
    if (!chk.ok(1e-9)) ++failures;
  };
  for (Index dim : {Index(1), Index(3), Index(8)}) {
    // The all-zero draw, then the random battery.
    const DenseVector zero = DenseVector::Zero(dim);
    tally(verify_identity_eag(zero, zero, zero, zero, zero, zero, zero, zero,
                              0.11, 2.0, perturbation),
          worst_eag);
    tally(verify_identity_as(zero, zero, zero, zero, zero, zero, zero, 0.25,
                             2.0, -0.2, perturbation),
          worst_as);
    for (long s = 0; s < trials; ++s) {
      tally(verify_identity_eag(gaussian(dim, rng), gaussian(dim, rng),
                                gaussian(dim, rng), gaussian(dim, rng),
                                gaussian(dim, rng), gaussian(dim, rng),
                                gaussian(dim, rng), gaussian(dim, rng),
                                up_eag(rng), uq(rng), perturbation),
            worst_eag);
      tally(verify_identity_as(gaussian(dim, rng), gaussian(dim, rng),
                               gaussian(dim, rng), gaussian(dim, rng),
                               gaussian(dim, rng), gaussian(dim, rng),
                               gaussian(dim, rng), up_as(rng), uq(rng),
                               ur(rng), perturbation),
            worst_as);
    }
  }
  std::printf(
      "largest relative imbalance over %ld draws per dim in {1, 3, 8}:\n"
      "  extragradient identity: %.3e\n  splitting identity:     %.3e\n",
      trials, worst_eag, worst_as);
  if (corrupt)
    std::printf("coefficients were corrupted by 1e-3; failures: %ld\n",
                failures);
  if (failures > 0) return 1;
  return 0;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  const json j = load_json(config_path);
  const ProblemSpec base_spec = parse_problem(j.at("problem"));
  SolverConfig base =
      j.contains("solver") ? parse_solver(j.at("solver")) : SolverConfig{};
  std::vector<Algorithm> algos;
  for (const auto& name : j.at("solvers").get<std::vector<std::string>>()) {
    const auto alg = algorithm_from_name(name);
    if (!alg) throw ConfigError("unknown solver name " + name);
    algos.push_back(*alg);
  }
  if (algos.empty()) throw ConfigError("solvers list must be nonempty");

  ProblemSpec spec = base_spec;
  spec.seed = j.value("seed", 0UL);

  // Every listed solver must be admissible before anything runs.
  {
    const ProblemInstance probe = make_problem(spec);
    for (Algorithm alg : algos) {
      SolverConfig c = base;
      c.algorithm = alg;
      validate_config(probe, c);
    }
  }

  struct Row {
    Algorithm alg;
    RunReport rep;
  };
  std::vector<Row> rows;
  for (Algorithm alg : algos) {
    const ProblemInstance problem = make_problem(spec);
    SolverConfig c = base;
    c.algorithm = alg;
    rows.push_back({alg, run(problem, c)});
  }

  std::printf("%-5s %-10s %-22s %-14s %s\n", "alg", "iters", "final_residual",
              "rate_exponent", "stop");
  bool ok = true;
  json out_rows = json::array();
  for (const Row& r : rows) {
    const double final_res = r.rep.records.empty()
                                 ? r.rep.initial_residual
                                 : r.rep.records.back().cert_residual;
    const bool anchored =
        r.alg == Algorithm::Eag || r.alg == Algorithm::As;
    std::string slope = "n/a";
    if (r.rep.fitted_rate_exponent)
      slope = std::to_string(*r.rep.fitted_rate_exponent);
    std::printf("%-5s %-10zu %-22.15g %-14s %s%s\n",
                algorithm_name(r.alg).c_str(), r.rep.records.size(), final_res,
                slope.c_str(), stop_reason_name(r.rep.stop_reason).c_str(),
                anchored ? "" : "  (descriptive)");
    if (anchored &&
        (!r.rep.fitted_rate_exponent || !(*r.rep.fitted_rate_exponent <= -0.9)))
      ok = false;
    json row;
    row["algorithm"] = algorithm_name(r.alg);
    row["iterations"] = r.rep.records.size();
    row["final_residual"] = final_res;
    if (r.rep.fitted_rate_exponent)
      row["fitted_rate_exponent"] = *r.rep.fitted_rate_exponent;
    else
      row["fitted_rate_exponent"] = nullptr;
    row["asserted"] = anchored;
    out_rows.push_back(row);
  }
  if (j.contains("outputs") && j.at("outputs").contains("report")) {
    json rep;
    rep["problem"] = spec.name;
    rep["rows"] = out_rows;
    rep["pass"] = ok;
    const std::string path = output_path(
        out_dir, j.at("outputs").at("report").get<std::string>());
    write_file_atomic(path, rep.dump(2) + "\n");
    std::printf("report %s\n", path.c_str());
  }
  if (!ok) {
    std::printf("anchored-method rate exponent above -0.9\n");
    return 1;
  }
  return 0;
}

int cmd_list_problems() {
  std::printf("%-16s %-12s %s\n", "name", "projection", "description");
  for (const CatalogEntry& e : problem_catalog())
    std::printf("%-16s %-12s %s\n", e.name.c_str(),
                e.projection_admissible ? "yes" : "splitting-only",
                e.description.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "first-order solvers for constrained monotone and negatively "
      "comonotone inclusions, with built-in verification"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  long trials = 1000;
  unsigned long seed = 0;
  bool corrupt = false;

  CLI::App* run_cmd = app.add_subcommand(
      "run", "run a configured experiment and verify its checks");
  run_cmd->add_option("--config", config_path, "experiment config (JSON)")
      ->required();
  run_cmd->add_option("--out", out_dir, "directory for output files");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-identities",
      "balance the two potential-descent identities on random draws");
  verify_cmd->add_option("--trials", trials, "draws per dimension");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_flag("--corrupt", corrupt,
                       "self-test: corrupt a coefficient by 1e-3 and expect "
                       "every draw to be flagged");

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "fit and compare solver rate exponents on one problem");
  compare_cmd->add_option("--config", config_path, "comparison config (JSON)")
      ->required();
  compare_cmd->add_option("--out", out_dir, "directory for output files");

  CLI::App* list_cmd =
      app.add_subcommand("list-problems", "list the problem catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, out_dir);
    if (verify_cmd->parsed()) return cmd_verify_identities(trials, seed, corrupt);
    if (compare_cmd->parsed()) return cmd_compare(config_path, out_dir);
    if (list_cmd->parsed()) return cmd_list_problems();
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
