// Acceptance suite: every guarantee the library advertises, checked end to
// end at its stated tolerance. One line of output per criterion; exit
// status 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "inclusion/inclusion.hpp"

using namespace inclusion;

namespace {

struct Capture {
  RunReport rep;
  double dist0 = 0.0;     // |z0 - z*| when known
  double step1 = 0.0;     // |z1 - z0|
  double millis = 0.0;
};

std::vector<Capture> g_runs;  // everything executed here, for A6 and A10

Capture timed_run(const ProblemInstance& problem, SolverConfig config) {
  Capture cap;
  const DenseVector start =
      config.z0 ? *config.z0 : DenseVector::Ones(problem.dim());
  if (problem.z_star) cap.dist0 = (start - *problem.z_star).norm();
  RunHooks hooks;
  hooks.on_record = [&](const IterateRecord& rec, const DenseVector& z) {
    if (rec.k == 1) cap.step1 = (z - start).norm();
  };
  const auto t0 = std::chrono::steady_clock::now();
  cap.rep = run(problem, config, hooks);
  const auto t1 = std::chrono::steady_clock::now();
  cap.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  g_runs.push_back(cap);
  return cap;
}

SolverConfig cfg(Algorithm alg, long iters) {
  SolverConfig c;
  c.algorithm = alg;
  c.max_iters = iters;
  return c;
}

DenseVector gaussian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  DenseVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

bool check_envelope_trace(const std::vector<IterateRecord>& recs,
                          const std::function<double(long)>& bound,
                          std::string& detail) {
  for (const auto& r : recs) {
    const double b = bound(r.k);
    if (!(r.cert_residual <= b * (1.0 + 1e-9))) {
      detail = "residual " + std::to_string(r.cert_residual) + " above bound " +
               std::to_string(b) + " at k=" + std::to_string(r.k);
      return false;
    }
  }
  return true;
}

// ---- criteria ----

bool criterion_1(std::string& detail) {
  const ProblemInstance p = make_bilinear(Eigen::MatrixXd::Identity(1, 1));
  SolverConfig c = cfg(Algorithm::Eag, 10000);
  c.z0 = DenseVector::Ones(2);
  const Capture cap = timed_run(p, c);
  const double d = cap.dist0, lip = p.lipschitz;
  if (!check_envelope_trace(
          cap.rep.records,
          [&](long k) { return std::sqrt(96.0) * d * lip / double(k); }, detail))
    return false;
  if (cap.rep.envelope_verdict != EnvelopeVerdict::Pass) {
    detail = "run verdict " + envelope_verdict_name(cap.rep.envelope_verdict);
    return false;
  }
  if (cap.millis >= 1000.0) {
    detail = "run took " + std::to_string(cap.millis) + " ms";
    return false;
  }
  detail = std::to_string(int(cap.millis)) + " ms, envelope margin " +
           std::to_string(cap.rep.envelope_margin);
  return true;
}

bool criterion_2(std::string& detail) {
  const ProblemInstance p = make_bilinear(Eigen::MatrixXd::Identity(2, 2),
                                          ConstraintSpec::sym_box(1.0));
  const Capture cap = timed_run(p, cfg(Algorithm::Eag, 10000));
  const double d = cap.dist0, lip = p.lipschitz;
  if (!check_envelope_trace(
          cap.rep.records,
          [&](long k) { return std::sqrt(594.0) * d * lip / double(k); },
          detail))
    return false;
  if (cap.millis >= 1000.0) {
    detail = "run took " + std::to_string(cap.millis) + " ms";
    return false;
  }
  detail = std::to_string(int(cap.millis)) + " ms, envelope margin " +
           std::to_string(cap.rep.envelope_margin);
  return true;
}

bool criterion_3(std::string& detail) {
  const ProblemInstance p = make_rotation_family(-0.2, 1.0, 1);
  const Capture cap = timed_run(p, cfg(Algorithm::As, 10000));
  const double eta = cap.rep.eta, rho = p.rho;
  const double h0 = std::sqrt(4.0 * cap.step1 * cap.step1 + cap.dist0 * cap.dist0);
  if (!check_envelope_trace(
          cap.rep.records,
          [&](long k) { return 2.0 * h0 / ((eta + 2.0 * rho) * double(k)); },
          detail))
    return false;
  if (cap.millis >= 1000.0) {
    detail = "run took " + std::to_string(cap.millis) + " ms";
    return false;
  }
  detail = std::to_string(int(cap.millis)) + " ms, envelope margin " +
           std::to_string(cap.rep.envelope_margin);
  return true;
}

bool criterion_4(std::string& detail) {
  long total_steps = 0;
  for (int s = 0; s < 20; ++s) {
    ProblemSpec spec;
    spec.name = "monotone-linear";
    spec.scalars["dim"] = double(2 + (s % 19));  // dims 2..20
    spec.seed = 9000 + static_cast<unsigned long>(s);
    const ProblemInstance p = make_problem(spec);
    const Capture cap = timed_run(p, cfg(Algorithm::Eag, 1000));
    const PotentialTrace tr =
        check_v_descent(cap.rep.records, cap.rep.eta, p.lipschitz, 1e-8);
    total_steps += static_cast<long>(tr.steps.size());
    if (tr.violations != 0) {
      detail = "instance " + std::to_string(s) + " had " +
               std::to_string(tr.violations) + " violations, worst excess " +
               std::to_string(tr.worst_excess);
      return false;
    }
  }
  detail = std::to_string(total_steps) + " descent steps, zero violations";
  return true;
}

bool criterion_5(std::string& detail) {
  long total_steps = 0;
  int done = 0;
  const auto check_one = [&](const ProblemInstance& p) {
    const Capture cap = timed_run(p, cfg(Algorithm::As, 1000));
    const PotentialTrace tr = check_u_descent(cap.rep.records, 1e-8);
    total_steps += static_cast<long>(tr.steps.size());
    ++done;
    if (tr.violations != 0) {
      detail = p.name + " instance " + std::to_string(done) + " had " +
               std::to_string(tr.violations) + " violations";
      return false;
    }
    return true;
  };
  // Ten monotone instances (rho = 0) and ten with rho < 0.
  for (int s = 0; s < 10; ++s) {
    ProblemSpec spec;
    spec.name = "monotone-linear";
    spec.scalars["dim"] = double(2 + s);
    spec.seed = 5000 + static_cast<unsigned long>(s);
    if (!check_one(make_problem(spec))) return false;
  }
  for (int s = 0; s < 10; ++s) {
    const double mu = -0.05 * (s + 1);  // rho from -0.05 to about -0.33
    if (!check_one(make_rotation_family(mu, 1.0, 1 + s % 3))) return false;
  }
  detail = std::to_string(total_steps) + " descent steps, zero violations";
  return true;
}

bool criterion_6(std::string& detail) {
  // First-step potential bounds on dedicated conforming runs of every
  // catalog problem that carries a known solution, under both applicable
  // algorithms.
  int checked = 0;
  for (const auto& entry : problem_catalog()) {
    ProblemSpec spec;
    spec.name = entry.name;
    const ProblemInstance p = make_problem(spec);
    if (!p.z_star) continue;
    std::vector<Algorithm> algs = {Algorithm::As};
    if (p.projection_admissible()) algs.push_back(Algorithm::Eag);
    for (Algorithm alg : algs) {
      const Capture cap = timed_run(p, cfg(alg, 1));
      if (cap.rep.records.empty()) continue;
      const double el = cap.rep.eta * p.lipschitz;
      const double first = cap.rep.records[0].potential;
      ++checked;
      if (alg == Algorithm::Eag) {
        const double bound = (1.0 + el + el * el) * (2.0 + 2.0 * el + el * el) /
                             (1.0 - el * el) * cap.dist0 * cap.dist0;
        if (!(first <= bound + 1e-9 * (1.0 + std::abs(bound)))) {
          detail = entry.name + ": V1 " + std::to_string(first) + " above " +
                   std::to_string(bound);
          return false;
        }
      } else {
        const double bound =
            (1.0 + el) * (3.0 + el) / 2.0 * cap.step1 * cap.step1;
        if (!(first <= bound + 1e-9 * (1.0 + std::abs(bound)))) {
          detail = entry.name + ": U1 " + std::to_string(first) + " above " +
                   std::to_string(bound);
          return false;
        }
      }
    }
  }
  detail = std::to_string(checked) + " first-step bounds checked";
  return true;
}

bool criterion_7(std::string& detail) {
  std::mt19937_64 rng(7001);
  std::uniform_real_distribution<double> up_eag(0.05, 0.32);
  std::uniform_real_distribution<double> up_as(0.05, 0.9);
  std::uniform_real_distribution<double> uq(1.0, 30.0);
  std::uniform_real_distribution<double> ur(-0.35, 0.0);
  long checked = 0;
  for (Index dim : {Index(1), Index(3), Index(8)}) {
    for (int s = 0; s < 1000; ++s) {
      const IdentityCheck a = verify_identity_eag(
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), gaussian(dim, rng), up_eag(rng), uq(rng));
      const IdentityCheck b = verify_identity_as(
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), gaussian(dim, rng), gaussian(dim, rng),
          gaussian(dim, rng), up_as(rng), uq(rng), ur(rng));
      checked += 2;
      if (!a.ok(1e-9) || !b.ok(1e-9)) {
        detail = "identity residual out of tolerance at dim " +
                 std::to_string(dim) + " draw " + std::to_string(s);
        return false;
      }
    }
  }
  // Mutation check: a 1e-3 coefficient corruption must be caught every time.
  for (int s = 0; s < 100; ++s) {
    const IdentityCheck a = verify_identity_eag(
        gaussian(3, rng), gaussian(3, rng), gaussian(3, rng), gaussian(3, rng),
        gaussian(3, rng), gaussian(3, rng), gaussian(3, rng), gaussian(3, rng),
        0.11, 9.0, 1e-3);
    const IdentityCheck b = verify_identity_as(
        gaussian(3, rng), gaussian(3, rng), gaussian(3, rng), gaussian(3, rng),
        gaussian(3, rng), gaussian(3, rng), gaussian(3, rng), 0.25, 9.0, -0.2,
        1e-3);
    if (a.ok(1e-9) || b.ok(1e-9)) {
      detail = "corrupted identity went undetected at draw " + std::to_string(s);
      return false;
    }
  }
  detail = std::to_string(checked) + " draws balanced, 200 mutations caught";
  return true;
}

bool criterion_8(std::string& detail) {
  // Trace instantiation: a_k = (eta r_k)^2 / dist0^2 from the first
  // criterion's run satisfies the recurrence with c1 = 11, p = (eta L)^2.
  const Capture* first_run = nullptr;
  for (const Capture& cap : g_runs)
    if (cap.rep.algorithm == Algorithm::Eag &&
        cap.rep.problem_name == "bilinear" && cap.rep.records.size() == 10000) {
      first_run = &cap;
      break;
    }
  if (!first_run) {
    detail = "reference run not found";
    return false;
  }
  const double eta = first_run->rep.eta;
  const double p = eta * eta;  // L = 1 for this instance
  std::vector<double> a;
  for (const auto& r : first_run->rep.records)
    if (r.k >= 2)
      a.push_back((eta * r.cert_residual) * (eta * r.cert_residual) /
                  (first_run->dist0 * first_run->dist0));
  const SequenceVerdict v = check_sequence_bound(a, 11.0, p);
  if (v.status != SequenceVerdict::Status::Satisfied) {
    detail = "trace verdict failed at k=" + std::to_string(v.first_failure_k);
    return false;
  }
  // Synthetic sequences built to satisfy the recurrence hypothesis.
  std::mt19937_64 rng(8001);
  std::uniform_real_distribution<double> uc(0.1, 20.0);
  std::uniform_real_distribution<double> upp(0.02, 0.32);
  std::uniform_real_distribution<double> uslack(0.1, 1.0);
  std::uniform_int_distribution<int> ulen(50, 200);
  for (int s = 0; s < 100; ++s) {
    const double c1 = uc(rng), pp = upp(rng);
    const int len = ulen(rng);
    std::vector<double> seq;
    double partial = 0.0;
    for (long k = 2; k < 2 + len; ++k) {
      const double ak = uslack(rng) * (4.0 / double(k) / double(k)) *
                        (c1 + pp / (1.0 - pp) * partial);
      seq.push_back(ak);
      partial += ak;
    }
    const SequenceVerdict sv = check_sequence_bound(seq, c1, pp);
    if (sv.status != SequenceVerdict::Status::Satisfied) {
      detail = "synthetic sequence " + std::to_string(s) + " failed at k=" +
               std::to_string(sv.first_failure_k);
      return false;
    }
  }
  detail = "trace plus 100 synthetic sequences satisfied";
  return true;
}

bool criterion_9(std::string& detail) {
  const ProblemInstance p = make_identity_1d();
  DenseVector x(1);
  x[0] = 0.5;
  const double rnat = natural_residual(p.f, p.a, x);
  if (rnat != 0.5) {
    detail = "natural residual " + std::to_string(rnat) + " is not exactly 0.5";
    return false;
  }
  const double strong = gap_svi(p.f, p.projection_set(), {x, 1.0});
  if (std::abs(strong - 0.25) > 1e-10) {
    detail = "strong gap " + std::to_string(strong);
    return false;
  }
  const GapBound weak = gap_mvi_grid(p.f, p.projection_set(), {x, 1.0}, 10000);
  if (std::abs(weak.value - 0.0625) > 1e-3) {
    detail = "weak gap " + std::to_string(weak.value);
    return false;
  }
  detail = "residual 0.5, strong gap 0.25, weak gap " +
           std::to_string(weak.value);
  return true;
}

bool criterion_10(std::string& detail) {
  long checked = 0;
  for (const Capture& cap : g_runs)
    for (const auto& r : cap.rep.records) {
      ++checked;
      if (!(r.natural_residual <= r.cert_residual + 1e-9)) {
        detail = cap.rep.problem_name + " k=" + std::to_string(r.k) +
                 ": natural " + std::to_string(r.natural_residual) +
                 " above certified " + std::to_string(r.cert_residual);
        return false;
      }
    }
  detail = std::to_string(checked) + " recorded iterates ordered correctly";
  return true;
}

bool criterion_11(std::string& detail) {
  double eag_slope = 0.0, as_slope = 0.0;
  bool have_eag = false, have_as = false;
  for (const Capture& cap : g_runs) {
    if (cap.rep.records.size() != 10000 || !cap.rep.fitted_rate_exponent)
      continue;
    if (cap.rep.algorithm == Algorithm::Eag && !have_eag) {
      eag_slope = *cap.rep.fitted_rate_exponent;
      have_eag = true;
    }
    if (cap.rep.algorithm == Algorithm::As && !have_as) {
      as_slope = *cap.rep.fitted_rate_exponent;
      have_as = true;
    }
  }
  if (!have_eag || !have_as) {
    detail = "reference runs not found";
    return false;
  }
  if (!(eag_slope <= -0.9) || !(as_slope <= -0.9)) {
    detail = "slopes " + std::to_string(eag_slope) + ", " +
             std::to_string(as_slope);
    return false;
  }
  // Plain extragradient slope is reported, not asserted: its guarantee is a
  // best-iterate average rate, not a last-iterate power law.
  const ProblemInstance bil = make_bilinear(Eigen::MatrixXd::Identity(1, 1));
  SolverConfig c = cfg(Algorithm::Eg, 2000);
  c.z0 = DenseVector::Ones(2);
  const Capture eg = timed_run(bil, c);
  const std::string eg_txt = eg.rep.fitted_rate_exponent
                                 ? std::to_string(*eg.rep.fitted_rate_exponent)
                                 : "n/a";
  detail = "anchored slope " + std::to_string(eag_slope) + ", splitting slope " +
           std::to_string(as_slope) + ", plain extragradient slope " + eg_txt +
           " (descriptive)";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    bool (*body)(std::string&);
  };
  const Criterion criteria[] = {
      {"A1  unconstrained anchored-extragradient envelope sqrt(96) D L / k",
       criterion_1},
      {"A2  box-constrained anchored-extragradient envelope sqrt(594) D L / k",
       criterion_2},
      {"A3  splitting envelope 2 H0 / ((eta + 2 rho) k) on the rotation family",
       criterion_3},
      {"A4  anchored potential descent, zero violations on 20 linear instances",
       criterion_4},
      {"A5  splitting potential never increases on 20 instances across rho",
       criterion_5},
      {"A6  first-step potential bounds", criterion_6},
      {"A7  identity battery, 1e3 draws per dim in {1, 3, 8} plus mutations",
       criterion_7},
      {"A8  sequence recurrence on the reference trace and 100 synthetics",
       criterion_8},
      {"A9  closed-form residual and gap values on the 1D reference problem",
       criterion_9},
      {"A10 natural residual bounded by certified residual on every iterate",
       criterion_10},
      {"A11 fitted rate exponents at most -0.9 for the anchored methods",
       criterion_11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", c.label,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", std::size(criteria));
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
