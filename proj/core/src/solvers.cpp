#include "inclusion/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "inclusion/diagnostics.hpp"
#include "inclusion/errors.hpp"
#include "inclusion/rate_fit.hpp"
#include "inclusion/residuals.hpp"

namespace inclusion {

namespace {

void require_finite_start(const DenseVector& z0) {
  if (!all_finite(z0))
    throw NonFiniteIterate("solver init: start point has non-finite entries");
}

void require_step_size(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw StepSizeViolation("step: eta must be finite and > 0");
}

}  // namespace

EagState eag_init(const DenseVector& z0, const LipschitzOperator& f,
                  const ConvexSet& set) {
  require_finite_start(z0);
  if (z0.size() != f.dim() || f.dim() != set.dim())
    throw DimMismatch("eag_init: dims disagree");
  EagState s;
  s.k = 0;
  s.z = set.project(z0);
  s.z0 = s.z;
  s.fz = f(s.z);
  return s;
}

EagState eag_step(const EagState& s, const LipschitzOperator& f,
                  const ConvexSet& set, double eta, double delta) {
  require_step_size(eta);
  if (!(delta >= 0.0))
    throw ParameterViolation("eag_step: delta must be >= 0");
  const double a = 1.0 / (static_cast<double>(s.k) + delta + 1.0);
  const DenseVector anchor = a * (s.z0 - s.z);

  EagState out;
  out.k = s.k + 1;
  out.z0 = s.z0;
  out.half = set.project(s.z - eta * s.fz + anchor);
  const DenseVector w = s.z - eta * f(*out.half) + anchor;
  out.z = set.project(w);
  out.cert = ConeCertificate{out.z, (w - out.z) / eta};
  out.fz = f(out.z);
  return out;
}

AsState as_init(const DenseVector& z0, const LipschitzOperator& f) {
  require_finite_start(z0);
  if (z0.size() != f.dim()) throw DimMismatch("as_init: dims disagree");
  AsState s;
  s.k = 0;
  s.z0 = z0;
  s.z = z0;
  s.fz = f(z0);
  s.c = DenseVector::Zero(z0.size());
  return s;
}

AsState as_step(const AsState& s, const LipschitzOperator& f,
                const MaxMonotoneOperator& a, double eta, double rho) {
  require_step_size(eta);
  if (a.dim() != s.z.size()) throw DimMismatch("as_step: dims disagree");
  const double kk = static_cast<double>(s.k);
  const double anchor_coef = 1.0 / (kk + 1.0);
  const DenseVector anchor = anchor_coef * (s.z0 - s.z);
  const DenseVector fc = s.fz + s.c;

  AsState out;
  out.k = s.k + 1;
  out.z0 = s.z0;
  out.half = s.z + anchor - (kk * (eta + 2.0 * rho) / (kk + 1.0)) * fc;
  const DenseVector w =
      s.z + anchor - eta * f(*out.half) - (2.0 * kk * rho / (kk + 1.0)) * fc;
  out.z = a.resolvent(eta, w);
  out.c = (w - out.z) / eta;
  out.fz = f(out.z);
  return out;
}

EgState eg_init(const DenseVector& z0, const LipschitzOperator& f,
                const ConvexSet& set) {
  require_finite_start(z0);
  if (z0.size() != f.dim() || f.dim() != set.dim())
    throw DimMismatch("eg_init: dims disagree");
  EgState s;
  s.k = 0;
  s.z = set.project(z0);
  s.fz = f(s.z);
  return s;
}

EgState eg_step(const EgState& s, const LipschitzOperator& f,
                const ConvexSet& set, double eta) {
  require_step_size(eta);
  EgState out;
  out.k = s.k + 1;
  out.half = set.project(s.z - eta * s.fz);
  const DenseVector w = s.z - eta * f(*out.half);
  out.z = set.project(w);
  out.cert = ConeCertificate{out.z, (w - out.z) / eta};
  out.fz = f(out.z);
  return out;
}

double resolve_eta(const ProblemInstance& problem, const SolverConfig& config) {
  if (config.eta > 0.0) return config.eta;
  const double lip = problem.lipschitz;
  switch (config.algorithm) {
    case Algorithm::Eag:
    case Algorithm::Eg:
      return lip > 0.0 ? 1.0 / (3.0 * lip) : 1.0;
    case Algorithm::As: {
      const double lo = std::max(0.0, -2.0 * problem.rho);
      const double hi = lip > 0.0 ? 1.0 / lip : lo + 1.0;
      if (!(hi > lo))
        throw StepSizeViolation("resolve_eta: empty admissible interval");
      return 0.5 * (lo + hi);
    }
  }
  throw Error("resolve_eta: unreachable");
}

void validate_config(const ProblemInstance& problem,
                     const SolverConfig& config) {
  if (config.max_iters < 0)
    throw ParameterViolation("config: max_iters must be >= 0");
  if (!(config.target_residual >= 0.0))
    throw ParameterViolation("config: target_residual must be >= 0");
  if (config.fit_k_min < 1)
    throw ParameterViolation("config: fit_k_min must be >= 1");
  if (config.z0 && config.z0->size() != problem.dim())
    throw DimMismatch("config: z0 dim disagrees with problem");

  const double eta = resolve_eta(problem, config);
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw StepSizeViolation("config: eta must be finite and > 0");
  const double el = eta * problem.lipschitz;

  switch (config.algorithm) {
    case Algorithm::Eag:
    case Algorithm::Eg:
      if (!problem.projection_admissible())
        throw PreconditionViolation(
            "config: projection methods need a monotone problem whose A is a "
            "normal cone or zero");
      if (config.algorithm == Algorithm::Eag && config.check_envelope &&
          problem.z_star && !(el < 1.0 / std::sqrt(3.0)))
        throw StepSizeViolation(
            "config: envelope checking needs eta L < 1/sqrt(3)");
      break;
    case Algorithm::As:
      if (!(eta > std::max(0.0, -2.0 * problem.rho)))
        throw StepSizeViolation("config: splitting needs eta > max(0, -2 rho)");
      if (config.check_envelope && problem.z_star && problem.rho <= 0.0 &&
          !(el < 1.0))
        throw StepSizeViolation("config: envelope checking needs eta L < 1");
      break;
  }
  if (!(config.delta >= 0.0))
    throw ParameterViolation("config: delta must be >= 0");
}

namespace {

double natural_residual_cached(const MaxMonotoneOperator& a,
                               const DenseVector& z, const DenseVector& fz) {
  return (z - a.resolvent(1.0, z - fz)).norm();
}

struct EnvelopeEval {
  bool assessable = false;
  bool constrained = false;  // EAG flavor
  double dist0 = 0.0;        // |z0 - z*|
  double h0 = 0.0;           // AS constant, fixed after the first step
};

}  // namespace

RunReport run(const ProblemInstance& problem, const SolverConfig& config,
              const RunHooks& hooks) {
  validate_config(problem, config);
  const double eta = resolve_eta(problem, config);
  const double rho = problem.rho;
  const double lip = problem.lipschitz;

  RunReport rep;
  rep.algorithm = config.algorithm;
  rep.problem_name = problem.name;
  rep.eta = eta;
  rep.delta = config.delta;
  rep.rho = rho;
  rep.max_iters = config.max_iters;
  rep.target_residual = config.target_residual;

  DenseVector start =
      config.z0 ? *config.z0 : DenseVector::Ones(problem.dim());

  // Per-algorithm state; only one is live.
  std::optional<ConvexSet> pset;
  std::optional<EagState> eag;
  std::optional<AsState> as;
  std::optional<EgState> eg;
  switch (config.algorithm) {
    case Algorithm::Eag:
      pset = problem.projection_set();
      eag = eag_init(start, problem.f, *pset);
      break;
    case Algorithm::As:
      as = as_init(start, problem.f);
      break;
    case Algorithm::Eg:
      pset = problem.projection_set();
      eg = eg_init(start, problem.f, *pset);
      break;
  }

  const DenseVector z_begin = eag ? eag->z : (as ? as->z : eg->z);
  const DenseVector fz_begin = eag ? eag->fz : (as ? as->fz : eg->fz);
  rep.initial_residual = natural_residual_cached(problem.a, z_begin, fz_begin);

  EnvelopeEval env;
  if (config.check_envelope && problem.z_star) {
    env.dist0 = (z_begin - *problem.z_star).norm();
    switch (config.algorithm) {
      case Algorithm::Eag:
        env.constrained =
            problem.projection_set().kind() != ConvexSet::Kind::FullSpace;
        env.assessable = eta * lip > 0.0 && eta * lip < 1.0 / std::sqrt(3.0);
        break;
      case Algorithm::As:
        env.assessable = lip > 0.0 && rho > -0.5 / lip && rho <= 0.0 &&
                         eta > std::max(0.0, -2.0 * rho) && eta < 1.0 / lip;
        break;
      case Algorithm::Eg:
        break;  // no last-iterate envelope
    }
  }
  rep.envelope_verdict =
      env.assessable ? EnvelopeVerdict::Pass : EnvelopeVerdict::NotAssessable;

  std::optional<double> prev_potential;
  const double vp = eta * lip;
  const double v_slack_coef = vp * vp / (1.0 - vp * vp);

  DenseVector current = z_begin;
  for (long it = 0; it < config.max_iters; ++it) {
    IterateRecord rec;
    DenseVector z, fz, c;
    switch (config.algorithm) {
      case Algorithm::Eag: {
        *eag = eag_step(*eag, problem.f, *pset, eta, config.delta);
        z = eag->z;
        fz = eag->fz;
        c = eag->cert->c;
        rec.k = eag->k;
        break;
      }
      case Algorithm::As: {
        *as = as_step(*as, problem.f, problem.a, eta, rho);
        z = as->z;
        fz = as->fz;
        c = as->c;
        rec.k = as->k;
        break;
      }
      case Algorithm::Eg: {
        *eg = eg_step(*eg, problem.f, *pset, eta);
        z = eg->z;
        fz = eg->fz;
        c = eg->cert->c;
        rec.k = eg->k;
        break;
      }
    }

    if (!all_finite(z) || !all_finite(fz) || !all_finite(c)) {
      rep.stop_reason = StopReason::NonFinite;
      break;
    }
    current = z;

    rec.cert_residual = cert_residual(fz, c);
    rec.natural_residual = natural_residual_cached(problem.a, z, fz);
    switch (config.algorithm) {
      case Algorithm::Eag:
        rec.potential = potential_v(rec.k, eta, fz, c, z, z_begin);
        break;
      case Algorithm::As:
        rec.potential = potential_u(rec.k, eta, rho, fz, c, z, z_begin);
        break;
      case Algorithm::Eg:
        // Descriptive only; no descent guarantee is attached to EG.
        rec.potential = potential_v(rec.k, eta, fz, c, z, z_begin);
        break;
    }
    if (prev_potential && config.algorithm != Algorithm::Eg) {
      const double allowed =
          config.algorithm == Algorithm::Eag
              ? v_slack_coef * (eta * rec.cert_residual) * (eta * rec.cert_residual)
              : 0.0;
      rec.descent_slack = allowed - (rec.potential - *prev_potential);
    }
    prev_potential = rec.potential;
    if (problem.z_star)
      rec.distance_to_solution = (z - *problem.z_star).norm();

    if (env.assessable) {
      if (config.algorithm == Algorithm::As && rec.k == 1)
        env.h0 = std::sqrt(4.0 * (z - z_begin).squaredNorm() +
                           env.dist0 * env.dist0);
      const double bound =
          config.algorithm == Algorithm::As
              ? envelope_as(rec.k, eta, rho, lip, env.h0)
              : (env.constrained
                     ? envelope_eag_constrained(rec.k, eta, lip, env.dist0)
                     : envelope_eag_unconstrained(rec.k, eta, lip, env.dist0));
      const double r2 = rec.cert_residual * rec.cert_residual;
      if (r2 > bound * (1.0 + 1e-9)) rep.envelope_verdict = EnvelopeVerdict::Fail;
      if (bound > 0.0)
        rep.envelope_margin = std::min(rep.envelope_margin, 1.0 - r2 / bound);
    }

    rep.records.push_back(rec);
    if (hooks.on_record) hooks.on_record(rec, z);

    if (config.target_residual > 0.0 &&
        rec.cert_residual <= config.target_residual) {
      rep.stop_reason = StopReason::TargetReached;
      break;
    }
  }

  rep.final_iterate = current;
  try {
    rep.fitted_rate_exponent = fit_rate_exponent(rep.records, config.fit_k_min);
  } catch (const InsufficientData&) {
    rep.fitted_rate_exponent = std::nullopt;
  }
  return rep;
}

}  // namespace inclusion
