#include "inclusion/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "inclusion/errors.hpp"

namespace inclusion {

namespace {

void check_same_dim(std::initializer_list<const DenseVector*> vs) {
  const Index n = (*vs.begin())->size();
  for (const DenseVector* v : vs)
    if (v->size() != n) throw DimMismatch("identity check: dims disagree");
}

}  // namespace

double potential_v(long k, double eta, const DenseVector& fz,
                   const DenseVector& c, const DenseVector& z,
                   const DenseVector& z0) {
  check_same_dim({&fz, &c, &z, &z0});
  const double kk = static_cast<double>(k);
  const DenseVector g = eta * fz + eta * c;
  return kk * (kk + 1.0) / 2.0 * g.squaredNorm() + kk * g.dot(z - z0);
}

double potential_u(long k, double eta, double rho, const DenseVector& fz,
                   const DenseVector& c, const DenseVector& z,
                   const DenseVector& z0) {
  check_same_dim({&fz, &c, &z, &z0});
  if (eta == 0.0) throw ParameterViolation("potential_u: eta must be nonzero");
  const double kk = static_cast<double>(k);
  const double r = rho / eta;
  const DenseVector g = eta * fz + eta * c;
  return (kk * kk / 2.0 * (1.0 + 2.0 * r) - r * kk) * g.squaredNorm() +
         kk * g.dot(z - z0);
}

namespace {

PotentialTrace check_descent(std::span<const IterateRecord> records,
                             double rel_tol,
                             const std::function<double(const IterateRecord&)>&
                                 allowed_increase) {
  PotentialTrace trace;
  for (size_t i = 1; i < records.size(); ++i) {
    const IterateRecord& prev = records[i - 1];
    const IterateRecord& cur = records[i];
    DescentStep step;
    step.k = cur.k;
    step.observed_increase = cur.potential - prev.potential;
    step.allowed_increase = allowed_increase(cur);
    const double excess = step.observed_increase - step.allowed_increase;
    step.violated = excess > rel_tol * (1.0 + std::abs(prev.potential));
    if (step.violated) {
      ++trace.violations;
      trace.worst_excess = std::max(trace.worst_excess, excess);
    }
    trace.steps.push_back(step);
  }
  return trace;
}

}  // namespace

PotentialTrace check_v_descent(std::span<const IterateRecord> records,
                               double eta, double lipschitz, double rel_tol) {
  const double p = eta * eta * lipschitz * lipschitz;
  // The slack coefficient is meaningful for eta L < 1; outside that window
  // the verdict is still computed and violations are the expected outcome.
  const double coef = p / (1.0 - p);
  return check_descent(records, rel_tol, [&](const IterateRecord& cur) {
    const double g = eta * cur.cert_residual;
    return coef * g * g;
  });
}

PotentialTrace check_u_descent(std::span<const IterateRecord> records,
                               double rel_tol) {
  return check_descent(records, rel_tol,
                       [](const IterateRecord&) { return 0.0; });
}

double envelope_eag_unconstrained(long k, double eta, double lipschitz,
                                  double dist0) {
  if (k < 1) throw PreconditionViolation("envelope: k must be >= 1");
  const double el = eta * lipschitz;
  if (!(el > 0.0) || !(el < 1.0 / std::sqrt(3.0)))
    throw PreconditionViolation(
        "envelope_eag_unconstrained: need 0 < eta L < 1/sqrt(3)");
  const double kk = static_cast<double>(k);
  const double coef = 4.0 * (1.0 + el) * (1.0 + el) / (el * el * (1.0 - 3.0 * el * el));
  return coef * dist0 * dist0 * lipschitz * lipschitz / (kk * kk);
}

double envelope_eag_constrained(long k, double eta, double lipschitz,
                                double dist0) {
  if (k < 1) throw PreconditionViolation("envelope: k must be >= 1");
  const double el = eta * lipschitz;
  if (!(el > 0.0) || !(el < 1.0 / std::sqrt(3.0)))
    throw PreconditionViolation(
        "envelope_eag_constrained: need 0 < eta L < 1/sqrt(3)");
  const double kk = static_cast<double>(k);
  const double coef = 44.0 / (el * el * (1.0 - 3.0 * el * el));
  return coef * dist0 * dist0 * lipschitz * lipschitz / (kk * kk);
}

double envelope_as(long k, double eta, double rho, double lipschitz,
                   double h0) {
  if (k < 1) throw PreconditionViolation("envelope: k must be >= 1");
  if (!(lipschitz > 0.0))
    throw PreconditionViolation("envelope_as: need L > 0");
  if (!(rho > -0.5 / lipschitz) || !(rho <= 0.0))
    throw PreconditionViolation("envelope_as: need rho in (-1/(2L), 0]");
  if (!(eta > std::max(0.0, -2.0 * rho)) || !(eta < 1.0 / lipschitz))
    throw PreconditionViolation(
        "envelope_as: need eta in (max(0, -2 rho), 1/L)");
  const double kk = static_cast<double>(k);
  const double s = eta + 2.0 * rho;
  return 4.0 / (s * s) * h0 * h0 / (kk * kk);
}

namespace {

struct TermAccumulator {
  double sum = 0.0;
  double scale = 0.0;
  void add(double term) {
    sum += term;
    scale = std::max(scale, std::abs(term));
  }
};

}  // namespace

IdentityCheck verify_identity_eag(const DenseVector& x0, const DenseVector& x1,
                                  const DenseVector& x2, const DenseVector& x3,
                                  const DenseVector& y1, const DenseVector& y2,
                                  const DenseVector& y3, const DenseVector& u1,
                                  double p, double q,
                                  double coefficient_perturbation) {
  check_same_dim({&x0, &x1, &x2, &x3, &y1, &y2, &y3, &u1});
  if (!(p > 0.0) || !(q > 0.0))
    throw ParameterViolation("verify_identity_eag: need p > 0, q > 0");

  const DenseVector u3 = x1 - y2 + (x0 - x1) / (q + 1.0) - x3;
  const double lip_coef =
      q * (q + 1.0) / (2.0 * p) * (1.0 + coefficient_perturbation);

  TermAccumulator lhs;
  lhs.add(q * (q + 1.0) / 2.0 * (y1 + u1).squaredNorm() +
          q * (y1 + u1).dot(x1 - x0));
  lhs.add(-((q + 1.0) * (q + 2.0) / 2.0 * (y3 + u3).squaredNorm() +
            (q + 1.0) * (y3 + u3).dot(x3 - x0)));
  lhs.add(-lip_coef *
          (p * (x2 - x3).squaredNorm() - (y2 - y3).squaredNorm()));
  lhs.add(-q * (q + 1.0) * (y3 - y1).dot(x3 - x1));
  lhs.add(-q * (q + 1.0) *
          DenseVector(x1 - y1 - x2 + (x0 - x1) / (q + 1.0)).dot(x2 - x3));
  lhs.add(-q * (q + 1.0) * u3.dot(x3 - x1));
  lhs.add(-q * (q + 1.0) * u1.dot(x1 - x2));

  TermAccumulator rhs;
  rhs.add(q * (q + 1.0) / 2.0 *
          DenseVector(x2 - x1 + y1 + u1 + (x1 - x0) / (q + 1.0)).squaredNorm());
  rhs.add((1.0 - p) * q * (q + 1.0) / (2.0 * p) * (y2 - y3).squaredNorm());
  rhs.add((q + 1.0) * (y2 - y3).dot(y3 + u3));

  IdentityCheck out;
  out.residual = std::abs(lhs.sum - rhs.sum);
  out.scale = std::max(lhs.scale, rhs.scale);
  return out;
}

IdentityCheck verify_identity_as(const DenseVector& x0, const DenseVector& x1,
                                 const DenseVector& x2, const DenseVector& x3,
                                 const DenseVector& y1, const DenseVector& y2,
                                 const DenseVector& y3, double p, double q,
                                 double r, double coefficient_perturbation) {
  check_same_dim({&x0, &x1, &x2, &x3, &y1, &y2, &y3});
  if (!(p > 0.0) || !(q > 0.0))
    throw ParameterViolation("verify_identity_as: need p > 0, q > 0");
  if (std::abs(1.0 + 2.0 * r) < 1e-12)
    throw ParameterViolation("verify_identity_as: 1 + 2r too close to zero");

  const double coef = q / (q + 1.0) * (1.0 + 2.0 * r);
  const DenseVector u1 =
      DenseVector(x1 + (x0 - x1) / (q + 1.0) - coef * y1 - x2) / coef;
  const DenseVector u3 = x1 + (x0 - x1) / (q + 1.0) - y2 -
                         (2.0 * r * q / (q + 1.0)) * (y1 + u1) - x3;
  const double lip_coef =
      (q + 1.0) * (q + 1.0) / 2.0 * (1.0 + coefficient_perturbation);

  TermAccumulator lhs;
  lhs.add((q * q / 2.0 * (1.0 + 2.0 * r) - r * q) * (y1 + u1).squaredNorm() +
          q * (y1 + u1).dot(x1 - x0));
  lhs.add(-(((q + 1.0) * (q + 1.0) / 2.0 * (1.0 + 2.0 * r) - r * (q + 1.0)) *
                (y3 + u3).squaredNorm() +
            (q + 1.0) * (y3 + u3).dot(x3 - x0)));
  lhs.add(-lip_coef *
          (p * (x2 - x3).squaredNorm() - (y2 - y3).squaredNorm()));
  lhs.add(-q * (q + 1.0) *
          (DenseVector(y3 + u3 - y1 - u1).dot(x3 - x1) -
           r * DenseVector(y3 + u3 - y1 - u1).squaredNorm()));

  TermAccumulator rhs;
  rhs.add((1.0 - p) * (q + 1.0) * (q + 1.0) / 2.0 * (x2 - x3).squaredNorm());

  IdentityCheck out;
  out.residual = std::abs(lhs.sum - rhs.sum);
  out.scale = std::max(lhs.scale, rhs.scale);
  return out;
}

SequenceVerdict check_sequence_bound(std::span<const double> a_from_2,
                                     double c1, double p) {
  if (!(c1 >= 0.0))
    throw ParameterViolation("check_sequence_bound: need c1 >= 0");
  if (!(p > 0.0) || !(p < 1.0 / 3.0))
    throw ParameterViolation("check_sequence_bound: need p in (0, 1/3)");
  for (double a : a_from_2)
    if (!(a > 0.0) || !std::isfinite(a))
      throw ParameterViolation("check_sequence_bound: terms must be positive");

  SequenceVerdict verdict;
  double partial = 0.0;  // sum_{t=2}^{k-1} a_t
  for (size_t i = 0; i < a_from_2.size(); ++i) {
    const long k = static_cast<long>(i) + 2;
    const double kk = static_cast<double>(k);
    const double bound = c1 + p / (1.0 - p) * partial;
    if (kk * kk / 4.0 * a_from_2[i] > bound + rel_slack(bound)) {
      verdict.status = SequenceVerdict::Status::HypothesisFailed;
      verdict.first_failure_k = k;
      return verdict;
    }
    partial += a_from_2[i];
  }
  for (size_t i = 0; i < a_from_2.size(); ++i) {
    const long k = static_cast<long>(i) + 2;
    const double kk = static_cast<double>(k);
    if (a_from_2[i] > 4.0 * c1 / ((1.0 - 3.0 * p) * kk * kk) + 1e-12) {
      verdict.status = SequenceVerdict::Status::ConclusionFailed;
      verdict.first_failure_k = k;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace inclusion
