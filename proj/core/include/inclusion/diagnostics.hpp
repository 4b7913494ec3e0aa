#pragma once

#include <span>
#include <vector>

#include "inclusion/types.hpp"

namespace inclusion {

// Anchored potential for the projected anchored-extragradient method:
//   V_k = k(k+1)/2 |eta F(z_k) + eta c_k|^2 + k <eta F(z_k) + eta c_k, z_k - z0>.
// Non-increasing up to the slack (eta^2 L^2/(1 - eta^2 L^2)) |eta F + eta c|^2
// per step when eta L < 1 and the problem is monotone.
double potential_v(long k, double eta, const DenseVector& fz,
                   const DenseVector& c, const DenseVector& z,
                   const DenseVector& z0);

// Anchored potential for the accelerated splitting method:
//   U_k = (k^2/2 (1 + 2 rho/eta) - (rho/eta) k) |eta F + eta c|^2
//         + k <eta F + eta c, z_k - z0>.
// Non-increasing for eta > -2 rho on rho-comonotone problems.
double potential_u(long k, double eta, double rho, const DenseVector& fz,
                   const DenseVector& c, const DenseVector& z,
                   const DenseVector& z0);

struct DescentStep {
  long k = 0;  // transition k-1 -> k
  double observed_increase = 0.0;
  double allowed_increase = 0.0;
  bool violated = false;
};

struct PotentialTrace {
  std::vector<DescentStep> steps;
  long violations = 0;
  double worst_excess = 0.0;  // max positive (observed - allowed), 0 if none
};

// Check the per-step descent of V along recorded iterates. The transition
// into record k may increase V by at most
// (eta^2 L^2/(1 - eta^2 L^2)) * (eta * cert_residual_k)^2, with slack
// rel_tol * (1 + |V_{k-1}|). Zero violations are guaranteed for monotone
// runs with 0 < eta L < 1; outside that regime the verdict is still
// computed (and violations are the expected outcome).
PotentialTrace check_v_descent(std::span<const IterateRecord> records,
                               double eta, double lipschitz,
                               double rel_tol = 1e-8);

// Check that U never increases along recorded iterates (allowed increase 0),
// with slack rel_tol * (1 + |U_{k-1}|).
PotentialTrace check_u_descent(std::span<const IterateRecord> records,
                               double rel_tol = 1e-8);

// Squared-residual envelopes, evaluated at iteration k >= 1 from a known
// distance dist0 = |z0 - z*|. All bounds hold pointwise in k.
// Unconstrained anchored extragradient, requires 0 < eta L < 1/sqrt(3):
//   |F(z_k)|^2 <= 4 (1 + eta L)^2 / (eta^2 L^2 (1 - 3 eta^2 L^2)) * dist0^2 L^2 / k^2
// which is 96 dist0^2 L^2 / k^2 at eta = 1/(3L).
double envelope_eag_unconstrained(long k, double eta, double lipschitz,
                                  double dist0);

// Constrained version, same step-size window:
//   |F(z_k) + c_k|^2 <= 44 / (eta^2 L^2 (1 - 3 eta^2 L^2)) * dist0^2 L^2 / k^2
// which is 594 dist0^2 L^2 / k^2 at eta = 1/(3L).
double envelope_eag_constrained(long k, double eta, double lipschitz,
                                double dist0);

// Accelerated splitting under rho-comonotonicity, rho in (-1/(2L), 0],
// eta in (max(0, -2 rho), 1/L):
//   |F(z_k) + c_k|^2 <= 4 / ((eta + 2 rho)^2 L^2) * h0^2 L^2 / k^2
// where h0^2 = 4 |z1 - z0|^2 + |z0 - z*|^2 (or the computable surrogate
// 4 r(z0)^2 / L^2 + |z0 - z*|^2 with r the tangent residual at z0).
double envelope_as(long k, double eta, double rho, double lipschitz, double h0);

struct IdentityCheck {
  double residual = 0.0;  // |LHS - RHS|
  double scale = 0.0;     // largest absolute term magnitude on either side
  bool ok(double tol = 1e-9) const { return residual <= tol * (1.0 + scale); }
};

// Algebraic identity underlying the anchored-extragradient potential descent.
// The eighth vector u3 is determined by the others:
//   u3 = x1 - y2 + (x0 - x1)/(q+1) - x3.
// coefficient_perturbation multiplies the Lipschitz-term coefficient
// q(q+1)/(2p) by (1 + coefficient_perturbation); it exists so tests can
// prove the checker rejects corrupted identities. Requires p > 0, q > 0.
IdentityCheck verify_identity_eag(const DenseVector& x0, const DenseVector& x1,
                                  const DenseVector& x2, const DenseVector& x3,
                                  const DenseVector& y1, const DenseVector& y2,
                                  const DenseVector& y3, const DenseVector& u1,
                                  double p, double q,
                                  double coefficient_perturbation = 0.0);

// Algebraic identity underlying the accelerated-splitting potential descent.
// Both certificate vectors are determined by the others:
//   u1 = (x1 + (x0 - x1)/(q+1) - (q/(q+1))(1+2r) y1 - x2) / ((q/(q+1))(1+2r)),
//   u3 = x1 + (x0 - x1)/(q+1) - y2 - (2 r q/(q+1))(y1 + u1) - x3.
// Requires p > 0, q > 0 and |1 + 2r| >= 1e-12 (ParameterViolation).
IdentityCheck verify_identity_as(const DenseVector& x0, const DenseVector& x1,
                                 const DenseVector& x2, const DenseVector& x3,
                                 const DenseVector& y1, const DenseVector& y2,
                                 const DenseVector& y3, double p, double q,
                                 double r,
                                 double coefficient_perturbation = 0.0);

struct SequenceVerdict {
  enum class Status { Satisfied, HypothesisFailed, ConclusionFailed };
  Status status = Status::Satisfied;
  long first_failure_k = -1;
};

// For a positive sequence a_2, a_3, ... (a_from_2[0] is a_2), check the
// recurrence hypothesis
//   (k^2/4) a_k <= c1 + (p/(1-p)) * sum_{t=2}^{k-1} a_t   for all covered k
// (with slack 1e-9 relative); if it holds, assert the implied decay
//   a_k <= 4 c1 / ((1 - 3p) k^2) + 1e-12.
// Requires c1 >= 0 and p in (0, 1/3). A failed hypothesis yields
// HypothesisFailed and the conclusion is not asserted.
SequenceVerdict check_sequence_bound(std::span<const double> a_from_2,
                                     double c1, double p);

}  // namespace inclusion
