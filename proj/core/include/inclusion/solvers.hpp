#pragma once

#include <functional>
#include <optional>

#include "inclusion/operators.hpp"
#include "inclusion/problems.hpp"
#include "inclusion/types.hpp"

namespace inclusion {

// Anchored extragradient with projection. One step from iteration k:
//   a        = 1/(k + delta + 1)
//   z_{k+1/2} = P[z_k - eta F(z_k) + a (z0 - z_k)]
//   z_{k+1}   = P[z_k - eta F(z_{k+1/2}) + a (z0 - z_k)]
// and the projection's displacement certifies c_{k+1} in N_Z(z_{k+1}).
// fz caches F(z) so a step costs exactly two fresh F evaluations.
struct EagState {
  long k = 0;
  DenseVector z0;
  DenseVector z;
  DenseVector fz;
  std::optional<DenseVector> half;
  std::optional<ConeCertificate> cert;  // defined from k >= 1
};

EagState eag_init(const DenseVector& z0, const LipschitzOperator& f,
                  const ConvexSet& set);
EagState eag_step(const EagState& s, const LipschitzOperator& f,
                  const ConvexSet& set, double eta, double delta);

// Accelerated forward-backward splitting with anchor. c_0 = 0, and from k:
//   z_{k+1/2} = z_k + (z0 - z_k)/(k+1) - (k (eta + 2 rho)/(k+1)) (F(z_k) + c_k)
//   w         = z_k + (z0 - z_k)/(k+1) - eta F(z_{k+1/2})
//               - (2 k rho/(k+1)) (F(z_k) + c_k)
//   z_{k+1}   = J_{eta A}[w],  c_{k+1} = (w - z_{k+1})/eta.
// k = 0 gives z_{1/2} = z0 regardless of F and A.
struct AsState {
  long k = 0;
  DenseVector z0;
  DenseVector z;
  DenseVector fz;
  DenseVector c;
  std::optional<DenseVector> half;
};

AsState as_init(const DenseVector& z0, const LipschitzOperator& f);
AsState as_step(const AsState& s, const LipschitzOperator& f,
                const MaxMonotoneOperator& a, double eta, double rho);

// Extragradient baseline. Coincides exactly with the first anchored
// extragradient step (k = 0, delta = 0) and carries no anchor thereafter.
struct EgState {
  long k = 0;
  DenseVector z;
  DenseVector fz;
  std::optional<DenseVector> half;
  std::optional<ConeCertificate> cert;
};

EgState eg_init(const DenseVector& z0, const LipschitzOperator& f,
                const ConvexSet& set);
EgState eg_step(const EgState& s, const LipschitzOperator& f,
                const ConvexSet& set, double eta);

struct RunHooks {
  std::function<void(const IterateRecord&, const DenseVector& z)> on_record;
};

// Resolve config.eta <= 0 to the per-algorithm default and validate the
// step size against the problem (StepSizeViolation / PreconditionViolation).
double resolve_eta(const ProblemInstance& problem, const SolverConfig& config);
void validate_config(const ProblemInstance& problem, const SolverConfig& config);

// Drive one solver run. Records one IterateRecord per iteration (k = 1
// onward); stops at max_iters, or earlier once cert_residual <=
// target_residual (when positive), or on a non-finite iterate (the partial
// trace is kept and the report is marked). Start points outside the
// projection set are projected once at initialization. Envelope verdicts
// are computed only when the problem carries a known solution and the
// step size is inside the window where the envelope is guaranteed;
// otherwise the verdict is NotAssessable.
RunReport run(const ProblemInstance& problem, const SolverConfig& config,
              const RunHooks& hooks = {});

}  // namespace inclusion
