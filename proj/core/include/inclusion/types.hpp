#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace inclusion {

using DenseVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const DenseVector& v) { return v.allFinite(); }

// Default comparison slack: relative tolerance scaled by (1 + magnitude).
inline double rel_slack(double magnitude, double tol = 1e-9) {
  return tol * (1.0 + std::abs(magnitude));
}

enum class Algorithm { Eag, As, Eg };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

// Solver run parameters. eta <= 0 selects the per-algorithm default:
// 1/(3L) for EAG and EG, the midpoint of (max(0, -2 rho), 1/L) for AS.
// An absent start point means the all-ones vector.
struct SolverConfig {
  Algorithm algorithm = Algorithm::Eag;
  double eta = 0.0;
  double delta = 0.0;            // EAG anchor offset, coefficient 1/(k+delta+1)
  long max_iters = 0;
  double target_residual = 0.0;  // 0 means run exactly max_iters
  unsigned long seed = 0;
  long fit_k_min = 50;
  bool check_envelope = true;
  std::optional<DenseVector> z0;
};

// One row of a run trace. descent_slack is defined for k >= 2 on EAG/AS
// (allowed potential increase minus observed increase); distance_to_solution
// is defined when the problem ships a known solution.
struct IterateRecord {
  long k = 0;
  double cert_residual = 0.0;
  double natural_residual = 0.0;
  double potential = 0.0;
  std::optional<double> descent_slack;
  std::optional<double> distance_to_solution;
};

enum class EnvelopeVerdict { Pass, Fail, NotAssessable };
enum class StopReason { MaxIters, TargetReached, NonFinite };

std::string envelope_verdict_name(EnvelopeVerdict v);
std::string stop_reason_name(StopReason r);

// Result of a solver run. records are indexed contiguously from k = 1;
// the start point's information is carried by initial_residual (its natural
// residual) rather than a k = 0 record. envelope_margin is the minimum over
// recorded k of 1 - residual^2/bound; it is 1 when nothing was checked.
struct RunReport {
  Algorithm algorithm = Algorithm::Eag;
  std::string problem_name;
  double eta = 0.0;
  double delta = 0.0;
  double rho = 0.0;
  long max_iters = 0;
  double target_residual = 0.0;
  double initial_residual = 0.0;
  std::vector<IterateRecord> records;
  std::optional<double> fitted_rate_exponent;
  EnvelopeVerdict envelope_verdict = EnvelopeVerdict::NotAssessable;
  double envelope_margin = 1.0;
  StopReason stop_reason = StopReason::MaxIters;
  DenseVector final_iterate;

  bool envelope_ok() const { return envelope_verdict != EnvelopeVerdict::Fail; }
};

}  // namespace inclusion
