#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>

#include "inclusion/errors.hpp"
#include "inclusion/types.hpp"

namespace inclusion {

// Single-valued L-Lipschitz operator F: R^n -> R^n. Immutable; evaluation is
// pure and safe to call concurrently.
class LipschitzOperator {
 public:
  using Eval = std::function<DenseVector(const DenseVector&)>;

  LipschitzOperator(Eval eval, double lipschitz_constant, Index dim);

  DenseVector operator()(const DenseVector& z) const;

  double lipschitz_constant() const { return lipschitz_; }
  Index dim() const { return dim_; }

 private:
  Eval eval_;
  double lipschitz_;
  Index dim_;
};

DenseVector project_box(const DenseVector& lower, const DenseVector& upper,
                        const DenseVector& z);
DenseVector project_ball(const DenseVector& center, double radius,
                         const DenseVector& z);
// Euclidean projection onto {x >= 0, sum x = 1} by sort and threshold.
DenseVector project_simplex(const DenseVector& z);

// Componentwise shrinkage: argmin_x (1/2)|x - w|^2 + eta * lambda_i |x_i|.
DenseVector soft_threshold(const DenseVector& lambda, double eta,
                           const DenseVector& w);
DenseVector soft_threshold(double lambda, double eta, const DenseVector& w);

// Closed convex set with exact projection. Immutable and concurrency safe.
class ConvexSet {
 public:
  enum class Kind { FullSpace, Box, Ball, Simplex };

  static ConvexSet full_space(Index dim);
  static ConvexSet box(DenseVector lower, DenseVector upper);
  static ConvexSet ball(DenseVector center, double radius);
  static ConvexSet simplex(Index dim);

  DenseVector project(const DenseVector& z) const;
  // Membership with absolute slack tol on each defining inequality.
  bool contains(const DenseVector& z, double tol = 1e-9) const;

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }
  const DenseVector& lower() const;   // Box only
  const DenseVector& upper() const;   // Box only
  const DenseVector& center() const;  // Ball only
  double radius() const;              // Ball only

 private:
  ConvexSet(Kind kind, Index dim) : kind_(kind), dim_(dim) {}
  Kind kind_;
  Index dim_;
  DenseVector a_, b_;  // Box: lower/upper. Ball: center in a_.
  double radius_ = 0.0;
};

// Maximally monotone operator A given through its resolvent J_{eta A}.
// Kinds: Zero (J = identity), NormalCone of a ConvexSet (J = projection),
// SoftThreshold with per-coordinate weights (J = shrinkage), LinearMonotone
// for A = Mz with M + M^T positive semidefinite (J solves (I + eta M) x = w).
class MaxMonotoneOperator {
 public:
  enum class Kind { Zero, NormalCone, SoftThreshold, LinearMonotone };

  static MaxMonotoneOperator zero(Index dim);
  static MaxMonotoneOperator normal_cone(ConvexSet set);
  static MaxMonotoneOperator soft_threshold(DenseVector lambda);
  // Throws NotMonotone unless the symmetric part of m has min eigenvalue
  // >= -1e-10.
  static MaxMonotoneOperator linear_monotone(Eigen::MatrixXd m);

  DenseVector resolvent(double eta, const DenseVector& w) const;

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }
  // The underlying set for NormalCone, nullptr otherwise.
  const ConvexSet* set() const;

 private:
  struct LinearData;
  MaxMonotoneOperator(Kind kind, Index dim) : kind_(kind), dim_(dim) {}
  Kind kind_;
  Index dim_;
  std::shared_ptr<const ConvexSet> set_;
  DenseVector lambda_;
  std::shared_ptr<LinearData> linear_;
};

// A resolvent step together with the inclusion certificate it produces:
// z = J_{eta A}[w] and cert.c = (w - z)/eta is an element of A(z).
struct ConeCertificate {
  DenseVector at;
  DenseVector c;
};

struct ResolventStep {
  DenseVector z;
  ConeCertificate cert;
};

ResolventStep extract_certificate(const MaxMonotoneOperator& a, double eta,
                                  const DenseVector& w);

// Empirical Lipschitz estimate: 1.1 times the largest observed ratio
// |f(z) - f(z')| / |z - z'| over n_pairs sampled pairs (pairs with
// coincident samples are skipped). Requires n_pairs >= 100.
double estimate_lipschitz(const std::function<DenseVector(const DenseVector&)>& f,
                          const std::function<DenseVector()>& sample_domain_point,
                          int n_pairs);

}  // namespace inclusion
