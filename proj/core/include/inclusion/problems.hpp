#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "inclusion/operators.hpp"
#include "inclusion/types.hpp"

namespace inclusion {

// Constraint attached to a problem instance. Box is the centered cube
// [-halfwidth, halfwidth]^n unless explicit bounds are given; Ball is
// centered at the origin unless a center is given.
struct ConstraintSpec {
  enum class Kind { None, Box, Ball } kind = Kind::None;
  double halfwidth = 1.0;
  double radius = 1.0;
  std::optional<DenseVector> lower, upper;  // Box with explicit bounds
  std::optional<DenseVector> center;        // Ball with explicit center

  static ConstraintSpec none() { return {}; }
  static ConstraintSpec sym_box(double halfwidth);
  static ConstraintSpec box(DenseVector lower, DenseVector upper);
  static ConstraintSpec ball(double radius);
};

// An inclusion problem 0 in F(z) + A(z) with its certified metadata.
// rho is the comonotonicity margin of F + A (0 for monotone instances).
// z_star is present only when the solution is known and feasible.
// Projection-based algorithms (EAG, EG) apply when A is a normal cone or
// zero and the problem is monotone; the splitting method (AS) applies to
// every shipped instance.
struct ProblemInstance {
  std::string name;
  LipschitzOperator f;
  MaxMonotoneOperator a;
  double lipschitz = 0.0;
  double rho = 0.0;
  std::optional<DenseVector> z_star;

  bool projection_admissible() const;  // EAG / EG
  Index dim() const { return f.dim(); }
  // The projection set for EAG/EG: the normal cone's set, or full space
  // when A is zero. Throws UnsupportedSet for other kinds.
  ConvexSet projection_set() const;
};

// Largest singular value by power iteration on M^T M: 200 iterations,
// convergence tolerance 1e-10, deterministically seeded start vector.
double spectral_norm(const Eigen::MatrixXd& m);

// F(x, y) = (B y, -B^T x) on R^{nx+ny}; L = sigma_max(B); skew, monotone.
// z* = 0 is attached when feasible for the constraint, omitted otherwise.
ProblemInstance make_bilinear(const Eigen::MatrixXd& b,
                              const ConstraintSpec& constraint =
                                  ConstraintSpec::none());

// F = mu I + nu J with J the block-diagonal quarter-turn rotation; requires
// even dimension 2 * dim_pairs. L = sqrt(mu^2 + nu^2) and the instance is
// exactly rho-comonotone with rho = mu / (mu^2 + nu^2); constructions with
// rho <= -1/(2L) are rejected (ParameterViolation). z* = 0.
ProblemInstance make_rotation_family(double mu, double nu, Index dim_pairs);

// F(x) = x on Z = [0, 1]; the 1D reference instance with closed-form
// residuals and gaps. z* = 0.
ProblemInstance make_identity_1d();

// Bilinear coupling with l1 regularization on both blocks:
// A is componentwise shrinkage with weight lambda_g on the first block and
// lambda_h on the second. Monotone (rho = 0); z* = 0.
ProblemInstance make_l1_regularized_minmax(const Eigen::MatrixXd& b,
                                           double lambda_g, double lambda_h);

// F(z) = M z with M + M^T positive semidefinite (checked to -1e-10, throws
// NotMonotone). z* = 0 when feasible.
ProblemInstance make_monotone_linear(const Eigen::MatrixXd& m,
                                     const ConstraintSpec& constraint =
                                         ConstraintSpec::none());

// Random matrix with positive-semidefinite symmetric part: G^T G / dim plus
// a skew part, entries O(1). Used for randomized monotone-linear instances.
Eigen::MatrixXd random_monotone_matrix(Index dim, std::mt19937_64& rng);

// Sampling battery run by every factory before an instance is returned:
// Lipschitz bound on n_samples random pairs, comonotonicity of F + A on
// resolvent-generated graph pairs, and (when z_star is present) natural
// residual <= 1e-9 at z_star. Throws NotMonotone or ParameterViolation.
void validate_instance(const ProblemInstance& instance, unsigned long seed,
                       int n_samples);

// Plain-text matrix format: first line "rows cols", then rows of
// whitespace-separated entries.
Eigen::MatrixXd load_matrix_text(const std::string& path);
void save_matrix_text(const std::string& path, const Eigen::MatrixXd& m);

// By-name construction for the CLI and tests.
struct ProblemSpec {
  std::string name;
  std::map<std::string, double> scalars;
  std::optional<Eigen::MatrixXd> matrix;
  ConstraintSpec constraint;
  unsigned long seed = 0;  // for randomized instances
};

struct CatalogEntry {
  std::string name;
  std::string description;
  bool projection_admissible;  // for the default parameterization
};

std::vector<CatalogEntry> problem_catalog();
ProblemInstance make_problem(const ProblemSpec& spec);

}  // namespace inclusion
