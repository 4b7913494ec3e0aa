#include "inclusion/problems.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <sstream>

#include "inclusion/errors.hpp"
#include "inclusion/residuals.hpp"

namespace inclusion {

ConstraintSpec ConstraintSpec::sym_box(double halfwidth) {
  if (!(halfwidth > 0.0))
    throw ParameterViolation("ConstraintSpec: halfwidth must be > 0");
  ConstraintSpec s;
  s.kind = Kind::Box;
  s.halfwidth = halfwidth;
  return s;
}

ConstraintSpec ConstraintSpec::box(DenseVector lower, DenseVector upper) {
  ConstraintSpec s;
  s.kind = Kind::Box;
  s.lower = std::move(lower);
  s.upper = std::move(upper);
  return s;
}

ConstraintSpec ConstraintSpec::ball(double radius) {
  if (!(radius > 0.0))
    throw ParameterViolation("ConstraintSpec: radius must be > 0");
  ConstraintSpec s;
  s.kind = Kind::Ball;
  s.radius = radius;
  return s;
}

bool ProblemInstance::projection_admissible() const {
  const auto k = a.kind();
  return (k == MaxMonotoneOperator::Kind::Zero ||
          k == MaxMonotoneOperator::Kind::NormalCone) &&
         rho >= 0.0;
}

ConvexSet ProblemInstance::projection_set() const {
  switch (a.kind()) {
    case MaxMonotoneOperator::Kind::Zero:
      return ConvexSet::full_space(dim());
    case MaxMonotoneOperator::Kind::NormalCone:
      return *a.set();
    default:
      throw UnsupportedSet(
          "projection_set: A is neither zero nor a normal cone");
  }
}

double spectral_norm(const Eigen::MatrixXd& m) {
  const Index n = m.cols();
  if (n < 1 || m.rows() < 1) throw DimMismatch("spectral_norm: empty matrix");
  // Power iteration on M^T M with a fixed-seed start vector.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal(rng);
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 200; ++it) {
    DenseVector w = m.transpose() * (m * v);
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;  // M v = 0 for the start vector: M is zero on it
    w /= wn;
    const double next = w.dot(m.transpose() * (m * w));
    if (std::abs(next - lambda) <= 1e-10 * (1.0 + std::abs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
    v = w;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

namespace {

ConvexSet build_set(const ConstraintSpec& spec, Index dim) {
  switch (spec.kind) {
    case ConstraintSpec::Kind::None:
      return ConvexSet::full_space(dim);
    case ConstraintSpec::Kind::Box: {
      if (spec.lower && spec.upper) return ConvexSet::box(*spec.lower, *spec.upper);
      return ConvexSet::box(DenseVector::Constant(dim, -spec.halfwidth),
                            DenseVector::Constant(dim, spec.halfwidth));
    }
    case ConstraintSpec::Kind::Ball: {
      DenseVector center =
          spec.center ? *spec.center : DenseVector::Zero(dim);
      return ConvexSet::ball(std::move(center), spec.radius);
    }
  }
  throw Error("build_set: unreachable");
}

MaxMonotoneOperator constraint_operator(const ConstraintSpec& spec, Index dim) {
  if (spec.kind == ConstraintSpec::Kind::None)
    return MaxMonotoneOperator::zero(dim);
  return MaxMonotoneOperator::normal_cone(build_set(spec, dim));
}

// Attach z* = 0 when the origin is feasible; omit it otherwise rather than
// inventing a solution.
std::optional<DenseVector> origin_if_feasible(const MaxMonotoneOperator& a,
                                              Index dim) {
  if (a.kind() == MaxMonotoneOperator::Kind::NormalCone &&
      !a.set()->contains(DenseVector::Zero(dim)))
    return std::nullopt;
  return DenseVector::Zero(dim);
}

LipschitzOperator linear_operator(Eigen::MatrixXd m, double lipschitz) {
  const Index n = m.rows();
  return LipschitzOperator(
      [mat = std::move(m)](const DenseVector& z) { return DenseVector(mat * z); },
      lipschitz, n);
}

}  // namespace

ProblemInstance make_bilinear(const Eigen::MatrixXd& b,
                              const ConstraintSpec& constraint) {
  const Index nx = b.rows(), ny = b.cols();
  if (nx < 1 || ny < 1) throw DimMismatch("make_bilinear: empty matrix");
  const Index n = nx + ny;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.topRightCorner(nx, ny) = b;
  m.bottomLeftCorner(ny, nx) = -b.transpose();
  const double lip = spectral_norm(b);

  ProblemInstance inst{
      "bilinear", linear_operator(std::move(m), lip),
      constraint_operator(constraint, n), lip, 0.0, std::nullopt};
  inst.z_star = origin_if_feasible(inst.a, n);
  validate_instance(inst, 0x1357u, 1000);
  return inst;
}

ProblemInstance make_rotation_family(double mu, double nu, Index dim_pairs) {
  if (dim_pairs < 1)
    throw ParameterViolation("make_rotation_family: dim_pairs must be >= 1");
  if (!std::isfinite(mu) || !std::isfinite(nu) || (mu == 0.0 && nu == 0.0))
    throw ParameterViolation("make_rotation_family: (mu, nu) must be finite, nonzero");
  const double lip = std::sqrt(mu * mu + nu * nu);
  const double rho = mu / (mu * mu + nu * nu);
  if (rho <= -0.5 / lip)
    throw ParameterViolation(
        "make_rotation_family: comonotonicity margin at or below -1/(2L)");
  const Index n = 2 * dim_pairs;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Index p = 0; p < dim_pairs; ++p) {
    m(2 * p, 2 * p) = mu;
    m(2 * p + 1, 2 * p + 1) = mu;
    m(2 * p, 2 * p + 1) = -nu;
    m(2 * p + 1, 2 * p) = nu;
  }
  ProblemInstance inst{"rotation", linear_operator(std::move(m), lip),
                       MaxMonotoneOperator::zero(n), lip, rho,
                       DenseVector::Zero(n)};
  validate_instance(inst, 0x2468u, 1000);
  return inst;
}

ProblemInstance make_identity_1d() {
  ProblemInstance inst{
      "identity-1d",
      LipschitzOperator([](const DenseVector& z) { return z; }, 1.0, 1),
      MaxMonotoneOperator::normal_cone(
          ConvexSet::box(DenseVector::Zero(1), DenseVector::Ones(1))),
      1.0, 0.0, DenseVector::Zero(1)};
  validate_instance(inst, 0x0f0fu, 1000);
  return inst;
}

ProblemInstance make_l1_regularized_minmax(const Eigen::MatrixXd& b,
                                           double lambda_g, double lambda_h) {
  if (!(lambda_g >= 0.0) || !(lambda_h >= 0.0))
    throw ParameterViolation("make_l1_regularized_minmax: weights must be >= 0");
  const Index nx = b.rows(), ny = b.cols();
  if (nx < 1 || ny < 1)
    throw DimMismatch("make_l1_regularized_minmax: empty matrix");
  const Index n = nx + ny;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.topRightCorner(nx, ny) = b;
  m.bottomLeftCorner(ny, nx) = -b.transpose();
  const double lip = spectral_norm(b);
  DenseVector lambda(n);
  lambda.head(nx).setConstant(lambda_g);
  lambda.tail(ny).setConstant(lambda_h);

  ProblemInstance inst{"l1-minmax", linear_operator(std::move(m), lip),
                       MaxMonotoneOperator::soft_threshold(std::move(lambda)),
                       lip, 0.0, DenseVector::Zero(n)};
  validate_instance(inst, 0x55aau, 1000);
  return inst;
}

ProblemInstance make_monotone_linear(const Eigen::MatrixXd& m,
                                     const ConstraintSpec& constraint) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimMismatch("make_monotone_linear: matrix must be square");
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw NotMonotone("make_monotone_linear: symmetric part has eigenvalue " +
                      std::to_string(es.eigenvalues().minCoeff()));
  const Index n = m.rows();
  const double lip = spectral_norm(m);
  ProblemInstance inst{"monotone-linear", linear_operator(m, lip),
                       constraint_operator(constraint, n), lip, 0.0,
                       std::nullopt};
  inst.z_star = origin_if_feasible(inst.a, n);
  validate_instance(inst, 0x7e57u, 1000);
  return inst;
}

Eigen::MatrixXd random_monotone_matrix(Index dim, std::mt19937_64& rng) {
  if (dim < 1) throw ParameterViolation("random_monotone_matrix: dim >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(dim, dim), k(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      g(i, j) = normal(rng);
      k(i, j) = normal(rng);
    }
  Eigen::MatrixXd skew = 0.5 * (k - k.transpose());
  return g.transpose() * g / static_cast<double>(dim) + skew;
}

void validate_instance(const ProblemInstance& instance, unsigned long seed,
                       int n_samples) {
  if (instance.f.dim() != instance.a.dim())
    throw DimMismatch("validate_instance: F and A dims disagree");
  if (!(instance.lipschitz >= 0.0) || !std::isfinite(instance.lipschitz))
    throw ParameterViolation("validate_instance: bad Lipschitz constant");
  const Index n = instance.f.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto sample = [&] {
    DenseVector z(n);
    for (Index i = 0; i < n; ++i) z[i] = normal(rng);
    return z;
  };

  // Lipschitz bound on random pairs.
  for (int s = 0; s < n_samples; ++s) {
    const DenseVector z = sample(), zp = sample();
    const double dz = (z - zp).norm();
    if (dz == 0.0) continue;
    const double df = (instance.f(z) - instance.f(zp)).norm();
    if (df > instance.lipschitz * dz + rel_slack(instance.lipschitz * dz))
      throw ParameterViolation(
          "validate_instance: Lipschitz bound violated on a sampled pair");
  }

  // Comonotonicity of E = F + A on resolvent-generated graph pairs:
  // z = J_A[w] puts (z, (w - z)) in the graph of A, so F(z) + (w - z)
  // is a value of E at z (resolvent parameter 1).
  for (int s = 0; s < n_samples; ++s) {
    const DenseVector w1 = sample(), w2 = sample();
    const DenseVector z1 = instance.a.resolvent(1.0, w1);
    const DenseVector z2 = instance.a.resolvent(1.0, w2);
    const DenseVector e1 = instance.f(z1) + (w1 - z1);
    const DenseVector e2 = instance.f(z2) + (w2 - z2);
    const DenseVector de = e1 - e2, dz = z1 - z2;
    const double lhs = de.dot(dz);
    const double rhs = instance.rho * de.squaredNorm();
    if (lhs < rhs - rel_slack(std::abs(lhs) + std::abs(rhs)))
      throw NotMonotone(
          "validate_instance: comonotonicity margin violated on a sampled pair");
  }

  if (instance.z_star) {
    if (instance.z_star->size() != n)
      throw DimMismatch("validate_instance: z_star dim disagrees");
    const double res = natural_residual(instance.f, instance.a, *instance.z_star);
    if (res > 1e-9)
      throw ParameterViolation(
          "validate_instance: z_star fails the solution test, residual " +
          std::to_string(res));
  }
}

Eigen::MatrixXd load_matrix_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_matrix_text: cannot open " + path);
  Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1)
    throw Error("load_matrix_text: bad header in " + path);
  Eigen::MatrixXd m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (!(in >> m(i, j)))
        throw Error("load_matrix_text: truncated data in " + path);
  return m;
}

void save_matrix_text(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw Error("save_matrix_text: cannot open " + path);
  out << m.rows() << " " << m.cols() << "\n";
  out.precision(17);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j)
      out << m(i, j) << (j + 1 < m.cols() ? " " : "");
    out << "\n";
  }
}

std::vector<CatalogEntry> problem_catalog() {
  return {
      {"identity-1d", "F(x) = x on [0, 1]; closed-form residuals and gaps",
       true},
      {"bilinear", "skew coupling F(x, y) = (B y, -B^T x); optional box/ball "
                   "constraint; params: matrix (default [[1]])",
       true},
      {"rotation",
       "F = mu I + nu J, exactly comonotone with rho = mu/(mu^2+nu^2); "
       "params: mu, nu, dim_pairs",
       false},
      {"l1-minmax",
       "bilinear coupling with componentwise shrinkage; params: matrix, "
       "lambda_g, lambda_h",
       false},
      {"monotone-linear",
       "F(z) = M z with PSD symmetric part; params: dim (random M from seed) "
       "or explicit matrix; optional constraint",
       true},
  };
}

ProblemInstance make_problem(const ProblemSpec& spec) {
  const auto scalar = [&](const std::string& key, double fallback) {
    auto it = spec.scalars.find(key);
    return it == spec.scalars.end() ? fallback : it->second;
  };
  if (spec.name == "identity-1d") return make_identity_1d();
  if (spec.name == "bilinear") {
    Eigen::MatrixXd b =
        spec.matrix ? *spec.matrix : Eigen::MatrixXd::Identity(1, 1);
    return make_bilinear(b, spec.constraint);
  }
  if (spec.name == "rotation") {
    return make_rotation_family(scalar("mu", -0.2), scalar("nu", 1.0),
                                static_cast<Index>(scalar("dim_pairs", 1.0)));
  }
  if (spec.name == "l1-minmax") {
    Eigen::MatrixXd b =
        spec.matrix ? *spec.matrix : Eigen::MatrixXd::Identity(1, 1);
    return make_l1_regularized_minmax(b, scalar("lambda_g", 0.1),
                                      scalar("lambda_h", 0.1));
  }
  if (spec.name == "monotone-linear") {
    if (spec.matrix) return make_monotone_linear(*spec.matrix, spec.constraint);
    std::mt19937_64 rng(spec.seed);
    const Index dim = static_cast<Index>(scalar("dim", 4.0));
    return make_monotone_linear(random_monotone_matrix(dim, rng),
                               spec.constraint);
  }
  throw ConfigError("make_problem: unknown problem '" + spec.name + "'");
}

}  // namespace inclusion
