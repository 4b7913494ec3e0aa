#include "inclusion/operators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

namespace inclusion {

LipschitzOperator::LipschitzOperator(Eval eval, double lipschitz_constant,
                                     Index dim)
    : eval_(std::move(eval)), lipschitz_(lipschitz_constant), dim_(dim) {
  if (!eval_) throw ParameterViolation("LipschitzOperator: empty evaluation");
  if (dim_ < 1) throw ParameterViolation("LipschitzOperator: dim must be >= 1");
  if (!(lipschitz_ >= 0.0) || !std::isfinite(lipschitz_))
    throw ParameterViolation("LipschitzOperator: constant must be finite and >= 0");
}

DenseVector LipschitzOperator::operator()(const DenseVector& z) const {
  if (z.size() != dim_)
    throw DimMismatch("LipschitzOperator: expected dim " + std::to_string(dim_) +
                      ", got " + std::to_string(z.size()));
  DenseVector out = eval_(z);
  if (out.size() != dim_)
    throw DimMismatch("LipschitzOperator: evaluation returned wrong dim");
  return out;
}

DenseVector project_box(const DenseVector& lower, const DenseVector& upper,
                        const DenseVector& z) {
  if (lower.size() != z.size() || upper.size() != z.size())
    throw DimMismatch("project_box: bound dims disagree with input");
  return z.cwiseMax(lower).cwiseMin(upper);
}

DenseVector project_ball(const DenseVector& center, double radius,
                         const DenseVector& z) {
  if (center.size() != z.size())
    throw DimMismatch("project_ball: center dim disagrees with input");
  if (!(radius > 0.0))
    throw ParameterViolation("project_ball: radius must be > 0");
  const DenseVector d = z - center;
  const double n = d.norm();
  if (n <= radius) return z;
  return center + (radius / n) * d;
}

DenseVector project_simplex(const DenseVector& z) {
  const Index n = z.size();
  std::vector<double> u(z.data(), z.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, tau = 0.0;
  for (Index j = 0; j < n; ++j) {
    css += u[j];
    const double t = (css - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) tau = t;
  }
  return (z.array() - tau).max(0.0).matrix();
}

DenseVector soft_threshold(const DenseVector& lambda, double eta,
                           const DenseVector& w) {
  if (lambda.size() != w.size())
    throw DimMismatch("soft_threshold: weight dim disagrees with input");
  if (!(eta > 0.0)) throw ParameterViolation("soft_threshold: eta must be > 0");
  DenseVector out(w.size());
  for (Index i = 0; i < w.size(); ++i) {
    const double t = eta * lambda[i];
    out[i] = std::copysign(std::max(std::abs(w[i]) - t, 0.0), w[i]);
  }
  return out;
}

DenseVector soft_threshold(double lambda, double eta, const DenseVector& w) {
  return soft_threshold(DenseVector::Constant(w.size(), lambda), eta, w);
}

ConvexSet ConvexSet::full_space(Index dim) {
  if (dim < 1) throw ParameterViolation("ConvexSet: dim must be >= 1");
  return ConvexSet(Kind::FullSpace, dim);
}

ConvexSet ConvexSet::box(DenseVector lower, DenseVector upper) {
  if (lower.size() != upper.size())
    throw DimMismatch("ConvexSet::box: bound dims disagree");
  if (lower.size() < 1) throw ParameterViolation("ConvexSet::box: empty bounds");
  if (!all_finite(lower) || !all_finite(upper) ||
      (lower.array() > upper.array()).any())
    throw ParameterViolation("ConvexSet::box: need finite lower <= upper");
  ConvexSet s(Kind::Box, lower.size());
  s.a_ = std::move(lower);
  s.b_ = std::move(upper);
  return s;
}

ConvexSet ConvexSet::ball(DenseVector center, double radius) {
  if (center.size() < 1) throw ParameterViolation("ConvexSet::ball: empty center");
  if (!all_finite(center) || !(radius > 0.0) || !std::isfinite(radius))
    throw ParameterViolation("ConvexSet::ball: need finite center, radius > 0");
  ConvexSet s(Kind::Ball, center.size());
  s.a_ = std::move(center);
  s.radius_ = radius;
  return s;
}

ConvexSet ConvexSet::simplex(Index dim) {
  if (dim < 1) throw ParameterViolation("ConvexSet: dim must be >= 1");
  return ConvexSet(Kind::Simplex, dim);
}

DenseVector ConvexSet::project(const DenseVector& z) const {
  if (z.size() != dim_) throw DimMismatch("ConvexSet::project: wrong dim");
  switch (kind_) {
    case Kind::FullSpace: return z;
    case Kind::Box: return project_box(a_, b_, z);
    case Kind::Ball: return project_ball(a_, radius_, z);
    case Kind::Simplex: return project_simplex(z);
  }
  throw Error("ConvexSet::project: unreachable");
}

bool ConvexSet::contains(const DenseVector& z, double tol) const {
  if (z.size() != dim_) throw DimMismatch("ConvexSet::contains: wrong dim");
  switch (kind_) {
    case Kind::FullSpace:
      return true;
    case Kind::Box:
      return (z.array() >= a_.array() - tol).all() &&
             (z.array() <= b_.array() + tol).all();
    case Kind::Ball:
      return (z - a_).norm() <= radius_ + tol;
    case Kind::Simplex:
      return (z.array() >= -tol).all() && std::abs(z.sum() - 1.0) <= tol;
  }
  throw Error("ConvexSet::contains: unreachable");
}

const DenseVector& ConvexSet::lower() const {
  if (kind_ != Kind::Box) throw UnsupportedSet("ConvexSet::lower: not a box");
  return a_;
}
const DenseVector& ConvexSet::upper() const {
  if (kind_ != Kind::Box) throw UnsupportedSet("ConvexSet::upper: not a box");
  return b_;
}
const DenseVector& ConvexSet::center() const {
  if (kind_ != Kind::Ball) throw UnsupportedSet("ConvexSet::center: not a ball");
  return a_;
}
double ConvexSet::radius() const {
  if (kind_ != Kind::Ball) throw UnsupportedSet("ConvexSet::radius: not a ball");
  return radius_;
}

// Resolvent data for A = Mz; (I + eta M) is factored once per distinct eta
// and memoized, so repeated solves within a run reuse one factorization.
struct MaxMonotoneOperator::LinearData {
  Eigen::MatrixXd m;
  mutable std::mutex mutex;
  mutable std::map<double, std::shared_ptr<const Eigen::PartialPivLU<Eigen::MatrixXd>>>
      factorizations;

  std::shared_ptr<const Eigen::PartialPivLU<Eigen::MatrixXd>> factor(
      double eta) const {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = factorizations.find(eta);
    if (it != factorizations.end()) return it->second;
    Eigen::MatrixXd sys =
        Eigen::MatrixXd::Identity(m.rows(), m.cols()) + eta * m;
    auto lu = std::make_shared<const Eigen::PartialPivLU<Eigen::MatrixXd>>(sys);
    factorizations.emplace(eta, lu);
    return lu;
  }
};

MaxMonotoneOperator MaxMonotoneOperator::zero(Index dim) {
  if (dim < 1) throw ParameterViolation("MaxMonotoneOperator: dim must be >= 1");
  return MaxMonotoneOperator(Kind::Zero, dim);
}

MaxMonotoneOperator MaxMonotoneOperator::normal_cone(ConvexSet set) {
  MaxMonotoneOperator a(Kind::NormalCone, set.dim());
  a.set_ = std::make_shared<const ConvexSet>(std::move(set));
  return a;
}

MaxMonotoneOperator MaxMonotoneOperator::soft_threshold(DenseVector lambda) {
  if (lambda.size() < 1)
    throw ParameterViolation("MaxMonotoneOperator: empty weights");
  if (!all_finite(lambda) || (lambda.array() < 0.0).any())
    throw ParameterViolation("MaxMonotoneOperator: weights must be finite, >= 0");
  MaxMonotoneOperator a(Kind::SoftThreshold, lambda.size());
  a.lambda_ = std::move(lambda);
  return a;
}

MaxMonotoneOperator MaxMonotoneOperator::linear_monotone(Eigen::MatrixXd m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimMismatch("MaxMonotoneOperator: matrix must be square");
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw NotMonotone("MaxMonotoneOperator: symmetric part has eigenvalue " +
                      std::to_string(es.eigenvalues().minCoeff()));
  MaxMonotoneOperator a(Kind::LinearMonotone, m.rows());
  a.linear_ = std::make_shared<LinearData>();
  a.linear_->m = std::move(m);
  return a;
}

DenseVector MaxMonotoneOperator::resolvent(double eta,
                                           const DenseVector& w) const {
  if (!(eta > 0.0))
    throw ParameterViolation("MaxMonotoneOperator::resolvent: eta must be > 0");
  if (w.size() != dim_)
    throw DimMismatch("MaxMonotoneOperator::resolvent: wrong dim");
  switch (kind_) {
    case Kind::Zero: return w;
    case Kind::NormalCone: return set_->project(w);
    case Kind::SoftThreshold: return inclusion::soft_threshold(lambda_, eta, w);
    case Kind::LinearMonotone: return linear_->factor(eta)->solve(w);
  }
  throw Error("MaxMonotoneOperator::resolvent: unreachable");
}

const ConvexSet* MaxMonotoneOperator::set() const {
  return kind_ == Kind::NormalCone ? set_.get() : nullptr;
}

ResolventStep extract_certificate(const MaxMonotoneOperator& a, double eta,
                                  const DenseVector& w) {
  ResolventStep step;
  step.z = a.resolvent(eta, w);
  step.cert.c = (w - step.z) / eta;
  step.cert.at = step.z;
  return step;
}

double estimate_lipschitz(
    const std::function<DenseVector(const DenseVector&)>& f,
    const std::function<DenseVector()>& sample_domain_point, int n_pairs) {
  if (n_pairs < 100)
    throw ParameterViolation("estimate_lipschitz: need n_pairs >= 100");
  double worst = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    const DenseVector z = sample_domain_point();
    const DenseVector zp = sample_domain_point();
    const double dz = (z - zp).norm();
    if (dz == 0.0) continue;
    worst = std::max(worst, (f(z) - f(zp)).norm() / dz);
  }
  return 1.1 * worst;
}

}  // namespace inclusion
