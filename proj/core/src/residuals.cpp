#include "inclusion/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inclusion/errors.hpp"

namespace inclusion {

double cert_residual(const DenseVector& fz, const DenseVector& c) {
  if (fz.size() != c.size())
    throw DimMismatch("cert_residual: dims disagree");
  return (fz + c).norm();
}

double natural_residual(const LipschitzOperator& f, const MaxMonotoneOperator& a,
                        const DenseVector& z) {
  if (f.dim() != a.dim() || z.size() != f.dim())
    throw DimMismatch("natural_residual: dims disagree");
  return (z - a.resolvent(1.0, z - f(z))).norm();
}

namespace {

void check_query(const ConvexSet& set, const GapQuery& query) {
  if (query.z.size() != set.dim())
    throw DimMismatch("gap query: point dim disagrees with set");
  if (!(query.radius > 0.0) || !std::isfinite(query.radius))
    throw ParameterViolation("gap query: radius must be finite and > 0");
  // Gap values are defined relative to a feasible query point; iterates of
  // the projection- and resolvent-based methods satisfy this by construction.
  if (!set.contains(query.z, 1e-7))
    throw ParameterViolation("gap query: point must lie in the set");
}

// Minimize <g, z'> over Box `intersect` B(z, radius), exactly, by dualizing
// the ball constraint: for multiplier mu > 0 the inner minimizer is the
// componentwise clamp of z - g/mu, whose distance to z decreases in mu.
// The box's own minimizer is optimal when it already lies in the ball;
// otherwise bisection drives the distance to the radius (complementary
// slackness). 200 iterations shrink the multiplier bracket far below the
// 1e-10 tolerance, certifying the value to well under 1e-8.
double min_linear_over_box_ball(const DenseVector& g, const ConvexSet& box,
                                const DenseVector& z, double radius) {
  const DenseVector& lo = box.lower();
  const DenseVector& hi = box.upper();

  DenseVector vertex(z.size());
  for (Index i = 0; i < z.size(); ++i)
    vertex[i] = g[i] > 0.0 ? lo[i] : (g[i] < 0.0 ? hi[i] : z[i]);
  if ((vertex - z).norm() <= radius) return g.dot(vertex);

  const auto clamp_at = [&](double mu) {
    return DenseVector((z - g / mu).cwiseMax(lo).cwiseMin(hi));
  };
  const auto dist_at = [&](double mu) { return (clamp_at(mu) - z).norm(); };

  double mu_hi = std::max(g.norm() / radius, 1e-12);
  while (dist_at(mu_hi) > radius) mu_hi *= 2.0;
  double mu_lo = mu_hi;
  while (mu_lo > 1e-300 && dist_at(mu_lo) < radius) mu_lo *= 0.5;

  for (int it = 0; it < 200 && mu_hi - mu_lo > 1e-10 * mu_hi; ++it) {
    const double mid = 0.5 * (mu_lo + mu_hi);
    (dist_at(mid) >= radius ? mu_lo : mu_hi) = mid;
  }
  return g.dot(clamp_at(0.5 * (mu_lo + mu_hi)));
}

// Minimize <g, z'> over B(center, set_r) `intersect` B(z, radius), exactly.
// Single-constraint minimizers are optimal when feasible for the other
// ball; otherwise the optimum sits on the intersection circle, solved in
// the 2D span of (z - center) and the gradient.
double min_linear_over_two_balls(const DenseVector& g, const DenseVector& center,
                                 double set_r, const DenseVector& z,
                                 double radius) {
  const double gn = g.norm();
  if (gn == 0.0) return 0.0;
  const DenseVector ghat = g / gn;

  const DenseVector cand1 = center - set_r * ghat;
  if ((cand1 - z).norm() <= radius) return g.dot(cand1);
  const DenseVector cand2 = z - radius * ghat;
  if ((cand2 - center).norm() <= set_r) return g.dot(cand2);

  const DenseVector d = z - center;
  const double dn = d.norm();
  // Both constraints active requires distinct centers (dn > 0): coincident
  // centers reduce to the smaller ball, caught above.
  const DenseVector e1 = d / dn;
  const double x = (set_r * set_r - radius * radius + dn * dn) / (2.0 * dn);
  const double y = std::sqrt(std::max(set_r * set_r - x * x, 0.0));
  DenseVector gperp = g - g.dot(e1) * e1;
  const double gperp_n = gperp.norm();
  if (gperp_n > 0.0) {
    const DenseVector e2 = -gperp / gperp_n;  // objective-decreasing direction
    return g.dot(DenseVector(center + x * e1 + y * e2));
  }
  // Gradient parallel to the center line: the circle coordinate does not
  // affect the objective.
  return g.dot(center) + x * g.dot(e1);
}

}  // namespace

double gap_svi(const LipschitzOperator& f, const ConvexSet& set,
               const GapQuery& query) {
  check_query(set, query);
  const DenseVector g = f(query.z);
  switch (set.kind()) {
    case ConvexSet::Kind::FullSpace:
      return query.radius * g.norm();
    case ConvexSet::Kind::Box:
      return g.dot(query.z) -
             min_linear_over_box_ball(g, set, query.z, query.radius);
    case ConvexSet::Kind::Ball:
      return g.dot(query.z) - min_linear_over_two_balls(g, set.center(),
                                                        set.radius(), query.z,
                                                        query.radius);
    case ConvexSet::Kind::Simplex:
      throw UnsupportedSet(
          "gap_svi: no exact method for Simplex; use gap_svi_sampled");
  }
  throw Error("gap_svi: unreachable");
}

namespace {

// 1D intersection of the set with [z - r, z + r]; empty intervals cannot
// occur because z itself is feasible for the locality ball.
std::pair<double, double> interval_1d(const ConvexSet& set, double z, double r) {
  double lo = z - r, hi = z + r;
  switch (set.kind()) {
    case ConvexSet::Kind::FullSpace: break;
    case ConvexSet::Kind::Box:
      lo = std::max(lo, set.lower()[0]);
      hi = std::min(hi, set.upper()[0]);
      break;
    case ConvexSet::Kind::Ball:
      lo = std::max(lo, set.center()[0] - set.radius());
      hi = std::min(hi, set.center()[0] + set.radius());
      break;
    case ConvexSet::Kind::Simplex:
      lo = std::max(lo, 1.0);
      hi = std::min(hi, 1.0);
      break;
  }
  return {lo, std::max(hi, lo)};
}

}  // namespace

GapBound gap_mvi_grid(const LipschitzOperator& f, const ConvexSet& set,
                      const GapQuery& query, long grid_points) {
  check_query(set, query);
  if (set.dim() > 2)
    throw DimTooLarge("gap_mvi_grid: supported for dim <= 2 only");
  if (grid_points < 2)
    throw ParameterViolation("gap_mvi_grid: need grid_points >= 2");

  const DenseVector& z = query.z;
  const double r = query.radius;
  GapBound out;
  out.lower_bound_only = true;
  double best = -std::numeric_limits<double>::infinity();

  const auto consider = [&](const DenseVector& zp) {
    if ((zp - z).norm() > r) return;
    best = std::max(best, f(zp).dot(z - zp));
  };

  if (set.dim() == 1) {
    auto [lo, hi] = interval_1d(set, z[0], r);
    const long m = grid_points;
    const double h = m > 1 ? (hi - lo) / static_cast<double>(m - 1) : 0.0;
    DenseVector zp(1);
    for (long i = 0; i < m; ++i) {
      zp[0] = lo + h * static_cast<double>(i);
      consider(zp);
    }
    out.grid_spacing = h;
  } else if (set.kind() == ConvexSet::Kind::Simplex) {
    // The 2D simplex is the segment (t, 1-t), t in [0, 1].
    const long m = std::max<long>(
        2, static_cast<long>(std::floor(std::sqrt(static_cast<double>(grid_points)))));
    const double h = 1.0 / static_cast<double>(m - 1);
    DenseVector zp(2);
    for (long i = 0; i < m; ++i) {
      const double t = h * static_cast<double>(i);
      zp[0] = t;
      zp[1] = 1.0 - t;
      consider(zp);
    }
    out.grid_spacing = h * std::sqrt(2.0);
  } else {
    // Grid the bounding rectangle of the feasible region, testing membership.
    double lo0 = z[0] - r, hi0 = z[0] + r, lo1 = z[1] - r, hi1 = z[1] + r;
    if (set.kind() == ConvexSet::Kind::Box) {
      lo0 = std::max(lo0, set.lower()[0]);
      hi0 = std::min(hi0, set.upper()[0]);
      lo1 = std::max(lo1, set.lower()[1]);
      hi1 = std::min(hi1, set.upper()[1]);
    } else if (set.kind() == ConvexSet::Kind::Ball) {
      lo0 = std::max(lo0, set.center()[0] - set.radius());
      hi0 = std::min(hi0, set.center()[0] + set.radius());
      lo1 = std::max(lo1, set.center()[1] - set.radius());
      hi1 = std::min(hi1, set.center()[1] + set.radius());
    }
    const long m = std::max<long>(
        2, static_cast<long>(std::floor(std::sqrt(static_cast<double>(grid_points)))));
    const double h0 = (hi0 - lo0) / static_cast<double>(m - 1);
    const double h1 = (hi1 - lo1) / static_cast<double>(m - 1);
    DenseVector zp(2);
    for (long i = 0; i < m; ++i) {
      zp[0] = lo0 + h0 * static_cast<double>(i);
      for (long j = 0; j < m; ++j) {
        zp[1] = lo1 + h1 * static_cast<double>(j);
        if (!set.contains(zp)) continue;
        consider(zp);
      }
    }
    out.grid_spacing = std::hypot(h0, h1);
  }

  // z itself is always feasible, so the maximum is at least the value there.
  if (!std::isfinite(best)) best = 0.0;
  out.value = std::max(best, 0.0);
  return out;
}

GapBound gap_svi_sampled(const LipschitzOperator& f, const ConvexSet& set,
                         const GapQuery& query, long n_samples,
                         std::mt19937_64& rng) {
  check_query(set, query);
  if (n_samples < 1)
    throw ParameterViolation("gap_svi_sampled: need n_samples >= 1");
  const DenseVector g = f(query.z);
  std::normal_distribution<double> normal(0.0, 1.0);
  double best = 0.0;  // z' = z is feasible and gives 0
  for (long s = 0; s < n_samples; ++s) {
    DenseVector probe(query.z.size());
    for (Index i = 0; i < probe.size(); ++i) probe[i] = normal(rng);
    probe = query.z + (query.radius * std::uniform_real_distribution<double>(
                           0.0, 1.0)(rng) / std::max(probe.norm(), 1e-300)) *
                          probe;
    DenseVector zp = set.project(probe);
    if ((zp - query.z).norm() > query.radius)
      zp = query.z + (query.radius / (zp - query.z).norm()) * (zp - query.z);
    if (!set.contains(zp)) continue;
    best = std::max(best, g.dot(query.z - zp));
  }
  GapBound out;
  out.value = best;
  out.lower_bound_only = true;
  return out;
}

}  // namespace inclusion
