#pragma once

#include <optional>
#include <random>

#include "inclusion/operators.hpp"
#include "inclusion/types.hpp"

namespace inclusion {

// ||F(z) + c|| for a certificate c in A(z); upper bound on the tangent
// residual of the inclusion at z.
double cert_residual(const DenseVector& fz, const DenseVector& c);

// ||z - J_A[z - F(z)]|| at unit resolvent parameter. Zero exactly at
// solutions, and never larger than any cert_residual at the same point.
double natural_residual(const LipschitzOperator& f, const MaxMonotoneOperator& a,
                        const DenseVector& z);

// Restricted gap query: the comparison region is set `intersect` B(z, radius).
struct GapQuery {
  DenseVector z;
  double radius = 1.0;  // > 0
};

// Exact value of max_{z' in set, |z'-z| <= radius} <F(z), z - z'>.
// FullSpace: radius * |F(z)|. Box: Lagrangian bisection on the locality-ball
// multiplier (certified to 1e-8 absolute). Ball: closed-form case analysis,
// including the two-active-constraints circle solution. Simplex is not
// supported (UnsupportedSet); use gap_svi_sampled there.
double gap_svi(const LipschitzOperator& f, const ConvexSet& set,
               const GapQuery& query);

struct GapBound {
  double value = 0.0;
  bool lower_bound_only = true;
  std::optional<double> grid_spacing;
};

// Grid maximum of <F(z'), z - z'> over set `intersect` B(z, radius); a lower
// bound on the true gap, reported with its grid spacing. Supported for
// dim <= 2 only (DimTooLarge). grid_points is the 1D resolution; in 2D the
// per-axis resolution is floor(sqrt(grid_points)).
GapBound gap_mvi_grid(const LipschitzOperator& f, const ConvexSet& set,
                      const GapQuery& query, long grid_points);

// Sampling lower bound on the strong gap for any set kind (used where
// gap_svi has no exact method).
GapBound gap_svi_sampled(const LipschitzOperator& f, const ConvexSet& set,
                         const GapQuery& query, long n_samples,
                         std::mt19937_64& rng);

}  // namespace inclusion
