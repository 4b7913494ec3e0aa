#pragma once

#include <span>

#include "inclusion/types.hpp"

namespace inclusion {

// Least-squares slope of log(cert_residual) against log(k) over records with
// k >= k_min. At least 10 qualifying records are required (InsufficientData).
// A residual of exactly zero means the run converged beyond measurable rate;
// the slope is reported as -infinity in that case. The result is invariant
// under positive rescaling of the residuals.
double fit_rate_exponent(std::span<const IterateRecord> records, long k_min);

}  // namespace inclusion
