#pragma once

#include "inclusion/diagnostics.hpp"
#include "inclusion/errors.hpp"
#include "inclusion/operators.hpp"
#include "inclusion/problems.hpp"
#include "inclusion/rate_fit.hpp"
#include "inclusion/residuals.hpp"
#include "inclusion/solvers.hpp"
#include "inclusion/trace_io.hpp"
#include "inclusion/types.hpp"
