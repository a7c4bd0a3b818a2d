#pragma once

// Confluent Heun function HeunC(alpha, beta, gamma, delta, eta; z) and its
// z-derivative in the Maple parameter convention:
//
//   y'' + (alpha + (beta+1)/z + (gamma+1)/(z-1)) y'
//       + (mu/z + nu/(z-1)) y = 0,
//   mu = (alpha - beta - gamma + alpha beta - beta gamma)/2 - eta,
//   nu = (alpha + beta + gamma + alpha gamma + beta gamma)/2 + delta + eta,
//
// normalized to HeunC(0) = 1, HeunC'(0) = -mu/(beta+1). Evaluation is by
// Frobenius series at the origin chained with Taylor re-expansions along an
// explicit path from 0 to z; the value at z is defined by that path (straight
// line, with a deterministic semicircle detour around the singular point 1).

#include <utility>
#include <vector>

#include "roots2d/core.hpp"

namespace roots2d {

class RecurrenceBreakdown : public EvaluationError {
  public:
    using EvaluationError::EvaluationError;
};

class PathBlocked : public EvaluationError {
  public:
    using EvaluationError::EvaluationError;
};

class StepLimitExceeded : public EvaluationError {
  public:
    using EvaluationError::EvaluationError;
};

class HeunAccuracyError : public EvaluationError {
  public:
    using EvaluationError::EvaluationError;
};

struct HeunParams {
    Complex alpha{}, beta{}, gamma{}, delta{}, eta{};

    Complex mu() const {
        return (alpha - beta - gamma + alpha * beta - beta * gamma) / 2.0 - eta;
    }
    Complex nu() const {
        return (alpha + beta + gamma + alpha * gamma + beta * gamma) / 2.0 + delta + eta;
    }
    /// HeunC'(0) for the canonical normalization. Requires beta != -1.
    Complex slope_at_origin() const;
    /// Throws RecurrenceBreakdown when beta is (numerically) a negative
    /// integer, which voids the origin recurrence for the canonical solution.
    void require_canonical() const;
};

struct HeunEval {
    Complex value{};
    Complex derivative{};
    std::vector<Complex> path;  // waypoints including endpoints
    double est_error = 0.0;     // absolute first-order error bound on value
};

/// Single series evaluation around `center` with initial data
/// init = (value, derivative) at the center.
///   - center == 0 is the regular singular point: init must satisfy the
///     indicial constraint (beta+1) y'(0) = -mu y(0) (canonical solution), or
///     beta = -1 with y(0) = 0 (the exponent-1 local solution).
///   - ordinary centers require |z - center| < 0.4 * dist(center, {0, 1}).
HeunEval heunc_series(const HeunParams& p, Complex z, Complex center,
                      std::pair<Complex, Complex> init);

/// Full evaluation of the canonical HeunC at z by analytic continuation from
/// the origin. Throws PathBlocked when |z - 1| < 0.05, StepLimitExceeded
/// beyond 10^4 re-expansions, HeunAccuracyError when the running error bound
/// exceeds the acceptance gate.
HeunEval heunc_eval(const HeunParams& p, Complex z);

/// The exponent-1 local solution h(z) = z + O(z^2) continued from the origin.
/// Defined here for beta = -1, where the canonical normalization does not
/// exist; h'(z)/h(z) is the finite limit of HeunC'/HeunC as beta -> -1.
HeunEval heunc_exponent1_eval(const HeunParams& p, Complex z);

}  // namespace roots2d
