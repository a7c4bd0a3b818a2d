#pragma once

// Comparison methods: generalized Newton (analytic Jacobian when supplied,
// forward differences otherwise) and the fresh-Jacobian Broyden variant the
// benchmarks use (a full finite-difference Jacobian every iteration, no
// Sherman-Morrison update).

#include "roots2d/core.hpp"

namespace roots2d {

enum class JacobianMethod { Analytic, ForwardDifference };

/// One 2x2 Jacobian estimate.
struct JacobianEstimate {
    Matrix2 j;
    JacobianMethod method = JacobianMethod::ForwardDifference;
    double step_x = 0.0;  // finite-difference steps actually used
    double step_y = 0.0;
};

/// Forward-difference Jacobian with step h = sqrt(eps) * (1 + |coordinate|)
/// along the real direction of each coordinate.
JacobianEstimate fd_jacobian(const ComplexFn2& f1, const ComplexFn2& f2, PointPair p);

/// Newton iteration (x,y) <- (x,y) - J^-1 F. Exits mirror the 2D Mueller:
/// steps below 10^-d with residuals passing, outer cap, SingularJacobian
/// when |det J| < 1e-14 * max|J_ij|^2.
RootResult newton_solve(const SystemSpec& sys, PointPair start, const SolveConfig& cfg,
                        const std::optional<JacobianFn>& jac = std::nullopt);

/// Newton-type update with a fresh forward-difference Jacobian each step.
RootResult broyden_solve(const SystemSpec& sys, PointPair start, const SolveConfig& cfg);

}  // namespace roots2d
