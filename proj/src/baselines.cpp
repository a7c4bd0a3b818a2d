#include "roots2d/baselines.hpp"

#include <cmath>
#include <limits>

namespace roots2d {

JacobianEstimate fd_jacobian(const ComplexFn2& f1, const ComplexFn2& f2, PointPair p) {
    static const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
    JacobianEstimate est;
    est.method = JacobianMethod::ForwardDifference;
    est.step_x = sqrt_eps * (1.0 + std::abs(p.x));
    est.step_y = sqrt_eps * (1.0 + std::abs(p.y));
    const Complex v1 = eval_checked(f1, p);
    const Complex v2 = eval_checked(f2, p);
    const PointPair px{p.x + est.step_x, p.y};
    const PointPair py{p.x, p.y + est.step_y};
    est.j.a = (eval_checked(f1, px) - v1) / est.step_x;
    est.j.b = (eval_checked(f1, py) - v1) / est.step_y;
    est.j.c = (eval_checked(f2, px) - v2) / est.step_x;
    est.j.d = (eval_checked(f2, py) - v2) / est.step_y;
    return est;
}

namespace {

RootResult newton_like(const SystemSpec& sys0, PointPair start, const SolveConfig& cfg,
                       const std::optional<JacobianFn>& jac) {
    cfg.validate();
    const double step_tol = cfg.step_tol();
    const double base = step_tol;

    const SystemSpec sys =
        cfg.precondition ? apply_precondition(sys0, *cfg.precondition) : sys0;
    const bool swapped = cfg.swap_equations;
    const ComplexFn2& f1 = swapped ? sys.f2 : sys.f1;
    const ComplexFn2& f2 = swapped ? sys.f1 : sys.f2;

    RootResult res;
    res.root = start;
    try {
        PointPair p = start;
        Complex v1 = eval_checked(f1, p);
        Complex v2 = eval_checked(f2, p);
        const double seed_scale = std::max(std::abs(v1), std::abs(v2));

        for (int n = 1; n <= cfg.outer_cap_N; ++n) {
            Matrix2 j;
            if (jac) {
                Matrix2 raw = (*jac)(p);
                if (cfg.precondition) {
                    const Matrix2& m = *cfg.precondition;
                    j = {m.a * raw.a + m.b * raw.c, m.a * raw.b + m.b * raw.d,
                         m.c * raw.a + m.d * raw.c, m.c * raw.b + m.d * raw.d};
                } else {
                    j = raw;
                }
                if (swapped) {
                    std::swap(j.a, j.c);
                    std::swap(j.b, j.d);
                }
            } else {
                j = fd_jacobian(f1, f2, p).j;
            }
            const double jmax =
                std::max({std::abs(j.a), std::abs(j.b), std::abs(j.c), std::abs(j.d)});
            if (!std::isfinite(jmax))
                throw NonFiniteValue("Jacobian entry is not finite");
            const Complex det = j.det();
            if (jmax == 0.0 || std::abs(det) < 1e-14 * jmax * jmax) {
                res.root = p;
                res.residual_f1 = std::abs(swapped ? v2 : v1);
                res.residual_f2 = std::abs(swapped ? v1 : v2);
                res.outer_iterations = n;
                res.exit_reason = ExitReason::SingularJacobian;
                res.residual_tol_used = base * (1.0 + seed_scale);
                return res;
            }
            const Complex dx = (v1 * j.d - v2 * j.b) / det;
            const Complex dy = (j.a * v2 - j.c * v1) / det;
            p.x -= dx;
            p.y -= dy;
            if (!p.finite()) throw NonFiniteValue("Newton iterate is not finite");
            v1 = eval_checked(f1, p);
            v2 = eval_checked(f2, p);
            const double r1 = std::abs(v1), r2 = std::abs(v2);
            const double pnorm = 1.0 + std::abs(p.x) + std::abs(p.y);
            const double grad = std::abs(j.a) + std::abs(j.b) + std::abs(j.c) + std::abs(j.d);
            const double tol = cfg.residual_tol > 0.0
                                   ? cfg.residual_tol
                                   : base * (1.0 + std::max(seed_scale, grad * pnorm));
            if (std::abs(dx) < step_tol && std::abs(dy) < step_tol && r1 <= tol && r2 <= tol) {
                res.root = p;
                res.residual_f1 = swapped ? r2 : r1;
                res.residual_f2 = swapped ? r1 : r2;
                res.outer_iterations = n;
                res.exit_reason = ExitReason::StepBelowTolerance;
                res.residual_tol_used = tol;
                return res;
            }
            res.root = p;
            res.residual_f1 = swapped ? r2 : r1;
            res.residual_f2 = swapped ? r1 : r2;
            res.outer_iterations = n;
            res.residual_tol_used = tol;
        }
        res.exit_reason = ExitReason::OuterCapReached;
        return res;
    } catch (const EvaluationError&) {
        res.exit_reason = ExitReason::EvaluationFailure;
        res.residual_f1 = res.residual_f2 = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
}

}  // namespace

RootResult newton_solve(const SystemSpec& sys, PointPair start, const SolveConfig& cfg,
                        const std::optional<JacobianFn>& jac) {
    std::optional<JacobianFn> j = jac;
    if (!j && sys.analytic_jacobian) j = sys.analytic_jacobian;
    return newton_like(sys, start, cfg, j);
}

RootResult broyden_solve(const SystemSpec& sys, PointPair start, const SolveConfig& cfg) {
    return newton_like(sys, start, cfg, std::nullopt);
}

}  // namespace roots2d
