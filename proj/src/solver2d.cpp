#include "roots2d/solver2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace roots2d {

IterateTriple seed_triple(const SystemSpec& sys, PointPair start, Complex deviation) {
    if (deviation == Complex(0.0, 0.0))
        throw std::invalid_argument("deviation must be nonzero");
    IterateTriple t;
    t.p_nm2 = {start.x - deviation, start.y - deviation};
    t.p_nm1 = start;
    t.p_n = {start.x + deviation, start.y + deviation};
    t.f2_nm2 = eval_checked(sys.f2, t.p_nm2);
    t.f2_nm1 = eval_checked(sys.f2, t.p_nm1);
    t.f2_n = eval_checked(sys.f2, t.p_n);
    return t;
}

bool triple_collinear(const IterateTriple& t) {
    const Complex ux = t.p_nm1.x - t.p_nm2.x, uy = t.p_nm1.y - t.p_nm2.y;
    const Complex vx = t.p_n.x - t.p_nm1.x, vy = t.p_n.y - t.p_nm1.y;
    const double nu = std::norm(ux) + std::norm(uy);
    const double nv = std::norm(vx) + std::norm(vy);
    const Complex cross = ux * vy - uy * vx;
    return std::abs(cross) <= 1e-12 * std::max(nu, nv);
}

Plane fit_plane(const IterateTriple& t) {
    // rows: [x_i, y_i, 1 | f2_i]
    std::array<std::array<Complex, 4>, 3> m = {{
        {t.p_nm2.x, t.p_nm2.y, 1.0, t.f2_nm2},
        {t.p_nm1.x, t.p_nm1.y, 1.0, t.f2_nm1},
        {t.p_n.x, t.p_n.y, 1.0, t.f2_n},
    }};
    double scale = 0.0;
    for (const auto& row : m)
        for (int c = 0; c < 3; ++c) scale = std::max(scale, std::abs(row[c]));

    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-13 * scale)
            throw DegenerateGeometryError("plane fit: sample points are collinear");
        std::swap(m[col], m[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const Complex f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    Plane pl;
    Complex sol[3];
    for (int r = 2; r >= 0; --r) {
        Complex s = m[r][3];
        for (int c = r + 1; c < 3; ++c) s -= m[r][c] * sol[c];
        sol[r] = s / m[r][r];
    }
    pl.c1 = sol[0];
    pl.c2 = sol[1];
    pl.c3 = sol[2];
    if (!is_finite(pl.c1) || !is_finite(pl.c2) || !is_finite(pl.c3))
        throw DegenerateGeometryError("plane fit: non-finite coefficients");
    return pl;
}

LineRelation intersect_zero(const Plane& pl) {
    const double a1 = std::abs(pl.c1), a2 = std::abs(pl.c2);
    if (a1 <= 1e-14 * std::abs(pl.c3) && a2 <= 1e-14 * std::abs(pl.c3))
        throw DegenerateGeometryError("plane is (numerically) horizontal; no zero line");
    if (a1 == 0.0 && a2 == 0.0)
        throw DegenerateGeometryError("zero plane; zero line undetermined");
    LineRelation ln;
    if (a2 >= a1) {
        ln.orientation = LineOrientation::YofX;
        ln.slope = -pl.c1 / pl.c2;
        ln.intercept = -pl.c3 / pl.c2;
    } else {
        ln.orientation = LineOrientation::XofY;
        ln.slope = -pl.c2 / pl.c1;
        ln.intercept = -pl.c3 / pl.c1;
    }
    return ln;
}

namespace {

// Line through two points, solved for the variable with the wider spread.
LineRelation secant_relation(PointPair a, PointPair b) {
    const Complex dx = b.x - a.x, dy = b.y - a.y;
    if (dx == Complex(0.0, 0.0) && dy == Complex(0.0, 0.0))
        throw DegenerateGeometryError("secant relation from coincident points");
    LineRelation ln;
    if (std::abs(dx) >= std::abs(dy)) {
        ln.orientation = LineOrientation::YofX;
        ln.slope = dy / dx;
        ln.intercept = a.y - ln.slope * a.x;
    } else {
        ln.orientation = LineOrientation::XofY;
        ln.slope = dx / dy;
        ln.intercept = a.x - ln.slope * a.y;
    }
    return ln;
}

struct EffectiveSystem {
    ComplexFn2 f1, f2;
};

EffectiveSystem make_effective(const SystemSpec& sys, const SolveConfig& cfg, bool swapped) {
    SystemSpec work = cfg.precondition ? apply_precondition(sys, *cfg.precondition) : sys;
    if (swapped) return {work.f2, work.f1};
    return {work.f1, work.f2};
}

}  // namespace

RootResult solve(const SystemSpec& sys, PointPair start, const SolveConfig& cfg) {
    cfg.validate();
    if (cfg.variant != Method::M1 && cfg.variant != Method::M2)
        throw std::invalid_argument("solver2d::solve handles variants M1/M2 only");

    const double step_tol = cfg.step_tol();
    const double base = step_tol;  // 10^-d
    const Complex dev = cfg.deviation;
    const bool m2 = cfg.variant == Method::M2;

    RootResult res;
    res.root = start;

    bool swapped = cfg.swap_equations;
    EffectiveSystem eff = make_effective(sys, cfg, swapped);

    auto finish = [&](PointPair p, double r1, double r2, int outer, int inner,
                      ExitReason reason, double tol_used) {
        res.root = p;
        res.residual_f1 = swapped ? r2 : r1;
        res.residual_f2 = swapped ? r1 : r2;
        res.outer_iterations = outer;
        res.inner_iterations_total = inner;
        res.exit_reason = reason;
        res.residual_tol_used = tol_used;
        return res;
    };

    int inner_total = 0;
    try {
        IterateTriple t;
        t.p_nm2 = {start.x - dev, start.y - dev};
        t.p_nm1 = start;
        t.p_n = {start.x + dev, start.y + dev};

        // Seed scale for the residual guard: both functions over the triple.
        double seed_scale = 0.0;
        for (PointPair p : {t.p_nm2, t.p_nm1, t.p_n}) {
            seed_scale = std::max(seed_scale, std::abs(eval_checked(eff.f1, p)));
        }
        t.f2_nm2 = eval_checked(eff.f2, t.p_nm2);
        t.f2_nm1 = eval_checked(eff.f2, t.p_nm1);
        t.f2_n = eval_checked(eff.f2, t.p_n);
        seed_scale = std::max({seed_scale, std::abs(t.f2_nm2), std::abs(t.f2_nm1), std::abs(t.f2_n)});

        std::vector<PointPair> history = {t.p_nm2, t.p_nm1, t.p_n};
        bool stagnation_perturb_used = false;
        int degeneracy_fixes = 0;
        double grad_scale = 0.0;  // |c1|+|c2| of the most recent plane

        // Degenerate triples (the canonical collinear seed, or nearly
        // coincident iterates after a stall) are replaced by a fresh
        // non-collinear triple around the newest point.
        auto reseed_around_newest = [&](int attempt) {
            const Complex d = dev * double(attempt);
            const Complex i{0.0, 1.0};
            t.p_nm2 = {t.p_n.x - d, t.p_n.y - d * i};
            t.p_nm1 = {t.p_n.x + d * i, t.p_n.y + d};
            t.f2_nm2 = eval_checked(eff.f2, t.p_nm2);
            t.f2_nm1 = eval_checked(eff.f2, t.p_nm1);
        };

        auto residual_tol = [&](PointPair at) {
            if (cfg.residual_tol > 0.0) return cfg.residual_tol;
            const double pnorm = 1.0 + std::abs(at.x) + std::abs(at.y);
            return base * (1.0 + std::max(seed_scale, grad_scale * pnorm));
        };

        for (int n = 1; n <= cfg.outer_cap_N; ++n) {
            if (cfg.alternate_order && n > 1) {
                swapped = !swapped;
                eff = make_effective(sys, cfg, swapped);
                t.f2_nm2 = eval_checked(eff.f2, t.p_nm2);
                t.f2_nm1 = eval_checked(eff.f2, t.p_nm1);
                t.f2_n = eval_checked(eff.f2, t.p_n);
            }

            while (triple_collinear(t)) {
                if (++degeneracy_fixes > 10)
                    return finish(t.p_n, std::abs(eval_checked(eff.f1, t.p_n)),
                                  std::abs(t.f2_n), n - 1, inner_total,
                                  ExitReason::DegenerateGeometry, residual_tol(t.p_n));
                reseed_around_newest(degeneracy_fixes);
            }

            LineRelation line;
            const double tol_here = residual_tol(t.p_n);
            if (std::abs(t.f2_nm1) <= tol_here && std::abs(t.f2_n) <= tol_here &&
                !(t.p_nm1.x == t.p_n.x && t.p_nm1.y == t.p_n.y)) {
                // The two newest iterates already sit on the F2 = 0 surface;
                // a plane through near-zero samples carries no information, so
                // follow the surface secant instead.
                line = secant_relation(t.p_nm1, t.p_n);
            } else {
                try {
                    Plane pl = fit_plane(t);
                    grad_scale = std::abs(pl.c1) + std::abs(pl.c2);
                    line = intersect_zero(pl);
                } catch (const DegenerateGeometryError&) {
                    if (++degeneracy_fixes > 10)
                        return finish(t.p_n, std::abs(eval_checked(eff.f1, t.p_n)),
                                      std::abs(t.f2_n), n - 1, inner_total,
                                      ExitReason::DegenerateGeometry, tol_here);
                    reseed_around_newest(degeneracy_fixes);
                    continue;
                }
            }

            Muller1DConfig icfg;
            icfg.cap_P = cfg.inner_cap_P;
            icfg.digits_d = cfg.digits_d;
            icfg.deviation = dev;
            icfg.residual_tol = 0.0;  // inner solves run on the step criterion

            PointPair next;
            if (line.orientation == LineOrientation::YofX) {
                auto g = [&](Complex x) { return eff.f1({x, line.y_of(x)}); };
                Muller1DOutcome o = muller_solve(g, t.p_n.x, icfg);
                inner_total += o.iterations;
                next.x = o.x_final;
                if (m2) {
                    auto h = [&](Complex y) { return eff.f2({next.x, y}); };
                    Muller1DOutcome o2 = muller_solve(h, t.p_n.y, icfg);
                    inner_total += o2.iterations;
                    next.y = o2.x_final;
                } else {
                    next.y = line.y_of(next.x);
                }
            } else {
                auto g = [&](Complex y) { return eff.f1({line.x_of(y), y}); };
                Muller1DOutcome o = muller_solve(g, t.p_n.y, icfg);
                inner_total += o.iterations;
                next.y = o.x_final;
                if (m2) {
                    auto h = [&](Complex x) { return eff.f2({x, next.y}); };
                    Muller1DOutcome o2 = muller_solve(h, t.p_n.x, icfg);
                    inner_total += o2.iterations;
                    next.x = o2.x_final;
                } else {
                    next.x = line.x_of(next.y);
                }
            }
            if (!next.finite()) throw NonFiniteValue("iterate is not finite");

            Complex f1v = eval_checked(eff.f1, next);
            Complex f2v = eval_checked(eff.f2, next);
            double r1 = std::abs(f1v), r2 = std::abs(f2v);
            const double dx = std::abs(next.x - t.p_n.x);
            const double dy = std::abs(next.y - t.p_n.y);
            const double tol = residual_tol(next);
            if (cfg.on_iterate) cfg.on_iterate(n, next, r1, r2);

            if (dx < step_tol && dy < step_tol) {
                if (r1 <= tol && r2 <= tol)
                    return finish(next, r1, r2, n, inner_total,
                                  ExitReason::StepBelowTolerance, tol);
                // One function converged first: accept the variable its solve
                // fixed and re-run 1D Mueller for the other one.
                if (r1 <= tol && r2 > 1e3 * tol) {
                    Muller1DConfig fcfg = icfg;
                    fcfg.cap_P = std::min(cfg.outer_cap_N, 100);
                    fcfg.residual_tol = tol;
                    if (line.orientation == LineOrientation::YofX) {
                        auto h = [&](Complex y) { return eff.f2({next.x, y}); };
                        Muller1DOutcome o = muller_solve(h, next.y, fcfg);
                        inner_total += o.iterations;
                        next.y = o.x_final;
                    } else {
                        auto h = [&](Complex x) { return eff.f2({x, next.y}); };
                        Muller1DOutcome o = muller_solve(h, next.x, fcfg);
                        inner_total += o.iterations;
                        next.x = o.x_final;
                    }
                    auto [q1, q2] = std::pair<double, double>{
                        std::abs(eval_checked(eff.f1, next)), std::abs(eval_checked(eff.f2, next))};
                    return finish(next, q1, q2, n, inner_total,
                                  ExitReason::OneFunctionZeroFallback, tol);
                }
                if (r2 <= tol && r1 > 1e3 * tol) {
                    Muller1DConfig fcfg = icfg;
                    fcfg.cap_P = std::min(cfg.outer_cap_N, 100);
                    fcfg.residual_tol = tol;
                    if (line.orientation == LineOrientation::YofX) {
                        auto h = [&](Complex x) { return eff.f1({x, next.y}); };
                        Muller1DOutcome o = muller_solve(h, next.x, fcfg);
                        inner_total += o.iterations;
                        next.x = o.x_final;
                    } else {
                        auto h = [&](Complex y) { return eff.f1({next.x, y}); };
                        Muller1DOutcome o = muller_solve(h, next.y, fcfg);
                        inner_total += o.iterations;
                        next.y = o.x_final;
                    }
                    auto [q1, q2] = std::pair<double, double>{
                        std::abs(eval_checked(eff.f1, next)), std::abs(eval_checked(eff.f2, next))};
                    return finish(next, q1, q2, n, inner_total,
                                  ExitReason::OneFunctionZeroFallback, tol);
                }
            }

            // Stagnation guard: an iterate revisiting an earlier point (to
            // d+2 digits) without satisfying the exits would cycle forever.
            const double rep_tol = step_tol * 1e-2;
            bool repeated = false;
            for (const PointPair& h : history)
                if (std::abs(next.x - h.x) < rep_tol && std::abs(next.y - h.y) < rep_tol) {
                    repeated = true;
                    break;
                }
            if (repeated) {
                if (!stagnation_perturb_used) {
                    stagnation_perturb_used = true;
                    next.x += dev / 10.0;
                    next.y += dev / 10.0;
                    f2v = eval_checked(eff.f2, next);
                    r1 = std::abs(eval_checked(eff.f1, next));
                    r2 = std::abs(f2v);
                } else {
                    return finish(next, r1, r2, n, inner_total,
                                  ExitReason::OuterCapReached, tol);
                }
            }

            history.push_back(next);
            t.p_nm2 = t.p_nm1;
            t.p_nm1 = t.p_n;
            t.p_n = next;
            t.f2_nm2 = t.f2_nm1;
            t.f2_nm1 = t.f2_n;
            t.f2_n = f2v;
        }

        const double r1 = std::abs(eval_checked(eff.f1, t.p_n));
        return finish(t.p_n, r1, std::abs(t.f2_n), cfg.outer_cap_N, inner_total,
                      ExitReason::OuterCapReached, residual_tol(t.p_n));
    } catch (const DegenerateGeometryError&) {
        res.exit_reason = ExitReason::DegenerateGeometry;
        res.inner_iterations_total = inner_total;
        res.residual_f1 = res.residual_f2 = std::numeric_limits<double>::quiet_NaN();
        return res;
    } catch (const EvaluationError&) {
        res.exit_reason = ExitReason::EvaluationFailure;
        res.inner_iterations_total = inner_total;
        res.residual_f1 = res.residual_f2 = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
}

}  // namespace roots2d
