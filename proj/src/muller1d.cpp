#include "roots2d/muller1d.hpp"

#include <cmath>

namespace roots2d {

MullerStep muller_step(Complex x2, Complex x1, Complex x0,
                       Complex f2, Complex f1, Complex f0) {
    MullerStep s;
    if (x1 == x2) {
        s.degenerate = true;
        return s;
    }
    s.q = (x0 - x1) / (x1 - x2);
    const Complex q = s.q;
    s.A = q * f0 - q * (1.0 + q) * f1 + q * q * f2;
    s.B = (2.0 * q + 1.0) * f0 - (1.0 + q) * (1.0 + q) * f1 + q * q * f2;
    s.C = (1.0 + q) * f0;
    const Complex disc = std::sqrt(s.B * s.B - 4.0 * s.A * s.C);
    s.D_plus = s.B + disc;
    s.D_minus = s.B - disc;
    const Complex dmax = std::abs(s.D_plus) >= std::abs(s.D_minus) ? s.D_plus : s.D_minus;
    if (std::abs(dmax) == 0.0) {
        s.degenerate = true;
        return s;
    }
    s.next = x0 - 2.0 * (x0 - x1) * s.C / dmax;
    if (!is_finite(s.next)) s.degenerate = true;
    return s;
}

Muller1DOutcome muller_solve(const ComplexFn1& f, Complex x_in, const Muller1DConfig& cfg) {
    const double step_tol = std::pow(10.0, -cfg.digits_d);
    auto eval = [&f](Complex x) {
        Complex v = f(x);
        if (!is_finite(v)) throw NonFiniteValue("1D function value is not finite");
        return v;
    };

    Complex x2 = x_in - cfg.deviation, x1 = x_in, x0 = x_in + cfg.deviation;
    Complex f2 = eval(x2), f1 = eval(x1), f0 = eval(x0);
    if (cfg.residual_tol > 0.0 && std::abs(f1) <= cfg.residual_tol)
        return {x_in, 0, Muller1DExit::FunctionTol};

    for (int j = 1; j <= cfg.cap_P; ++j) {
        MullerStep s = muller_step(x2, x1, x0, f2, f1, f0);
        if (s.degenerate) return {x0, j - 1, Muller1DExit::Degenerate};
        Complex fn = eval(s.next);
        if (std::abs(s.next - x0) < step_tol)
            return {s.next, j, Muller1DExit::StepTol};
        if (cfg.residual_tol > 0.0 && std::abs(fn) <= cfg.residual_tol)
            return {s.next, j, Muller1DExit::FunctionTol};
        x2 = x1; x1 = x0; x0 = s.next;
        f2 = f1; f1 = f0; f0 = fn;
    }
    return {x0, cfg.cap_P, Muller1DExit::CapP};
}

}  // namespace roots2d
