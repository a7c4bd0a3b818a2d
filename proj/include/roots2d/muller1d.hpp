#pragma once

// One-dimensional Mueller iteration: quadratic interpolation through three
// points, root selection by the larger-modulus denominator, exit on step
// size, function smallness, or the iteration cap.

#include <functional>

#include "roots2d/core.hpp"

namespace roots2d {

using ComplexFn1 = std::function<Complex(Complex)>;

/// One quadratic-interpolation step. Points ordered oldest..newest
/// (x2, x1, x0); `next` is the proposed iterate.
struct MullerStep {
    Complex q{};
    Complex A{};
    Complex B{};
    Complex C{};
    Complex D_plus{};
    Complex D_minus{};
    Complex next{};
    bool degenerate = false;  // x1 == x2 or both denominators vanish
};

enum class Muller1DExit { StepTol, FunctionTol, CapP, Degenerate };

struct Muller1DOutcome {
    Complex x_final{};
    int iterations = 0;
    Muller1DExit exit = Muller1DExit::CapP;
};

struct Muller1DConfig {
    int cap_P = 5;
    int digits_d = 12;
    Complex deviation{1e-3, 0.0};
    double residual_tol = 0.0;  // <= 0: never exit on function value
};

/// Compute the Mueller step from points (x2, x1, x0) with values
/// (f2, f1, f0), newest last:
///   q = (x0-x1)/(x1-x2)
///   A = q f0 - q(1+q) f1 + q^2 f2
///   B = (2q+1) f0 - (1+q)^2 f1 + q^2 f2
///   C = (1+q) f0
///   next = x0 - 2 (x0-x1) C / D,  |D| = max(|B + sqrt(B^2-4AC)|, |B - ...|)
/// Ties between the denominators resolve to D_plus.
MullerStep muller_step(Complex x2, Complex x1, Complex x0,
                       Complex f2, Complex f1, Complex f0);

/// Iterate from the seed triple {x_in - dev, x_in, x_in + dev} until
/// |x_j - x_{j-1}| < 10^-d, |f| <= residual_tol, or j > P.
/// Throws EvaluationError when f produces a non-finite value.
Muller1DOutcome muller_solve(const ComplexFn1& f, Complex x_in, const Muller1DConfig& cfg);

}  // namespace roots2d
