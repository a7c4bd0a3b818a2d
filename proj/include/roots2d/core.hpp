#pragma once

// Shared value types for the complex root-finding toolkit: the complex
// scalar/pair types, solver configuration, result records, and the residual
// and preconditioning utilities used by every solver.

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roots2d {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// A point (x, y) in C^2.
struct PointPair {
    Complex x{};
    Complex y{};

    bool finite() const { return is_finite(x) && is_finite(y); }
};

/// Root-finding method selector.
enum class Method { M1, M2, Newton, Broyden };

std::string to_string(Method m);

/// Why a solve stopped.
enum class ExitReason {
    StepBelowTolerance,      // both coordinate steps < 10^-d and residuals passed
    OneFunctionZeroFallback, // one function converged first; other re-solved 1D
    OuterCapReached,
    DegenerateGeometry,      // plane/line construction unsalvageably singular
    EvaluationFailure,       // non-finite value or evaluation error from f1/f2
    SingularJacobian,        // Newton/Broyden only
    SpuriousLMode,           // QNM driver: converged to an l-root below 1.5
};

std::string to_string(ExitReason r);

inline bool converged(ExitReason r) {
    return r == ExitReason::StepBelowTolerance || r == ExitReason::OneFunctionZeroFallback;
}

/// Base class for evaluation errors raised by system functions and the
/// special-function evaluators. Solvers convert these into
/// ExitReason::EvaluationFailure instead of propagating.
class EvaluationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NonFiniteValue : public EvaluationError {
  public:
    using EvaluationError::EvaluationError;
};

/// A published or independently verified root, with a short label that
/// doubles as its identifier in benchmark output.
struct KnownRoot {
    PointPair pair;
    std::string provenance;
    double tolerance = 1e-9;
};

/// 2x2 complex matrix, rows (a, b; c, d). Used for preconditioning
/// (F1*, F2*) = (a F1 + b F2, c F1 + d F2) and for Jacobians.
struct Matrix2 {
    Complex a{}, b{}, c{}, d{};

    Complex det() const { return a * d - b * c; }
    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

using ComplexFn2 = std::function<Complex(PointPair)>;
using JacobianFn = std::function<Matrix2(PointPair)>;

/// A system of two complex equations F1(x,y) = F2(x,y) = 0 plus metadata.
/// f1/f2 must be pure and reentrant; they may throw EvaluationError.
struct SystemSpec {
    std::string name;
    ComplexFn2 f1;
    ComplexFn2 f2;
    std::vector<KnownRoot> known_roots;
    std::vector<PointPair> recommended_starts;
    /// Analytic Jacobian when a closed form is available (used by Newton).
    std::optional<JacobianFn> analytic_jacobian;
};

/// All solver knobs shared by the 2D Mueller variants and the baselines.
struct SolveConfig {
    int digits_d = 12;       // exit when steps < 10^-d
    int inner_cap_P = 5;     // max iterations of the 1D Mueller subroutine
    int outer_cap_N = 100;   // max outer iterations
    Complex deviation{1e-3, 0.0};
    Method variant = Method::M1;
    bool swap_equations = false;
    bool alternate_order = false; // swap the equations every outer iteration
    std::optional<Matrix2> precondition;
    /// Residual tolerance. <= 0 selects the default guard
    /// 10^-d * (1 + scale), where scale adapts to the seed magnitudes and the
    /// local gradient so that steep functions are not held to an absolute
    /// floor binary doubles cannot reach.
    double residual_tol = 0.0;
    /// Observer invoked once per outer iteration with (n, iterate, |F1|, |F2|).
    std::function<void(int, PointPair, double, double)> on_iterate;

    void validate() const;
    double step_tol() const;
};

/// Final state of one solve.
struct RootResult {
    PointPair root;
    double residual_f1 = 0.0;
    double residual_f2 = 0.0;
    int outer_iterations = 0;
    int inner_iterations_total = 0;
    ExitReason exit_reason = ExitReason::OuterCapReached;
    /// Residual tolerance actually enforced at the exit decision.
    double residual_tol_used = 0.0;

    bool converged() const { return roots2d::converged(exit_reason); }
};

/// (|F1(p)|, |F2(p)|). Throws EvaluationError (NonFiniteValue) when either
/// function produces a non-finite value.
std::pair<double, double> residual(const SystemSpec& sys, PointPair p);

/// Replace (F1, F2) by independent linear combinations
/// (a F1 + b F2, c F1 + d F2). The root set is unchanged for nonsingular m.
/// Throws std::invalid_argument when m is singular.
SystemSpec apply_precondition(const SystemSpec& sys, const Matrix2& m);

/// Evaluate and require a finite result.
Complex eval_checked(const ComplexFn2& f, PointPair p);

}  // namespace roots2d
