#include "roots2d/core.hpp"

#include <cmath>

namespace roots2d {

std::string to_string(Method m) {
    switch (m) {
        case Method::M1: return "m1";
        case Method::M2: return "m2";
        case Method::Newton: return "newton";
        case Method::Broyden: return "broyden";
    }
    return "?";
}

std::string to_string(ExitReason r) {
    switch (r) {
        case ExitReason::StepBelowTolerance: return "StepBelowTolerance";
        case ExitReason::OneFunctionZeroFallback: return "OneFunctionZeroFallback";
        case ExitReason::OuterCapReached: return "OuterCapReached";
        case ExitReason::DegenerateGeometry: return "DegenerateGeometry";
        case ExitReason::EvaluationFailure: return "EvaluationFailure";
        case ExitReason::SingularJacobian: return "SingularJacobian";
        case ExitReason::SpuriousLMode: return "SpuriousLMode";
    }
    return "?";
}

void SolveConfig::validate() const {
    if (digits_d < 4 || digits_d > 15)
        throw std::invalid_argument("digits_d must lie in [4, 15]");
    if (inner_cap_P < 1 || inner_cap_P > 100)
        throw std::invalid_argument("inner_cap_P must lie in [1, 100]");
    if (outer_cap_N < 1)
        throw std::invalid_argument("outer_cap_N must be >= 1");
    if (deviation == Complex(0.0, 0.0))
        throw std::invalid_argument("deviation must be nonzero");
    if (precondition && std::abs(precondition->det()) == 0.0)
        throw std::invalid_argument("precondition matrix is singular");
}

double SolveConfig::step_tol() const { return std::pow(10.0, -digits_d); }

Complex eval_checked(const ComplexFn2& f, PointPair p) {
    Complex v = f(p);
    if (!is_finite(v)) throw NonFiniteValue("function value is not finite");
    return v;
}

std::pair<double, double> residual(const SystemSpec& sys, PointPair p) {
    Complex v1 = eval_checked(sys.f1, p);
    Complex v2 = eval_checked(sys.f2, p);
    return {std::abs(v1), std::abs(v2)};
}

SystemSpec apply_precondition(const SystemSpec& sys, const Matrix2& m) {
    if (std::abs(m.det()) == 0.0)
        throw std::invalid_argument("precondition matrix is singular");
    SystemSpec out = sys;
    out.name = sys.name + "*";
    ComplexFn2 f1 = sys.f1;
    ComplexFn2 f2 = sys.f2;
    out.f1 = [f1, f2, m](PointPair p) { return m.a * f1(p) + m.b * f2(p); };
    out.f2 = [f1, f2, m](PointPair p) { return m.c * f1(p) + m.d * f2(p); };
    return out;
}

}  // namespace roots2d
