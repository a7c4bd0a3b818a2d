#pragma once

// Special functions needed by the benchmark systems and the quasi-normal-mode
// angular equation: integer-order Bessel J and Y and the Hankel function of
// the first kind for complex argument, the confluent hypergeometric
// 1F1(1;3;z), and the Ferrers (on-the-cut Legendre) function of general
// complex degree and order 2.

#include "roots2d/core.hpp"

namespace roots2d {

/// Raised when an argument leaves the documented accuracy envelope of an
/// evaluator, or when the internal accuracy monitor rejects a result.
class OutOfEnvelope : public EvaluationError {
  public:
    using EvaluationError::EvaluationError;
};

/// Convergence record of a series evaluation.
struct SeriesAccuracy {
    int terms_used = 0;
    double tail_bound = 0.0;  // truncation remainder bound (absolute)
};

/// J_n(z) for integer n >= 0, |z| <= 60. Ascending series with a running
/// rounding monitor; falls back to Miller backward recurrence when the series
/// is too ill-conditioned for 1e-12 relative accuracy.
Complex bessel_j(int n, Complex z);
Complex bessel_j(int n, Complex z, SeriesAccuracy& acc);

/// Y_n(z) for integer n >= 0 via the integer-order logarithmic series
/// (principal log; cut along the negative real axis). z != 0, |z| <= 30.
Complex bessel_y(int n, Complex z);

/// H^1_n(z) = J_n(z) + i Y_n(z).
Complex hankel1(int n, Complex z);

/// Derivatives from the standard recurrences (C'_0 = -C_1,
/// C'_n = (C_{n-1} - C_{n+1})/2).
Complex bessel_j_derivative(int n, Complex z);
Complex bessel_y_derivative(int n, Complex z);
Complex hankel1_derivative(int n, Complex z);

/// Kummer 1F1(1;3;z) = sum_k 2 z^k / (k+2)!  (entire; |z| <= 200).
/// Equals 2 (e^z - 1 - z) / z^2, which doubles as the independent route when
/// the series is cancellation-limited.
Complex hyp1f1_1_3(Complex z);
Complex hyp1f1_1_3(Complex z, SeriesAccuracy& acc);

/// Ferrers function P_nu^2(x) on the cut, complex degree nu, x in (-1, 1).
/// Gauss series about x = 1 for x >= -0.2; logarithmic connection expansion
/// about x = -1 otherwise; closed polynomial forms when nu is within 1e-12
/// of an integer.
Complex ferrers_p_order2(Complex nu, double x);

/// Digamma for complex argument (recurrence into the asymptotic region).
Complex digamma(Complex z);

}  // namespace roots2d
