#include "roots2d/specfun.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace roots2d {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEuler = 0.57721566490153286060651209;
constexpr double kPi = 3.14159265358979323846264338;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double harmonic(int n) {
    double h = 0.0;
    for (int k = 1; k <= n; ++k) h += 1.0 / k;
    return h;
}

struct SeriesResult {
    Complex value;
    double max_term = 0.0;  // largest |term| seen (rounding monitor)
    SeriesAccuracy acc;
};

// Ascending series for J_n; caller judges conditioning via max_term.
SeriesResult bessel_j_series(int n, Complex z) {
    SeriesResult r;
    const Complex half = z / 2.0;
    Complex term = 1.0;
    for (int k = 1; k <= n; ++k) term *= half / double(k);
    Complex sum = term;
    r.max_term = std::abs(term);
    const Complex zz = -half * half;
    int k = 1;
    int small_in_a_row = 0;
    for (; k <= 400; ++k) {
        term *= zz / double(k * (n + k));
        sum += term;
        r.max_term = std::max(r.max_term, std::abs(term));
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++small_in_a_row >= 2) break;
        } else {
            small_in_a_row = 0;
        }
    }
    r.value = sum;
    r.acc.terms_used = k;
    r.acc.tail_bound = 2.0 * std::abs(term);
    return r;
}

// Miller backward recurrence, normalized by J_0 + 2 sum J_{2k} = 1.
Complex bessel_j_miller(int n, Complex z) {
    int m = int(std::abs(z) + 15 + n + 10 * std::sqrt(std::max<double>(n, std::abs(z)) + 1));
    if (m % 2 == 1) ++m;
    Complex jp = 0.0, jc = 1e-300, norm = 0.0, jn = 0.0;
    for (int k = m; k >= 1; --k) {
        Complex jm1 = (2.0 * k / z) * jc - jp;
        jp = jc;
        jc = jm1;
        if (k - 1 == n) jn = jc;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {
            jp /= 1e250;
            jc /= 1e250;
            norm /= 1e250;
            jn /= 1e250;
        }
    }
    return jn / norm;
}

}  // namespace

Complex bessel_j(int n, Complex z, SeriesAccuracy& acc) {
    if (n < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
    if (std::abs(z) > 60.0)
        throw OutOfEnvelope("bessel_j: |z| > 60 is outside the evaluation envelope");
    if (z == Complex(0.0, 0.0)) {
        acc = {1, 0.0};
        return n == 0 ? 1.0 : 0.0;
    }
    SeriesResult r = bessel_j_series(n, z);
    acc = r.acc;
    const double round_est = 8.0 * kEps * r.max_term;
    if (round_est <= 1e-12 * std::abs(r.value) && is_finite(r.value)) return r.value;
    // Series is cancellation-limited here; Miller recurrence is
    // well-conditioned in exactly this regime (|z| large vs |Im z|).
    acc.tail_bound = 0.0;
    return bessel_j_miller(n, z);
}

Complex bessel_j(int n, Complex z) {
    SeriesAccuracy acc;
    return bessel_j(n, z, acc);
}

Complex bessel_y(int n, Complex z) {
    if (n < 0) throw std::invalid_argument("bessel_y: order must be >= 0");
    if (z == Complex(0.0, 0.0))
        throw OutOfEnvelope("bessel_y: logarithmic singularity at z = 0");
    if (std::abs(z) > 30.0)
        throw OutOfEnvelope("bessel_y: |z| > 30 is outside the evaluation envelope");

    const Complex jn = bessel_j(n, z);
    const Complex half = z / 2.0;
    const Complex t1 = (2.0 / kPi) * (std::log(half) + kEuler) * jn;

    Complex t2 = 0.0;
    double mon = 0.0;
    if (n > 0) {
        Complex p = std::pow(half, -n);
        for (int k = 0; k < n; ++k) {
            Complex term = factorial(n - k - 1) / factorial(k) * p;
            t2 += term;
            mon = std::max(mon, std::abs(term));
            p *= half * half;
        }
        t2 /= kPi;
    }

    Complex term = std::pow(half, n) / factorial(n);
    Complex s = term * harmonic(n);  // k = 0 term, H_0 = 0
    mon = std::max(mon, std::abs(term) * (harmonic(n) + 1.0));
    const Complex zz = -half * half;
    int small_in_a_row = 0;
    for (int k = 1; k <= 400; ++k) {
        term *= zz / double(k * (n + k));
        const double coef = harmonic(k) + harmonic(n + k);
        s += term * coef;
        mon = std::max(mon, std::abs(term) * coef);
        if (std::abs(term) * coef < 1e-17 * (std::abs(s) + 1e-300)) {
            if (++small_in_a_row >= 2) break;
        } else {
            small_in_a_row = 0;
        }
    }
    const Complex t3 = s / kPi;
    const Complex y = t1 - t2 - t3;
    const double round_est = 8.0 * kEps * (mon + std::abs(t1));
    if (round_est > 1e-9 * std::abs(y) || !is_finite(y))
        throw OutOfEnvelope("bessel_y: series too ill-conditioned at this argument");
    return y;
}

Complex hankel1(int n, Complex z) { return bessel_j(n, z) + Complex(0.0, 1.0) * bessel_y(n, z); }

Complex bessel_j_derivative(int n, Complex z) {
    if (n == 0) return -bessel_j(1, z);
    return (bessel_j(n - 1, z) - bessel_j(n + 1, z)) / 2.0;
}

Complex bessel_y_derivative(int n, Complex z) {
    if (n == 0) return -bessel_y(1, z);
    return (bessel_y(n - 1, z) - bessel_y(n + 1, z)) / 2.0;
}

Complex hankel1_derivative(int n, Complex z) {
    if (n == 0) return -hankel1(1, z);
    return (hankel1(n - 1, z) - hankel1(n + 1, z)) / 2.0;
}

Complex hyp1f1_1_3(Complex z, SeriesAccuracy& acc) {
    if (std::abs(z) > 200.0)
        throw OutOfEnvelope("hyp1f1_1_3: |z| > 200 is outside the evaluation envelope");
    // sum_k 2 z^k / (k+2)!
    Complex term = 1.0;  // k = 0: 2/2! = 1
    Complex sum = term;
    double mon = 1.0;
    int k = 1;
    int small_in_a_row = 0;
    for (; k <= 400; ++k) {
        term *= z / double(k + 2);
        sum += term;
        mon = std::max(mon, std::abs(term));
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++small_in_a_row >= 2) break;
        } else {
            small_in_a_row = 0;
        }
    }
    acc.terms_used = k;
    acc.tail_bound = 2.0 * std::abs(term);
    if (8.0 * kEps * mon <= 1e-12 * std::abs(sum) && is_finite(sum)) return sum;
    // Cancellation-limited (large negative real part): use the closed form
    // 2 (e^z - 1 - z) / z^2, which is well-conditioned exactly there.
    acc.tail_bound = 0.0;
    return 2.0 * (std::exp(z) - 1.0 - z) / (z * z);
}

Complex hyp1f1_1_3(Complex z) {
    SeriesAccuracy acc;
    return hyp1f1_1_3(z, acc);
}

Complex digamma(Complex z) {
    Complex shift = 0.0;
    while (std::abs(z) < 10.0 || z.real() < 0.5) {
        if (z == Complex(0.0, 0.0)) throw OutOfEnvelope("digamma: pole at a nonpositive integer");
        shift -= 1.0 / z;
        z += 1.0;
        if (std::abs(z) > 1e8) break;
    }
    // asymptotic: ln z - 1/(2z) - sum B_2k / (2k z^2k)
    static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                               5.0 / 66, -691.0 / 2730, 7.0 / 6};
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex s = std::log(z) - 0.5 * inv;
    Complex p = inv2;
    for (int k = 0; k < 7; ++k) {
        s -= b[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return s + shift;
}

namespace {

// Integer degree: P_n^2 by the upward recurrence
// (n-1) P_{n+1}^2 = (2n+1) x P_n^2 - (n+2) P_{n-1}^2,  P_2^2 = 3(1-x^2).
Complex ferrers_integer(long n, double x) {
    if (n < 2) return 0.0;
    double p2 = 3.0 * (1.0 - x * x);        // P_2^2
    if (n == 2) return p2;
    double p3 = 15.0 * x * (1.0 - x * x);   // P_3^2
    if (n == 3) return p3;
    double pm = p2, pc = p3;
    for (long k = 3; k < n; ++k) {
        const double pn = ((2.0 * k + 1.0) * x * pc - (k + 2.0) * pm) / double(k - 1);
        pm = pc;
        pc = pn;
    }
    return pc;
}

// Direct Gauss series, valid (geometric) for x >= -0.2:
// P_nu^2(x) = c(nu) (1-x^2) 2F1(2-nu, nu+3; 3; (1-x)/2),
// c(nu) = (nu-1) nu (nu+1) (nu+2) / 8.
Complex ferrers_direct(Complex nu, double x) {
    const Complex c = (nu - 1.0) * nu * (nu + 1.0) * (nu + 2.0) / 8.0;
    const double t = (1.0 - x) / 2.0;
    const Complex a = 2.0 - nu, b = nu + 3.0;
    Complex term = 1.0, sum = 1.0;
    for (int k = 0; k < 600; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((3.0 + k) * (k + 1.0)) * t;
        sum += term;
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300) && k > 2) break;
    }
    return c * (1.0 - x * x) * sum;
}

// Connection expansion about x = -1 (u = (1+x)/2 small):
// P_nu^2(x) = -(sin(pi nu)/pi) (1-u) [ 1/u + nu(nu+1)
//             - (nu-1) nu (nu+1) (nu+2) u S(u) ],
// S(u) = sum_n (2-nu)_n (nu+3)_n / (n! (n+2)!) u^n
//        * (ln u - psi(n+1) - psi(n+3) + psi(2-nu+n) + psi(nu+3+n)).
Complex ferrers_near_minus_one(Complex nu, double x) {
    const double u = (1.0 + x) / 2.0;
    const double lnu = std::log(u);
    Complex S = 0.0;
    Complex poch = 1.0;  // (2-nu)_n (nu+3)_n
    for (int n = 0; n < 200; ++n) {
        const Complex coef = poch / (factorial(n) * factorial(n + 2));
        // -psi(n+1) - psi(n+3) = 2 gamma - H_n - H_{n+2}
        const Complex br = lnu + 2.0 * kEuler - harmonic(n) - harmonic(n + 2) +
                           digamma(2.0 - nu + double(n)) + digamma(nu + 3.0 + double(n));
        const Complex term = coef * std::pow(u, n) * br;
        S += term;
        if (n > 1 && std::abs(term) < 1e-17 * (std::abs(S) + 1.0)) break;
        poch *= (2.0 - nu + double(n)) * (nu + 3.0 + double(n));
    }
    const Complex sin_pi_nu = std::sin(kPi * nu);
    return -(sin_pi_nu / kPi) * (1.0 - u) *
           (1.0 / u + nu * (nu + 1.0) - (nu - 1.0) * nu * (nu + 1.0) * (nu + 2.0) * u * S);
}

}  // namespace

Complex ferrers_p_order2(Complex nu, double x) {
    if (!(x > -1.0 && x < 1.0))
        throw OutOfEnvelope("ferrers_p_order2: x must lie in (-1, 1)");
    const double rr = std::round(nu.real());
    if (std::abs(nu.real() - rr) < 1e-12 && std::abs(nu.imag()) < 1e-12)
        return ferrers_integer(long(rr), x);
    if (x >= -0.2) return ferrers_direct(nu, x);
    return ferrers_near_minus_one(nu, x);
}

}  // namespace roots2d
