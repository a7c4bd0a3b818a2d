#include "roots2d/heunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace roots2d {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846264338;
constexpr double kDetourRadius = 0.1;
constexpr double kBlockedRadius = 0.05;
constexpr int kMaxTerms = 220;
constexpr int kStepLimit = 10000;

double dist_to_singularities(Complex c) {
    return std::min(std::abs(c), std::abs(c - 1.0));
}

bool near_negative_integer(Complex b, double tol = 1e-12) {
    const double r = std::round(b.real());
    return r <= -1.0 && std::abs(b.real() - r) < tol && std::abs(b.imag()) < tol;
}

struct SeriesOut {
    Complex value, derivative;
    double abs_sum = 0.0;      // sum |a_k w^k| (rounding monitor)
    double abs_sum_der = 0.0;  // sum |k a_k w^{k-1}|
    double tail = 0.0;
};

// Frobenius series at the origin from consistent (c0, c1):
// (k+1)(k+beta+1) c_{k+1} = [k(k-1) + k(beta+gamma+2-alpha) - mu] c_k
//                           + [alpha(k-1) + mu + nu] c_{k-1}
SeriesOut series_at_origin(const HeunParams& p, Complex w, Complex c0, Complex c1) {
    const Complex mu = p.mu(), nu = p.nu();
    const Complex k_lin = p.beta + p.gamma + 2.0 - p.alpha;
    Complex ckm1 = c0, ck = c1;
    Complex val = c0 + c1 * w;
    Complex der = c1;
    SeriesOut out;
    out.abs_sum = std::abs(c0) + std::abs(c1 * w);
    out.abs_sum_der = std::abs(c1);
    Complex wk = w;  // w^k for current k
    double last_term = 0.0;
    int small_in_a_row = 0;
    for (int k = 1; k < kMaxTerms; ++k) {
        const Complex rhs = (double(k) * double(k - 1) + double(k) * k_lin - mu) * ck +
                            (p.alpha * double(k - 1) + mu + nu) * ckm1;
        const Complex denom = double(k + 1) * (double(k) + p.beta + 1.0);
        if (std::abs(denom) == 0.0)
            throw RecurrenceBreakdown("confluent Heun origin recurrence hit a zero divisor");
        const Complex ckp1 = rhs / denom;
        const Complex term = ckp1 * wk * w;  // c_{k+1} w^{k+1}
        val += term;
        der += double(k + 1) * ckp1 * wk;
        out.abs_sum += std::abs(term);
        out.abs_sum_der += std::abs(double(k + 1) * ckp1 * wk);
        last_term = std::abs(term);
        if (last_term < 1e-18 * (std::abs(val) + 1e-300) + 1e-300) {
            if (++small_in_a_row >= 3) break;
        } else {
            small_in_a_row = 0;
        }
        ckm1 = ck;
        ck = ckp1;
        wk *= w;
    }
    out.value = val;
    out.derivative = der;
    out.tail = 4.0 * last_term;
    if (!is_finite(val) || !is_finite(der))
        throw RecurrenceBreakdown("confluent Heun origin series diverged");
    return out;
}

// Taylor step around an ordinary center, given (y, y') there, evaluated at
// center + w.
SeriesOut series_ordinary(const HeunParams& p, Complex center, Complex y0, Complex dy0,
                          Complex w) {
    const Complex mu = p.mu(), nu = p.nu();
    const Complex c = center;
    const Complex p1 = 2.0 * c - 1.0;
    const Complex p0 = c * (c - 1.0);
    const Complex b2 = p.alpha;
    const Complex b1 = p.alpha * p1 + p.beta + p.gamma + 2.0;
    const Complex b0 = p.alpha * p0 + (p.beta + 1.0) * (c - 1.0) + (p.gamma + 1.0) * c;
    const Complex d1 = mu + nu;
    const Complex d0 = mu * (c - 1.0) + nu * c;

    Complex akm1 = 0.0, ak = y0, akp1 = dy0;
    Complex val = y0 + dy0 * w;
    Complex der = dy0;
    SeriesOut out;
    out.abs_sum = std::abs(y0) + std::abs(dy0 * w);
    out.abs_sum_der = std::abs(dy0);
    Complex wk = w;  // w^{k+1} tracks the power for a_{k+2}
    double last_term = 0.0;
    int small_in_a_row = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        const Complex t = double(k + 1) * (p1 * double(k) + b0) * akp1 +
                          (double(k) * double(k - 1) + b1 * double(k) + d0) * ak +
                          (b2 * double(k - 1) + d1) * akm1;
        const Complex akp2 = -t / (p0 * double(k + 2) * double(k + 1));
        const Complex term = akp2 * wk * w;  // a_{k+2} w^{k+2}
        val += term;
        der += double(k + 2) * akp2 * wk;
        out.abs_sum += std::abs(term);
        out.abs_sum_der += std::abs(double(k + 2) * akp2 * wk);
        last_term = std::abs(term);
        if (last_term < 1e-18 * (std::abs(val) + 1e-300) + 1e-300) {
            if (++small_in_a_row >= 3) break;
        } else {
            small_in_a_row = 0;
        }
        akm1 = ak;
        ak = akp1;
        akp1 = akp2;
        wk *= w;
    }
    out.value = val;
    out.derivative = der;
    out.tail = 4.0 * last_term;
    if (!is_finite(val) || !is_finite(der))
        throw RecurrenceBreakdown("confluent Heun Taylor step diverged");
    return out;
}

// Waypoints 0 -> z: straight, or with a semicircle detour around 1 when the
// straight segment's interior passes within kDetourRadius of it. The detour
// side follows sign(Im z) (ties resolve to the upper half-plane) so values
// connect continuously to the principal branch across [1, inf).
std::vector<Complex> build_path(Complex z) {
    std::vector<Complex> path{Complex(0.0, 0.0)};
    const double t = std::clamp(z.real() / std::norm(z), 0.0, 1.0);
    const Complex q = t * z;
    if (std::abs(q - 1.0) < kDetourRadius && std::abs(z - 1.0) > kDetourRadius) {
        const Complex dirv = z / std::abs(z);
        const double side = z.imag() >= 0.0 ? 1.0 : -1.0;
        const Complex entry = 1.0 - kDetourRadius * dirv;
        const Complex exitp = 1.0 + kDetourRadius * dirv;
        double a0 = std::arg(entry - 1.0);
        double a1 = std::arg(exitp - 1.0);
        double d = a1 - a0;
        while (d > kPi) d -= 2.0 * kPi;
        while (d < -kPi) d += 2.0 * kPi;
        // rotate so the arc midpoint lies on the chosen side
        if ((std::sin(a0 + d / 2.0) >= 0.0) != (side > 0.0)) d += d > 0.0 ? -2.0 * kPi : 2.0 * kPi;
        path.push_back(entry);
        const int segs = 12;
        for (int i = 1; i <= segs; ++i)
            path.push_back(1.0 + kDetourRadius * std::exp(Complex(0.0, a0 + d * i / segs)));
    }
    path.push_back(z);
    return path;
}

HeunEval continue_from_origin(const HeunParams& p, Complex z, Complex c0, Complex c1) {
    if (std::abs(z - 1.0) < kBlockedRadius)
        throw PathBlocked("target is within 0.05 of the singular point z = 1");

    HeunEval ev;
    ev.path = build_path(z);
    if (z == Complex(0.0, 0.0)) {
        ev.value = c0;
        ev.derivative = c1;
        return ev;
    }

    const double alpha_cap = 4.0 / (1.0 + std::abs(p.alpha));
    Complex cur = 0.0;
    Complex y = c0, dy = c1;
    double err_val = 0.0, err_der = 0.0;
    bool first = true;
    int steps = 0;

    for (size_t i = 1; i < ev.path.size(); ++i) {
        const Complex tgt = ev.path[i];
        while (cur != tgt) {
            if (++steps > kStepLimit)
                throw StepLimitExceeded("more than 10^4 re-expansions on the path");
            const double radius = first ? std::abs(cur - 1.0) : dist_to_singularities(cur);
            const double hmax = std::min(0.35 * radius, alpha_cap);
            Complex rem = tgt - cur;
            Complex w = (std::abs(rem) <= hmax) ? rem : rem / std::abs(rem) * hmax;
            const Complex next = (std::abs(rem) <= hmax) ? tgt : cur + w;
            if (first) {
                SeriesOut s = series_at_origin(p, w, y, dy);
                y = s.value;
                dy = s.derivative;
                err_val = kEps * s.abs_sum + s.tail;
                err_der = kEps * s.abs_sum_der + s.tail;
                first = false;
            } else {
                // Unit solutions propagate the carried error bound.
                SeriesOut su = series_ordinary(p, cur, 1.0, 0.0, w);
                SeriesOut sv = series_ordinary(p, cur, 0.0, 1.0, w);
                SeriesOut s = series_ordinary(p, cur, y, dy, w);
                const double ev_new = err_val * std::abs(su.value) + err_der * std::abs(sv.value) +
                                      kEps * s.abs_sum + s.tail;
                const double ed_new = err_val * std::abs(su.derivative) +
                                      err_der * std::abs(sv.derivative) + kEps * s.abs_sum_der +
                                      s.tail;
                y = s.value;
                dy = s.derivative;
                err_val = ev_new;
                err_der = ed_new;
            }
            cur = next;
        }
    }
    ev.value = y;
    ev.derivative = dy;
    ev.est_error = err_val;
    return ev;
}

}  // namespace

Complex HeunParams::slope_at_origin() const {
    if (near_negative_integer(beta))
        throw RecurrenceBreakdown("HeunC normalization undefined: beta is a negative integer");
    return -mu() / (beta + 1.0);
}

void HeunParams::require_canonical() const {
    if (near_negative_integer(beta))
        throw RecurrenceBreakdown("HeunC requires beta away from negative integers");
}

HeunEval heunc_series(const HeunParams& p, Complex z, Complex center,
                      std::pair<Complex, Complex> init) {
    HeunEval ev;
    ev.path = {center, z};
    if (center == Complex(0.0, 0.0)) {
        // indicial constraint: (beta+1) c1 = -mu c0
        const Complex lhs = (p.beta + 1.0) * init.second;
        const Complex rhs = -p.mu() * init.first;
        const double scale = std::abs(lhs) + std::abs(rhs) + std::abs(p.mu());
        if (std::abs(lhs - rhs) > 1e-9 * (1.0 + scale))
            throw RecurrenceBreakdown(
                "origin series: initial data violate the indicial constraint");
        if (near_negative_integer(p.beta) &&
            !(std::abs(p.beta - Complex(-1.0, 0.0)) < 1e-12 && std::abs(init.first) == 0.0))
            throw RecurrenceBreakdown("origin series: beta is a negative integer");
        if (std::abs(z) >= 0.4)
            throw std::invalid_argument("heunc_series: |z| must be < 0.4 at the origin");
        SeriesOut s = series_at_origin(p, z, init.first, init.second);
        ev.value = s.value;
        ev.derivative = s.derivative;
        ev.est_error = kEps * s.abs_sum + s.tail;
        return ev;
    }
    const double radius = dist_to_singularities(center);
    if (radius == 0.0) throw std::invalid_argument("heunc_series: center is a singular point");
    if (std::abs(z - center) >= 0.4 * radius)
        throw std::invalid_argument(
            "heunc_series: step exceeds 0.4 x distance to the nearest singular point");
    SeriesOut s = series_ordinary(p, center, init.first, init.second, z - center);
    ev.value = s.value;
    ev.derivative = s.derivative;
    ev.est_error = kEps * s.abs_sum + s.tail;
    return ev;
}

HeunEval heunc_eval(const HeunParams& p, Complex z) {
    p.require_canonical();
    HeunEval ev = continue_from_origin(p, z, 1.0, p.slope_at_origin());
    if (ev.est_error > 1e-9 * (1.0 + std::abs(ev.value)))
        throw HeunAccuracyError("confluent Heun evaluation exceeded its error budget");
    return ev;
}

HeunEval heunc_exponent1_eval(const HeunParams& p, Complex z) {
    if (std::abs(p.beta - Complex(-1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("heunc_exponent1_eval requires beta = -1");
    HeunEval ev = continue_from_origin(p, z, 0.0, 1.0);
    if (ev.est_error > 1e-9 * (1.0 + std::abs(ev.value)))
        throw HeunAccuracyError("confluent Heun evaluation exceeded its error budget");
    return ev;
}

}  // namespace roots2d
