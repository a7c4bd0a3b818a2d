#include "roots2d/systems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "roots2d/heunc.hpp"
#include "roots2d/solver2d.hpp"
#include "roots2d/specfun.hpp"

namespace roots2d {

namespace {

constexpr double kPi = 3.14159265358979323846264338;

Complex C(double re, double im = 0.0) { return {re, im}; }

SystemSpec make_s1() {
    SystemSpec s;
    s.name = "S1";
    s.f1 = [](PointPair p) { return p.y * p.y + 3.0 * p.x - 5.0 + p.x * p.x; };
    s.f2 = [](PointPair p) { return p.x * p.x + 3.0 * p.y - 1.0; };
    s.analytic_jacobian = [](PointPair p) {
        return Matrix2{3.0 + 2.0 * p.x, 2.0 * p.y, 2.0 * p.x, 3.0};
    };
    s.recommended_starts = {{C(1.689), C(-0.637)},
                            {C(1.321, 3.520), C(3.738, -1.927)},
                            {C(1.321, -3.520), C(3.738, 1.927)}};
    s.known_roots = {
        {{C(1.1890465736), C(-0.1379439181)}, "table:1", 1e-9},
        // printed imaginary part -11.9278229759 is a misprint: F2 is linear in
        // y, and the conjugate row fixes it to -1.9278229759
        {{C(0.8214691720, 3.5201983985), C(4.2389950548, -1.9278229759)}, "table:2", 1e-9},
        {{C(0.8214691720, -3.5201983985), C(4.2389950548, 1.9278229759)}, "table:3", 1e-9},
    };
    return s;
}

SystemSpec make_s2() {
    SystemSpec s;
    s.name = "S2";
    s.f1 = [](PointPair p) { return p.x * (1.0 - p.x) + 4.0 * p.y - 12.0; };
    s.f2 = [](PointPair p) {
        const Complex a = p.x - 2.0, b = 2.0 * p.y - 3.0;
        return a * a + b * b - 25.0;
    };
    s.analytic_jacobian = [](PointPair p) {
        return Matrix2{1.0 - 2.0 * p.x, 4.0, 2.0 * (p.x - 2.0), 4.0 * (2.0 * p.y - 3.0)};
    };
    s.recommended_starts = {{C(-0.5), C(3.0)},
                            {C(3.046), C(3.484)},
                            {C(0.726, 4.335), C(-2.242, -0.592)}};
    s.known_roots = {
        {{C(-1.0), C(3.5)}, "table:1", 1e-9},
        {{C(2.5469464699), C(3.9849974627)}, "table:2", 1e-9},
        {{C(0.2265267650, 4.3352949767), C(-1.7424987313, -0.5927935709)}, "table:3", 1e-9},
    };
    return s;
}

SystemSpec make_s3() {
    SystemSpec s;
    s.name = "S3";
    s.f1 = [](PointPair p) { return p.y - std::sin(p.x) / 4.0 - std::cos(p.y) / 4.0; };
    s.f2 = [](PointPair p) { return 5.0 * p.x * p.x - p.y * p.y; };
    s.analytic_jacobian = [](PointPair p) {
        return Matrix2{-std::cos(p.x) / 4.0, 1.0 + std::sin(p.y) / 4.0, 10.0 * p.x, -2.0 * p.y};
    };
    s.recommended_starts = {{C(0.621), C(-0.228)},
                            {C(-0.422, 1.476), C(-2.562, 3.301)},
                            {C(1.468, -1.635), C(-2.665, 3.656)}};
    s.known_roots = {
        {{C(0.1212419114), C(0.2711051557)}, "table:1", 1e-9},
        {{C(-0.9222203725, 1.4764038337), C(-2.062147443, 3.3013393343)}, "table:2", 1e-9},
        {{C(0.9685241736, -1.6351708695), C(-2.1656858901, 3.6563532190)}, "table:3", 1e-9},
    };
    return s;
}

SystemSpec make_s4() {
    SystemSpec s;
    s.name = "S4";
    s.f1 = [](PointPair p) { return std::exp(-3.0 * p.x) * std::cos(p.y) + p.x; };
    s.f2 = [](PointPair p) { return p.x * p.x - 3.0 * p.y * p.x + p.y * p.y; };
    s.analytic_jacobian = [](PointPair p) {
        const Complex e = std::exp(-3.0 * p.x);
        return Matrix2{-3.0 * e * std::cos(p.y) + 1.0, -e * std::sin(p.y),
                       2.0 * p.x - 3.0 * p.y, -3.0 * p.x + 2.0 * p.y};
    };
    s.recommended_starts = {{C(-0.35), C(-1.05)},
                            {C(0.55, -0.6), C(1.14, -1.0)},
                            {C(4.4, -5.0), C(8.5, -16.0)}};
    s.known_roots = {
        {{C(-0.5600551872), C(-1.4662435158)}, "table:1", 1e-9},
        {{C(0.3487096094, -0.4633971546), C(0.9129336096, -1.2131895010)}, "table:2", 1e-9},
        // multi-root study catalog (start (4.4-5.0i, 8.5-16i))
        {{C(0.3487096094, 0.4633971546), C(0.9129336096, 1.2131895010)}, "list:r0", 1e-9},
        {{C(3.0248444374, -4.3689275542), C(7.9191455477, -11.4380008313)}, "list:r1", 1e-9},
        {{C(0.1632674377, 0.6065137375), C(0.0623626119, 0.2316676331)}, "list:r2+", 1e-9},
        {{C(0.1632674377, -0.6065137375), C(0.0623626119, -0.2316676331)}, "list:r2-", 1e-9},
        {{C(1.1119158619, -1.8296636950), C(2.9110335191, -4.7901217415)}, "list:r3", 1e-9},
        {{C(4.0158133827, -5.6039287836), C(10.5135359284, -14.6712760260)}, "list:r4", 1e-9},
        {{C(-5.3999170768), C(-14.1371664435)}, "list:r5", 1e-9},
        // verified root on the same branch ladder, absent from the printed
        // list (double-precision sweeps reach it for larger P)
        {{C(5.01628514305297, -6.82915034216848), C(13.1328050017738, -17.8789477100801)},
         "extra:e0", 1e-9},
    };
    return s;
}

SystemSpec make_s5() {
    SystemSpec s;
    s.name = "S5";
    s.f1 = [](PointPair p) {
        return std::log(p.x * p.x + p.y * p.y) - std::sin(p.y * p.x) - std::log(2.0) +
               std::log(kPi);
    };
    s.f2 = [](PointPair p) { return std::exp(p.x - p.y) + std::cos(p.y * p.x); };
    s.analytic_jacobian = [](PointPair p) {
        const Complex r2 = p.x * p.x + p.y * p.y;
        const Complex cxy = std::cos(p.y * p.x), sxy = std::sin(p.y * p.x);
        const Complex e = std::exp(p.x - p.y);
        return Matrix2{2.0 * p.x / r2 - p.y * cxy, 2.0 * p.y / r2 - p.x * cxy,
                       e - p.y * sxy, -e - p.x * sxy};
    };
    s.recommended_starts = {{C(2.27, 0.001), C(1.27)}, {C(0.5), C(0.5)}};
    s.known_roots = {
        {{C(0.2129109625, -2.4380400935), C(-1.3216238026, -4.6551486236)}, "list:r0", 1e-9},
        {{C(0.9203224533, 0.7487874838), C(1.4188731053, -0.5453380689)}, "list:r1+", 1e-9},
        {{C(0.9203224533, -0.7487874838), C(1.4188731053, 0.5453380689)}, "list:r1-", 1e-9},
        {{C(-1.6645201248, 1.380553001), C(1.66452012482, 1.38055300197)}, "list:r2", 1e-9},
    };
    return s;
}

SystemSpec make_s6() {
    SystemSpec s;
    s.name = "S6";
    s.f1 = [](PointPair p) { return p.x * p.x - p.y + 5.0 * std::sin(p.x - 2.0); };
    s.f2 = [](PointPair p) { return bessel_j(3, p.y) + 5.0 * p.x - 3.0; };
    s.analytic_jacobian = [](PointPair p) {
        return Matrix2{2.0 * p.x + 5.0 * std::cos(p.x - 2.0), -1.0, 5.0,
                       bessel_j_derivative(3, p.y)};
    };
    s.recommended_starts = {{C(1.2, 0.09), C(-5.5, 0.01)},
                            {C(7.2, -3.6), C(-11.9, 5.001)},
                            {C(-5.1, -1.006), C(16.0, 5.51)}};
    s.known_roots = {
        {{C(0.6863031247), C(-4.3646459533)}, "table:1", 1e-9},
        {{C(5.8404591703, -3.0854927956), C(-10.6712592035, 5.7445552813)}, "table:2", 1e-9},
        {{C(-4.9297777922, -1.1922443124), C(17.4620338366, 5.7870418188)}, "table:3", 1e-9},
    };
    return s;
}

SystemSpec make_s7() {
    SystemSpec s;
    s.name = "S7";
    s.f1 = [](PointPair p) {
        Complex x7 = p.x;
        for (int i = 1; i < 7; ++i) x7 *= p.x;
        return x7 - std::exp(p.y) + hyp1f1_1_3(p.x * p.x - 3.0 * p.x);
    };
    s.f2 = [](PointPair p) { return hankel1(7, p.y + 1.0 - p.x); };
    s.recommended_starts = {{C(1.1, -0.45), C(-2.4, -4.2)}, {C(0.5, -0.87), C(-3.21, -5.14)}};
    s.known_roots = {
        {{C(0.8288091244, -0.4046494664), C(-2.3507488745, -4.6830120304)}, "table:1", 1e-9},
        {{C(0.2656154750, -0.8757700972), C(-2.9139425238, -5.1541326612)}, "table:2", 1e-9},
    };
    return s;
}

SystemSpec make_ex1() {
    SystemSpec s;
    s.name = "EX1";
    s.f1 = [](PointPair p) {
        HeunParams h{-1.3 * p.x, 2.0 * p.y, 1.0 + p.x, 4.0 * p.x,
                     1.0 - p.y - 2.0 * p.x * p.x};
        return heunc_eval(h, 0.75 * p.y).value;
    };
    s.f2 = [](PointPair p) {
        const Complex i{0.0, 1.0};
        HeunParams h{9.0 * i * p.x, 2.3 * i * p.x + p.y, 2.0 * i * p.x - 1.0,
                     -1.9 * p.x * (i + p.y),
                     2.0 * p.x * p.x + 2.0 * i * p.x - 1.3 * p.y - 0.2};
        return heunc_eval(h, p.y).value;
    };
    s.recommended_starts = {{C(2.1, 0.45), C(1.25, 0.3)}, {C(2.23, 0.01), C(0.93, 0.1)}};
    s.known_roots = {
        {{C(2.1991016319, 0.2140611770), C(1.2022265008, 0.3588153273)}, "table:1", 1e-8},
        {{C(2.2328663235, 0.0141132493), C(0.9593217208, 0.0508289979)}, "table:2", 1e-8},
    };
    return s;
}

SystemSpec make_kerr() {
    SystemSpec s;
    s.name = "KERR";
    const Complex i{0.0, 1.0};
    s.f1 = [i](PointPair p) {
        const Complex x = p.x, y = p.y;
        const Complex phase = std::exp(i * (4.7124 - std::arg(x)));
        const Complex z = -110.02 * phase + 1.0;
        HeunParams h{-1.9996 * i * x, 2.0002 * i * x + 1.0, 0.0002 * i * x - 1.0,
                     -1.9996 * x * (i + x),
                     1.9995 * x * x + 1.9998 * i * x + 0.5 - y};
        const Complex factor = std::pow(110.00 * phase, 2.00 + 0.0002 * i * x);
        return heunc_eval(h, z).value * factor;
    };
    s.f2 = [i](PointPair p) {
        const Complex x = p.x, y = p.y;
        // First term has beta = -1 exactly: the canonical normalization does
        // not exist, but the ratio HeunC'/HeunC has a finite limit equal to
        // the logarithmic derivative of the exponent-1 local solution.
        HeunParams h1{0.04 * x, -1.0, 1.0, -0.04 * x,
                      0.5 - y + 0.02 * x - 0.0001 * x * x};
        HeunEval e1 = heunc_exponent1_eval(h1, 0.25);
        HeunParams h2{-0.04 * x, 1.0, -1.0, 0.04 * x,
                      0.5 - y - 0.02 * x - 0.0001 * x * x};
        HeunEval e2 = heunc_eval(h2, 0.75);
        return e1.derivative / e1.value + e2.derivative / e2.value;
    };
    s.recommended_starts = {{C(0.49, 0.18), C(2.001, 0.1)},
                            {C(0.17, 0.97), C(2.001, 0.1)},
                            {C(0.07, 5.147), C(2.001, 0.051)}};
    s.known_roots = {
        {{C(0.4965436315, 0.1849695292), C(1.9999915063, -0.7347653e-5)}, "table:1", 1e-6},
        {{C(0.3495869222, 1.0503235984), C(2.0000392386, -0.2937407e-4)}, "table:2", 1e-6},
        {{C(0.0608496029, 5.1191008697), C(2.0010479243, -0.2491318e-4)}, "table:3", 1e-6},
    };
    return s;
}

}  // namespace

void QnmParams::validate() const {
    if (!(theta > 0.0 && theta < kPi)) throw std::invalid_argument("theta must lie in (0, pi)");
    if (!(r_abs > 0.0)) throw std::invalid_argument("|r| must be positive");
    if (!(std::abs(epsilon_phase) < 1.0))
        throw std::invalid_argument("|epsilon| must be below 1");
}

SystemSpec build_rw_system(const QnmParams& q) {
    q.validate();
    SystemSpec s;
    s.name = "RW";
    const double ct = std::cos(q.theta);
    const double r_abs = q.r_abs;
    const double eps = q.epsilon_phase;
    s.f1 = [ct](PointPair p) {
        const Complex P = ferrers_p_order2(p.y, ct);
        return (ct - 1.0) * (ct + 1.0) * P;
    };
    s.f2 = [r_abs, eps](PointPair p) {
        const Complex w = p.x, l = p.y;
        const Complex i{0.0, 1.0};
        const Complex z = 1.0 - r_abs * std::exp(-i * ((kPi + eps) / 2.0 + std::arg(w)));
        HeunParams h{-2.0 * i * w, 2.0 * i * w, 4.0, -2.0 * w * w,
                     4.0 - l - l * l + 2.0 * w * w};
        return heunc_eval(h, z).value;
    };
    const std::vector<Complex>& wn = qnm_reference_frequencies();
    for (size_t n = 0; n < wn.size(); ++n) {
        double tol = n <= 4 ? 1e-6 : 1e-5;
        std::string label = "mode" + std::to_string(n);
        if (n == 8) {
            tol = 1e-3;
            label += "(|eps|>=0.2; sign Re follows eps)";
        }
        s.known_roots.push_back({{wn[n], C(2.0)}, label, tol});
        s.recommended_starts.push_back({wn[n] + C(0.01, 0.01), C(2.1, 0.01)});
    }
    return s;
}

const std::vector<Complex>& qnm_reference_frequencies() {
    static const std::vector<Complex> table = {
        C(0.7473433689, 0.177924631),  C(0.6934219938, 0.547829750),
        C(0.6021069092, 0.956553966),  C(0.5030099241, 1.410296405),
        C(0.4150291596, 1.893689782),  C(0.3385988064, 2.391216108),
        C(0.2665046810, 2.895821253),  C(0.1856446684, 3.407682345),
        C(0.030649006, 3.996823690),   // mode 8: Re sign follows sign(eps)
        C(0.1265270180, 4.605289542),  C(0.1531069502, 5.121653272),
    };
    return table;
}

const std::vector<SystemSpec>& catalog() {
    static const std::vector<SystemSpec> all = [] {
        std::vector<SystemSpec> v;
        v.push_back(make_s1());
        v.push_back(make_s2());
        v.push_back(make_s3());
        v.push_back(make_s4());
        v.push_back(make_s5());
        v.push_back(make_s6());
        v.push_back(make_s7());
        v.push_back(make_ex1());
        v.push_back(build_rw_system(QnmParams{}));
        v.push_back(make_kerr());
        return v;
    }();
    return all;
}

const SystemSpec& preset(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    for (const SystemSpec& s : catalog())
        if (s.name == up) return s;
    throw std::out_of_range("unknown preset: " + name);
}

RootResult solve_qnm_mode(Complex seed_omega, const QnmParams& q, const SolveConfig& cfg) {
    SystemSpec sys = build_rw_system(q);
    SolveConfig c = cfg;
    if (c.variant != Method::M1 && c.variant != Method::M2) c.variant = Method::M1;
    // The plane is fitted to the Heun condition F2 and the 1D solves run on
    // the angular gate F1 along its zero line. Folding the two equations into
    // [F1+F2, F1-F2] lets the O(1) gate dominate both combinations near the
    // seed and the first line relation then points far off-mode, so the
    // equations are kept in their natural order here.
    const PointPair start{seed_omega, C(2.1, 0.01)};
    RootResult res = solve(sys, start, c);
    if (res.converged() && res.root.y.real() < 1.5)
        res.exit_reason = ExitReason::SpuriousLMode;
    return res;
}

}  // namespace roots2d
