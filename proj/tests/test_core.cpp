#include "doctest.h"

#include <cmath>

#include "roots2d/core.hpp"
#include "roots2d/systems.hpp"

using namespace roots2d;

namespace {

SystemSpec simple_shift() {
    SystemSpec s;
    s.name = "shift";
    s.f1 = [](PointPair p) { return p.x - 1.0; };
    s.f2 = [](PointPair p) { return p.y - 2.0; };
    return s;
}

}  // namespace

TEST_CASE("residual at an exact root is zero") {
    auto [r1, r2] = residual(simple_shift(), {1.0, 2.0});
    CHECK(r1 == 0.0);
    CHECK(r2 == 0.0);
}

TEST_CASE("residual at the published S1 root is below 1e-9") {
    const SystemSpec& s1 = preset("S1");
    auto [r1, r2] = residual(s1, {Complex(1.1890465736), Complex(-0.1379439181)});
    CHECK(r1 < 1e-9);
    CHECK(r2 < 1e-9);
}

TEST_CASE("residual returns moduli") {
    SystemSpec s;
    s.f1 = [](PointPair p) { return p.x * p.x; };
    s.f2 = [](PointPair p) { return p.y * p.y; };
    auto [r1, r2] = residual(s, {Complex(3.0), Complex(0.0, 4.0)});
    CHECK(r1 == doctest::Approx(9.0));
    CHECK(r2 == doctest::Approx(16.0));
}

TEST_CASE("residual flags non-finite function output") {
    SystemSpec s;
    s.f1 = [](PointPair) { return Complex(std::numeric_limits<double>::infinity(), 0.0); };
    s.f2 = [](PointPair) { return Complex(0.0, 0.0); };
    CHECK_THROWS_AS(residual(s, {0.0, 0.0}), EvaluationError);
}

TEST_CASE("residual is deterministic bit-for-bit") {
    const SystemSpec& s5 = preset("S5");
    const PointPair p{Complex(1.3, -0.2), Complex(0.7, 2.1)};
    auto a = residual(s5, p);
    auto b = residual(s5, p);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
}

TEST_CASE("apply_precondition with the identity leaves values unchanged") {
    const SystemSpec& s1 = preset("S1");
    SystemSpec id = apply_precondition(s1, Matrix2::identity());
    for (double xr : {-1.0, 0.3, 2.0})
        for (double yi : {-2.0, 0.5}) {
            PointPair p{Complex(xr, 0.1), Complex(0.4, yi)};
            CHECK(id.f1(p) == s1.f1(p));
            CHECK(id.f2(p) == s1.f2(p));
        }
}

TEST_CASE("the sum/difference preconditioner forms F1+F2 and F1-F2") {
    const SystemSpec& s1 = preset("S1");
    SystemSpec pre = apply_precondition(s1, Matrix2{1.0, 1.0, 1.0, -1.0});
    const PointPair p{Complex(0.9, -1.4), Complex(2.2, 0.3)};
    CHECK(pre.f1(p) == s1.f1(p) + s1.f2(p));
    CHECK(pre.f2(p) == s1.f1(p) - s1.f2(p));
}

TEST_CASE("preconditioning preserves the zero set at published roots") {
    const SystemSpec& s1 = preset("S1");
    SystemSpec pre = apply_precondition(s1, Matrix2{1.0, 1.0, 1.0, -1.0});
    for (const KnownRoot& r : s1.known_roots) {
        auto [a, b] = residual(pre, r.pair);
        CHECK(a < 2e-9);
        CHECK(b < 2e-9);
    }
}

TEST_CASE("singular preconditioner is rejected") {
    const SystemSpec& s1 = preset("S1");
    CHECK_THROWS_AS(apply_precondition(s1, Matrix2{1.0, 2.0, 2.0, 4.0}), std::invalid_argument);
}

TEST_CASE("SolveConfig validation") {
    SolveConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    SUBCASE("digits range") {
        cfg.digits_d = 3;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
        cfg.digits_d = 16;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("inner cap range") {
        cfg.inner_cap_P = 0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
        cfg.inner_cap_P = 101;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("zero deviation") {
        cfg.deviation = 0.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("singular precondition") {
        cfg.precondition = Matrix2{1.0, 1.0, 1.0, 1.0};
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
}
