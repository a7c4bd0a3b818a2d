#include "doctest.h"

#include <random>
#include <sstream>

#include "roots2d/io.hpp"
#include "roots2d/systems.hpp"

using namespace roots2d;

TEST_CASE("complex literal grammar") {
    CHECK(parse_complex("0.17+0.97i") == Complex(0.17, 0.97));
    CHECK(parse_complex("-5.4") == Complex(-5.4, 0.0));
    CHECK(parse_complex("3i") == Complex(0.0, 3.0));
    CHECK(parse_complex("-3i") == Complex(0.0, -3.0));
    CHECK(parse_complex("1.321-3.520i") == Complex(1.321, -3.520));
    CHECK(parse_complex("0.69e-1+5.146i") == Complex(0.069, 5.146));
    CHECK(parse_complex("2+i") == Complex(2.0, 1.0));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
}

TEST_CASE("malformed complex literals are rejected") {
    for (const char* bad : {"", "1 + 2i", "abc", "1+2", "1+2j", "2i+1", "1++2i", "1+2i3"})
        CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
}

TEST_CASE("point literals") {
    PointPair p = parse_point("1.689,-0.637");
    CHECK(p.x == Complex(1.689));
    CHECK(p.y == Complex(-0.637));
    CHECK_THROWS_AS(parse_point("1.689"), std::invalid_argument);
}

TEST_CASE("format/parse round-trips at printed precision") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 500; ++i) {
        const Complex z(u(rng), u(rng));
        const std::string s = format_complex(z);
        const Complex back = parse_complex(s);
        CHECK(format_complex(back) == s);  // printed precision is stable
        CHECK(std::abs(back - z) <= 1e-11 * (1.0 + std::abs(z)));
    }
    CHECK(format_complex(Complex(1.0, 0.0)) == "1+0i");
}

TEST_CASE("match_known_root respects per-root tolerances") {
    const SystemSpec& s1 = preset("S1");
    auto hit = match_known_root(s1, {Complex(1.1890465736), Complex(-0.1379439181)});
    REQUIRE(hit.has_value());
    CHECK(*hit == "table:1");
    CHECK(!match_known_root(s1, {Complex(9.0), Complex(9.0)}).has_value());
}

TEST_CASE("CSV rows mirror the documented columns") {
    RunRecord r;
    r.system = "S1";
    r.method = "m1";
    r.start = {Complex(1.689), Complex(-0.637)};
    r.result.root = {Complex(1.1890465736), Complex(-0.1379439181)};
    r.result.residual_f1 = 1e-12;
    r.result.residual_f2 = 2e-12;
    r.result.outer_iterations = 8;
    r.result.inner_iterations_total = 20;
    r.result.exit_reason = ExitReason::StepBelowTolerance;
    r.matched_known_root = "table:1";
    r.wall_time_ms = 0.25;
    std::ostringstream os;
    write_csv(os, {r});
    const std::string text = os.str();
    CHECK(text.find("system,method,x0,y0,x_final,y_final,outer_iters,inner_iters,"
                    "f1_abs,f2_abs,status,matched_root,wall_time_ms") == 0);
    CHECK(text.find("S1,m1,1.689+0i,-0.637+0i,") != std::string::npos);
    CHECK(text.find("StepBelowTolerance,table:1,") != std::string::npos);

    // numeric fields reparse to full printed precision
    std::string row = text.substr(text.find('\n') + 1);
    const size_t c2 = row.find(',', row.find(',') + 1);
    const size_t c3 = row.find(',', c2 + 1);
    CHECK(parse_complex(row.substr(c2 + 1, c3 - c2 - 1)) == Complex(1.689));
}

TEST_CASE("JSON output uses the CSV field names") {
    RunRecord r;
    r.system = "S2";
    r.method = "newton";
    r.start = {Complex(-0.5), Complex(3.0)};
    r.result.root = {Complex(-1.0), Complex(3.5)};
    r.result.exit_reason = ExitReason::StepBelowTolerance;
    std::ostringstream os;
    write_json(os, {r});
    const std::string text = os.str();
    for (const char* key : {"\"system\"", "\"method\"", "\"x0\"", "\"y0\"", "\"x_final\"",
                            "\"y_final\"", "\"outer_iters\"", "\"inner_iters\"", "\"f1_abs\"",
                            "\"f2_abs\"", "\"status\"", "\"matched_root\"", "\"wall_time_ms\""})
        CHECK(text.find(key) != std::string::npos);
    CHECK(text.find("\"-1+0i\"") != std::string::npos);
}
