#pragma once

// Benchmark cell tables: every (system, start, method) combination from the
// published comparison tables, with the reference iteration counts and the
// per-cell inner-cap P and equation-order flags they were recorded with.

#include <string>
#include <vector>

#include "roots2d/core.hpp"

namespace roots2d::bench {

struct Cell {
    std::string system;
    PointPair start;
    Method method = Method::M1;
    int inner_cap_P = 5;    // bracketed value from the table (M1/M2 only)
    bool swap_equations = false;
    int ref_iterations = 0;  // 0 = no reference available
};

inline std::vector<Cell> appendix_cells() {
    auto C = [](double re, double im = 0.0) { return Complex(re, im); };
    std::vector<Cell> cells;
    auto add_row = [&](const std::string& sys, PointPair start, bool swapped, int n_newton,
                       int n_broyden, int n_m2, int p_m2, int n_m1, int p_m1) {
        cells.push_back({sys, start, Method::Newton, 5, swapped, n_newton});
        cells.push_back({sys, start, Method::Broyden, 5, swapped, n_broyden});
        cells.push_back({sys, start, Method::M2, p_m2, swapped, n_m2});
        cells.push_back({sys, start, Method::M1, p_m1, swapped, n_m1});
    };
    // system, start, swapped, N_newton, N_broyden, N_M2(P), N_M1(P)
    add_row("S1", {C(1.689), C(-0.637)}, false, 8, 10, 10, 3, 8, 3);
    add_row("S1", {C(1.321, 3.520), C(3.738, -1.927)}, false, 8, 10, 12, 3, 8, 3);
    add_row("S1", {C(1.321, -3.520), C(3.738, 1.927)}, false, 8, 10, 12, 3, 8, 3);
    add_row("S2", {C(-0.5), C(3.0)}, false, 8, 10, 9, 4, 9, 3);
    add_row("S2", {C(3.046), C(3.484)}, false, 8, 10, 10, 3, 9, 3);
    add_row("S2", {C(0.726, 4.335), C(-2.242, -0.592)}, false, 8, 9, 7, 6, 8, 6);
    add_row("S3", {C(0.621), C(-0.228)}, true, 10, 13, 9, 3, 8, 4);
    add_row("S3", {C(-0.422, 1.476), C(-2.562, 3.301)}, false, 9, 11, 8, 4, 11, 3);
    add_row("S3", {C(1.468, -1.635), C(-2.665, 3.656)}, false, 9, 11, 7, 5, 11, 3);
    add_row("S4", {C(-0.35), C(-1.05)}, false, 11, 12, 7, 4, 10, 4);
    add_row("S4", {C(0.55, -0.6), C(1.14, -1.0)}, false, 10, 12, 7, 6, 13, 3);
    add_row("S6", {C(1.2, 0.09), C(-5.5, 0.01)}, true, 9, 11, 9, 4, 11, 3);
    add_row("S6", {C(7.2, -3.6), C(-11.9, 5.001)}, false, 11, 14, 10, 3, 14, 4);
    add_row("S6", {C(-5.1, -1.006), C(16.0, 5.51)}, false, 11, 15, 11, 3, 13, 3);
    add_row("S7", {C(1.1, -0.45), C(-2.4, -4.2)}, false, 10, 13, 11, 3, 12, 3);
    add_row("S7", {C(0.5, -0.87), C(-3.21, -5.14)}, false, 10, 13, 8, 4, 11, 3);
    // multi-root-study rows (prose, not table rows): complex start on S5
    add_row("S5", {C(2.27, 0.001), C(1.27)}, false, 24, 0, 12, 5, 14, 5);
    return cells;
}

inline std::vector<Cell> heun_cells() {
    auto C = [](double re, double im = 0.0) { return Complex(re, im); };
    std::vector<Cell> cells;
    auto add_row = [&](const std::string& sys, PointPair start, int n_broyden, int n_m2, int p_m2,
                       int n_m1, int p_m1) {
        cells.push_back({sys, start, Method::Broyden, 5, false, n_broyden});
        cells.push_back({sys, start, Method::M2, p_m2, false, n_m2});
        cells.push_back({sys, start, Method::M1, p_m1, false, n_m1});
    };
    add_row("EX1", {C(2.1, 0.45), C(1.25, 0.3)}, 14, 11, 5, 12, 15);
    add_row("EX1", {C(2.23, 0.01), C(0.93, 0.1)}, 23, 10, 15, 17, 15);
    add_row("KERR", {C(0.49, 0.18), C(2.001, 0.1)}, 23, 9, 5, 11, 4);
    add_row("KERR", {C(0.17, 0.97), C(2.001, 0.1)}, 34, 12, 5, 15, 5);
    add_row("KERR", {C(0.07, 5.147), C(2.001, 0.051)}, 36, 11, 5, 17, 5);
    return cells;
}

}  // namespace roots2d::bench
