#pragma once

// Two-dimensional Mueller solver. Each outer iteration fits a plane through
// three samples of F2, intersects it with z = 0 to get a linear relation
// between the variables, runs 1D Mueller on F1 restricted to that line, and
// fixes the second variable either from the line (M1) or by a second 1D
// Mueller on F2 (M2).

#include <vector>

#include "roots2d/core.hpp"
#include "roots2d/muller1d.hpp"

namespace roots2d {

/// Plane z = c1 x + c2 y + c3 interpolating three samples of a function.
struct Plane {
    Complex c1{}, c2{}, c3{};

    Complex at(Complex x, Complex y) const { return c1 * x + c2 * y + c3; }
};

enum class LineOrientation { YofX, XofY };

/// The z = 0 trace of a plane, solved for whichever variable has the larger
/// plane coefficient.
struct LineRelation {
    Complex slope{};
    Complex intercept{};
    LineOrientation orientation = LineOrientation::YofX;

    Complex y_of(Complex x) const { return slope * x + intercept; }  // YofX
    Complex x_of(Complex y) const { return slope * y + intercept; }  // XofY
};

/// The three most recent iterates and the matching F2 values.
struct IterateTriple {
    PointPair p_nm2, p_nm1, p_n;
    Complex f2_nm2{}, f2_nm1{}, f2_n{};
};

class DegenerateGeometryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Build {(x0-d, y0-d), (x0, y0), (x0+d, y0+d)} and evaluate F2 at each.
IterateTriple seed_triple(const SystemSpec& sys, PointPair start, Complex deviation);

/// True when the triple's points are collinear (or coincident) in the
/// complex-affine sense; such a triple cannot pin a plane.
bool triple_collinear(const IterateTriple& t);

/// Solve the 3x3 complex linear system C1 x_i + C2 y_i + C3 = F2(x_i, y_i)
/// by elimination with partial pivoting.
/// Throws DegenerateGeometryError when the matrix is (numerically) singular.
Plane fit_plane(const IterateTriple& t);

/// Intersect the plane with z = 0. Pivots on the larger of |c1|, |c2|;
/// throws DegenerateGeometryError when both are negligible against |c3|.
LineRelation intersect_zero(const Plane& pl);

/// Run the M1 or M2 iteration (per cfg.variant) from `start`.
/// Newton/Broyden variants are rejected here; see baselines.
RootResult solve(const SystemSpec& sys, PointPair start, const SolveConfig& cfg);

}  // namespace roots2d
