#pragma once

// Preset catalog: the seven benchmark systems, the two-Heun example system,
// the Regge-Wheeler quasi-normal-mode system (with phase variation), and the
// best-effort Kerr preset, each carrying published roots and recommended
// starts. Also the QNM mode-solving driver.

#include "roots2d/core.hpp"

namespace roots2d {

/// Parameters of the Regge-Wheeler QNM system (units 2M = 1).
struct QnmParams {
    double theta = 3.14159265358979323846 - 1e-7;  // pi - 1e-7
    double r_abs = 20.0;
    double epsilon_phase = 0.0;  // |epsilon| < 1, perturbs the phase condition

    void validate() const;
};

/// All presets, keyed by their stable names:
/// S1..S7, EX1, RW (epsilon = 0), KERR.
const std::vector<SystemSpec>& catalog();

/// Look up a preset by name (case-insensitive). Throws std::out_of_range.
const SystemSpec& preset(const std::string& name);

/// Regge-Wheeler system for given parameters:
///   F1(omega, l) = (cos th - 1)(cos th + 1) P_l^2(cos th)
///   F2(omega, l) = HeunC(-2i w, 2i w, 4, -2w^2, 4 - l - l^2 + 2w^2,
///                        1 - |r| e^{-i((pi+eps)/2 + arg w)})
/// with x = omega, y = l and the principal arg.
SystemSpec build_rw_system(const QnmParams& q);

/// Reference QNM frequencies (table order n = 0..10; n = 8 is the
/// epsilon-sensitive mode, stored with positive real part).
const std::vector<Complex>& qnm_reference_frequencies();

/// Solve for one QNM mode: 2D Mueller on [F1+F2, F1-F2] from
/// (seed_omega, 2.1 + 0.01i). Flags SpuriousLMode when the run converges to
/// an l-root below 1.5 (the order-2 Ferrers function vanishes identically at
/// l = 0, 1, so those are not physical modes).
RootResult solve_qnm_mode(Complex seed_omega, const QnmParams& q, const SolveConfig& cfg);

}  // namespace roots2d
