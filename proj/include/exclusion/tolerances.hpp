#pragma once

namespace exclusion {

// Numerical tolerances used across the library. The defaults are module
// constants; config() exposes a mutable instance so a host application
// (or the CLI via EXCLUSION_LAB_TOL) can override the global default.
struct Tolerances {
    double hermitian = 1e-12;        // max |M_ab - conj(M_ba)|
    double unit_norm = 1e-10;        // state vector normalization
    double eig_residual = 1e-10;     // eigendecomposition reconstruction
    double jacobi_off = 1e-14;       // off-diagonal sweep target, relative
    double psd_floor = 1e-8;         // "PSD within" slack on min eigenvalue
    double gram_factor = 1e-9;       // ||B'B - G||_F bound, relative
    double lp_residual = 1e-8;       // ||At - b||_inf
    double pattern_match = 1e-10;    // equal-real off-diagonal detection
    double borderline = 1e-9;        // distance to a criterion threshold
    double feasible_gap = 1e-8;      // cone-sum gap: feasible at or below
    double infeasible_gap = 1e-6;    // cone-sum gap: infeasible at or above
    double certificate_sep = 1e-8;   // scale-free dual separation margin
    double decomposition_sum = 1e-7; // ||sum F_i - G||_F in re-verification
    double povm_default = 1e-8;      // POVM completeness / exclusion default
    double ceil_snap = 1e-12;        // ln-ratio snap to integer copy counts
    double strict_slack = 1e-12;     // margin a strict inequality must clear
    // Lower bound on mixture weights t_i. Kept well above lp_residual so a
    // weight parked at the floor cannot pass as feasible through residual
    // slack alone.
    double mix_floor = 1e-6;
};

Tolerances& config();

}  // namespace exclusion
