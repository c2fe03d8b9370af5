#pragma once

#include <string>

#include "exclusion/certificates.hpp"
#include "exclusion/criteria.hpp"
#include "exclusion/states.hpp"

namespace exclusion {

enum class ExecPolicy { Serial, Parallel };

// Library-wide default; Parallel when built with OpenMP.
ExecPolicy default_exec_policy();

struct ConeSumProjection {
    CMatrix p;             // sum of the cone-feasible blocks
    Decomposition blocks;  // the blocks themselves
    double gap = 0.0;      // ||G - P||_F
    bool converged = false;
    int iterations = 0;
};

// Frobenius projection of G onto K_1 + ... + K_k, where K_i is the cone of
// PSD matrices with row/column i zero, by Dykstra-corrected alternating
// projections on the product formulation: per-block cone projections, then
// the closed-form projection onto the affine set sum F_i = G (each entry's
// residual split uniformly over the blocks allowed to carry it).
ConeSumProjection project_onto_cone_sum(const Gram& g, int max_iter = 50000, double tol = 1e-10,
                                        ExecPolicy policy = default_exec_policy());

struct DualWitness {
    CMatrix h;           // unit Frobenius norm, delete-one compressions PSD
    double distance = 0.0;  // dist(G, cone sum)
    bool converged = false;
    int iterations = 0;
};

// Separating witness via the polar cone: Dykstra projection of -G onto the
// intersection of the delete-one-PSD cones. By the Moreau decomposition the
// result is -proj_polar(G), i.e. exactly G minus its projection onto the
// cone sum, which the product formulation above does not deliver when G is
// outside the cone.
DualWitness dual_witness(const Gram& g, int max_iter = 50000, double tol = 1e-12);

// Exact Proposition-3 style decision with machine-checkable certificates.
Verdict decide_incoherent(const Gram& g);

struct CheckResult {
    bool pass = true;
    std::string reason;
};

// Independent re-verification, consulting no solver state.
CheckResult verify_decomposition(const Gram& g, const Decomposition& d);
CheckResult verify_certificate(const Gram& g, const InfeasibilityCertificate& c);

}  // namespace exclusion
