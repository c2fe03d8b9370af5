#pragma once

#include <vector>

#include "exclusion/cmatrix.hpp"

namespace exclusion {

// Primal certificate: G = sum_i F_i with each F_i PSD and row/column i zero.
struct Decomposition {
    std::vector<CMatrix> blocks;
    double residual = 0.0;  // ||G - sum F_i||_F
};

// Dual certificate: every delete-one principal submatrix of H is PSD while
// <H, G> < 0, so no decomposition can exist.
struct InfeasibilityCertificate {
    CMatrix h;
    double violation = 0.0;  // -<H, G>
};

}  // namespace exclusion
