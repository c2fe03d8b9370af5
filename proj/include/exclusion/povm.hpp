#pragma once

#include <string>
#include <vector>

#include "exclusion/certificates.hpp"
#include "exclusion/states.hpp"

namespace exclusion {

struct Povm {
    int dim = 0;
    std::vector<CMatrix> elements;

    int size() const { return static_cast<int>(elements.size()); }
};

struct ExclusionViolation {
    std::string condition;  // completeness | psd | exclusion | relevance
    int index = -1;         // outcome index, or -1 for completeness
    double slack = 0.0;
};

struct ExclusionReport {
    bool pass = true;
    std::vector<ExclusionViolation> violations;
    // Outcome-to-state alignment that passed (identity unless a search was
    // requested and a non-trivial assignment fixed the report).
    std::vector<int> assignment;
};

// Checks a POVM against the exclusion conditions for the given state order:
// completeness, PSD elements, <psi_j|Pi_j|psi_j> <= tol, and relevance of
// every outcome. With search_assignment, permutations of the outcome order
// are tried until one passes (k <= 8).
ExclusionReport verify_exclusion(const StateSet& set, const Povm& povm, double tol,
                                 bool search_assignment = false);

// Explicit exclusion measurement from a feasible Gram decomposition:
// Pi_i = pinv(V)' F_i pinv(V), with the off-span projector attached to Pi_1.
Povm extract_povm(const StateSet& set, const Decomposition& d);

// The published two-copy measurement for {|00>, |++>, |11>}, constants kept
// at their printed four-decimal precision.
std::pair<StateSet, Povm> reference_two_copy_povm();

}  // namespace exclusion
