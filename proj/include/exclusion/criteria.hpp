#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exclusion/certificates.hpp"
#include "exclusion/states.hpp"

namespace exclusion {

enum class Decision { Antidistinguishable, NotAntidistinguishable, Inconclusive };

const char* to_string(Decision d);

using Certificate =
    std::variant<std::monostate, Decomposition, InfeasibilityCertificate, std::vector<double>>;

struct Verdict {
    Decision decision = Decision::Inconclusive;
    std::string criterion;
    // Distance into the deciding region; positive means strictly decided.
    double margin = 0.0;
    // Set when the deciding quantity sits within the borderline tolerance
    // of its threshold.
    bool borderline = false;
    Certificate certificate;
    // (criterion, decision) pairs for every rule evaluated by classify.
    std::vector<std::pair<std::string, Decision>> trail;
};

enum class Method { Auto, ClosedForm, Sdp };

// Proposition-1 style necessary bound: sum of pairwise overlaps against
// k(k-2)/2. Decides NotAntidistinguishable or stays Inconclusive.
Verdict necessary_fidelity_sum(const Gram& g);

// Positive-mixture sufficient condition: sum t_i |psi_i><psi_i| = I with
// t > 0, via LP feasibility. Exact (iff) for qubits.
Verdict sufficient_identity_mix(const StateSet& set);

// Overlap-threshold sufficient condition: c <= (1/sqrt 2) sqrt((k-2)/(k-1)).
Verdict sufficient_overlap_threshold(const Gram& g);

// Overlap-floor necessary condition: all |G_ij| > (k-2)/(k-1) forbids exclusion.
Verdict necessary_overlap_floor(const Gram& g);

// Exact rule for equal real off-diagonal Grams: antidistinguishable iff
// gamma <= (k-2)/(k-1). Returns nullopt when the pattern does not match.
std::optional<Verdict> equal_real_iff(const Gram& g);

// Exact rule for k = 3: sum x_ij < 1 and (sum x_ij - 1)^2 >= 4 prod x_ij.
Verdict three_state_iff(const Gram& g);

// Decision cascade: cheap exact rules first, the incoherence solver as the
// exact fallback. The returned verdict carries the full evaluation trail.
Verdict classify(const StateSet& set, CopySpec copies = {1}, Method method = Method::Auto);
Verdict classify_gram(const Gram& g, CopySpec copies = {1}, Method method = Method::Auto);

}  // namespace exclusion
