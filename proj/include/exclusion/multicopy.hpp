#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exclusion/criteria.hpp"

namespace exclusion {

struct CopyReport {
    std::optional<int> minimal_n;           // unresolved when empty
    std::string method;                     // theorem2 | prop5 | search
    std::optional<int> upper_bound;         // overlap-based bound when c < 1
    std::vector<std::pair<int, Verdict>> trail;
};

// Overlap-based sufficient copy count: N = max(1, ceil(ln t_k / ln c)) with
// t_k = (1/sqrt 2) sqrt((k-2)/(k-1)). Throws DegenerateOverlap for c >= 1.
int copies_upper_bound(double c, int k);

// Exact minimal copy count for equal real inner products:
// ceil(ln((k-2)/(k-1)) / ln gamma), or 1 when already antidistinguishable.
int exact_copies_equal_real(double gamma, int k);

// Exact minimal copy count for three states with equal squared overlap x:
// the unique N with (1/4)^(1/(N-1)) < x <= (1/4)^(1/N).
int exact_copies_three_equal(double x);

// Minimal-copy search. Closed-form rules take precedence when the Gram
// matches their hypothesis, unless a method forces the search path.
CopyReport min_copies(const StateSet& set, std::optional<int> max_n = std::nullopt,
                      Method method = Method::Auto, bool allow_large = false);

struct SweepRow {
    double theta = 0.0;
    double x = 0.0;
    int n = 0;
};

// Copy counts for the equal-overlap qubit family across a theta grid.
std::vector<SweepRow> figure1_sweep(const std::vector<double>& theta_grid);

}  // namespace exclusion
