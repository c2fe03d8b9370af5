#include "exclusion/multicopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exclusion/tolerances.hpp"

namespace exclusion {

namespace {

constexpr int kDefaultSearchCap = 512;
constexpr int kDegenerateCap = 32;

// ceil(ln(target) / ln(base)) for base, target in (0, 1), snapping ratios
// within the snap tolerance of an integer down to that integer.
int ceil_log_ratio(double target, double base) {
    const double ratio = std::log(target) / std::log(base);
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) <= config().ceil_snap) return static_cast<int>(rounded);
    return static_cast<int>(std::ceil(ratio));
}

}  // namespace

int copies_upper_bound(double c, int k) {
    if (k < 3) throw TooFewStates("copy bound requires k >= 3");
    if (c >= 1.0) throw DegenerateOverlap("overlap bound requires c < 1");
    if (c <= 0.0) return 1;
    const double t_k = std::sqrt(0.5 * (k - 2) / (k - 1));
    if (c <= t_k) return 1;
    return std::max(1, ceil_log_ratio(t_k, c));
}

int exact_copies_equal_real(double gamma, int k) {
    if (k < 3) throw TooFewStates("exact copy formula requires k >= 3");
    if (gamma < 0.0) throw NegativeGamma("gamma must be nonnegative");
    if (gamma >= 1.0) throw DegenerateOverlap("exact copy formula requires gamma < 1");
    const double s_k = double(k - 2) / double(k - 1);
    if (gamma <= s_k) return 1;
    return ceil_log_ratio(s_k, gamma);
}

int exact_copies_three_equal(double x) {
    if (x <= 0.0) throw OutOfRange("squared overlap must be positive");
    if (x >= 1.0) throw DegenerateOverlap("exact copy formula requires x < 1");
    if (x <= 0.25) return 1;
    return ceil_log_ratio(0.25, x);
}

CopyReport min_copies(const StateSet& set, std::optional<int> max_n, Method method,
                      bool allow_large) {
    if (set.size() < 3) throw TooFewStates("min_copies requires k >= 3");
    const Gram g = gram_of(set);
    const int k = g.size();
    const double c = max_overlap(g);

    CopyReport report;

    if (method != Method::Sdp && c < 1.0) {
        // Closed forms take precedence when their hypothesis matches.
        bool equal_real = true;
        const double gamma = std::real(g.m(0, 1));
        bool equal_abs = true;
        const double x = std::norm(g.m(0, 1));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                if (std::abs(std::imag(g.m(i, j))) > config().pattern_match ||
                    std::abs(std::real(g.m(i, j)) - gamma) > config().pattern_match)
                    equal_real = false;
                if (std::abs(std::norm(g.m(i, j)) - x) > config().pattern_match)
                    equal_abs = false;
            }
        // On a formula hit the trail is still populated from the cheap
        // closed-form rules so the (N, Verdict) record stays complete.
        auto fill_trail = [&](int minimal) {
            for (int n = 1; n <= minimal; ++n)
                report.trail.emplace_back(n, classify_gram(g, CopySpec{n}, Method::ClosedForm));
        };
        if (equal_real && gamma >= 0.0) {
            report.method = "theorem2";
            report.minimal_n = exact_copies_equal_real(gamma, k);
            report.upper_bound = c > 0.0 ? copies_upper_bound(c, k) : 1;
            fill_trail(*report.minimal_n);
            return report;
        }
        if (k == 3 && equal_abs && x > 0.0) {
            report.method = "prop5";
            report.minimal_n = exact_copies_three_equal(x);
            report.upper_bound = copies_upper_bound(c, k);
            fill_trail(*report.minimal_n);
            return report;
        }
    }

    report.method = "search";
    int cap;
    if (c < 1.0) {
        const int ub = copies_upper_bound(c, k);
        report.upper_bound = ub;
        cap = std::min(max_n.value_or(ub), ub);
    } else {
        cap = max_n.value_or(kDegenerateCap);
    }
    if (!allow_large) cap = std::min(cap, kDefaultSearchCap);

    const Method search_method = method == Method::Sdp ? Method::Sdp : Method::Auto;
    bool tainted = false;
    for (int n = 1; n <= cap; ++n) {
        Verdict v = classify_gram(g, CopySpec{n}, search_method);
        const Decision d = v.decision;
        report.trail.emplace_back(n, std::move(v));
        if (d == Decision::Antidistinguishable) {
            if (!tainted) report.minimal_n = n;
            return report;
        }
        if (d == Decision::Inconclusive) tainted = true;
    }
    return report;
}

std::vector<SweepRow> figure1_sweep(const std::vector<double>& theta_grid) {
    const double theta_max = 2.0 * std::numbers::pi / 3.0 + 1e-12;
    std::vector<SweepRow> rows(theta_grid.size());
    for (size_t i = 0; i < theta_grid.size(); ++i) {
        const double theta = theta_grid[i];
        if (!(theta > 0.0 && theta <= theta_max))
            throw OutOfRange("theta grid values must lie in (0, 2*pi/3]");
        const double c = std::cos(theta / 2.0);
        const double x = c * c;
        rows[i] = {theta, x, exact_copies_three_equal(x)};
    }
    return rows;
}

}  // namespace exclusion
