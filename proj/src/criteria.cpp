#include "exclusion/criteria.hpp"

#include <cmath>

#include "exclusion/incoherence.hpp"
#include "exclusion/linprog.hpp"
#include "exclusion/tolerances.hpp"

namespace exclusion {

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Antidistinguishable: return "Antidistinguishable";
        case Decision::NotAntidistinguishable: return "NotAntidistinguishable";
        default: return "Inconclusive";
    }
}

namespace {

void require_k(const Gram& g, int k_min) {
    if (g.size() < k_min) throw TooFewStates("criterion requires more states");
}

bool near(double value, double threshold) {
    return std::abs(value - threshold) <= config().borderline;
}

}  // namespace

Verdict necessary_fidelity_sum(const Gram& g) {
    require_k(g, 3);
    const int k = g.size();
    double sum = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) sum += std::abs(g.m(i, j));
    const double bound = k * (k - 2) / 2.0;

    Verdict v;
    v.criterion = "necessary_fidelity_sum";
    v.borderline = near(sum, bound);
    if (sum > bound) {
        v.decision = Decision::NotAntidistinguishable;
        v.margin = sum - bound;
    } else {
        v.decision = Decision::Inconclusive;
        v.margin = bound - sum;
    }
    return v;
}

Verdict sufficient_identity_mix(const StateSet& set) {
    set.validate();
    const int k = set.size();
    const int d = set.dim;

    // Real linear system over the d^2 real degrees of freedom of Hermitian
    // matrices: sum_i t_i |psi_i><psi_i| = I.
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    auto proj_entry = [&](int i, int r, int c) {
        return set.states[i][r] * std::conj(set.states[i][c]);
    };
    for (int r = 0; r < d; ++r) {
        std::vector<double> row(k);
        for (int i = 0; i < k; ++i) row[i] = std::real(proj_entry(i, r, r));
        a.push_back(std::move(row));
        b.push_back(1.0);
    }
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c) {
            std::vector<double> re(k), im(k);
            for (int i = 0; i < k; ++i) {
                const cplx e = proj_entry(i, r, c);
                re[i] = std::real(e);
                im[i] = std::imag(e);
            }
            a.push_back(std::move(re));
            b.push_back(0.0);
            a.push_back(std::move(im));
            b.push_back(0.0);
        }

    const std::vector<double> lb(k, config().mix_floor);
    const auto t = lp_feasible(a, b, lb);

    Verdict v;
    v.criterion = "sufficient_identity_mix";
    if (t) {
        v.decision = Decision::Antidistinguishable;
        double tmin = t->front();
        for (double x : *t) tmin = std::min(tmin, x);
        v.margin = tmin;
        v.certificate = *t;
    } else if (d == 2) {
        // For qubits the mixture condition is also necessary.
        v.decision = Decision::NotAntidistinguishable;
        v.margin = 0.0;
    }
    return v;
}

Verdict sufficient_overlap_threshold(const Gram& g) {
    require_k(g, 3);
    const int k = g.size();
    const double threshold = std::sqrt(0.5 * (k - 2) / (k - 1));
    const double c = max_overlap(g);

    Verdict v;
    v.criterion = "sufficient_overlap_threshold";
    v.borderline = near(c, threshold);
    if (c <= threshold) {
        v.decision = Decision::Antidistinguishable;
        v.margin = threshold - c;
    } else {
        v.decision = Decision::Inconclusive;
        v.margin = c - threshold;
    }
    return v;
}

Verdict necessary_overlap_floor(const Gram& g) {
    require_k(g, 3);
    const int k = g.size();
    const double floor = double(k - 2) / double(k - 1);
    double cmin = 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) cmin = std::min(cmin, std::abs(g.m(i, j)));

    Verdict v;
    v.criterion = "necessary_overlap_floor";
    v.borderline = near(cmin, floor);
    if (cmin > floor) {
        v.decision = Decision::NotAntidistinguishable;
        v.margin = cmin - floor;
    } else {
        v.decision = Decision::Inconclusive;
        v.margin = floor - cmin;
    }
    return v;
}

std::optional<Verdict> equal_real_iff(const Gram& g) {
    require_k(g, 3);
    const int k = g.size();
    const double tol = config().pattern_match;
    const double gamma = std::real(g.m(0, 1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (std::abs(std::imag(g.m(i, j))) > tol) return std::nullopt;
            if (std::abs(std::real(g.m(i, j)) - gamma) > tol) return std::nullopt;
        }
    if (gamma < -tol || gamma >= 1.0 - tol) return std::nullopt;

    const double threshold = double(k - 2) / double(k - 1);
    Verdict v;
    v.criterion = "equal_real_iff";
    v.borderline = near(gamma, threshold);
    if (gamma <= threshold) {
        v.decision = Decision::Antidistinguishable;
        v.margin = threshold - gamma;
    } else {
        v.decision = Decision::NotAntidistinguishable;
        v.margin = gamma - threshold;
    }
    return v;
}

Verdict three_state_iff(const Gram& g) {
    if (g.size() != 3) throw WrongCardinality("three_state_iff requires exactly three states");
    const double x01 = std::norm(g.m(0, 1));
    const double x02 = std::norm(g.m(0, 2));
    const double x12 = std::norm(g.m(1, 2));
    const double sum = x01 + x02 + x12;
    const double slack1 = 1.0 - sum;                                 // needs > 0
    const double slack2 = (sum - 1.0) * (sum - 1.0) - 4.0 * x01 * x02 * x12;  // needs >= 0

    Verdict v;
    v.criterion = "three_state_iff";
    v.borderline = near(slack1, 0.0) || near(slack2, 0.0);
    const double m = std::min(slack1, slack2);
    // The first condition is strict, so roundoff-level slack does not count;
    // the second is inclusive, so it gets the same grace downward. This keeps
    // exact-boundary inputs (overlap sum 1, or equality in the discriminant)
    // on their mathematically correct side.
    const double eps = config().strict_slack;
    if (slack1 > eps && slack2 >= -eps) {
        v.decision = Decision::Antidistinguishable;
        v.margin = m;
    } else {
        v.decision = Decision::NotAntidistinguishable;
        v.margin = -m;
    }
    return v;
}

namespace {

Verdict run_cascade(const Gram& g, const StateSet* set, CopySpec copies, Method method) {
    if (g.size() < 3)
        throw TooFewStates("classification requires k >= 3 (two-state exclusion reduces to discrimination)");
    const Gram gn = copies.n == 1 ? g : hadamard_power(g, copies);
    const int k = gn.size();

    std::vector<std::pair<std::string, Decision>> trail;
    auto decided = [&](Verdict v) {
        trail.emplace_back(v.criterion, v.decision);
        v.trail = trail;
        return v;
    };

    if (method != Method::Sdp) {
        if (k == 3) {
            // Fully degenerate triples (all overlaps 1) fall through to the
            // solver instead of being decided by the three-state rule.
            bool degenerate = true;
            for (int i = 0; i < 3 && degenerate; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (std::norm(gn.m(i, j)) < 1.0 - 1e-12) degenerate = false;
            if (!degenerate) return decided(three_state_iff(gn));
            trail.emplace_back("three_state_iff", Decision::Inconclusive);
        }

        if (auto v = equal_real_iff(gn)) return decided(*v);
        trail.emplace_back("equal_real_iff", Decision::Inconclusive);

        Verdict floor = necessary_overlap_floor(gn);
        if (floor.decision != Decision::Inconclusive) return decided(floor);
        trail.emplace_back(floor.criterion, floor.decision);

        Verdict threshold = sufficient_overlap_threshold(gn);
        if (threshold.decision != Decision::Inconclusive) return decided(threshold);
        trail.emplace_back(threshold.criterion, threshold.decision);

        Verdict fidelity = necessary_fidelity_sum(gn);
        if (fidelity.decision != Decision::Inconclusive) return decided(fidelity);
        trail.emplace_back(fidelity.criterion, fidelity.decision);

        if (set != nullptr && copies.n == 1) {
            Verdict mix = sufficient_identity_mix(*set);
            if (mix.decision != Decision::Inconclusive) return decided(mix);
            trail.emplace_back(mix.criterion, mix.decision);
        }

        if (method == Method::ClosedForm) {
            Verdict v;
            v.criterion = "closed_form_exhausted";
            v.trail = trail;
            return v;
        }
    }

    return decided(decide_incoherent(gn));
}

}  // namespace

Verdict classify(const StateSet& set, CopySpec copies, Method method) {
    return run_cascade(gram_of(set), &set, copies, method);
}

Verdict classify_gram(const Gram& g, CopySpec copies, Method method) {
    return run_cascade(g, nullptr, copies, method);
}

}  // namespace exclusion
