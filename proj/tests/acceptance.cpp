// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance_tests <fixtures-dir>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exclusion/incoherence.hpp"
#include "exclusion/io.hpp"
#include "exclusion/multicopy.hpp"
#include "exclusion/povm.hpp"

using namespace exclusion;

namespace {

std::string g_fixtures;

struct CorpusItem {
    std::optional<StateSet> set;
    Gram gram{CMatrix()};
    Verdict sdp;  // verdict from decide_incoherent
};
std::vector<CorpusItem> g_corpus;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

StateSet random_states(std::mt19937_64& rng, int d, int k) {
    std::normal_distribution<double> g(0.0, 1.0);
    StateSet set;
    set.dim = d;
    set.states.resize(k, std::vector<cplx>(d));
    for (int j = 0; j < k; ++j) {
        double n2 = 0.0;
        for (int r = 0; r < d; ++r) {
            set.states[j][r] = cplx{g(rng), g(rng)};
            n2 += std::norm(set.states[j][r]);
        }
        for (int r = 0; r < d; ++r) set.states[j][r] /= std::sqrt(n2);
    }
    return set;
}

Gram equal_real_gram(int k, double gamma) {
    Gram g{CMatrix(k, k)};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.m(i, j) = (i == j) ? 1.0 : gamma;
    return g;
}

StateSet load_fixture(const std::string& name) {
    return io::load_stateset(g_fixtures + "/" + name);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    const auto [set, povm] = reference_two_copy_povm();
    const ExclusionReport r = verify_exclusion(set, povm, 2e-3);
    if (!r.pass) o.fail("two-copy measurement rejected at tol 2e-3");
    for (int j = 0; j < 3; ++j) {
        cplx excl = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                excl += std::conj(set.states[j][a]) * povm.elements[j](a, b) * set.states[j][b];
        if (std::real(excl) > 2e-3) o.fail("exclusion value above 2e-3 for outcome " + std::to_string(j));
    }
    CMatrix sum(4, 4);
    for (const auto& e : povm.elements) sum += e;
    const double comp = (sum - CMatrix::identity(4)).frobenius_norm();
    if (comp > 2e-3) o.fail("completeness residual " + std::to_string(comp));
    o.detail = "completeness residual " + std::to_string(comp);
    return o;
}

Outcome criterion2() {
    Outcome o;
    const StateSet trefoil = load_fixture("trefoil.json");
    const Verdict vt = classify(trefoil);
    if (vt.decision != Decision::Antidistinguishable || vt.criterion != "three_state_iff")
        o.fail("trefoil misclassified");
    {   // boundary equality of the cubic condition, to 1e-12
        const Gram g = gram_of(trefoil);
        const double s = std::norm(g.m(0, 1)) + std::norm(g.m(0, 2)) + std::norm(g.m(1, 2));
        const double p = std::norm(g.m(0, 1)) * std::norm(g.m(0, 2)) * std::norm(g.m(1, 2));
        if (std::abs((s - 1.0) * (s - 1.0) - 4.0 * p) > 1e-12) o.fail("trefoil boundary equality off");
    }
    const StateSet zpo = load_fixture("zero_plus_one.json");
    if (classify(zpo, {1}).decision != Decision::NotAntidistinguishable)
        o.fail("zero/plus/one wrong at one copy");
    if (classify(zpo, {2}).decision != Decision::Antidistinguishable)
        o.fail("zero/plus/one wrong at two copies");
    if (classify(load_fixture("nonexample_triple.json")).decision != Decision::NotAntidistinguishable)
        o.fail("first non-example misclassified");
    const StateSet example = load_fixture("overlap_sum_example.json");
    const Gram g2 = gram_of(example);
    const Verdict fidelity = necessary_fidelity_sum(g2);
    if (fidelity.decision != Decision::Inconclusive) o.fail("overlap-sum bound unexpectedly decisive");
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) sum += std::abs(g2.m(i, j));
    if (std::abs(sum - 1.3660254) > 1e-6) o.fail("overlap sum " + std::to_string(sum));
    if (classify(example).decision != Decision::NotAntidistinguishable)
        o.fail("second example misclassified");
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::mt19937_64 rng(20250823);
    int used = 0, disagreements = 0;
    while (used < 500) {
        const StateSet set = random_states(rng, 3, 3);
        const Gram g = gram_of(set);
        const Verdict exact = three_state_iff(g);
        if (exact.margin <= 1e-4) continue;  // filtered: too close to the boundary
        const Verdict solver = decide_incoherent(g);
        if (solver.decision != exact.decision) ++disagreements;
        g_corpus.push_back({set, g, solver});
        ++used;
    }
    o.detail = std::to_string(disagreements) + " disagreements over 500 sets";
    if (disagreements != 0) o.pass = false;
    return o;
}

Outcome criterion4() {
    Outcome o;
    int used = 0, disagreements = 0;
    for (int k = 3; k <= 6; ++k) {
        const double s_k = double(k - 2) / double(k - 1);
        for (int i = 1; i <= 19; ++i) {
            const double gamma = i * 0.05;
            if (std::abs(gamma - s_k) <= 1e-4) continue;
            const Gram g = equal_real_gram(k, gamma);
            const Verdict solver = decide_incoherent(g);
            const Decision expected = gamma < s_k ? Decision::Antidistinguishable
                                                  : Decision::NotAntidistinguishable;
            if (solver.decision != expected) ++disagreements;
            g_corpus.push_back({std::nullopt, g, solver});
            ++used;
        }
    }
    o.detail = std::to_string(disagreements) + " disagreements over " + std::to_string(used) +
               " grid points";
    if (disagreements != 0) o.pass = false;
    return o;
}

Outcome criterion5() {
    Outcome o;
    int checked = 0;
    for (int k = 3; k <= 5; ++k) {
        const double s_k = double(k - 2) / double(k - 1);
        for (int i = 11; i <= 19; ++i) {
            const double gamma = i * 0.05;
            if (!(gamma > s_k)) continue;
            const double ratio = std::log(s_k) / std::log(gamma);
            const int expected = static_cast<int>(std::ceil(ratio - 1e-12));
            const CopyReport r = min_copies(construct_equiangular_real(k, gamma), std::nullopt,
                                            Method::Sdp);
            if (!r.minimal_n || *r.minimal_n != expected)
                o.fail("k=" + std::to_string(k) + " gamma=" + std::to_string(gamma) +
                       " expected " + std::to_string(expected));
            ++checked;
        }
    }
    const CopyReport worked = min_copies(construct_equiangular_real(3, 0.9), std::nullopt,
                                         Method::Sdp);
    if (!worked.minimal_n || *worked.minimal_n != 7) o.fail("worked value (3, 0.9) != 7");
    if (o.pass) o.detail = std::to_string(checked) + " grid points match the exact formula";
    return o;
}

Outcome criterion6() {
    Outcome o;
    bool strict = false;
    for (int k = 3; k <= 5; ++k) {
        const double s_k = double(k - 2) / double(k - 1);
        for (int i = 11; i <= 19; ++i) {
            const double gamma = i * 0.05;
            if (!(gamma > s_k)) continue;
            const int exact = exact_copies_equal_real(gamma, k);
            const int bound = copies_upper_bound(gamma, k);
            if (exact > bound)
                o.fail("exact exceeds bound at k=" + std::to_string(k) + " gamma=" +
                       std::to_string(gamma));
            if (exact < bound) strict = true;
        }
    }
    if (!strict) o.fail("no strictly smaller exact value found");
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int k = 3; k <= 4; ++k)
        for (int n = 1; n <= 3; ++n) {
            const StateSet lower = construct_theorem3(k, n);
            for (int m = 1; m <= n; ++m)
                if (classify(lower, {m}).decision != Decision::NotAntidistinguishable)
                    o.fail("theorem3 k=" + std::to_string(k) + " N=" + std::to_string(n) +
                           " wrong at " + std::to_string(m) + " copies");
            const CopyReport r = min_copies(construct_theorem4(k, n));
            if (!r.minimal_n || *r.minimal_n != n + 1)
                o.fail("theorem4 k=" + std::to_string(k) + " N=" + std::to_string(n) +
                       " minimal != " + std::to_string(n + 1));
        }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const double theta_max = 2.0 * std::numbers::pi / 3.0;
    std::vector<double> grid(200);
    for (int i = 0; i < 200; ++i) grid[i] = 0.1 + (theta_max - 0.1) * (i + 1) / 200.0;
    const auto rows = figure1_sweep(grid);
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].n > rows[i - 1].n) o.fail("staircase increases at index " + std::to_string(i));
    const auto named = figure1_sweep({theta_max, std::numbers::pi / 2.0, 0.2});
    if (named[0].n != 1) o.fail("N(2pi/3) != 1");
    if (named[1].n != 2) o.fail("N(pi/2) != 2");
    if (named[2].n != 139) o.fail("N(0.2) != 139");

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> xdist(1e-6, 1.0 - 1e-6);
    for (int trial = 0; trial < 1000; ++trial) {
        const double x = xdist(rng);
        const int n = exact_copies_three_equal(x);
        if (x > std::pow(0.25, 1.0 / n) + 1e-12)
            o.fail("band upper edge violated at x=" + std::to_string(x));
        if (n > 1 && !(x > std::pow(0.25, 1.0 / (n - 1.0))))
            o.fail("band lower edge violated at x=" + std::to_string(x));
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    int both = 0, unverified = 0;
    for (const CorpusItem& item : g_corpus) {
        if (item.sdp.decision == Decision::Antidistinguishable) {
            const auto* d = std::get_if<Decomposition>(&item.sdp.certificate);
            if (!d || !verify_decomposition(item.gram, *d).pass) {
                ++unverified;
                continue;
            }
            // the opposite-side witness must not verify
            const DualWitness w = dual_witness(item.gram, 20000);
            const InfeasibilityCertificate cert{w.h, -CMatrix::inner_real(w.h, item.gram.m)};
            if (verify_certificate(item.gram, cert).pass) ++both;
        } else if (item.sdp.decision == Decision::NotAntidistinguishable) {
            const auto* c = std::get_if<InfeasibilityCertificate>(&item.sdp.certificate);
            if (!c || !verify_certificate(item.gram, *c).pass) {
                ++unverified;
                continue;
            }
            const ConeSumProjection p = project_onto_cone_sum(item.gram);
            if (verify_decomposition(item.gram, p.blocks).pass) ++both;
        }
    }
    o.detail = std::to_string(g_corpus.size()) + " corpus grams, " + std::to_string(both) +
               " double certificates, " + std::to_string(unverified) + " unverified";
    if (both != 0 || unverified != 0) o.pass = false;
    return o;
}

Outcome criterion10() {
    Outcome o;
    int extracted = 0;
    std::vector<CorpusItem> with_sets;
    for (const CorpusItem& item : g_corpus)
        if (item.set && item.sdp.decision == Decision::Antidistinguishable)
            with_sets.push_back(item);
    // extend with equal-real realizations and the fixture ensembles
    for (const char* name : {"trefoil.json", "orthonormal3.json"}) {
        const StateSet set = load_fixture(name);
        const Gram g = gram_of(set);
        with_sets.push_back({set, g, decide_incoherent(g)});
    }
    for (double gamma : {0.1, 0.3, 0.5}) {
        const StateSet set = construct_equiangular_real(4, gamma);
        const Gram g = gram_of(set);
        with_sets.push_back({set, g, decide_incoherent(g)});
    }
    for (const CorpusItem& item : with_sets) {
        if (item.sdp.decision != Decision::Antidistinguishable) {
            o.fail("expected antidistinguishable corpus instance");
            continue;
        }
        const auto& d = std::get<Decomposition>(item.sdp.certificate);
        const Povm povm = extract_povm(*item.set, d);
        const ExclusionReport r = verify_exclusion(*item.set, povm, 1e-6);
        if (!r.pass) {
            o.fail("extracted POVM rejected (" + r.violations[0].condition + ")");
            continue;
        }
        ++extracted;
    }
    o.detail = std::to_string(extracted) + " measurements extracted and verified";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance_tests <fixtures-dir>\n");
        return 2;
    }
    g_fixtures = argv[1];

    struct Entry {
        const char* name;
        std::function<Outcome()> fn;
        double budget_ms;
    };
    const std::vector<Entry> entries = {
        {"criterion 1 (two-copy measurement reproduction)", criterion1, 10.0},
        {"criterion 2 (worked example classifications)", criterion2, 100.0},
        {"criterion 3 (closed form vs solver, random triples)", criterion3, 60000.0},
        {"criterion 4 (equal-real threshold grid)", criterion4, 120000.0},
        {"criterion 5 (exact copy counts via solver search)", criterion5, 300000.0},
        {"criterion 6 (exact count never exceeds overlap bound)", criterion6, 300000.0},
        {"criterion 7 (extremal family constructions)", criterion7, 60000.0},
        {"criterion 8 (copy staircase and band tiling)", criterion8, 1000.0},
        {"criterion 9 (certificate soundness over the corpus)", criterion9, 180000.0},
        {"criterion 10 (measurement extraction round-trip)", criterion10, 30000.0},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms > e.budget_ms) o.fail("over budget: " + std::to_string(ms) + " ms");
        std::printf("%s: %s%s%s (%.1f ms)\n", e.name, o.pass ? "PASS" : "FAIL",
                    o.detail.empty() ? "" : " — ", o.detail.c_str(), ms);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
