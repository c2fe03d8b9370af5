#include "exclusion/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exclusion/incoherence.hpp"
#include "exclusion/tolerances.hpp"

namespace exclusion {

namespace {

double born_probability(const std::vector<cplx>& psi, const CMatrix& op) {
    const int d = static_cast<int>(psi.size());
    cplx s = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) s += std::conj(psi[r]) * op(r, c) * psi[c];
    return std::real(s);
}

ExclusionReport check_alignment(const StateSet& set, const Povm& povm, double tol,
                                const std::vector<int>& assignment) {
    const int k = set.size();
    ExclusionReport report;
    report.assignment = assignment;

    CMatrix sum(povm.dim, povm.dim);
    for (const CMatrix& e : povm.elements) sum += e;
    const double completeness = (sum - CMatrix::identity(povm.dim)).frobenius_norm();
    if (completeness > tol)
        report.violations.push_back({"completeness", -1, completeness});

    for (int j = 0; j < k; ++j) {
        const CMatrix& e = povm.elements[assignment[j]];
        const EigResult eig = hermitian_eig(e.hermitized());
        if (!eig.values.empty() && eig.values.front() < -tol)
            report.violations.push_back({"psd", j, -eig.values.front()});

        const double excl = born_probability(set.states[j], e);
        if (excl > tol) report.violations.push_back({"exclusion", j, excl});

        double relevance = 0.0;
        for (int i = 0; i < k; ++i) relevance += born_probability(set.states[i], e);
        if (!(relevance > tol)) report.violations.push_back({"relevance", j, relevance});
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace

ExclusionReport verify_exclusion(const StateSet& set, const Povm& povm, double tol,
                                 bool search_assignment) {
    set.validate();
    const int k = set.size();
    if (povm.size() != k) throw CountMismatch("POVM outcome count differs from state count");
    if (povm.dim != set.dim) throw DimensionMismatch("POVM dimension differs from state dimension");
    for (const CMatrix& e : povm.elements)
        if (e.rows() != povm.dim || e.cols() != povm.dim)
            throw DimensionMismatch("POVM element shape mismatch");

    std::vector<int> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    ExclusionReport report = check_alignment(set, povm, tol, identity);
    if (report.pass || !search_assignment) return report;

    if (k > 8) throw OutOfRange("assignment search supports at most 8 outcomes");
    std::vector<int> perm = identity;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ExclusionReport r = check_alignment(set, povm, tol, perm);
        if (r.pass) return r;
    }
    return report;  // original alignment's report, with its violations
}

Povm extract_povm(const StateSet& set, const Decomposition& d) {
    const Gram g = gram_of(set);
    const CheckResult check = verify_decomposition(g, d);
    if (!check.pass)
        throw InfeasibleDecomposition("decomposition fails re-verification: " + check.reason);

    const CMatrix v = set.as_columns();
    const CMatrix vpinv = pseudo_inverse(v);
    const CMatrix bridge = vpinv.dagger();

    Povm povm;
    povm.dim = set.dim;
    for (const CMatrix& f : d.blocks) povm.elements.push_back((bridge * f * vpinv).hermitized());

    // Complement of the span, attached to the first outcome.
    CMatrix leftover = CMatrix::identity(set.dim) - v * vpinv;
    povm.elements[0] = (povm.elements[0] + leftover).hermitized();
    return povm;
}

std::pair<StateSet, Povm> reference_two_copy_povm() {
    StateSet set;
    set.dim = 4;
    set.states = {
        {1.0, 0.0, 0.0, 0.0},
        {0.5, 0.5, 0.5, 0.5},
        {0.0, 0.0, 0.0, 1.0},
    };

    auto real_matrix = [](std::initializer_list<double> entries) {
        CMatrix m(4, 4);
        int i = 0;
        for (double e : entries) {
            m(i / 4, i % 4) = e;
            ++i;
        }
        return m;
    };
    Povm povm;
    povm.dim = 4;
    povm.elements = {
        real_matrix({0, 0, 0, 0,
                     0, 0.3671, 0.0338, 0.0991,
                     0, 0.0338, 0.3671, 0.0991,
                     0, 0.0991, 0.0991, 0.8017}),
        real_matrix({0.1983, -0.0991, -0.0991, 0,
                     -0.0991, 0.2658, -0.0675, -0.0991,
                     -0.0991, -0.0675, 0.2658, -0.0991,
                     0, -0.0991, -0.0991, 0.1983}),
        real_matrix({0.8017, 0.0991, 0.0991, 0,
                     0.0991, 0.3671, 0.0338, 0,
                     0.0991, 0.0338, 0.3671, 0,
                     0, 0, 0, 0}),
    };
    return {set, povm};
}

}  // namespace exclusion
