#include "exclusion/states.hpp"

#include <cmath>
#include <numbers>

#include "exclusion/tolerances.hpp"

namespace exclusion {

void StateSet::validate() const {
    if (dim <= 0) throw InvalidState("state set dimension must be positive");
    if (states.empty()) throw InvalidState("state set must contain at least one state");
    for (const auto& psi : states) {
        if (static_cast<int>(psi.size()) != dim)
            throw InvalidState("state vector length does not match dimension");
        double n2 = 0.0;
        for (const auto& amp : psi) n2 += std::norm(amp);
        if (std::abs(std::sqrt(n2) - 1.0) > config().unit_norm)
            throw InvalidState("state vector is not normalized");
    }
}

CMatrix StateSet::as_columns() const {
    CMatrix v(dim, size());
    for (int j = 0; j < size(); ++j)
        for (int r = 0; r < dim; ++r) v(r, j) = states[j][r];
    return v;
}

void Gram::validate() const {
    if (m.rows() != m.cols()) throw InvalidState("Gram matrix must be square");
    if (m.hermiticity_defect() > config().hermitian)
        throw InvalidState("Gram matrix is not Hermitian");
    for (int i = 0; i < m.rows(); ++i)
        if (std::abs(m(i, i) - cplx{1.0}) > config().unit_norm)
            throw InvalidState("Gram diagonal entry differs from 1");
    const EigResult eig = hermitian_eig(m);
    if (!eig.values.empty() && eig.values.front() < -config().psd_floor)
        throw InvalidState("Gram matrix is not positive semidefinite");
}

Gram gram_of(const StateSet& set) {
    set.validate();
    const int k = set.size();
    Gram g{CMatrix(k, k)};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            cplx s = 0.0;
            for (int r = 0; r < set.dim; ++r) s += std::conj(set.states[i][r]) * set.states[j][r];
            g.m(i, j) = s;
        }
    // Exact Hermitian unit diagonal regardless of roundoff in the products.
    for (int i = 0; i < k; ++i) g.m(i, i) = 1.0;
    g.m = g.m.hermitized();
    return g;
}

Gram hadamard_power(const Gram& g, CopySpec copies) {
    if (copies.n < 1) throw OutOfRange("copy count must be at least 1");
    const int k = g.size();
    Gram out{CMatrix(k, k)};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.m(i, j) = std::pow(g.m(i, j), copies.n);
    for (int i = 0; i < k; ++i) out.m(i, i) = 1.0;
    return out;
}

double max_overlap(const Gram& g) {
    const int k = g.size();
    if (k < 2) throw TooFewStates("max_overlap requires at least two states");
    double c = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) c = std::max(c, std::abs(g.m(i, j)));
    return c;
}

StateSet construct_equiangular_real(int k, double gamma) {
    if (k < 2) throw TooFewStates("equiangular construction requires k >= 2");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw InvalidGamma("gamma must lie in [0, 1)");
    CMatrix g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g(i, j) = (i == j) ? 1.0 : gamma;
    const CMatrix b = psd_factor(g);
    StateSet set;
    set.dim = k;
    set.states.resize(k, std::vector<cplx>(k));
    for (int j = 0; j < k; ++j) {
        double n2 = 0.0;
        for (int r = 0; r < k; ++r) n2 += std::norm(b(r, j));
        const double inv = 1.0 / std::sqrt(n2);
        for (int r = 0; r < k; ++r) set.states[j][r] = b(r, j) * inv;
    }
    return set;
}

StateSet construct_qubit_family(double theta) {
    if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi / 3.0 + 1e-15))
        throw OutOfRange("theta must lie in [0, 2*pi/3]");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const double phi = std::acos(std::cos(theta) / (1.0 + std::cos(theta)));
    StateSet set;
    set.dim = 2;
    set.states = {{cplx{1.0}, cplx{0.0}},
                  {cplx{c}, cplx{s}},
                  {cplx{c}, std::polar(s, phi)}};
    return set;
}

StateSet construct_theorem3(int k, int n_copies) {
    if (k < 3) throw TooFewStates("construction requires k >= 3");
    if (n_copies < 1) throw OutOfRange("copy count must be at least 1");
    const double a = std::pow(double(k - 2) / double(k - 1), 1.0 / n_copies);
    return construct_equiangular_real(k, (1.0 + a) / 2.0);
}

StateSet construct_theorem4(int k, int n_copies) {
    if (k < 3) throw TooFewStates("construction requires k >= 3");
    if (n_copies < 1) throw OutOfRange("copy count must be at least 1");
    const double expo = (2.0 * n_copies + 1.0) / (2.0 * n_copies * (n_copies + 1.0));
    return construct_equiangular_real(k, std::pow(double(k - 2) / double(k - 1), expo));
}

}  // namespace exclusion
