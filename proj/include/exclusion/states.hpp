#pragma once

#include <vector>

#include "exclusion/cmatrix.hpp"

namespace exclusion {

// Ordered ensemble of k unit vectors in C^d.
struct StateSet {
    int dim = 0;
    std::vector<std::vector<cplx>> states;

    int size() const { return static_cast<int>(states.size()); }
    // Throws InvalidState on shape or normalization violations.
    void validate() const;
    // d x k matrix with the states as columns.
    CMatrix as_columns() const;
};

// Gram matrix of pairwise inner products: Hermitian, PSD, unit diagonal.
struct Gram {
    CMatrix m;

    int size() const { return m.rows(); }
    void validate() const;
};

struct CopySpec {
    int n = 1;
};

Gram gram_of(const StateSet& set);

// Entrywise N-th power: the Gram matrix of the N-copy ensemble without
// materializing d^N-dimensional tensors.
Gram hadamard_power(const Gram& g, CopySpec copies);

// max over i != j of |G_ij|; requires k >= 2.
double max_overlap(const Gram& g);

// k states in dimension k whose Gram is (1-gamma) I + gamma J.
StateSet construct_equiangular_real(int k, double gamma);

// Three qubit states with all pairwise squared overlaps equal to
// cos^2(theta/2); theta in [0, 2*pi/3].
StateSet construct_qubit_family(double theta);

// Equiangular real set with gamma = (1 + ((k-2)/(k-1))^(1/N)) / 2; not
// antidistinguishable for any copy count up to N.
StateSet construct_theorem3(int k, int n_copies);

// Equiangular real set with gamma = ((k-2)/(k-1))^((2N+1)/(2N(N+1)));
// becomes antidistinguishable at exactly N+1 copies.
StateSet construct_theorem4(int k, int n_copies);

}  // namespace exclusion
