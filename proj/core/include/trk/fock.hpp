// fock.hpp — Truncated bosonic and two-level operators, tensor-product embedding

#pragma once

#include "trk/linalg.hpp"

#include <vector>

namespace trk {

// Tensor-product space; subsystem ordering is left-to-right as declared, and a
// basis index decodes via mixed-radix digits over subsystem_dims (leftmost
// subsystem most significant).
struct HilbertSpace {
    std::vector<int> subsystem_dims;

    int total_dim() const;
    // Mixed-radix digits of a basis index, one per subsystem.
    std::vector<int> digits(int index) const;
};

HilbertSpace make_space(std::vector<int> dims);

ComplexMatrix identity(int n);

// a[k, k+1] = sqrt(k+1); requires n >= 2.
ComplexMatrix annihilation(int n);

// a^dag a = diag(0..n-1), exact.
ComplexMatrix number_operator(int n);

struct QuadraturePair {
    ComplexMatrix Q; // (a + a^dag)/sqrt(2)
    ComplexMatrix P; // i(a^dag - a)/sqrt(2)
};

QuadraturePair quadratures(int n);

// Basis ordering (ground, excited): sigma_z = diag(-1, +1), sigma_plus |g> = |e>.
enum class Pauli { x, y, z, plus, minus };

ComplexMatrix pauli(Pauli which);

// exp(i pi n_hat) = diag((-1)^k)
ComplexMatrix photon_parity(int n);

// I x ... x op x ... x I with op at the given subsystem position.
ComplexMatrix embed(const ComplexMatrix& op, const HilbertSpace& space, int position);

// Basis indices of `space` whose every digit is < kept_dims[subsystem].
std::vector<int> kept_indices(const HilbertSpace& space, const std::vector<int>& kept_dims);

// Restriction of op to the rows/columns listed by kept_indices.
ComplexMatrix project(const ComplexMatrix& op, const HilbertSpace& space,
                      const std::vector<int>& kept_dims);

} // namespace trk
