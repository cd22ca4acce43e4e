#pragma once

// Representation pairs (rho, mu) of a compatible Lie algebra on a space V.

#include <cstddef>
#include <vector>

#include "apl/algebra.hpp"

namespace apl {

struct RepresentationPair {
  RepresentationPair() = default;
  /// Throws shape_mismatch unless there is one v_dim x v_dim matrix per basis
  /// element of g in each of rho and mu, all over g's field.
  RepresentationPair(AlgebraPair g, std::size_t v_dim, std::vector<Matrix> rho, std::vector<Matrix> mu);

  const Field& field() const noexcept { return g.field(); }

  AlgebraPair g;  // the bracket pair
  std::size_t v_dim = 0;
  std::vector<Matrix> rho;
  std::vector<Matrix> mu;

  friend bool operator==(const RepresentationPair& lhs, const RepresentationPair& rhs) {
    return lhs.g == rhs.g && lhs.v_dim == rhs.v_dim && lhs.rho == rhs.rho && lhs.mu == rhs.mu;
  }
};

/// sum_i x_i maps[i]
Matrix act(const std::vector<Matrix>& maps, const Vector& x);
/// Matrix of v -> e_i v.
Matrix left_multiplication(const Algebra& a, std::size_t i);

/// The three equations rho([x,y]_1) = [rho x, rho y], mu([x,y]_2) = [mu x, mu y]
/// and rho([x,y]_2) + mu([x,y]_1) = [rho x, mu y] + [mu x, rho y] on all basis
/// pairs ("representation_1", "representation_2", "representation_mixed").
/// Non-antisymmetric members of g are reported as failures.
CheckReport check_representation_pair(const RepresentationPair& r);

/// (-L_circ, -L_star) on the commutator pair of p.
RepresentationPair left_multiplication_pair(const AlgebraPair& p);
/// (ad_1, ad_2) on V = g.
RepresentationPair adjoint_pair(const AlgebraPair& brackets);
/// Negated transposes.
RepresentationPair dual_pair(const RepresentationPair& r);
/// Brackets on g + V, basis ordered g first then V. Throws
/// precondition_failed("representation") when the pair is not a representation.
AlgebraPair semidirect_product(const RepresentationPair& r);
/// phi invertible and phi rho1(x) = rho2(x) phi, phi mu1(x) = mu2(x) phi.
CheckReport check_equivalence(const RepresentationPair& r1, const RepresentationPair& r2, const Matrix& phi);

}  // namespace apl
