#pragma once

// Bilinear forms: commutative 2-cocycles, invariance, and the compatible
// anti-pre-Lie structures they produce.

#include <vector>

#include "apl/algebra.hpp"

namespace apl {

/// gram(i, j) = B(e_i, e_j).
struct BilinearForm {
  BilinearForm() = default;
  /// Throws shape_mismatch for a non-square gram array.
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const noexcept { return gram.rows(); }
  const Field& field() const noexcept { return gram.field(); }
  Scalar operator()(const Vector& x, const Vector& y) const;

  Matrix gram;

  friend bool operator==(const BilinearForm& lhs, const BilinearForm& rhs) { return lhs.gram == rhs.gram; }
};

enum class FormProperty { symmetric, nondegenerate };

CheckReport check_form(const BilinearForm& b, FormProperty property);

/// B([x,y],z) + B([y,z],x) + B([z,x],y) = 0 for each bracket
/// ("cocycle_1", "cocycle_2"); a non-symmetric B fails "symmetric".
CheckReport check_comm_2cocycle(const BilinearForm& b, const AlgebraPair& brackets);

/// B(x circ y, z) = B(y, [x,z]_1) and B(x star y, z) = B(y, [x,z]_2) with the
/// brackets taken from p ("invariant_circ", "invariant_star").
CheckReport check_invariant(const BilinearForm& b, const AlgebraPair& p);

/// The products determined by B(x circ y, z) = B(y, [x,z]_1) and
/// B(x star y, z) = B(y, [x,z]_2). Throws precondition_failed with check
/// "symmetric", "nondegenerate" or "cocycle".
AlgebraPair induce_from_cocycle(const BilinearForm& b, const AlgebraPair& brackets);

/// Gram (0 I; I 0) on A + A*, primal basis first.
BilinearForm pairing_form(const Field& field, std::size_t n);

/// x circ y = B(x,y)s1 - B(x,s1)y and x star y = B(x,y)s2 - B(x,s2)y.
/// Throws precondition_failed("symmetric").
AlgebraPair construct_from_vectors(const BilinearForm& b, const Vector& s1, const Vector& s2);

/// Basis of the space of symmetric bilinear forms invariant on p (Q or GF(p)).
std::vector<BilinearForm> invariant_forms(const AlgebraPair& p);

}  // namespace apl
