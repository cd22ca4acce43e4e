#pragma once

// Algebras given by structure constants, and the bilinear identities checked
// on them.

#include <cstddef>
#include <string>
#include <vector>

#include "apl/linalg.hpp"
#include "apl/report.hpp"

namespace apl {

/// Basis names e1..en.
std::vector<std::string> default_basis(std::size_t n);

/// One bilinear product: sc(i, j, k) is the coefficient of e_k in e_i e_j.
class Algebra {
 public:
  Algebra() = default;
  /// The zero product on an n-dimensional space.
  Algebra(Field field, std::size_t dim, std::vector<std::string> basis = {});

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis() const noexcept { return basis_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  /// Sets one structure constant; throws field_mismatch.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  /// Sets e_i e_j to the given vector.
  void set_product(std::size_t i, std::size_t j, const Vector& value);
  /// e_i e_j as a coefficient vector.
  Vector product(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  /// Flat table in (i, j, k) lexicographic order.
  const std::vector<Scalar>& table() const noexcept { return sc_; }

  friend bool operator==(const Algebra& lhs, const Algebra& rhs);
  friend bool operator!=(const Algebra& lhs, const Algebra& rhs) { return !(lhs == rhs); }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::string> basis_;
  std::vector<Scalar> sc_;
};

/// Two products on one space: (A, circ, star). Also used for bracket pairs.
struct AlgebraPair {
  AlgebraPair() = default;
  /// Throws shape_mismatch / field_mismatch unless the members share field,
  /// dimension and basis.
  AlgebraPair(Algebra circ, Algebra star);

  const Field& field() const noexcept { return circ.field(); }
  std::size_t dim() const noexcept { return circ.dim(); }

  Algebra circ;
  Algebra star;

  friend bool operator==(const AlgebraPair& lhs, const AlgebraPair& rhs) {
    return lhs.circ == rhs.circ && lhs.star == rhs.star;
  }
};

/// Bilinear extension of the structure constants.
Vector multiply(const Algebra& a, const Vector& x, const Vector& y);
/// [x, y] = xy - yx as a new (antisymmetric) algebra.
Algebra commutator(const Algebra& a);
/// Both commutators: the bracket pair of a pair of products.
AlgebraPair commutator_pair(const AlgebraPair& p);
/// k1 circ + k2 star.
Algebra pencil(const AlgebraPair& p, const Scalar& k1, const Scalar& k2);
/// Entrywise linear combination k1 a + k2 b.
Algebra combine(const Algebra& a, const Scalar& k1, const Algebra& b, const Scalar& k2);
/// Converts every structure constant into `target`.
Algebra convert(const Algebra& a, const Field& target);
AlgebraPair convert(const AlgebraPair& p, const Field& target);
/// Evaluates every structure constant at a rational assignment.
Algebra evaluate(const Algebra& a, const Assignment& assignment, const Field& target = Field::rationals());
AlgebraPair evaluate(const AlgebraPair& p, const Assignment& assignment, const Field& target = Field::rationals());
/// Replaces variables by scalars of the same ring.
Algebra substitute(const Algebra& a, const Substitution& replacements);
AlgebraPair substitute(const AlgebraPair& p, const Substitution& replacements);

/// theta(xy) = theta(x) theta(y) on all basis pairs ("automorphism"), plus
/// "invertible" when det theta vanishes.
CheckReport check_automorphism(const Algebra& a, const LinearMap& theta);
/// The transported product x . y = theta^-1(theta(x) theta(y)). Throws
/// not_invertible for singular theta.
Algebra transform(const Algebra& a, const LinearMap& theta);
AlgebraPair transform(const AlgebraPair& p, const LinearMap& theta);

enum class Identity { anti_pre_lie, pre_lie, jacobi, associative, commutative, antisymmetric };

const char* to_string(Identity id);
/// Accepts both "anti_pre_lie" and "anti-pre-lie" spellings.
Identity parse_identity(const std::string& text);

/// Evaluates the identity on every basis triple (pairs for commutative and
/// antisymmetric). Witness names: "anti_pre_lie_1", "anti_pre_lie_2",
/// "pre_lie", "jacobi", "associative", "commutative", "antisymmetric".
CheckReport check_identity(const Algebra& a, Identity id);

/// Both members anti-pre-Lie and the two mixed conditions
/// ("compatible_1", "compatible_2") on all basis triples.
CheckReport check_compatible_pair(const AlgebraPair& p);

/// Antisymmetry and Jacobi of each bracket plus the six-term mixed Jacobi
/// condition ("compatible_lie").
CheckReport check_compatible_lie(const AlgebraPair& brackets);

/// Associativity of both members plus the four-term mixed condition
/// ("compatible_associative").
CheckReport check_compatible_associative(const AlgebraPair& p);

}  // namespace apl
