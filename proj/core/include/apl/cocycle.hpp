#pragma once

// Deformations of a fixed product: the four Step-1 conditions, their linear
// part, exhaustive search over GF(p), and the automorphism action.

#include <cstdint>
#include <vector>

#include "apl/algebra.hpp"

namespace apl {

/// A candidate second product phi next to a fixed product `base`.
struct Deformation {
  Deformation() = default;
  /// Throws shape_mismatch / field_mismatch unless base and phi match.
  Deformation(Algebra base, Algebra phi);

  Algebra base;
  Algebra phi;
};

/// Conditions i-iv on all basis triples ("step1_i" .. "step1_iv"). i and ii
/// are the anti-pre-Lie identities of phi, iii and iv the mixed conditions.
CheckReport check_step1_conditions(const Deformation& d);

/// Basis of the solutions of the linear conditions iii-iv in the n^3
/// unknowns phi(i, j, k), flattened in (i, j, k) order. Requires Q or GF(p).
std::vector<Vector> linear_space(const Algebra& base);
/// Whether phi's flattened table lies in the span of `basis`.
bool in_span(const std::vector<Vector>& basis, const Algebra& phi);

/// check_step1_conditions of a parameterized family, exact in its parameters.
CheckReport verify_family_membership(const Algebra& base, const Algebra& family);

/// phi'(x, y) = theta^-1 phi(theta x, theta y). Throws not_invertible for a
/// singular theta and precondition_failed("automorphism") when theta does
/// not preserve the base product.
Deformation transform_deformation(const Deformation& d, const LinearMap& theta);

struct BruteForceOptions {
  std::uint64_t budget = 100'000'000;
  unsigned workers = 1;
};

/// Every phi over GF(p) satisfying conditions i-iv, as residue tables in
/// (i, j, k) order, sorted lexicographically.
struct BruteForceResult {
  std::uint32_t prime = 0;
  std::size_t dim = 0;
  std::uint64_t candidates = 0;
  std::vector<std::vector<std::uint32_t>> solutions;

  bool contains(const std::vector<std::uint32_t>& table) const;
  Algebra solution(std::size_t index) const;
};

/// Residue table of an algebra over GF(p).
std::vector<std::uint32_t> residues(const Algebra& a);

/// Exhaustive enumeration of the p^(n^3) candidates. `base` must be over
/// GF(p). Throws budget_exceeded when p^(n^3) exceeds the budget.
BruteForceResult brute_force_Z2(const Algebra& base, const BruteForceOptions& options = {});

}  // namespace apl
