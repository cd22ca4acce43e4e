#pragma once

// Anti-O-operators, anti-Rota-Baxter operators and the compatible
// anti-pre-Lie products they induce.
//
// Conditions stated "for all k1, k2" on the pencil are decided coefficient by
// coefficient: two coefficients for the bilinear identities and three
// (k1^2, k1 k2, k2^2) for the cyclic strong conditions.

#include "apl/representation.hpp"

namespace apl {

/// [Tu, Tv]_b = T(rho_b(Tv)u - rho_b(Tu)v) for (bracket_1, rho) and
/// (bracket_2, mu) on all basis pairs of V ("anti_o_1", "anti_o_2").
/// T is n x m for g of dimension n and V of dimension m.
CheckReport check_anti_o(const LinearMap& t, const RepresentationPair& r);

/// Cyclic sum of rho_k([Tu, Tv]_k)w, coefficients "strong_11", "strong_12",
/// "strong_22". Throws precondition_failed("anti_o") when T is not anti-O.
CheckReport check_strong(const LinearMap& t, const RepresentationPair& r);

/// [Rx, Ry]_b = R([Ry, x]_b + [y, Rx]_b) for each bracket ("anti_rb_1",
/// "anti_rb_2"); with `strong` also the cyclic sum of [[Rx, Ry]_k, z]_k
/// ("strong_11", "strong_12", "strong_22").
CheckReport check_anti_rota_baxter(const LinearMap& r, const AlgebraPair& brackets, bool strong);

/// [[Rx, Ry]_k + R([x, Ry]_k + [Rx, y]_k), z]_k = 0 by coefficients
/// ("rb_converse_11", "rb_converse_12", "rb_converse_22").
CheckReport check_rb_converse(const LinearMap& r, const AlgebraPair& brackets);

/// u circ v = -rho(Tu)v, u star v = -mu(Tu)v on V. Throws
/// precondition_failed("anti_o").
AlgebraPair induce_on_domain(const LinearMap& t, const RepresentationPair& r);

struct ImageStructure {
  AlgebraPair pair;   // products on the chosen basis of T(V)
  Matrix embedding;   // n x rank; column a is the a-th image basis vector in g
  std::vector<std::size_t> source_columns;  // columns of T giving that basis
};

/// T(u) circ T(v) = T(u circ v) on the image, basis taken from the first
/// linearly independent columns of T. Throws precondition_failed with check
/// "anti_o", "strong" or "well_defined" (the latter naming a kernel vector).
ImageStructure induce_on_image(const LinearMap& t, const RepresentationPair& r);

/// x circ y = -[Rx, y]_1, x star y = -[Rx, y]_2. Throws
/// precondition_failed("strong_anti_rota_baxter").
AlgebraPair induce_from_rb(const LinearMap& r, const AlgebraPair& brackets);

/// x circ y = -T(rho(x) T^-1 y), x star y = -T(mu(x) T^-1 y) on g. Throws
/// not_invertible for singular T and precondition_failed("anti_o").
AlgebraPair induce_from_invertible(const LinearMap& t, const RepresentationPair& r);

}  // namespace apl
