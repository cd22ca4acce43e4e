#include "apl/algebra.hpp"

#include <algorithm>

#include "apl/error.hpp"

namespace apl {

namespace {

using Index = std::size_t;

// e_i * v
Vector left(const Algebra& a, Index i, const Vector& v) {
  const Index n = a.dim();
  Vector out = zero_vector(a.field(), n);
  for (Index j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (Index k = 0; k < n; ++k)
      if (!a(i, j, k).is_zero()) out[k] += v[j] * a(i, j, k);
  }
  return out;
}

// v * e_j
Vector right(const Algebra& a, const Vector& v, Index j) {
  const Index n = a.dim();
  Vector out = zero_vector(a.field(), n);
  for (Index i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (Index k = 0; k < n; ++k)
      if (!a(i, j, k).is_zero()) out[k] += v[i] * a(i, j, k);
  }
  return out;
}

Vector bracket(const Algebra& a, Index i, Index j) { return a.product(i, j) - a.product(j, i); }

void require_compatible(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim())
    throw shape_mismatch("dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  if (a.field() != b.field())
    throw field_mismatch("fields " + a.field().to_string() + " and " + b.field().to_string());
  if (a.basis() != b.basis()) throw shape_mismatch("basis names differ");
}

template <typename F>
void for_triples(Index n, F&& f) {
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) f(i, j, k);
}

// Residual of the mixed Jacobi sum for brackets b1, b2 at (i, j, k):
// [[x,y]_1, z]_2 + [[x,y]_2, z]_1 + cyclic.
Vector mixed_jacobi(const Algebra& b1, const Algebra& b2, Index i, Index j, Index k) {
  auto term = [&](Index x, Index y, Index z) {
    return right(b2, b1.product(x, y), z) + right(b1, b2.product(x, y), z);
  };
  return term(i, j, k) + term(j, k, i) + term(k, i, j);
}

}  // namespace

std::vector<std::string> default_basis(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Field field, std::size_t dim, std::vector<std::string> basis)
    : field_(std::move(field)), dim_(dim), basis_(basis.empty() ? default_basis(dim) : std::move(basis)) {
  if (basis_.size() != dim_) throw shape_mismatch("basis has " + std::to_string(basis_.size()) + " names for dim " +
                                                  std::to_string(dim_));
  sc_.assign(dim_ * dim_ * dim_, field_.zero());
}

void Algebra::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw shape_mismatch("structure constant index out of range");
  if (value.field() != field_)
    throw field_mismatch("structure constant over " + value.field().to_string() + " in algebra over " +
                         field_.to_string());
  sc_[(i * dim_ + j) * dim_ + k] = value;
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw shape_mismatch("product vector length mismatch");
  for (std::size_t k = 0; k < dim_; ++k) set(i, j, k, value[k]);
}

Vector Algebra::product(std::size_t i, std::size_t j) const {
  auto first = sc_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

bool Algebra::is_zero() const { return apl::is_zero(sc_); }

bool operator==(const Algebra& lhs, const Algebra& rhs) {
  return lhs.dim_ == rhs.dim_ && lhs.field_ == rhs.field_ && lhs.basis_ == rhs.basis_ && lhs.sc_ == rhs.sc_;
}

AlgebraPair::AlgebraPair(Algebra c, Algebra s) : circ(std::move(c)), star(std::move(s)) {
  require_compatible(circ, star);
}

// ---------------------------------------------------------------- constructions

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) {
  const Index n = a.dim();
  if (x.size() != n || y.size() != n) throw shape_mismatch("operand length does not match algebra dimension");
  for (const auto* v : {&x, &y})
    for (const auto& c : *v)
      if (c.field() != a.field()) throw field_mismatch("operand over " + c.field().to_string());
  Vector out = zero_vector(a.field(), n);
  for (Index i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (Index k = 0; k < n; ++k)
        if (!a(i, j, k).is_zero()) out[k] += xy * a(i, j, k);
    }
  }
  return out;
}

Algebra commutator(const Algebra& a) {
  Algebra out(a.field(), a.dim(), a.basis());
  for_triples(a.dim(), [&](Index i, Index j, Index k) { out.set(i, j, k, a(i, j, k) - a(j, i, k)); });
  return out;
}

AlgebraPair commutator_pair(const AlgebraPair& p) { return AlgebraPair(commutator(p.circ), commutator(p.star)); }

Algebra combine(const Algebra& a, const Scalar& k1, const Algebra& b, const Scalar& k2) {
  require_compatible(a, b);
  if (k1.field() != a.field() || k2.field() != a.field())
    throw field_mismatch("pencil coefficients must lie in " + a.field().to_string());
  Algebra out(a.field(), a.dim(), a.basis());
  for_triples(a.dim(), [&](Index i, Index j, Index k) { out.set(i, j, k, k1 * a(i, j, k) + k2 * b(i, j, k)); });
  return out;
}

Algebra pencil(const AlgebraPair& p, const Scalar& k1, const Scalar& k2) { return combine(p.circ, k1, p.star, k2); }

Algebra convert(const Algebra& a, const Field& target) {
  Algebra out(target, a.dim(), a.basis());
  for_triples(a.dim(), [&](Index i, Index j, Index k) { out.set(i, j, k, convert(a(i, j, k), target)); });
  return out;
}

AlgebraPair convert(const AlgebraPair& p, const Field& target) {
  return AlgebraPair(convert(p.circ, target), convert(p.star, target));
}

Algebra evaluate(const Algebra& a, const Assignment& assignment, const Field& target) {
  Algebra out(target, a.dim(), a.basis());
  for_triples(a.dim(), [&](Index i, Index j, Index k) { out.set(i, j, k, evaluate(a(i, j, k), assignment, target)); });
  return out;
}

AlgebraPair evaluate(const AlgebraPair& p, const Assignment& assignment, const Field& target) {
  return AlgebraPair(evaluate(p.circ, assignment, target), evaluate(p.star, assignment, target));
}

Algebra substitute(const Algebra& a, const Substitution& replacements) {
  Algebra out(a.field(), a.dim(), a.basis());
  for_triples(a.dim(), [&](Index i, Index j, Index k) { out.set(i, j, k, substitute(a(i, j, k), replacements)); });
  return out;
}

AlgebraPair substitute(const AlgebraPair& p, const Substitution& replacements) {
  return AlgebraPair(substitute(p.circ, replacements), substitute(p.star, replacements));
}

CheckReport check_automorphism(const Algebra& a, const LinearMap& theta) {
  const Index n = a.dim();
  if (theta.rows() != n || theta.cols() != n) throw shape_mismatch("automorphism must be square of algebra size");
  CheckReport report;
  if (determinant(theta).is_zero()) report.fail("invertible", "determinant is zero");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      report.expect_zero("automorphism", {i, j},
                         theta.apply(a.product(i, j)) - multiply(a, theta.column(i), theta.column(j)));
  return report;
}

Algebra transform(const Algebra& a, const LinearMap& theta) {
  const Index n = a.dim();
  if (theta.rows() != n || theta.cols() != n) throw shape_mismatch("basis change must be square of algebra size");
  Matrix inv = inverse(theta);
  Algebra out(a.field(), n, a.basis());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out.set_product(i, j, inv.apply(multiply(a, theta.column(i), theta.column(j))));
  return out;
}

AlgebraPair transform(const AlgebraPair& p, const LinearMap& theta) {
  return AlgebraPair(transform(p.circ, theta), transform(p.star, theta));
}

// ---------------------------------------------------------------- identities

const char* to_string(Identity id) {
  switch (id) {
    case Identity::anti_pre_lie:
      return "anti_pre_lie";
    case Identity::pre_lie:
      return "pre_lie";
    case Identity::jacobi:
      return "jacobi";
    case Identity::associative:
      return "associative";
    case Identity::commutative:
      return "commutative";
    case Identity::antisymmetric:
      return "antisymmetric";
  }
  return "?";
}

Identity parse_identity(const std::string& text) {
  std::string key = text;
  std::replace(key.begin(), key.end(), '-', '_');
  for (auto id : {Identity::anti_pre_lie, Identity::pre_lie, Identity::jacobi, Identity::associative,
                  Identity::commutative, Identity::antisymmetric})
    if (key == to_string(id)) return id;
  throw unknown_name("unknown identity '" + text + "'");
}

CheckReport check_identity(const Algebra& a, Identity id) {
  const Index n = a.dim();
  CheckReport report;
  switch (id) {
    case Identity::anti_pre_lie:
      for_triples(n, [&](Index i, Index j, Index k) {
        // x(yz) - y(xz) - [y,x]z
        Vector r1 = left(a, i, a.product(j, k)) - left(a, j, a.product(i, k)) - right(a, bracket(a, j, i), k);
        report.expect_zero("anti_pre_lie_1", {i, j, k}, std::move(r1));
        // [x,y]z + [y,z]x + [z,x]y
        Vector r2 = right(a, bracket(a, i, j), k) + right(a, bracket(a, j, k), i) + right(a, bracket(a, k, i), j);
        report.expect_zero("anti_pre_lie_2", {i, j, k}, std::move(r2));
      });
      break;
    case Identity::pre_lie:
      for_triples(n, [&](Index i, Index j, Index k) {
        // (xy)z - x(yz) - (yx)z + y(xz)
        Vector r = right(a, a.product(i, j), k) - left(a, i, a.product(j, k)) - right(a, a.product(j, i), k) +
                   left(a, j, a.product(i, k));
        report.expect_zero("pre_lie", {i, j, k}, std::move(r));
      });
      break;
    case Identity::jacobi:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          report.expect_zero("antisymmetric", {i, j}, a.product(i, j) + a.product(j, i));
      for_triples(n, [&](Index i, Index j, Index k) {
        Vector r = right(a, a.product(i, j), k) + right(a, a.product(j, k), i) + right(a, a.product(k, i), j);
        report.expect_zero("jacobi", {i, j, k}, std::move(r));
      });
      break;
    case Identity::associative:
      for_triples(n, [&](Index i, Index j, Index k) {
        report.expect_zero("associative", {i, j, k}, right(a, a.product(i, j), k) - left(a, i, a.product(j, k)));
      });
      break;
    case Identity::commutative:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) report.expect_zero("commutative", {i, j}, a.product(i, j) - a.product(j, i));
      break;
    case Identity::antisymmetric:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          report.expect_zero("antisymmetric", {i, j}, a.product(i, j) + a.product(j, i));
      break;
  }
  return report;
}

CheckReport check_compatible_pair(const AlgebraPair& p) {
  require_compatible(p.circ, p.star);
  const Algebra& c = p.circ;
  const Algebra& s = p.star;
  CheckReport report;
  report.merge(check_identity(c, Identity::anti_pre_lie), "_circ");
  report.merge(check_identity(s, Identity::anti_pre_lie), "_star");
  for_triples(c.dim(), [&](Index i, Index j, Index k) {
    // x∘(y∗z) + x∗(y∘z) − y∘(x∗z) − y∗(x∘z) − [y,x]₂∘z − [y,x]₁∗z
    Vector r1 = left(c, i, s.product(j, k)) + left(s, i, c.product(j, k)) - left(c, j, s.product(i, k)) -
                left(s, j, c.product(i, k)) - right(c, bracket(s, j, i), k) - right(s, bracket(c, j, i), k);
    report.expect_zero("compatible_1", {i, j, k}, std::move(r1));
    auto term = [&](Index x, Index y, Index z) {
      return right(c, bracket(s, x, y), z) + right(s, bracket(c, x, y), z);
    };
    report.expect_zero("compatible_2", {i, j, k}, term(i, j, k) + term(j, k, i) + term(k, i, j));
  });
  return report;
}

CheckReport check_compatible_lie(const AlgebraPair& brackets) {
  require_compatible(brackets.circ, brackets.star);
  CheckReport report;
  report.merge(check_identity(brackets.circ, Identity::jacobi), "_1");
  report.merge(check_identity(brackets.star, Identity::jacobi), "_2");
  for_triples(brackets.dim(), [&](Index i, Index j, Index k) {
    report.expect_zero("compatible_lie", {i, j, k}, mixed_jacobi(brackets.circ, brackets.star, i, j, k));
  });
  return report;
}

CheckReport check_compatible_associative(const AlgebraPair& p) {
  require_compatible(p.circ, p.star);
  const Algebra& c = p.circ;
  const Algebra& s = p.star;
  CheckReport report;
  for_triples(c.dim(), [&](Index i, Index j, Index k) {
    report.expect_zero("associative_circ", {i, j, k}, right(c, c.product(i, j), k) - left(c, i, c.product(j, k)));
    report.expect_zero("associative_star", {i, j, k}, right(s, s.product(i, j), k) - left(s, i, s.product(j, k)));
    // (x∘y)∗z + (x∗y)∘z − x∘(y∗z) − x∗(y∘z)
    Vector r = right(s, c.product(i, j), k) + right(c, s.product(i, j), k) - left(c, i, s.product(j, k)) -
               left(s, i, c.product(j, k));
    report.expect_zero("compatible_associative", {i, j, k}, std::move(r));
  });
  return report;
}

}  // namespace apl
