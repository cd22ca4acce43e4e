#include "apl/forms.hpp"

#include <tuple>

#include "apl/error.hpp"

namespace apl {

namespace {

using Index = std::size_t;

void require_dim(const BilinearForm& b, std::size_t n) {
  if (b.dim() != n)
    throw shape_mismatch("form of dimension " + std::to_string(b.dim()) + " on algebra of dimension " +
                         std::to_string(n));
}

Vector as_vector(const Scalar& s) { return Vector{s}; }

}  // namespace

BilinearForm::BilinearForm(Matrix g) : gram(std::move(g)) {
  if (!gram.is_square()) throw shape_mismatch("gram array must be square");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Vector gy = gram.apply(y);
  Scalar total = field().zero();
  for (Index i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) total += x[i] * gy[i];
  return total;
}

CheckReport check_form(const BilinearForm& b, FormProperty property) {
  CheckReport report;
  const Index n = b.dim();
  if (property == FormProperty::symmetric) {
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        report.expect_zero("symmetric", {i, j}, as_vector(b.gram(i, j) - b.gram(j, i)));
  } else {
    if (determinant(b.gram).is_zero()) report.fail("nondegenerate", "gram determinant is zero");
  }
  return report;
}

CheckReport check_comm_2cocycle(const BilinearForm& b, const AlgebraPair& g) {
  require_dim(b, g.dim());
  CheckReport report = check_form(b, FormProperty::symmetric);
  const Index n = g.dim();
  const Field& f = g.field();
  int which = 1;
  for (const Algebra* br : {&g.circ, &g.star}) {
    std::string name = "cocycle_" + std::to_string(which++);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          Scalar s = b(br->product(i, j), unit_vector(f, n, k)) + b(br->product(j, k), unit_vector(f, n, i)) +
                     b(br->product(k, i), unit_vector(f, n, j));
          report.expect_zero(name, {i, j, k}, as_vector(s));
        }
  }
  return report;
}

CheckReport check_invariant(const BilinearForm& b, const AlgebraPair& p) {
  require_dim(b, p.dim());
  const Index n = p.dim();
  const Field& f = p.field();
  AlgebraPair g = commutator_pair(p);
  CheckReport report;
  for (auto [prod, br, name] : {std::tuple{&p.circ, &g.circ, "invariant_circ"},
                                std::tuple{&p.star, &g.star, "invariant_star"}})
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          Scalar s = b(prod->product(i, j), unit_vector(f, n, k)) - b(unit_vector(f, n, j), br->product(i, k));
          report.expect_zero(name, {i, j, k}, as_vector(s));
        }
  return report;
}

AlgebraPair induce_from_cocycle(const BilinearForm& b, const AlgebraPair& g) {
  require_dim(b, g.dim());
  if (!check_form(b, FormProperty::symmetric).passed())
    throw precondition_failed("symmetric", "form is not symmetric");
  if (!check_form(b, FormProperty::nondegenerate).passed())
    throw precondition_failed("nondegenerate", "form is degenerate");
  if (!check_comm_2cocycle(b, g).passed())
    throw precondition_failed("cocycle", "form is not a commutative 2-cocycle");
  const Index n = g.dim();
  const Field& f = g.field();
  Algebra circ(f, n, g.circ.basis()), star(f, n, g.circ.basis());
  for (auto [br, out] : {std::pair{&g.circ, &circ}, std::pair{&g.star, &star}})
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        // gram * (e_i e_j) = w with w_k = B(e_j, [e_i, e_k])
        Vector w = zero_vector(f, n);
        for (Index k = 0; k < n; ++k) w[k] = b(unit_vector(f, n, j), br->product(i, k));
        auto c = solve(b.gram, w);
        if (!c) throw not_invertible("gram system has no solution");
        out->set_product(i, j, *c);
      }
  return AlgebraPair(std::move(circ), std::move(star));
}

BilinearForm pairing_form(const Field& field, std::size_t n) {
  if (n == 0) throw shape_mismatch("pairing form needs n >= 1");
  Matrix g(field, 2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    g(i, n + i) = field.one();
    g(n + i, i) = field.one();
  }
  return BilinearForm(std::move(g));
}

AlgebraPair construct_from_vectors(const BilinearForm& b, const Vector& s1, const Vector& s2) {
  if (!check_form(b, FormProperty::symmetric).passed())
    throw precondition_failed("symmetric", "form is not symmetric");
  const Index n = b.dim();
  if (s1.size() != n || s2.size() != n) throw shape_mismatch("vector length does not match form dimension");
  const Field& f = b.field();
  Algebra circ(f, n), star(f, n);
  for (auto [s, out] : {std::pair{&s1, &circ}, std::pair{&s2, &star}})
    for (Index i = 0; i < n; ++i) {
      Vector x = unit_vector(f, n, i);
      Scalar bxs = b(x, *s);
      for (Index j = 0; j < n; ++j) {
        Vector y = unit_vector(f, n, j);
        out->set_product(i, j, scaled(*s, b(x, y)) - scaled(y, bxs));
      }
    }
  return AlgebraPair(std::move(circ), std::move(star));
}

std::vector<BilinearForm> invariant_forms(const AlgebraPair& p) {
  const Index n = p.dim();
  const Field& f = p.field();
  // Unknowns: the upper triangle g(a, b), a <= b.
  std::vector<std::pair<Index, Index>> slots;
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) slots.emplace_back(a, b);
  auto slot = [&](Index a, Index b) {
    if (a > b) std::swap(a, b);
    for (Index s = 0; s < slots.size(); ++s)
      if (slots[s] == std::pair{a, b}) return s;
    return slots.size();
  };
  AlgebraPair g = commutator_pair(p);
  std::vector<Vector> rows;
  for (auto [prod, br] : {std::pair{&p.circ, &g.circ}, std::pair{&p.star, &g.star}})
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          // sum_l prod(i,j,l) G(l,k) - sum_l br(i,k,l) G(j,l) = 0
          Vector row = zero_vector(f, slots.size());
          for (Index l = 0; l < n; ++l) {
            row[slot(l, k)] += (*prod)(i, j, l);
            row[slot(j, l)] -= (*br)(i, k, l);
          }
          rows.push_back(std::move(row));
        }
  std::vector<BilinearForm> out;
  if (rows.empty()) return out;
  Matrix system(f, rows.size(), slots.size());
  for (Index r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < slots.size(); ++c) system(r, c) = rows[r][c];
  for (const Vector& v : nullspace(system)) {
    Matrix gram(f, n, n);
    for (Index s = 0; s < slots.size(); ++s) {
      gram(slots[s].first, slots[s].second) = v[s];
      gram(slots[s].second, slots[s].first) = v[s];
    }
    out.emplace_back(std::move(gram));
  }
  return out;
}

}  // namespace apl
