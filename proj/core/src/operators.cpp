#include "apl/operators.hpp"

#include "apl/error.hpp"

namespace apl {

namespace {

using Index = std::size_t;

void require_operator_shape(const LinearMap& t, const RepresentationPair& r) {
  if (t.rows() != r.g.dim() || t.cols() != r.v_dim)
    throw shape_mismatch("operator is " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                         ", expected " + std::to_string(r.g.dim()) + "x" + std::to_string(r.v_dim));
  if (t.field() != r.field()) throw field_mismatch("operator over " + t.field().to_string());
}

void require_endomorphism(const LinearMap& r, const AlgebraPair& g) {
  if (r.rows() != g.dim() || r.cols() != g.dim())
    throw shape_mismatch("operator must be " + std::to_string(g.dim()) + "x" + std::to_string(g.dim()));
  if (r.field() != g.field()) throw field_mismatch("operator over " + r.field().to_string());
}

// Algebra on `dim` basis vectors with e_i e_j = -maps[i] e_j.
Algebra from_negated_actions(const Field& f, const std::vector<std::string>& basis, const std::vector<Matrix>& maps) {
  const Index n = basis.size();
  Algebra a(f, n, basis);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) a.set(i, j, k, -maps[i](k, j));
  return a;
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

}  // namespace

CheckReport check_anti_o(const LinearMap& t, const RepresentationPair& r) {
  require_operator_shape(t, r);
  CheckReport report;
  const Index m = r.v_dim;
  std::vector<Vector> images;
  std::vector<Matrix> rho_t, mu_t;
  for (Index a = 0; a < m; ++a) {
    images.push_back(t.column(a));
    if (r.g.dim() > 0) {
      rho_t.push_back(act(r.rho, images.back()));
      mu_t.push_back(act(r.mu, images.back()));
    }
  }
  if (r.g.dim() == 0) return report;
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      Vector lhs1 = multiply(r.g.circ, images[a], images[b]);
      Vector rhs1 = t.apply(rho_t[b].column(a) - rho_t[a].column(b));
      report.expect_zero("anti_o_1", {a, b}, lhs1 - rhs1);
      Vector lhs2 = multiply(r.g.star, images[a], images[b]);
      Vector rhs2 = t.apply(mu_t[b].column(a) - mu_t[a].column(b));
      report.expect_zero("anti_o_2", {a, b}, lhs2 - rhs2);
    }
  return report;
}

CheckReport check_strong(const LinearMap& t, const RepresentationPair& r) {
  if (!check_anti_o(t, r).passed()) throw precondition_failed("anti_o", "operator is not an anti-O-operator");
  CheckReport report;
  const Index m = r.v_dim;
  if (r.g.dim() == 0) return report;
  // rho(X_b(u, v)) and mu(X_b(u, v)) for X_b(u, v) = [Tu, Tv]_b.
  std::vector<Matrix> rho1(m * m), rho2(m * m), mu1(m * m), mu2(m * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      Vector x1 = multiply(r.g.circ, t.column(a), t.column(b));
      Vector x2 = multiply(r.g.star, t.column(a), t.column(b));
      rho1[a * m + b] = act(r.rho, x1);
      rho2[a * m + b] = act(r.rho, x2);
      mu1[a * m + b] = act(r.mu, x1);
      mu2[a * m + b] = act(r.mu, x2);
    }
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v)
      for (Index w = 0; w < m; ++w) {
        auto cyclic = [&](auto&& term) { return term(u, v, w) + term(v, w, u) + term(w, u, v); };
        Vector c11 = cyclic([&](Index x, Index y, Index z) { return rho1[x * m + y].column(z); });
        Vector c12 = cyclic([&](Index x, Index y, Index z) { return rho2[x * m + y].column(z) + mu1[x * m + y].column(z); });
        Vector c22 = cyclic([&](Index x, Index y, Index z) { return mu2[x * m + y].column(z); });
        report.expect_zero("strong_11", {u, v, w}, std::move(c11));
        report.expect_zero("strong_12", {u, v, w}, std::move(c12));
        report.expect_zero("strong_22", {u, v, w}, std::move(c22));
      }
  return report;
}

CheckReport check_anti_rota_baxter(const LinearMap& r, const AlgebraPair& g, bool strong) {
  require_endomorphism(r, g);
  const Index n = g.dim();
  const Field& f = g.field();
  CheckReport report;
  std::vector<Vector> s1(n * n), s2(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j);
      Vector rx = r.column(i), ry = r.column(j);
      s1[i * n + j] = multiply(g.circ, rx, ry);
      s2[i * n + j] = multiply(g.star, rx, ry);
      Vector rhs1 = r.apply(multiply(g.circ, ry, x) + multiply(g.circ, y, rx));
      Vector rhs2 = r.apply(multiply(g.star, ry, x) + multiply(g.star, y, rx));
      report.expect_zero("anti_rb_1", {i, j}, s1[i * n + j] - rhs1);
      report.expect_zero("anti_rb_2", {i, j}, s2[i * n + j] - rhs2);
    }
  if (!strong) return report;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        auto outer = [&](const Algebra& b, const std::vector<Vector>& s, Index x, Index y, Index z) {
          return multiply(b, s[x * n + y], unit_vector(f, n, z));
        };
        auto cyclic = [&](auto&& term) { return term(i, j, k) + term(j, k, i) + term(k, i, j); };
        report.expect_zero("strong_11", {i, j, k},
                           cyclic([&](Index x, Index y, Index z) { return outer(g.circ, s1, x, y, z); }));
        report.expect_zero("strong_12", {i, j, k}, cyclic([&](Index x, Index y, Index z) {
                             return outer(g.star, s1, x, y, z) + outer(g.circ, s2, x, y, z);
                           }));
        report.expect_zero("strong_22", {i, j, k},
                           cyclic([&](Index x, Index y, Index z) { return outer(g.star, s2, x, y, z); }));
      }
  return report;
}

CheckReport check_rb_converse(const LinearMap& r, const AlgebraPair& g) {
  require_endomorphism(r, g);
  const Index n = g.dim();
  const Field& f = g.field();
  CheckReport report;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j);
      Vector rx = r.column(i), ry = r.column(j);
      auto inner = [&](const Algebra& b) {
        return multiply(b, rx, ry) + r.apply(multiply(b, x, ry) + multiply(b, rx, y));
      };
      Vector c1 = inner(g.circ), c2 = inner(g.star);
      for (Index k = 0; k < n; ++k) {
        Vector z = unit_vector(f, n, k);
        report.expect_zero("rb_converse_11", {i, j, k}, multiply(g.circ, c1, z));
        report.expect_zero("rb_converse_12", {i, j, k}, multiply(g.star, c1, z) + multiply(g.circ, c2, z));
        report.expect_zero("rb_converse_22", {i, j, k}, multiply(g.star, c2, z));
      }
    }
  return report;
}

AlgebraPair induce_on_domain(const LinearMap& t, const RepresentationPair& r) {
  if (!check_anti_o(t, r).passed()) throw precondition_failed("anti_o", "operator is not an anti-O-operator");
  const Index m = r.v_dim;
  const Field& f = r.field();
  std::vector<Matrix> rho_t, mu_t;
  for (Index a = 0; a < m; ++a) {
    Vector ta = t.column(a);
    rho_t.push_back(r.g.dim() ? act(r.rho, ta) : Matrix(f, m, m));
    mu_t.push_back(r.g.dim() ? act(r.mu, ta) : Matrix(f, m, m));
  }
  std::vector<std::string> basis = default_basis(m);
  return AlgebraPair(from_negated_actions(f, basis, rho_t), from_negated_actions(f, basis, mu_t));
}

ImageStructure induce_on_image(const LinearMap& t, const RepresentationPair& r) {
  if (!check_strong(t, r).passed()) throw precondition_failed("strong", "anti-O-operator is not strong");
  AlgebraPair domain = induce_on_domain(t, r);
  const Field& f = r.field();
  const Index m = r.v_dim;

  for (const Vector& k : nullspace(t)) {
    for (Index j = 0; j < m; ++j) {
      Vector ej = unit_vector(f, m, j);
      for (const Algebra* prod : {&domain.circ, &domain.star}) {
        const char* name = prod == &domain.circ ? "circ" : "star";
        if (!is_zero(t.apply(multiply(*prod, k, ej))) || !is_zero(t.apply(multiply(*prod, ej, k))))
          throw precondition_failed("well_defined", std::string("induced ") + name +
                                                        " product is not well defined on the image: kernel vector " +
                                                        vector_text(k) + " against basis vector " +
                                                        std::to_string(j + 1));
      }
    }
  }

  ImageStructure out;
  out.source_columns = independent_columns(t);
  const Index rank = out.source_columns.size();
  std::vector<Vector> cols;
  for (Index c : out.source_columns) cols.push_back(t.column(c));
  out.embedding = Matrix::from_columns(f, t.rows(), cols);

  std::vector<std::string> basis = default_basis(rank);
  Algebra circ(f, rank, basis), star(f, rank, basis);
  for (Index a = 0; a < rank; ++a)
    for (Index b = 0; b < rank; ++b) {
      Index pa = out.source_columns[a], pb = out.source_columns[b];
      for (auto [src, dst] : {std::pair{&domain.circ, &circ}, std::pair{&domain.star, &star}}) {
        Vector image = t.apply(src->product(pa, pb));
        auto coords = solve(out.embedding, image);
        if (!coords) throw precondition_failed("well_defined", "product leaves the image");
        dst->set_product(a, b, *coords);
      }
    }
  out.pair = AlgebraPair(std::move(circ), std::move(star));
  return out;
}

AlgebraPair induce_from_rb(const LinearMap& r, const AlgebraPair& g) {
  if (!check_anti_rota_baxter(r, g, true).passed())
    throw precondition_failed("strong_anti_rota_baxter", "operator is not a strong anti-Rota-Baxter operator");
  const Index n = g.dim();
  const Field& f = g.field();
  Algebra circ(f, n, g.circ.basis()), star(f, n, g.circ.basis());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector rx = r.column(i), y = unit_vector(f, n, j);
      circ.set_product(i, j, -multiply(g.circ, rx, y));
      star.set_product(i, j, -multiply(g.star, rx, y));
    }
  return AlgebraPair(std::move(circ), std::move(star));
}

AlgebraPair induce_from_invertible(const LinearMap& t, const RepresentationPair& r) {
  require_operator_shape(t, r);
  if (!t.is_square()) throw shape_mismatch("operator must be square");
  Matrix t_inv = inverse(t);
  if (!check_anti_o(t, r).passed()) throw precondition_failed("anti_o", "operator is not an anti-O-operator");
  const Index n = r.g.dim();
  std::vector<Matrix> rho_c, mu_c;
  for (Index i = 0; i < n; ++i) {
    rho_c.push_back(t * r.rho[i] * t_inv);
    mu_c.push_back(t * r.mu[i] * t_inv);
  }
  const auto& basis = r.g.circ.basis();
  return AlgebraPair(from_negated_actions(r.field(), basis, rho_c), from_negated_actions(r.field(), basis, mu_c));
}

}  // namespace apl
