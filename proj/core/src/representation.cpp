#include "apl/representation.hpp"

#include "apl/error.hpp"

namespace apl {

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

void validate_maps(const std::vector<Matrix>& maps, std::size_t count, std::size_t v_dim, const Field& field,
                   const char* name) {
  if (maps.size() != count)
    throw shape_mismatch(std::string(name) + " has " + std::to_string(maps.size()) + " matrices, expected " +
                         std::to_string(count));
  for (const auto& m : maps) {
    if (m.rows() != v_dim || m.cols() != v_dim)
      throw shape_mismatch(std::string(name) + " matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " + std::to_string(v_dim) + "x" +
                           std::to_string(v_dim));
    if (m.field() != field) throw field_mismatch(std::string(name) + " matrix over " + m.field().to_string());
  }
}

Matrix adjoint(const Algebra& bracket, std::size_t i) { return left_multiplication(bracket, i); }

}  // namespace

RepresentationPair::RepresentationPair(AlgebraPair g_, std::size_t v_dim_, std::vector<Matrix> rho_,
                                       std::vector<Matrix> mu_)
    : g(std::move(g_)), v_dim(v_dim_), rho(std::move(rho_)), mu(std::move(mu_)) {
  validate_maps(rho, g.dim(), v_dim, g.field(), "rho");
  validate_maps(mu, g.dim(), v_dim, g.field(), "mu");
}

Matrix act(const std::vector<Matrix>& maps, const Vector& x) {
  if (maps.size() != x.size()) throw shape_mismatch("coefficient vector does not match the number of maps");
  if (maps.empty()) throw shape_mismatch("no maps to combine");
  Matrix out(maps.front().field(), maps.front().rows(), maps.front().cols());
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!x[i].is_zero()) out = out + maps[i].scaled(x[i]);
  return out;
}

Matrix left_multiplication(const Algebra& a, std::size_t i) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = a(i, j, k);
  return m;
}

CheckReport check_representation_pair(const RepresentationPair& r) {
  validate_maps(r.rho, r.g.dim(), r.v_dim, r.field(), "rho");
  validate_maps(r.mu, r.g.dim(), r.v_dim, r.field(), "mu");
  CheckReport report;
  report.merge(check_identity(r.g.circ, Identity::antisymmetric), "_1");
  report.merge(check_identity(r.g.star, Identity::antisymmetric), "_2");
  const std::size_t n = r.g.dim();
  if (n == 0 || r.v_dim == 0) return report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector b1 = r.g.circ.product(i, j);
      Vector b2 = r.g.star.product(i, j);
      Matrix e1 = act(r.rho, b1) - commutator(r.rho[i], r.rho[j]);
      report.expect_zero("representation_1", {i, j}, e1.entries());
      Matrix e2 = act(r.mu, b2) - commutator(r.mu[i], r.mu[j]);
      report.expect_zero("representation_2", {i, j}, e2.entries());
      // rho(x)mu(y) - rho(y)mu(x) + mu(x)rho(y) - mu(y)rho(x)
      Matrix rhs = r.rho[i] * r.mu[j] - r.rho[j] * r.mu[i] + r.mu[i] * r.rho[j] - r.mu[j] * r.rho[i];
      Matrix e3 = act(r.rho, b2) + act(r.mu, b1) - rhs;
      report.expect_zero("representation_mixed", {i, j}, e3.entries());
    }
  return report;
}

RepresentationPair left_multiplication_pair(const AlgebraPair& p) {
  std::vector<Matrix> rho, mu;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    rho.push_back(-left_multiplication(p.circ, i));
    mu.push_back(-left_multiplication(p.star, i));
  }
  return RepresentationPair(commutator_pair(p), p.dim(), std::move(rho), std::move(mu));
}

RepresentationPair adjoint_pair(const AlgebraPair& brackets) {
  std::vector<Matrix> rho, mu;
  for (std::size_t i = 0; i < brackets.dim(); ++i) {
    rho.push_back(adjoint(brackets.circ, i));
    mu.push_back(adjoint(brackets.star, i));
  }
  return RepresentationPair(brackets, brackets.dim(), std::move(rho), std::move(mu));
}

RepresentationPair dual_pair(const RepresentationPair& r) {
  std::vector<Matrix> rho, mu;
  for (const auto& m : r.rho) rho.push_back(-m.transpose());
  for (const auto& m : r.mu) mu.push_back(-m.transpose());
  return RepresentationPair(r.g, r.v_dim, std::move(rho), std::move(mu));
}

AlgebraPair semidirect_product(const RepresentationPair& r) {
  CheckReport valid = check_representation_pair(r);
  if (!valid.passed()) throw precondition_failed("representation", "input is not a representation pair");
  const std::size_t n = r.g.dim();
  const std::size_t m = r.v_dim;
  const Field& f = r.field();
  std::vector<std::string> basis = r.g.circ.basis();
  for (std::size_t a = 1; a <= m; ++a) basis.push_back("v" + std::to_string(a));
  Algebra b1(f, n + m, basis), b2(f, n + m, basis);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        b1.set(i, j, k, r.g.circ(i, j, k));
        b2.set(i, j, k, r.g.star(i, j, k));
      }
    // [x, u] = rho(x)u and [u, x] = -rho(x)u
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) {
        b1.set(i, n + a, n + c, r.rho[i](c, a));
        b1.set(n + a, i, n + c, -r.rho[i](c, a));
        b2.set(i, n + a, n + c, r.mu[i](c, a));
        b2.set(n + a, i, n + c, -r.mu[i](c, a));
      }
  }
  return AlgebraPair(std::move(b1), std::move(b2));
}

CheckReport check_equivalence(const RepresentationPair& r1, const RepresentationPair& r2, const Matrix& phi) {
  if (!phi.is_square() || phi.rows() != r1.v_dim || r1.v_dim != r2.v_dim)
    throw shape_mismatch("equivalence map must be square of size dim V");
  if (r1.g.dim() != r2.g.dim()) throw shape_mismatch("representations of algebras of different dimension");
  CheckReport report;
  Scalar det = determinant(phi);
  if (det.is_zero()) report.fail("invertible", "phi has zero determinant");
  for (std::size_t i = 0; i < r1.g.dim(); ++i) {
    report.expect_zero("intertwines_rho", {i}, (phi * r1.rho[i] - r2.rho[i] * phi).entries());
    report.expect_zero("intertwines_mu", {i}, (phi * r1.mu[i] - r2.mu[i] * phi).entries());
  }
  return report;
}

}  // namespace apl
