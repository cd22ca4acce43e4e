#include "apl/cocycle.hpp"

#include <algorithm>
#include <thread>

#include "apl/error.hpp"

namespace apl {

namespace {

using Index = std::size_t;

Vector basis_product(const Algebra& a, const Vector& x, Index k) {
  return multiply(a, x, unit_vector(a.field(), a.dim(), k));
}

Vector product_basis(const Algebra& a, Index i, const Vector& y) {
  return multiply(a, unit_vector(a.field(), a.dim(), i), y);
}

// Residuals of the linear conditions iii and iv at (i, j, k).
Vector condition_iii(const Algebra& c, const Algebra& f, Index i, Index j, Index k) {
  // x∘φ(y,z) + φ(x,y∘z) − y∘φ(x,z) − φ(y,x∘z)
  //   − [φ(y,x)∘z − φ(x,y)∘z + φ(y∘x,z) − φ(x∘y,z)]
  return product_basis(c, i, f.product(j, k)) + product_basis(f, i, c.product(j, k)) -
         product_basis(c, j, f.product(i, k)) - product_basis(f, j, c.product(i, k)) -
         basis_product(c, f.product(j, i), k) + basis_product(c, f.product(i, j), k) -
         basis_product(f, c.product(j, i), k) + basis_product(f, c.product(i, j), k);
}

Vector condition_iv(const Algebra& c, const Algebra& f, Index i, Index j, Index k) {
  auto h = [&](Index x, Index y, Index z) {
    return basis_product(c, f.product(x, y), z) - basis_product(c, f.product(y, x), z) +
           basis_product(f, c.product(x, y), z) - basis_product(f, c.product(y, x), z);
  };
  return h(i, j, k) + h(j, k, i) + h(k, i, j);
}

Vector condition_i(const Algebra& f, Index i, Index j, Index k) {
  // φ(x,φ(y,z)) − φ(y,φ(x,z)) − φ(φ(y,x),z) + φ(φ(x,y),z)
  return product_basis(f, i, f.product(j, k)) - product_basis(f, j, f.product(i, k)) -
         basis_product(f, f.product(j, i), k) + basis_product(f, f.product(i, j), k);
}

Vector condition_ii(const Algebra& f, Index i, Index j, Index k) {
  auto g = [&](Index x, Index y, Index z) {
    return basis_product(f, f.product(x, y), z) - basis_product(f, f.product(y, x), z);
  };
  return g(i, j, k) + g(j, k, i) + g(k, i, j);
}

// Integer kernel for the exhaustive search. All arithmetic is in int64 and
// reduced modulo p only when testing for zero.
class step1_kernel {
 public:
  step1_kernel(std::size_t n, std::uint32_t p, std::vector<std::int64_t> base)
      : n_(n), p_(p), c_(std::move(base)), n3_(n * n * n) {
    ll_.resize(n3_ * n);
    rr_.resize(n3_ * n);
    cl_.resize(n3_ * n);
    fl_.resize(n3_ * n);
    fr_.resize(n3_ * n);
    cr_.resize(n3_ * n);
  }

  bool accept(const std::int64_t* f) {
    const Index n = n_;
    auto at = [n](const std::vector<std::int64_t>& t, Index i, Index j, Index k) -> const std::int64_t* {
      return &t[((i * n + j) * n + k) * n];
    };
    auto sc = [n](const std::int64_t* t, Index i, Index j, Index k) { return t[(i * n + j) * n + k]; };
    const std::int64_t* c = c_.data();

    // Linear data first: most candidates fail iii or iv.
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          std::int64_t* a = &cl_[((i * n + j) * n + k) * n];  // e_i∘φ(e_j,e_k)
          std::int64_t* b = &fl_[((i * n + j) * n + k) * n];  // φ(e_i, e_j∘e_k)
          std::int64_t* d = &fr_[((i * n + j) * n + k) * n];  // φ(e_i,e_j)∘e_k
          std::int64_t* e = &cr_[((i * n + j) * n + k) * n];  // φ(e_i∘e_j, e_k)
          for (Index o = 0; o < n; ++o) {
            std::int64_t sa = 0, sb = 0, sd = 0, se = 0;
            for (Index m = 0; m < n; ++m) {
              sa += sc(f, j, k, m) * sc(c, i, m, o);
              sb += sc(c, j, k, m) * sc(f, i, m, o);
              sd += sc(f, i, j, m) * sc(c, m, k, o);
              se += sc(c, i, j, m) * sc(f, m, k, o);
            }
            a[o] = sa;
            b[o] = sb;
            d[o] = sd;
            e[o] = se;
          }
        }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          for (Index o = 0; o < n; ++o) {
            std::int64_t iii = at(cl_, i, j, k)[o] + at(fl_, i, j, k)[o] - at(cl_, j, i, k)[o] -
                               at(fl_, j, i, k)[o] - at(fr_, j, i, k)[o] + at(fr_, i, j, k)[o] -
                               at(cr_, j, i, k)[o] + at(cr_, i, j, k)[o];
            if (iii % p_ != 0) return false;
            auto h = [&](Index x, Index y, Index z) {
              return at(fr_, x, y, z)[o] - at(fr_, y, x, z)[o] + at(cr_, x, y, z)[o] - at(cr_, y, x, z)[o];
            };
            if ((h(i, j, k) + h(j, k, i) + h(k, i, j)) % p_ != 0) return false;
          }

    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          std::int64_t* a = &ll_[((i * n + j) * n + k) * n];  // φ(e_i, φ(e_j,e_k))
          std::int64_t* b = &rr_[((i * n + j) * n + k) * n];  // φ(φ(e_i,e_j), e_k)
          for (Index o = 0; o < n; ++o) {
            std::int64_t sa = 0, sb = 0;
            for (Index m = 0; m < n; ++m) {
              sa += sc(f, j, k, m) * sc(f, i, m, o);
              sb += sc(f, i, j, m) * sc(f, m, k, o);
            }
            a[o] = sa;
            b[o] = sb;
          }
        }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          for (Index o = 0; o < n; ++o) {
            std::int64_t c1 = at(ll_, i, j, k)[o] - at(ll_, j, i, k)[o] - at(rr_, j, i, k)[o] + at(rr_, i, j, k)[o];
            if (c1 % p_ != 0) return false;
            auto g = [&](Index x, Index y, Index z) { return at(rr_, x, y, z)[o] - at(rr_, y, x, z)[o]; };
            if ((g(i, j, k) + g(j, k, i) + g(k, i, j)) % p_ != 0) return false;
          }
    return true;
  }

 private:
  std::size_t n_;
  std::int64_t p_;
  std::vector<std::int64_t> c_;
  std::size_t n3_;
  std::vector<std::int64_t> ll_, rr_, cl_, fl_, fr_, cr_;
};

}  // namespace

Deformation::Deformation(Algebra b, Algebra f) : base(std::move(b)), phi(std::move(f)) {
  if (base.dim() != phi.dim()) throw shape_mismatch("deformation and base have different dimensions");
  if (base.field() != phi.field())
    throw field_mismatch("deformation over " + phi.field().to_string() + ", base over " + base.field().to_string());
}

CheckReport check_step1_conditions(const Deformation& d) {
  const Index n = d.base.dim();
  CheckReport report;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        report.expect_zero("step1_i", {i, j, k}, condition_i(d.phi, i, j, k));
        report.expect_zero("step1_ii", {i, j, k}, condition_ii(d.phi, i, j, k));
        report.expect_zero("step1_iii", {i, j, k}, condition_iii(d.base, d.phi, i, j, k));
        report.expect_zero("step1_iv", {i, j, k}, condition_iv(d.base, d.phi, i, j, k));
      }
  return report;
}

std::vector<Vector> linear_space(const Algebra& base) {
  const Index n = base.dim();
  const Field& f = base.field();
  if (!f.is_field()) throw field_mismatch("linear_space requires Q or GF(p)");
  const Index unknowns = n * n * n;
  const Index equations = 2 * unknowns * n;
  Matrix system(f, equations, unknowns);
  // Conditions iii-iv are linear in phi: column u is the residual of the unit table.
  for (Index u = 0; u < unknowns; ++u) {
    Algebra unit(f, n, base.basis());
    unit.set(u / (n * n), (u / n) % n, u % n, f.one());
    Index row = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          for (const Vector& r : {condition_iii(base, unit, i, j, k), condition_iv(base, unit, i, j, k)})
            for (const Scalar& x : r) system(row++, u) = x;
        }
  }
  return nullspace(system);
}

bool in_span(const std::vector<Vector>& basis, const Algebra& phi) {
  const Index unknowns = phi.table().size();
  std::vector<Vector> cols = basis;
  const Index r = basis.empty() ? 0 : rank(Matrix::from_columns(phi.field(), unknowns, cols));
  cols.push_back(phi.table());
  return rank(Matrix::from_columns(phi.field(), unknowns, cols)) == r;
}

CheckReport verify_family_membership(const Algebra& base, const Algebra& family) {
  return check_step1_conditions(Deformation(base, family));
}

Deformation transform_deformation(const Deformation& d, const LinearMap& theta) {
  if (!theta.is_square() || determinant(theta).is_zero()) throw not_invertible("basis change is singular");
  if (!check_automorphism(d.base, theta).passed())
    throw precondition_failed("automorphism", "basis change does not preserve the base product");
  return Deformation(d.base, transform(d.phi, theta));
}

// ---------------------------------------------------------------- brute force

bool BruteForceResult::contains(const std::vector<std::uint32_t>& table) const {
  return std::binary_search(solutions.begin(), solutions.end(), table);
}

Algebra BruteForceResult::solution(std::size_t index) const {
  Field f = Field::prime(prime);
  Algebra a(f, dim);
  const auto& t = solutions.at(index);
  for (Index u = 0; u < t.size(); ++u) a.set(u / (dim * dim), (u / dim) % dim, u % dim, f.from_int(t[u]));
  return a;
}

std::vector<std::uint32_t> residues(const Algebra& a) {
  if (!a.field().is_prime()) throw field_mismatch("residue table needs an algebra over GF(p)");
  std::vector<std::uint32_t> out;
  out.reserve(a.table().size());
  for (const Scalar& s : a.table()) out.push_back(*s.residue());
  return out;
}

BruteForceResult brute_force_Z2(const Algebra& base, const BruteForceOptions& options) {
  if (!base.field().is_prime()) throw field_mismatch("brute force requires an algebra over GF(p)");
  const std::uint32_t p = base.field().characteristic();
  const Index n = base.dim();
  const Index digits = n * n * n;
  std::uint64_t total = 1;
  for (Index d = 0; d < digits; ++d) {
    if (total > options.budget / p) {
      throw budget_exceeded(std::to_string(p) + "^" + std::to_string(digits) + " candidates exceed the budget of " +
                            std::to_string(options.budget));
    }
    total *= p;
  }
  if (total > options.budget)
    throw budget_exceeded(std::to_string(total) + " candidates exceed the budget of " + std::to_string(options.budget));

  std::vector<std::int64_t> c;
  for (std::uint32_t r : residues(base)) c.push_back(r);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(total)));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::vector<std::vector<std::uint32_t>>> found(workers);

  auto run = [&](unsigned w) {
    std::uint64_t start = w * chunk;
    std::uint64_t stop = std::min(total, start + chunk);
    if (start >= stop) return;
    step1_kernel kernel(n, p, c);
    std::vector<std::int64_t> phi(digits);
    std::uint64_t rest = start;
    for (Index d = digits; d-- > 0;) {
      phi[d] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    for (std::uint64_t idx = start; idx < stop; ++idx) {
      if (kernel.accept(phi.data())) found[w].emplace_back(phi.begin(), phi.end());
      for (Index d = digits; d-- > 0;) {
        if (++phi[d] < static_cast<std::int64_t>(p)) break;
        phi[d] = 0;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  BruteForceResult result;
  result.prime = p;
  result.dim = n;
  result.candidates = total;
  for (auto& part : found)
    for (auto& s : part) result.solutions.push_back(std::move(s));
  return result;
}

}  // namespace apl
