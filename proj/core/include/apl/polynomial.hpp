#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace apl {

/// Dense exponent vector; entry i is the exponent of the ring's i-th variable.
using Exponents = std::vector<int>;

/// Sparse Laurent polynomial with rational coefficients over a fixed number of
/// variables. Variable names and the unit subset live in the owning Field;
/// this type only enforces canonical form (no stored zero coefficients).
class Polynomial {
 public:
  using Terms = std::map<Exponents, mpq_class>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const mpq_class& value);
  static Polynomial monomial(Exponents exponents, const mpq_class& coeff);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Coefficient of the monomial with all exponents zero.
  mpq_class constant_term() const;

  /// Adds `coeff * x^exponents`, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const mpq_class& coeff);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const mpq_class& factor) const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  bool operator==(const Polynomial& rhs) const = default;

 private:
  std::size_t num_vars_;
  Terms terms_;
};

}  // namespace apl
