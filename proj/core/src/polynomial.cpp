#include "apl/polynomial.hpp"

#include <cassert>

namespace apl {

Polynomial Polynomial::constant(std::size_t num_vars, const mpq_class& value) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), value);
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, const mpq_class& coeff) {
  Polynomial p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(std::move(e), 1);
}

bool Polynomial::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

mpq_class Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(num_vars_, 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const mpq_class& coeff) {
  assert(exponents.size() == num_vars_);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial r(num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& factor) const {
  if (factor == 0) return Polynomial(num_vars_);
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c *= factor;
  return r;
}

}  // namespace apl
