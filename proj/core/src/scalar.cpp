#include "apl/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "apl/error.hpp"

namespace apl {

namespace detail {

struct field_data {
  Field::kind kind = Field::kind::rational;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<bool> unit;

  bool operator==(const field_data& rhs) const {
    return kind == rhs.kind && p == rhs.p && vars == rhs.vars && unit == rhs.unit;
  }
};

}  // namespace detail

namespace {

const std::shared_ptr<const detail::field_data>& rational_data() {
  static const auto data = std::make_shared<const detail::field_data>();
  return data;
}

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(value.get_mpz_t(), p));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) by square-and-multiply; a is nonzero and p prime.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string format_polynomial(const Polynomial& poly, const std::vector<std::string>& vars) {
  if (poly.is_zero()) return "0";
  std::vector<const Polynomial::Terms::value_type*> terms;
  terms.reserve(poly.terms().size());
  for (const auto& t : poly.terms()) terms.push_back(&t);
  auto degree = [](const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
  };
  // Higher total degree first, then lexicographically larger exponent vectors.
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
    long da = degree(a->first), db = degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::string out;
  for (const auto* term : terms) {
    const auto& [exps, coeff] = *term;
    std::string factors;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += vars[i];
      if (exps[i] != 1) factors += '^' + std::to_string(exps[i]);
    }
    std::string text;
    if (factors.empty()) {
      text = coeff.get_str();
    } else if (coeff == 1) {
      text = factors;
    } else if (coeff == -1) {
      text = "-" + factors;
    } else {
      text = coeff.get_str() + "*" + factors;
    }
    if (!out.empty() && text.front() != '-') out += '+';
    out += text;
  }
  return out;
}

// Recursive-descent parser for the coefficient grammar.
class coefficient_parser {
 public:
  coefficient_parser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  Scalar parse() {
    if (skip_ws(), pos_ == text_.size()) fail("empty coefficient");
    Scalar value = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("cannot parse coefficient \"" + std::string(text_) + "\": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expression() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    while (accept('*')) value *= unary();
    return value;
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    int exponent = 0;
    if (accept('(')) {
      exponent = signed_integer();
      if (!accept(')')) fail("expected ')'");
    } else {
      exponent = signed_integer();
    }
    try {
      return base.pow(exponent);
    } catch (const not_invertible&) {
      fail("negative exponent on a non-unit");
    }
  }

  int signed_integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::string digits = read_digits();
    if (digits.empty()) fail("expected integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    int value = std::stoi(digits);
    return negative ? -value : value;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar value = expression();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den(1);
      // `n/d` is a rational literal, not a division operator.
      std::size_t save = pos_;
      if (accept('/')) {
        std::string d = read_digits();
        if (d.empty()) {
          pos_ = save;
          fail("expected denominator after '/'");
        }
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      try {
        return field_.from_rational(q);
      } catch (const not_invertible&) {
        fail("denominator vanishes in " + field_.to_string());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (!field_.variable_index(name)) fail("unknown variable '" + std::string(name) + "'");
      return field_.variable(name);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field() : data_(rational_data()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint32_t p) {
  if (!apl::is_prime(p)) throw parse_error("GF(" + std::to_string(p) + "): modulus is not prime");
  auto data = std::make_shared<detail::field_data>();
  data->kind = kind::prime;
  data->p = p;
  return Field(std::move(data));
}

Field Field::laurent(std::vector<std::string> vars, std::vector<std::string> units) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw parse_error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw parse_error("duplicate variable '" + v + "'");
  }
  auto data = std::make_shared<detail::field_data>();
  data->kind = kind::laurent;
  data->unit.assign(vars.size(), false);
  for (const auto& u : units) {
    auto it = std::find(vars.begin(), vars.end(), u);
    if (it == vars.end()) throw parse_error("unit variable '" + u + "' is not a ring variable");
    data->unit[static_cast<std::size_t>(it - vars.begin())] = true;
  }
  data->vars = std::move(vars);
  return Field(std::move(data));
}

Field::kind Field::field_kind() const noexcept { return data_->kind; }

std::uint32_t Field::characteristic() const noexcept { return data_->p; }

const std::vector<std::string>& Field::variables() const noexcept { return data_->vars; }

std::optional<std::size_t> Field::variable_index(std::string_view name) const {
  const auto& vars = data_->vars;
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars.begin());
}

bool Field::is_unit_variable(std::size_t index) const { return data_->unit.at(index); }

std::vector<std::string> Field::unit_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < data_->vars.size(); ++i)
    if (data_->unit[i]) out.push_back(data_->vars[i]);
  return out;
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  return from_rational(mpq_class(mpz_class(std::to_string(value))));
}

Scalar Field::from_rational(const mpq_class& raw) const {
  mpq_class value = raw;
  value.canonicalize();
  switch (data_->kind) {
    case kind::rational:
      return Scalar(*this, value);
    case kind::prime: {
      std::uint32_t p = data_->p;
      std::uint32_t den = reduce_mod(value.get_den(), p);
      if (den == 0) throw not_invertible("denominator " + value.get_den().get_str() + " vanishes in GF(" +
                                         std::to_string(p) + ")");
      std::uint64_t num = reduce_mod(value.get_num(), p);
      return Scalar(*this, static_cast<std::uint32_t>(num * inverse_mod(den, p) % p));
    }
    case kind::laurent:
      return Scalar(*this, Polynomial::constant(data_->vars.size(), value));
  }
  return Scalar();
}

Scalar Field::variable(std::string_view name) const {
  auto index = variable_index(name);
  if (!index) throw unknown_name("no variable '" + std::string(name) + "' in " + to_string());
  return Scalar(*this, Polynomial::variable(data_->vars.size(), *index));
}

Scalar Field::parse(std::string_view text) const { return coefficient_parser(*this, text).parse(); }

Field Field::extended(const std::vector<std::string>& extra_vars,
                      const std::vector<std::string>& extra_units) const {
  if (is_prime()) throw field_mismatch("cannot adjoin variables to " + to_string());
  std::vector<std::string> vars = data_->vars;
  std::vector<std::string> units = unit_variables();
  vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());
  units.insert(units.end(), extra_units.begin(), extra_units.end());
  return laurent(std::move(vars), std::move(units));
}

std::string Field::to_string() const {
  switch (data_->kind) {
    case kind::rational:
      return "Q";
    case kind::prime:
      return "GF(" + std::to_string(data_->p) + ")";
    case kind::laurent: {
      std::string out = "Q[";
      for (std::size_t i = 0; i < data_->vars.size(); ++i) {
        if (i) out += ',';
        out += data_->vars[i];
        if (data_->unit[i]) out += "^+-1";
      }
      return out + "]";
    }
  }
  return "?";
}

bool operator==(const Field& lhs, const Field& rhs) {
  return lhs.data_ == rhs.data_ || *lhs.data_ == *rhs.data_;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : field_(), value_(mpq_class(0)) {}

Scalar Scalar::make(const Field& field, value_type value) { return Scalar(field, std::move(value)); }

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_)
    throw field_mismatch("field mismatch: " + field_.to_string() + " vs " + rhs.field_.to_string());
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return v.is_zero();
        } else {
          return v == 0;
        }
      },
      value_);
}

bool Scalar::is_one() const { return *this == field_.one(); }

Scalar Scalar::operator-() const {
  return std::visit(
      [this](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          std::uint32_t p = field_.characteristic();
          return make(field_, v == 0 ? 0u : p - v);
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return make(field_, mpq_class(-v));
        } else {
          return make(field_, -v);
        }
      },
      value_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* a = std::get_if<std::uint32_t>(&value_)) {
    std::uint64_t s = std::uint64_t{*a} + std::get<std::uint32_t>(rhs.value_);
    *a = static_cast<std::uint32_t>(s % field_.characteristic());
  } else if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    std::get<Polynomial>(value_) += std::get<Polynomial>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* a = std::get_if<std::uint32_t>(&value_)) {
    std::uint64_t s = std::uint64_t{*a} * std::get<std::uint32_t>(rhs.value_);
    *a = static_cast<std::uint32_t>(s % field_.characteristic());
  } else if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& lhs = std::get<Polynomial>(value_);
    lhs = lhs * std::get<Polynomial>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw not_invertible("inverse of zero");
  if (auto* a = std::get_if<std::uint32_t>(&value_))
    return make(field_, inverse_mod(*a, field_.characteristic()));
  if (auto* q = std::get_if<mpq_class>(&value_)) return make(field_, mpq_class(1 / *q));

  const auto& poly = std::get<Polynomial>(value_);
  if (!poly.is_monomial()) throw not_invertible("polynomial " + to_string() + " is not a unit");
  const auto& [exps, coeff] = *poly.terms().begin();
  Exponents inv(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0 && !field_.is_unit_variable(i))
      throw not_invertible("monomial " + to_string() + " contains non-unit variable " +
                           field_.variables()[i]);
    inv[i] = -exps[i];
  }
  return make(field_, Polynomial::monomial(std::move(inv), mpq_class(1 / coeff)));
}

Scalar Scalar::pow(int exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  Scalar result = field_.one();
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (auto* a = std::get_if<std::uint32_t>(&value_)) return std::to_string(*a);
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return format_polynomial(std::get<Polynomial>(value_), field_.variables());
}

std::optional<std::uint32_t> Scalar::residue() const noexcept {
  if (auto* a = std::get_if<std::uint32_t>(&value_)) return *a;
  return std::nullopt;
}

std::optional<mpq_class> Scalar::rational_value() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  if (auto* p = std::get_if<Polynomial>(&value_); p && p->is_constant()) return p->constant_term();
  return std::nullopt;
}

// ---------------------------------------------------------------- free functions

Scalar convert(const Scalar& value, const Field& target) {
  const Field& source = value.field();
  if (source == target) return value;
  if (auto q = value.as_rational()) return target.from_rational(*q);
  if (value.residue()) {
    throw field_mismatch("cannot move " + source.to_string() + " element into " + target.to_string());
  }
  const Polynomial& poly = *value.as_polynomial();
  if (!target.is_laurent()) {
    if (!poly.is_constant())
      throw field_mismatch("non-constant " + value.to_string() + " cannot move into " + target.to_string());
    return target.from_rational(poly.constant_term());
  }
  const auto& vars = source.variables();
  Polynomial out(target.variables().size());
  for (const auto& [exps, coeff] : poly.terms()) {
    Exponents mapped(target.variables().size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      auto idx = target.variable_index(vars[i]);
      if (!idx) throw field_mismatch("variable " + vars[i] + " missing from " + target.to_string());
      if (exps[i] < 0 && !target.is_unit_variable(*idx))
        throw field_mismatch("variable " + vars[i] + " is not a unit in " + target.to_string());
      mapped[*idx] = exps[i];
    }
    out.add_term(mapped, coeff);
  }
  return Scalar::make(target, std::move(out));
}

Scalar evaluate(const Scalar& value, const Assignment& assignment, const Field& target) {
  if (target.is_laurent()) throw field_mismatch("evaluation target must be Q or GF(p)");
  const Field& source = value.field();
  for (const auto& [name, v] : assignment) {
    if (v != 0) continue;
    if (auto idx = source.variable_index(name); idx && source.is_unit_variable(*idx))
      throw assignment_error("unit variable " + name + " assigned zero");
  }
  const Polynomial* poly = value.as_polynomial();
  if (!poly) return convert(value, target);

  const auto& vars = source.variables();
  std::vector<std::optional<Scalar>> values(vars.size());
  Scalar result = target.zero();
  for (const auto& [exps, coeff] : poly->terms()) {
    Scalar term = target.from_rational(coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!values[i]) {
        auto it = assignment.find(vars[i]);
        if (it == assignment.end()) throw assignment_error("no value assigned to " + vars[i]);
        try {
          values[i] = target.from_rational(it->second);
        } catch (const not_invertible& e) {
          throw assignment_error("value of " + vars[i] + ": " + e.what());
        }
      }
      try {
        term *= values[i]->pow(exps[i]);
      } catch (const not_invertible&) {
        throw assignment_error("unit variable " + vars[i] + " evaluates to zero in " + target.to_string());
      }
    }
    result += term;
  }
  return result;
}

Scalar substitute(const Scalar& value, const Substitution& replacements) {
  const Polynomial* poly = value.as_polynomial();
  if (!poly) return value;
  const Field& field = value.field();
  const auto& vars = field.variables();
  std::vector<std::optional<Scalar>> repl(vars.size());
  for (const auto& [name, r] : replacements) {
    auto idx = field.variable_index(name);
    if (!idx) throw unknown_name("no variable '" + name + "' in " + field.to_string());
    repl[*idx] = convert(r, field);
  }
  Scalar result = field.zero();
  for (const auto& [exps, coeff] : poly->terms()) {
    Exponents kept(exps.size(), 0);
    Scalar factor = field.one();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (repl[i]) {
        factor *= repl[i]->pow(exps[i]);
      } else {
        kept[i] = exps[i];
      }
    }
    result += Scalar::make(field, Polynomial::monomial(std::move(kept), coeff)) * factor;
  }
  return result;
}

std::vector<std::string> variables_of(const Scalar& value) {
  std::vector<std::string> out;
  const Polynomial* poly = value.as_polynomial();
  if (!poly) return out;
  const auto& vars = value.field().variables();
  std::vector<bool> used(vars.size(), false);
  for (const auto& [exps, coeff] : poly->terms())
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (used[i]) out.push_back(vars[i]);
  return out;
}

mpq_class parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&] { return parse_error("not a rational number: \"" + std::string(text) + "\""); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto integer = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!integer(num, true) || !integer(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw bad();
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw parse_error("expected name=value in \"" + item + "\"");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!valid_identifier(name)) throw parse_error("invalid parameter name \"" + name + "\"");
    if (!out.emplace(name, parse_rational(item.substr(eq + 1))).second)
      throw parse_error("parameter " + name + " assigned twice");
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace apl
