#pragma once

// Exact scalars: rationals, prime-field residues, and Laurent polynomials over
// the rationals. Floating point never appears anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apl/polynomial.hpp"

namespace apl {

class Scalar;

namespace detail {
struct field_data;
}

/// A ground field (or polynomial ring) shared by a family of scalars. Cheap to
/// copy; two Field values compare equal when they describe the same ring.
class Field {
 public:
  enum class kind { rational, prime, laurent };

  /// The rationals. Also what a default-constructed Field is.
  Field();

  static Field rationals();
  /// GF(p); throws parse_error unless p is prime.
  static Field prime(std::uint32_t p);
  /// Q[vars] with negative exponents allowed on the `units` subset.
  static Field laurent(std::vector<std::string> vars, std::vector<std::string> units = {});

  kind field_kind() const noexcept;
  bool is_rational() const noexcept { return field_kind() == kind::rational; }
  bool is_prime() const noexcept { return field_kind() == kind::prime; }
  bool is_laurent() const noexcept { return field_kind() == kind::laurent; }
  /// True for Q and GF(p): the kinds where every nonzero element is invertible.
  bool is_field() const noexcept { return !is_laurent(); }

  /// p for GF(p), 0 otherwise.
  std::uint32_t characteristic() const noexcept;
  const std::vector<std::string>& variables() const noexcept;
  std::optional<std::size_t> variable_index(std::string_view name) const;
  bool is_unit_variable(std::size_t index) const;
  std::vector<std::string> unit_variables() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  /// Throws not_invertible when the denominator vanishes in GF(p).
  Scalar from_rational(const mpq_class& value) const;
  Scalar variable(std::string_view name) const;
  /// Parses the coefficient grammar: integers, `num/den`, identifiers,
  /// `+ - * ^` with integer exponents, and parentheses.
  Scalar parse(std::string_view text) const;

  /// Polynomial ring over this one with additional variables appended.
  /// Q extends to Q[extra]; GF(p) cannot be extended.
  Field extended(const std::vector<std::string>& extra_vars,
                 const std::vector<std::string>& extra_units = {}) const;

  std::string to_string() const;

  friend bool operator==(const Field& lhs, const Field& rhs);
  friend bool operator!=(const Field& lhs, const Field& rhs) { return !(lhs == rhs); }

 private:
  explicit Field(std::shared_ptr<const detail::field_data> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::field_data> data_;

  friend class Scalar;
};

/// Exact element of a Field. Values are immutable; arithmetic across
/// different fields throws field_mismatch.
class Scalar {
 public:
  /// Rational zero.
  Scalar();

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

  /// Multiplicative inverse. Polynomials are invertible only when they are a
  /// single monomial in unit variables.
  Scalar inverse() const;
  Scalar pow(int exponent) const;

  /// Field and value both equal.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  /// Canonical text; re-parses to the same value with Field::parse.
  std::string to_string() const;

  const mpq_class* as_rational() const noexcept { return std::get_if<mpq_class>(&value_); }
  std::optional<std::uint32_t> residue() const noexcept;
  const Polynomial* as_polynomial() const noexcept { return std::get_if<Polynomial>(&value_); }

  /// The value as a rational if it is a constant (in any kind of field other
  /// than GF(p)).
  std::optional<mpq_class> rational_value() const;

 private:
  using value_type = std::variant<mpq_class, std::uint32_t, Polynomial>;
  Scalar(Field field, value_type value) : field_(std::move(field)), value_(std::move(value)) {}

  void require_same_field(const Scalar& rhs) const;
  static Scalar make(const Field& field, value_type value);

  Field field_;
  value_type value_;

  friend class Field;
  friend Scalar convert(const Scalar& value, const Field& target);
  friend Scalar evaluate(const Scalar&, const std::map<std::string, mpq_class, std::less<>>&,
                         const Field&);
  friend Scalar substitute(const Scalar&, const std::map<std::string, Scalar, std::less<>>&);
};

using Assignment = std::map<std::string, mpq_class, std::less<>>;
using Substitution = std::map<std::string, Scalar, std::less<>>;

/// Replaces every variable by its assigned rational and returns the value in
/// `target` (Q or GF(p)). Throws assignment_error on a missing variable or a
/// zero assigned to a unit variable.
Scalar evaluate(const Scalar& value, const Assignment& assignment,
                const Field& target = Field::rationals());

/// Replaces the named variables by scalars of the same ring; unnamed variables
/// are kept. Negative powers require an invertible replacement.
Scalar substitute(const Scalar& value, const Substitution& replacements);

/// Moves a value into another field: Q embeds everywhere, constants leave a
/// polynomial ring, and polynomial rings map by variable name.
Scalar convert(const Scalar& value, const Field& target);

/// Names of the variables occurring in `value` with a nonzero exponent.
std::vector<std::string> variables_of(const Scalar& value);

/// Parses `n` or `n/d` (optionally signed).
mpq_class parse_rational(std::string_view text);
/// Parses "name=value,name=value" with rational values.
Assignment parse_assignment(std::string_view text);

bool is_prime(std::uint64_t n);

}  // namespace apl
