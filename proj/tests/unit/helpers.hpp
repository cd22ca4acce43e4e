#pragma once

#include <doctest.h>

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>

#include "apl/algebra.hpp"
#include "apl/forms.hpp"
#include "apl/representation.hpp"

namespace apl::test {

/// Structure constants from 1-based (i, j, k, coefficient) entries.
using Entry = std::tuple<std::size_t, std::size_t, std::size_t, const char*>;

inline Algebra make_algebra(const Field& f, std::size_t n, std::initializer_list<Entry> entries) {
  Algebra a(f, n);
  for (const auto& [i, j, k, c] : entries) a.set(i - 1, j - 1, k - 1, f.parse(c));
  return a;
}

inline Matrix make_matrix(const Field& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const char* c : r) out.back().push_back(f.parse(c));
  }
  return Matrix::from_rows(f, out);
}

inline Vector make_vector(const Field& f, std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* c : entries) v.push_back(f.parse(c));
  return v;
}

/// Bracket [e1, e2] = e1 on a 2-dim space, antisymmetrically completed.
inline Algebra affine_bracket(const Field& f) { return make_algebra(f, 2, {{1, 2, 1, "1"}, {2, 1, 1, "-1"}}); }

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  return f.from_int(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Algebra random_algebra(const Field& f, std::size_t n, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  Algebra a(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.set(i, j, k, random_scalar(f, rng, lo, hi));
  return a;
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

}  // namespace apl::test

namespace doctest {

template <>
struct StringMaker<apl::Scalar> {
  static String convert(const apl::Scalar& s) { return s.to_string().c_str(); }
};

template <>
struct StringMaker<apl::Vector> {
  static String convert(const apl::Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return (out + ")").c_str();
  }
};

}  // namespace doctest
