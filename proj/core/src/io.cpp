#include "apl/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "apl/error.hpp"

namespace apl {

namespace {

using json = nlohmann::json;
using Index = std::size_t;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) throw parse_error("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw parse_error(std::string("missing key '") + key + "'");
  return *it;
}

Index count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw parse_error(std::string("'") + what + "' must be a non-negative integer");
  return v.get<Index>();
}

std::string text_of(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw parse_error(std::string("'") + what + "' entries must be coefficient strings");
}

Scalar scalar_of(const Field& field, const json& v, const char* what) {
  return field.parse(text_of(v, what));
}

Field field_of(const json& f) {
  const auto kind = member(f, "kind");
  if (!kind.is_string()) throw parse_error("'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "Q") return Field::rationals();
  if (k == "GF") {
    Index p = count(member(f, "p"), "p");
    if (!is_prime(p) || p > 0xffffffffu) throw parse_error("'p' must be a prime");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  if (k == "poly") {
    std::vector<std::string> vars, units;
    try {
      vars = member(f, "vars").get<std::vector<std::string>>();
      if (f.contains("units")) units = f["units"].get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw parse_error("'vars' and 'units' must be lists of names");
    }
    try {
      return Field::laurent(vars, units);
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  }
  throw parse_error("unknown field kind '" + k + "'");
}

json field_value(const Field& field) {
  if (field.is_rational()) return {{"kind", "Q"}};
  if (field.is_prime()) return {{"kind", "GF"}, {"p", field.characteristic()}};
  return {{"kind", "poly"}, {"vars", field.variables()}, {"units", field.unit_variables()}};
}

Algebra table_of(const Field& field, Index n, const std::vector<std::string>& basis, const json& quads,
                 const char* name) {
  if (!quads.is_array()) throw parse_error(std::string("'") + name + "' must be a list of [i, j, k, coeff]");
  Algebra a(field, n, basis);
  std::set<std::tuple<Index, Index, Index>> seen;
  for (const json& q : quads) {
    if (!q.is_array() || q.size() != 4) throw parse_error(std::string("'") + name + "' entries are [i, j, k, coeff]");
    Index idx[3];
    for (int t = 0; t < 3; ++t) {
      idx[t] = count(q[t], name);
      if (idx[t] < 1 || idx[t] > n) throw parse_error(std::string("basis index out of range in '") + name + "'");
    }
    if (!seen.emplace(idx[0], idx[1], idx[2]).second)
      throw parse_error(std::string("repeated entry in '") + name + "'");
    a.set(idx[0] - 1, idx[1] - 1, idx[2] - 1, scalar_of(field, q[3], name));
  }
  return a;
}

json table_value(const Algebra& a) {
  json out = json::array();
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!a(i, j, k).is_zero()) out.push_back(json::array({i + 1, j + 1, k + 1, a(i, j, k).to_string()}));
  return out;
}

json algebra_value(const Algebra& circ, const Algebra* star) {
  json products = {{"circ", table_value(circ)}};
  if (star) products["star"] = table_value(*star);
  return {{"dim", circ.dim()}, {"field", field_value(circ.field())}, {"basis", circ.basis()}, {"products", products}};
}

AlgebraFile algebra_of(const json& doc) {
  const Field field = field_of(member(doc, "field"));
  const Index n = count(member(doc, "dim"), "dim");
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    try {
      basis = doc["basis"].get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw parse_error("'basis' must be a list of names");
    }
    if (basis.size() != n) throw parse_error("'basis' length differs from 'dim'");
    if (std::set<std::string>(basis.begin(), basis.end()).size() != n) throw parse_error("'basis' names repeat");
  }
  const json& products = member(doc, "products");
  AlgebraFile out;
  Algebra circ = table_of(field, n, basis, member(products, "circ"), "circ");
  Algebra star(field, n, circ.basis());
  if (products.contains("star")) {
    out.has_star = true;
    star = table_of(field, n, circ.basis(), products["star"], "star");
  }
  out.pair = AlgebraPair(std::move(circ), std::move(star));
  return out;
}

Matrix matrix_of(const Field& field, const json& rows, Index r, Index c, const char* name) {
  if (!rows.is_array() || rows.size() != r) throw parse_error(std::string("'") + name + "' must have " + std::to_string(r) + " rows");
  Matrix m(field, r, c);
  for (Index i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c)
      throw parse_error(std::string("'") + name + "' rows must have " + std::to_string(c) + " entries");
    for (Index j = 0; j < c; ++j) m(i, j) = scalar_of(field, rows[i][j], name);
  }
  return m;
}

json matrix_value(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void write(std::ostream& os, const json& v, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      if (!first) os << ",\n";
      first = false;
      os << inner << json(key).dump() << ": ";
      write(os, value, indent + 2);
    }
    os << "\n" << pad << "}";
    return;
  }
  if (v.is_array()) {
    bool nested_object = false;
    for (const json& e : v) nested_object = nested_object || e.is_object();
    if (!nested_object) {
      os << "[";
      bool first = true;
      for (const json& e : v) {
        if (!first) os << ", ";
        first = false;
        write(os, e, indent);
      }
      os << "]";
      return;
    }
    os << "[\n";
    bool first = true;
    for (const json& e : v) {
      if (!first) os << ",\n";
      first = false;
      os << inner;
      write(os, e, indent + 2);
    }
    os << "\n" << pad << "]";
    return;
  }
  os << v.dump();
}

std::string emit(const json& v) {
  std::ostringstream os;
  write(os, v, 0);
  os << "\n";
  return os.str();
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  } catch (const field_mismatch& e) {
    throw parse_error(e.what());
  } catch (const shape_mismatch& e) {
    throw parse_error(e.what());
  } catch (const not_invertible& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

Field parse_field_json(std::string_view text) {
  return guarded([&] { return field_of(parse_document(text)); });
}

std::string field_json(const Field& field) { return emit(field_value(field)); }

AlgebraFile parse_algebra_json(std::string_view text) {
  return guarded([&] { return algebra_of(parse_document(text)); });
}

std::string to_json(const Algebra& a) { return emit(algebra_value(a, nullptr)); }

std::string to_json(const AlgebraPair& p) { return emit(algebra_value(p.circ, &p.star)); }

LinearMap parse_linear_map_json(std::string_view text, const Field& field) {
  return guarded([&] {
    const json doc = parse_document(text);
    const Field f = doc.contains("field") ? field_of(doc["field"]) : field;
    return matrix_of(f, member(doc, "entries"), count(member(doc, "rows"), "rows"), count(member(doc, "cols"), "cols"),
                     "entries");
  });
}

std::string to_json(const LinearMap& m) {
  return emit({{"rows", m.rows()}, {"cols", m.cols()}, {"field", field_value(m.field())}, {"entries", matrix_value(m)}});
}

BilinearForm parse_form_json(std::string_view text, const Field& field) {
  return guarded([&] {
    const json doc = parse_document(text);
    const Field f = doc.contains("field") ? field_of(doc["field"]) : field;
    const Index n = count(member(doc, "dim"), "dim");
    return BilinearForm(matrix_of(f, member(doc, "gram"), n, n, "gram"));
  });
}

std::string to_json(const BilinearForm& b) {
  return emit({{"dim", b.dim()}, {"field", field_value(b.field())}, {"gram", matrix_value(b.gram)}});
}

RepresentationPair parse_representation_json(std::string_view text, const FileLoader& load) {
  return guarded([&] {
    const json doc = parse_document(text);
    const json& g = member(doc, "g");
    AlgebraPair pair;
    if (g.is_string()) {
      if (!load) throw parse_error("'g' names a file but no loader was given");
      pair = algebra_of(parse_document(load(g.get<std::string>()))).pair;
    } else {
      pair = algebra_of(g).pair;
    }
    const Index m = count(member(doc, "V_dim"), "V_dim");
    const Field& f = pair.field();
    const auto& basis = pair.circ.basis();
    auto maps = [&](const char* key) {
      std::vector<Matrix> out(basis.size(), Matrix(f, m, m));
      if (!doc.contains(key)) return out;
      const json& obj = doc[key];
      if (!obj.is_object()) throw parse_error(std::string("'") + key + "' must map basis names to arrays");
      for (const auto& [name, rows] : obj.items()) {
        auto it = std::find(basis.begin(), basis.end(), name);
        if (it == basis.end()) throw parse_error(std::string("'") + key + "' names unknown basis element " + name);
        out[static_cast<Index>(it - basis.begin())] = matrix_of(f, rows, m, m, key);
      }
      return out;
    };
    return RepresentationPair(pair, m, maps("rho"), maps("mu"));
  });
}

std::string to_json(const RepresentationPair& r) {
  json rho = json::object(), mu = json::object();
  const auto& basis = r.g.circ.basis();
  for (Index i = 0; i < basis.size(); ++i) {
    rho[basis[i]] = matrix_value(r.rho[i]);
    mu[basis[i]] = matrix_value(r.mu[i]);
  }
  return emit({{"g", algebra_value(r.g.circ, &r.g.star)}, {"V_dim", r.v_dim}, {"rho", rho}, {"mu", mu}});
}

std::string canonical_json(std::string_view text) { return emit(parse_document(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace apl
