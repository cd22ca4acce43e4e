#pragma once

// JSON file formats: algebras and pairs (.alg.json), linear maps, bilinear
// forms and representation pairs. Serialization is canonical, so equal values
// always produce identical bytes.

#include <functional>
#include <string>
#include <string_view>

#include "apl/forms.hpp"
#include "apl/representation.hpp"

namespace apl {

/// {"kind":"Q"}, {"kind":"GF","p":5} or {"kind":"poly","vars":[...],"units":[...]}.
Field parse_field_json(std::string_view text);
std::string field_json(const Field& field);

/// Contents of an .alg.json file. `has_star` is false when the file defines a
/// single product; `pair.star` is then zero.
struct AlgebraFile {
  AlgebraPair pair;
  bool has_star = false;
};

/// Throws parse_error (with the offending key) on malformed input.
AlgebraFile parse_algebra_json(std::string_view text);
std::string to_json(const Algebra& a);
std::string to_json(const AlgebraPair& p);

/// {"rows": n, "cols": m, "entries": [[...]]}; entries parse in `field`
/// unless the file carries its own "field".
LinearMap parse_linear_map_json(std::string_view text, const Field& field = Field::rationals());
std::string to_json(const LinearMap& m);

/// {"dim": n, "gram": [[...]]}.
BilinearForm parse_form_json(std::string_view text, const Field& field = Field::rationals());
std::string to_json(const BilinearForm& b);

/// {"g": <pair object or file name>, "V_dim": m, "rho": {"e1": [[...]], ...},
/// "mu": {...}}. A missing basis key means the zero map. File names are
/// resolved through `load`.
using FileLoader = std::function<std::string(const std::string&)>;
RepresentationPair parse_representation_json(std::string_view text, const FileLoader& load = {});
std::string to_json(const RepresentationPair& r);

/// Re-emits any JSON document in the canonical layout: sorted keys, two-space
/// indent, arrays without objects on one line.
std::string canonical_json(std::string_view text);

/// Reads a whole file; throws parse_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace apl
