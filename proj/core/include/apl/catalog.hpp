#pragma once

// The dimension-2 classification data: A1..A9, CA1..CA45, automorphism
// groups, Z^2 families and the parameter-transformation laws, loaded from the
// bundled catalog.json and verified symbolically.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apl/algebra.hpp"
#include "apl/cocycle.hpp"
#include "apl/report.hpp"

namespace apl {

/// Polynomial ring shared by the catalog: lambda, alpha, beta, gamma, delta
/// and the automorphism variables a, b, c, d, with a a unit.
const Field& catalog_ring();

/// The catalog JSON text compiled into the library.
std::string_view catalog_source();

struct Branch {
  std::string variable;
  std::vector<mpq_class> values;
};

struct Family {
  std::string name;
  /// Continuous parameters.
  std::vector<std::string> params;
  /// Discrete choices such as delta in {0, 1}.
  std::vector<Branch> branches;
  /// Expressions that must not vanish at an admissible assignment.
  std::vector<Scalar> constraints;
  /// Both products over catalog_ring(); A-families have star = 0.
  AlgebraPair pair;
  /// For CA-families: the A-family carrying circ, and its lambda if fixed.
  std::string parent;
  std::optional<mpq_class> parent_lambda;

  bool is_compatible_family() const { return name.rfind("CA", 0) == 0; }
};

const std::vector<Family>& catalog_families();
/// Throws unknown_name.
const Family& get_family(std::string_view name);

/// One symbolic member per combination of branch values, labelled like
/// "delta=1" (empty label when the family has no branches).
std::vector<std::pair<std::string, AlgebraPair>> branch_instances(const Family& f);

/// Evaluates f at `assignment`, which must give every parameter and branch
/// variable. Throws assignment_error for missing or unknown names and for a
/// branch value outside its list, precondition_failed("constraint") when a
/// constraint vanishes.
AlgebraPair instantiate(const Family& f, const Assignment& assignment, const Field& target = Field::rationals());

struct AutomorphismFamily {
  std::string algebra;
  std::vector<std::string> params;
  /// The ring of the map entries (its own unit variables).
  Field ring;
  std::vector<Scalar> constraints;
  /// theta(e_j) is column j.
  std::vector<LinearMap> maps;
};

const std::vector<AutomorphismFamily>& catalog_automorphisms();
/// Throws unknown_name.
const AutomorphismFamily& automorphisms_of(std::string_view algebra);
/// Member `member` evaluated at `assignment`; throws precondition_failed
/// ("constraint") when a constraint vanishes and assignment_error when a
/// value is missing.
LinearMap automorphism_of(std::string_view algebra, const Assignment& assignment, std::size_t member = 0,
                          const Field& target = Field::rationals());

struct CocycleFamily {
  std::vector<std::string> params;
  /// The bilinear map phi over catalog_ring().
  Algebra phi;
};

/// One case block of Z^2(A, A). For A6 and A8 the cases split on lambda:
/// either a fixed value or every value outside `excludes`.
struct CocycleCase {
  std::string algebra;
  std::string label;
  std::optional<mpq_class> lambda;
  std::vector<mpq_class> excludes;
  std::vector<CocycleFamily> families;

  /// The base product, with lambda substituted when the case fixes it.
  Algebra base() const;
  bool admits(const mpq_class& value) const;
};

const std::vector<CocycleCase>& cocycle_cases();
/// The case for `algebra` (and lambda when the algebra depends on it).
/// Throws unknown_name, and precondition_failed("lambda_case") when lambda is
/// required but absent or admitted by no case.
const CocycleCase& cocycle_case_of(std::string_view algebra, std::optional<mpq_class> lambda = {});
std::vector<CocycleFamily> cocycle_families_of(std::string_view algebra, std::optional<mpq_class> lambda = {});

/// P(params) is carried by theta onto P(substitution(params)).
struct InternalIsomorphism {
  std::string family;
  LinearMap theta;
  Substitution substitution;
};

const std::vector<InternalIsomorphism>& internal_isomorphisms();

/// Transporting family `family` of case `case_index` along theta yields the
/// same family at substituted parameters.
struct TransformationLaw {
  std::string label;
  std::string algebra;
  std::size_t case_index = 0;
  std::size_t family_index = 0;
  LinearMap theta;
  Substitution substitution;
  std::string law;

  const CocycleCase& cocycle_case() const;
  const CocycleFamily& family() const;
};

const std::vector<TransformationLaw>& transformation_laws();

/// Brute-force Z^2 over GF(p) set against the recorded families, each
/// instantiated at every parameter point of GF(p).
struct Z2Comparison {
  std::string algebra;
  std::optional<mpq_class> lambda;
  std::string case_label;
  BruteForceResult brute;
  /// Distinct members of each recorded family.
  std::vector<std::size_t> family_sizes;
  /// Size of the union of all recorded families.
  std::size_t union_size = 0;
  /// Family members that brute force did not find (containment failures).
  std::vector<std::vector<std::uint32_t>> missing;
  /// Brute-force solutions outside every family.
  std::vector<std::vector<std::uint32_t>> surplus;

  bool contained() const { return missing.empty(); }
};

/// lambda is needed for A6 and A8. Throws as cocycle_case_of and
/// brute_force_Z2.
Z2Comparison compare_z2(std::string_view algebra, std::optional<mpq_class> lambda, std::uint32_t prime,
                        const BruteForceOptions& options = {});

enum class CatalogScope { a_families, ca_families, automorphisms, cocycles, internal_isos, laws, all };

const char* to_string(CatalogScope scope);
/// Accepts "a-families", "ca-families", "automorphisms", "cocycles",
/// "internal-isos", "laws" and "all" (underscores also accepted).
CatalogScope parse_scope(std::string_view text);

struct CatalogItem {
  CatalogScope scope;
  std::string name;
  CheckReport report;
};

struct CatalogReport {
  std::vector<CatalogItem> items;

  bool passed() const;
  std::size_t failures() const;
};

/// Symbolic verification of the selected catalog data. Items run
/// concurrently on up to `workers` threads; the order of items is fixed.
CatalogReport verify_catalog(CatalogScope scope, unsigned workers = 1);

CheckReport verify_a_family(const Family& f);
CheckReport verify_ca_family(const Family& f);
CheckReport verify_automorphisms(const AutomorphismFamily& a);
CheckReport verify_cocycle_case(const CocycleCase& c);
CheckReport verify_internal_isomorphism(const InternalIsomorphism& iso);
CheckReport verify_law(const TransformationLaw& law);

}  // namespace apl
