#include "apl/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

#include "apl/cocycle.hpp"
#include "apl/error.hpp"

namespace apl {

namespace detail {
extern const std::string_view catalog_json;
}

namespace {

using json = nlohmann::json;
using Index = std::size_t;

constexpr Index catalog_dim = 2;

Algebra parse_table(const Field& ring, const json& quads) {
  Algebra a(ring, catalog_dim);
  for (const json& q : quads) {
    if (!q.is_array() || q.size() != 4) throw parse_error("catalog: product entries are [i, j, k, coeff]");
    auto i = q[0].get<Index>(), j = q[1].get<Index>(), k = q[2].get<Index>();
    if (i < 1 || j < 1 || k < 1 || i > catalog_dim || j > catalog_dim || k > catalog_dim)
      throw parse_error("catalog: basis index out of range");
    a.set(i - 1, j - 1, k - 1, ring.parse(q[3].get<std::string>()));
  }
  return a;
}

LinearMap parse_map(const Field& ring, const json& rows) {
  std::vector<std::vector<Scalar>> entries;
  for (const json& row : rows) {
    auto& out = entries.emplace_back();
    for (const json& e : row) out.push_back(ring.parse(e.get<std::string>()));
  }
  return Matrix::from_rows(ring, entries);
}

std::vector<Scalar> parse_constraints(const Field& ring, const json& item) {
  std::vector<Scalar> out;
  if (item.contains("constraints"))
    for (const json& c : item["constraints"]) out.push_back(ring.parse(c.get<std::string>()));
  return out;
}

Substitution parse_substitution(const Field& ring, const json& obj) {
  Substitution out;
  for (const auto& [name, value] : obj.items()) out.emplace(name, ring.parse(value.get<std::string>()));
  return out;
}

struct Catalog {
  Field ring;
  std::vector<Family> families;
  std::vector<AutomorphismFamily> automorphisms;
  std::vector<CocycleCase> cases;
  std::vector<InternalIsomorphism> isos;
  std::vector<TransformationLaw> laws;
};

Catalog load() {
  const json doc = json::parse(detail::catalog_json);
  Catalog c;
  const auto vars = doc.at("variables").get<std::vector<std::string>>();
  c.ring = Field::laurent(vars, {"a"});

  for (const json& f : doc.at("families")) {
    Family fam;
    fam.name = f.at("name").get<std::string>();
    fam.params = f.at("params").get<std::vector<std::string>>();
    if (f.contains("branches"))
      for (const auto& [var, values] : f["branches"].items()) {
        Branch b{var, {}};
        for (const json& v : values) b.values.emplace_back(v.get<long>());
        fam.branches.push_back(std::move(b));
      }
    fam.constraints = parse_constraints(c.ring, f);
    fam.pair = AlgebraPair(parse_table(c.ring, f.at("circ")), parse_table(c.ring, f.at("star")));
    if (f.contains("parent")) {
      fam.parent = f["parent"].at("name").get<std::string>();
      if (f["parent"].contains("lambda")) fam.parent_lambda = parse_rational(f["parent"]["lambda"].get<std::string>());
    }
    c.families.push_back(std::move(fam));
  }

  for (const json& a : doc.at("automorphisms")) {
    AutomorphismFamily aut;
    aut.algebra = a.at("algebra").get<std::string>();
    aut.params = a.at("params").get<std::vector<std::string>>();
    aut.ring = Field::laurent(vars, a.at("units").get<std::vector<std::string>>());
    aut.constraints = parse_constraints(aut.ring, a);
    for (const json& m : a.at("maps")) aut.maps.push_back(parse_map(aut.ring, m));
    c.automorphisms.push_back(std::move(aut));
  }

  for (const json& z : doc.at("cocycles")) {
    const auto algebra = z.at("algebra").get<std::string>();
    for (const json& k : z.at("cases")) {
      CocycleCase cc;
      cc.algebra = algebra;
      cc.label = k.at("label").get<std::string>();
      if (k.contains("lambda")) cc.lambda = parse_rational(k["lambda"].get<std::string>());
      if (k.contains("excludes"))
        for (const json& e : k["excludes"]) cc.excludes.push_back(parse_rational(e.get<std::string>()));
      for (const json& f : k.at("families"))
        cc.families.push_back({f.at("params").get<std::vector<std::string>>(), parse_table(c.ring, f.at("phi"))});
      c.cases.push_back(std::move(cc));
    }
  }

  for (const json& i : doc.at("internal_isomorphisms"))
    c.isos.push_back({i.at("family").get<std::string>(), parse_map(c.ring, i.at("theta")),
                      parse_substitution(c.ring, i.at("substitution"))});

  for (const json& l : doc.at("laws")) {
    TransformationLaw law;
    law.label = l.at("label").get<std::string>();
    law.algebra = l.at("algebra").get<std::string>();
    law.case_index = l.at("case").get<Index>();
    law.family_index = l.at("family").get<Index>();
    law.theta = parse_map(c.ring, l.at("theta"));
    law.substitution = parse_substitution(c.ring, l.at("substitution"));
    law.law = l.at("law").get<std::string>();
    c.laws.push_back(std::move(law));
  }
  return c;
}

const Catalog& catalog() {
  static const Catalog c = load();
  return c;
}

void check_constraints(const std::vector<Scalar>& constraints, const Assignment& assignment,
                       const Field& target = Field::rationals()) {
  for (const Scalar& c : constraints)
    if (evaluate(c, assignment, target).is_zero())
      throw precondition_failed("constraint", "assignment violates " + c.to_string() + " != 0");
}

void require_covered(const std::vector<std::string>& names, const Assignment& assignment) {
  for (const auto& n : names)
    if (!assignment.count(n)) throw assignment_error("no value given for parameter " + n);
}

}  // namespace

const Field& catalog_ring() { return catalog().ring; }

std::string_view catalog_source() { return detail::catalog_json; }

const std::vector<Family>& catalog_families() { return catalog().families; }

const Family& get_family(std::string_view name) {
  for (const Family& f : catalog().families)
    if (f.name == name) return f;
  throw unknown_name("no catalog family named '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, AlgebraPair>> branch_instances(const Family& f) {
  std::vector<std::pair<std::string, AlgebraPair>> out{{"", f.pair}};
  for (const Branch& b : f.branches) {
    std::vector<std::pair<std::string, AlgebraPair>> next;
    for (const auto& [label, pair] : out)
      for (const mpq_class& v : b.values) {
        Substitution s{{b.variable, catalog_ring().from_rational(v)}};
        std::string l = (label.empty() ? "" : label + ",") + b.variable + "=" + v.get_str();
        next.emplace_back(std::move(l), substitute(pair, s));
      }
    out = std::move(next);
  }
  return out;
}

AlgebraPair instantiate(const Family& f, const Assignment& assignment, const Field& target) {
  require_covered(f.params, assignment);
  for (const Branch& b : f.branches) {
    auto it = assignment.find(b.variable);
    if (it == assignment.end()) throw assignment_error("no value given for branch variable " + b.variable);
    if (std::find(b.values.begin(), b.values.end(), it->second) == b.values.end())
      throw assignment_error(b.variable + "=" + it->second.get_str() + " is not an allowed branch value");
  }
  for (const auto& [name, value] : assignment) {
    bool known = std::find(f.params.begin(), f.params.end(), name) != f.params.end() ||
                 std::any_of(f.branches.begin(), f.branches.end(), [&](const Branch& b) { return b.variable == name; });
    if (!known) throw assignment_error(f.name + " has no parameter " + name);
  }
  check_constraints(f.constraints, assignment, target);
  return evaluate(f.pair, assignment, target);
}

const std::vector<AutomorphismFamily>& catalog_automorphisms() { return catalog().automorphisms; }

const AutomorphismFamily& automorphisms_of(std::string_view algebra) {
  for (const auto& a : catalog().automorphisms)
    if (a.algebra == algebra) return a;
  throw unknown_name("no automorphism group recorded for '" + std::string(algebra) + "'");
}

LinearMap automorphism_of(std::string_view algebra, const Assignment& assignment, std::size_t member,
                          const Field& target) {
  const AutomorphismFamily& a = automorphisms_of(algebra);
  if (member >= a.maps.size()) throw unknown_name("automorphism member index out of range");
  require_covered(a.params, assignment);
  check_constraints(a.constraints, assignment, target);
  return evaluate(a.maps[member], assignment, target);
}

Algebra CocycleCase::base() const {
  Algebra circ = get_family(algebra).pair.circ;
  if (lambda) circ = substitute(circ, {{"lambda", catalog_ring().from_rational(*lambda)}});
  return circ;
}

bool CocycleCase::admits(const mpq_class& value) const {
  if (lambda) return *lambda == value;
  return std::find(excludes.begin(), excludes.end(), value) == excludes.end();
}

const std::vector<CocycleCase>& cocycle_cases() { return catalog().cases; }

const CocycleCase& cocycle_case_of(std::string_view algebra, std::optional<mpq_class> lambda) {
  std::vector<const CocycleCase*> found;
  for (const auto& c : catalog().cases)
    if (c.algebra == algebra) found.push_back(&c);
  if (found.empty()) throw unknown_name("no Z2 families recorded for '" + std::string(algebra) + "'");
  if (found.size() == 1 && !found.front()->lambda && found.front()->excludes.empty()) return *found.front();
  if (!lambda) throw precondition_failed("lambda_case", std::string(algebra) + " needs a value of lambda");
  check_constraints(get_family(algebra).constraints, {{"lambda", *lambda}});
  for (const CocycleCase* c : found)
    if (c->lambda && *c->lambda == *lambda) return *c;
  for (const CocycleCase* c : found)
    if (c->admits(*lambda)) return *c;
  throw precondition_failed("lambda_case", "no case of " + std::string(algebra) + " admits lambda=" + lambda->get_str());
}

std::vector<CocycleFamily> cocycle_families_of(std::string_view algebra, std::optional<mpq_class> lambda) {
  return cocycle_case_of(algebra, lambda).families;
}

Z2Comparison compare_z2(std::string_view algebra, std::optional<mpq_class> lambda, std::uint32_t prime,
                        const BruteForceOptions& options) {
  const CocycleCase& c = cocycle_case_of(algebra, lambda);
  const Field gf = Field::prime(prime);
  Z2Comparison out;
  out.algebra = std::string(algebra);
  out.lambda = lambda;
  out.case_label = c.label;

  Algebra base = get_family(algebra).pair.circ;
  if (lambda) base = substitute(base, {{"lambda", catalog_ring().from_rational(*lambda)}});
  out.brute = brute_force_Z2(evaluate(base, {}, gf), options);

  std::set<std::vector<std::uint32_t>> all;
  for (const CocycleFamily& fam : c.families) {
    std::set<std::vector<std::uint32_t>> members;
    std::vector<std::uint32_t> point(fam.params.size(), 0);
    for (;;) {
      Assignment at;
      for (Index t = 0; t < point.size(); ++t) at[fam.params[t]] = point[t];
      members.insert(residues(evaluate(fam.phi, at, gf)));
      Index t = point.size();
      while (t > 0 && ++point[t - 1] == prime) point[--t] = 0;
      if (t == 0) break;
    }
    out.family_sizes.push_back(members.size());
    all.insert(members.begin(), members.end());
  }
  out.union_size = all.size();
  for (const auto& m : all)
    if (!out.brute.contains(m)) out.missing.push_back(m);
  for (const auto& s : out.brute.solutions)
    if (!all.count(s)) out.surplus.push_back(s);
  return out;
}

const std::vector<InternalIsomorphism>& internal_isomorphisms() { return catalog().isos; }

const CocycleCase& TransformationLaw::cocycle_case() const {
  std::size_t seen = 0;
  for (const auto& c : catalog().cases)
    if (c.algebra == algebra && seen++ == case_index) return c;
  throw unknown_name("law refers to a missing case of " + algebra);
}

const CocycleFamily& TransformationLaw::family() const {
  const CocycleCase& c = cocycle_case();
  if (family_index >= c.families.size()) throw unknown_name("law refers to a missing family of " + algebra);
  return c.families[family_index];
}

const std::vector<TransformationLaw>& transformation_laws() { return catalog().laws; }

const char* to_string(CatalogScope scope) {
  switch (scope) {
    case CatalogScope::a_families: return "a-families";
    case CatalogScope::ca_families: return "ca-families";
    case CatalogScope::automorphisms: return "automorphisms";
    case CatalogScope::cocycles: return "cocycles";
    case CatalogScope::internal_isos: return "internal-isos";
    case CatalogScope::laws: return "laws";
    case CatalogScope::all: return "all";
  }
  return "?";
}

CatalogScope parse_scope(std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), '_', '-');
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (auto s : {CatalogScope::a_families, CatalogScope::ca_families, CatalogScope::automorphisms, CatalogScope::cocycles,
                 CatalogScope::internal_isos, CatalogScope::laws, CatalogScope::all})
    if (t == to_string(s)) return s;
  throw unknown_name("unknown catalog scope '" + std::string(text) + "'");
}

bool CatalogReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CatalogItem& i) { return i.report.passed(); });
}

std::size_t CatalogReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const CatalogItem& i) { return !i.report.passed(); }));
}

CheckReport verify_a_family(const Family& f) {
  CheckReport r = check_identity(f.pair.circ, Identity::anti_pre_lie);
  if (!f.pair.star.is_zero()) r.fail("star_zero", "an A-family carries a single product");
  return r;
}

CheckReport verify_ca_family(const Family& f) {
  CheckReport r;
  for (const auto& [label, pair] : branch_instances(f))
    r.merge(check_compatible_pair(pair), label.empty() ? "" : "[" + label + "]");
  if (!f.parent.empty()) {
    Algebra expected = get_family(f.parent).pair.circ;
    if (f.parent_lambda) expected = substitute(expected, {{"lambda", catalog_ring().from_rational(*f.parent_lambda)}});
    if (expected != f.pair.circ) r.fail("parent", "circ differs from " + f.parent);
  }
  return r;
}

CheckReport verify_automorphisms(const AutomorphismFamily& a) {
  const Algebra base = convert(get_family(a.algebra).pair.circ, a.ring);
  CheckReport r;
  for (Index m = 0; m < a.maps.size(); ++m)
    r.merge(check_automorphism(base, a.maps[m]), a.maps.size() > 1 ? "[" + std::to_string(m + 1) + "]" : "");
  return r;
}

CheckReport verify_cocycle_case(const CocycleCase& c) {
  const Algebra base = c.base();
  CheckReport r;
  for (Index k = 0; k < c.families.size(); ++k)
    r.merge(verify_family_membership(base, c.families[k].phi), "[" + std::to_string(k + 1) + "]");
  return r;
}

namespace {

void compare_tables(CheckReport& r, const std::string& name, const Algebra& got, const Algebra& want) {
  for (Index i = 0; i < got.dim(); ++i)
    for (Index j = 0; j < got.dim(); ++j) r.expect_zero(name, {i, j}, got.product(i, j) - want.product(i, j));
}

}  // namespace

CheckReport verify_internal_isomorphism(const InternalIsomorphism& iso) {
  const Family& f = get_family(iso.family);
  CheckReport r;
  for (const auto& [label, pair] : branch_instances(f)) {
    const std::string suffix = label.empty() ? "" : "[" + label + "]";
    AlgebraPair moved = transform(pair, iso.theta);
    AlgebraPair renamed = substitute(pair, iso.substitution);
    compare_tables(r, "isomorphism_circ" + suffix, moved.circ, renamed.circ);
    compare_tables(r, "isomorphism_star" + suffix, moved.star, renamed.star);
  }
  return r;
}

CheckReport verify_law(const TransformationLaw& law) {
  CheckReport r;
  try {
    const CocycleFamily& fam = law.family();
    Deformation moved = transform_deformation(Deformation(law.cocycle_case().base(), fam.phi), law.theta);
    compare_tables(r, "law", moved.phi, substitute(fam.phi, law.substitution));
  } catch (const precondition_failed& e) {
    r.fail("law", e.check() + ": " + e.what());
  } catch (const not_invertible& e) {
    r.fail("law", e.what());
  }
  return r;
}

CatalogReport verify_catalog(CatalogScope scope, unsigned workers) {
  const Catalog& c = catalog();
  auto wanted = [&](CatalogScope s) { return scope == CatalogScope::all || scope == s; };
  std::vector<std::pair<CatalogItem, std::function<CheckReport()>>> jobs;
  auto add = [&](CatalogScope s, std::string name, std::function<CheckReport()> run) {
    jobs.emplace_back(CatalogItem{s, std::move(name), {}}, std::move(run));
  };
  if (wanted(CatalogScope::a_families))
    for (const Family& f : c.families)
      if (!f.is_compatible_family()) add(CatalogScope::a_families, f.name, [&f] { return verify_a_family(f); });
  if (wanted(CatalogScope::ca_families))
    for (const Family& f : c.families)
      if (f.is_compatible_family()) add(CatalogScope::ca_families, f.name, [&f] { return verify_ca_family(f); });
  if (wanted(CatalogScope::automorphisms))
    for (const auto& a : c.automorphisms)
      add(CatalogScope::automorphisms, "Aut(" + a.algebra + ")", [&a] { return verify_automorphisms(a); });
  if (wanted(CatalogScope::cocycles))
    for (const auto& k : c.cases)
      add(CatalogScope::cocycles, "Z2(" + k.algebra + (k.label == "all" ? "" : "; " + k.label) + ")",
          [&k] { return verify_cocycle_case(k); });
  if (wanted(CatalogScope::internal_isos))
    for (const auto& i : c.isos)
      add(CatalogScope::internal_isos, i.family, [&i] { return verify_internal_isomorphism(i); });
  if (wanted(CatalogScope::laws))
    for (const auto& l : c.laws) add(CatalogScope::laws, l.label, [&l] { return verify_law(l); });

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) jobs[i].first.report = jobs[i].second();
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CatalogReport out;
  for (auto& [item, run] : jobs) out.items.push_back(std::move(item));
  return out;
}

}  // namespace apl
