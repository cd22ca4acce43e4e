#include "apl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "apl/catalog.hpp"
#include "apl/cocycle.hpp"
#include "apl/error.hpp"
#include "apl/forms.hpp"
#include "apl/io.hpp"
#include "apl/operators.hpp"
#include "apl/representation.hpp"

namespace apl::cli {

namespace {

using json = nlohmann::json;
using Index = std::size_t;

constexpr int schema_version = 1;
constexpr std::uint32_t allowed_primes[] = {2, 3, 5, 7, 11, 13};

json scalars_json(const Vector& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

json check_json(const std::string& name, const CheckReport& r) {
  json witnesses = json::array();
  for (const Witness& w : r.witnesses()) {
    json item = {{"identity", w.identity}, {"residual", scalars_json(w.residual)}};
    json idx = json::array();
    for (Index i : w.indices) idx.push_back(i + 1);
    item["indices"] = idx;
    if (!w.detail.empty()) item["detail"] = w.detail;
    witnesses.push_back(std::move(item));
  }
  return {{"name", name}, {"passed", r.passed()}, {"failures", r.failures()}, {"witnesses", witnesses}};
}

json table_json(const std::vector<std::uint32_t>& t) { return json(t); }

/// Everything the subcommands read from the command line.
struct Config {
  std::string file, pair, form, map, rep, rep2, brackets, params, out, report, family, s1, s2, lambda, name;
  std::string scope = "all", mode = "verify";
  std::vector<std::string> identities;
  bool compatible = false, compatible_lie = false, compatible_associative = false;
  bool symmetric = false, nondegenerate = false, cocycle = false, invariant = false;
  bool strong = false, converse = false, rational = false;
  std::uint32_t prime = 5;
  bool prime_given = false;
  unsigned workers = 0;
  std::uint64_t budget = BruteForceOptions{}.budget;
  Index dim = 0;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Config cfg;
  std::string command;

  // ------------------------------------------------------------ plumbing

  unsigned workers() const { return resolved_workers_; }

  void resolve_workers() {
    unsigned w = 1;
    if (cfg.workers != 0) {
      resolved_workers_ = cfg.workers;
      return;
    }
    if (const char* env = std::getenv("APL_WORKERS"); env && *env) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 1) throw parse_error("APL_WORKERS must be a positive integer");
      w = static_cast<unsigned>(v);
    }
    resolved_workers_ = w;
  }

  void require_prime() const {
    for (std::uint32_t p : allowed_primes)
      if (p == cfg.prime) return;
    throw parse_error("--prime must be one of 2, 3, 5, 7, 11, 13");
  }

  Field target_field() const { return cfg.prime_given ? Field::prime(cfg.prime) : Field::rationals(); }

  std::string load_text(const std::string& path) const { return read_file(path); }

  AlgebraFile load_algebra(const std::string& path) const {
    AlgebraFile f = parse_algebra_json(load_text(path));
    if (!cfg.params.empty()) f.pair = evaluate(f.pair, parse_assignment(cfg.params), target_field());
    return f;
  }

  RepresentationPair load_rep(const std::string& path) const {
    return parse_representation_json(load_text(path), [this](const std::string& p) { return load_text(p); });
  }

  LinearMap load_map(const std::string& path, const Field& field) const {
    return parse_linear_map_json(load_text(path), field);
  }

  BilinearForm load_form(const std::string& path, const Field& field) const {
    return parse_form_json(load_text(path), field);
  }

  static std::string required(const std::string& value, const char* flag) {
    if (value.empty()) throw parse_error(std::string(flag) + " is required");
    return value;
  }

  void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot write " + path);
    f << text;
  }

  // ------------------------------------------------------------ reports

  struct Report {
    json doc;
    bool passed = true;
  };

  Report begin() const { return {{{"schema_version", schema_version}, {"command", command}, {"checks", json::array()}}}; }

  void add(Report& r, const std::string& name, const CheckReport& c) {
    r.doc["checks"].push_back(check_json(name, c));
    r.passed = r.passed && c.passed();
    err_ << (c.passed() ? "PASS " : "FAIL ") << name;
    if (!c.passed()) err_ << " (" << c.failures() << " failing evaluations)";
    err_ << "\n";
  }

  int finish(Report& r, const std::string& path) {
    r.doc["passed"] = r.passed;
    write(path, canonical_json(r.doc.dump()));
    return r.passed ? ok : checks_failed;
  }

  int precondition(const precondition_failed& e) {
    err_ << "precondition failed [" << e.check() << "]: " << e.what() << "\n";
    json doc = {{"schema_version", schema_version},
                {"command", command},
                {"passed", false},
                {"precondition", {{"check", e.check()}, {"message", e.what()}}}};
    write(cfg.report.empty() ? cfg.out : cfg.report, canonical_json(doc.dump()));
    return checks_failed;
  }

  std::ostream& err() { return err_; }

  // ------------------------------------------------------------ check

  int check() {
    Report r = begin();
    std::optional<AlgebraFile> alg;
    const std::string path = !cfg.pair.empty() ? cfg.pair : cfg.file;
    if (!path.empty()) alg = load_algebra(path);
    std::optional<BilinearForm> form;
    if (!cfg.form.empty()) form = load_form(cfg.form, alg ? alg->pair.field() : target_field());

    bool any = !cfg.identities.empty() || cfg.compatible || cfg.compatible_lie || cfg.compatible_associative ||
               cfg.symmetric || cfg.nondegenerate || cfg.cocycle || cfg.invariant;
    auto need_alg = [&]() -> const AlgebraFile& {
      if (!alg) throw parse_error("this check needs --file or --pair");
      return *alg;
    };
    auto need_form = [&]() -> const BilinearForm& {
      if (!form) throw parse_error("this check needs --form");
      return *form;
    };
    if (!any) {
      if (alg && alg->has_star) cfg.compatible = true;
      else if (alg) cfg.identities.push_back("anti_pre_lie");
      if (form) cfg.symmetric = cfg.nondegenerate = true;
      if (!alg && !form) throw parse_error("nothing to check: give --file, --pair or --form");
    }
    for (const auto& text : cfg.identities) {
      Identity id = parse_identity(text);
      const AlgebraFile& a = need_alg();
      if (a.has_star) {
        add(r, std::string(to_string(id)) + "[circ]", check_identity(a.pair.circ, id));
        add(r, std::string(to_string(id)) + "[star]", check_identity(a.pair.star, id));
      } else {
        add(r, to_string(id), check_identity(a.pair.circ, id));
      }
    }
    if (cfg.compatible) add(r, "compatible_anti_pre_lie", check_compatible_pair(need_alg().pair));
    if (cfg.compatible_lie) add(r, "compatible_lie", check_compatible_lie(need_alg().pair));
    if (cfg.compatible_associative) add(r, "compatible_associative", check_compatible_associative(need_alg().pair));
    if (cfg.symmetric) add(r, "symmetric", check_form(need_form(), FormProperty::symmetric));
    if (cfg.nondegenerate) add(r, "nondegenerate", check_form(need_form(), FormProperty::nondegenerate));
    if (cfg.cocycle) add(r, "commutative_2_cocycle", check_comm_2cocycle(need_form(), need_alg().pair));
    if (cfg.invariant) add(r, "invariant", check_invariant(need_form(), need_alg().pair));
    return finish(r, cfg.out);
  }

  // ------------------------------------------------------------ catalog

  static json family_json(const Family& f) {
    json branches = json::object();
    for (const Branch& b : f.branches) {
      json values = json::array();
      for (const auto& v : b.values) values.push_back(v.get_str());
      branches[b.variable] = values;
    }
    json constraints = json::array();
    for (const Scalar& c : f.constraints) constraints.push_back(c.to_string() + " != 0");
    json out = {{"name", f.name}, {"params", f.params}, {"branches", branches}, {"constraints", constraints}};
    if (!f.parent.empty()) {
      out["parent"] = f.parent;
      if (f.parent_lambda) out["parent_lambda"] = f.parent_lambda->get_str();
    }
    return out;
  }

  int catalog_list() {
    json fams = json::array();
    for (const Family& f : catalog_families()) fams.push_back(family_json(f));
    write(cfg.out, canonical_json(json{{"schema_version", schema_version}, {"families", fams}}.dump()));
    return ok;
  }

  int catalog_show() {
    const Family& f = get_family(cfg.name);
    json doc = family_json(f);
    doc["schema_version"] = schema_version;
    doc["algebra"] = json::parse(f.is_compatible_family() ? to_json(f.pair) : to_json(f.pair.circ));
    if (f.name.rfind("A", 0) == 0) {
      try {
        const AutomorphismFamily& a = automorphisms_of(f.name);
        json maps = json::array();
        for (const auto& m : a.maps) maps.push_back(json::parse(to_json(m)));
        doc["automorphisms"] = maps;
      } catch (const unknown_name&) {
      }
    }
    write(cfg.out, canonical_json(doc.dump()));
    return ok;
  }

  int catalog_verify() {
    CatalogReport rep = verify_catalog(parse_scope(cfg.scope), workers());
    json items = json::array();
    for (const CatalogItem& i : rep.items) {
      json item = check_json(i.name, i.report);
      item["scope"] = to_string(i.scope);
      items.push_back(std::move(item));
      if (!i.report.passed()) err_ << "FAIL " << to_string(i.scope) << " " << i.name << "\n";
    }
    err_ << "catalog verify --scope " << cfg.scope << ": " << rep.items.size() - rep.failures() << " of "
         << rep.items.size() << " items pass\n";
    json doc = {{"schema_version", schema_version}, {"command", command}, {"scope", cfg.scope},
                {"items", items},  {"passed", rep.passed()}};
    write(cfg.out, canonical_json(doc.dump()));
    return rep.passed() ? ok : checks_failed;
  }

  int catalog_instantiate() {
    const Family& f = get_family(cfg.name);
    AlgebraPair p = instantiate(f, parse_assignment(cfg.params), target_field());
    write(cfg.out, f.is_compatible_family() ? to_json(p) : to_json(p.circ));
    return ok;
  }

  // ------------------------------------------------------------ z2

  std::optional<mpq_class> lambda() const {
    if (cfg.lambda.empty()) return std::nullopt;
    return parse_rational(cfg.lambda);
  }

  int z2() {
    const std::string name = required(cfg.family, "--family");
    json doc = {{"schema_version", schema_version}, {"command", command}, {"family", name}, {"mode", cfg.mode}};
    if (!cfg.lambda.empty()) doc["lambda"] = lambda()->get_str();
    bool passed = true;

    if (cfg.mode == "verify") {
      std::vector<const CocycleCase*> cases;
      if (auto l = lambda()) {
        cases.push_back(&cocycle_case_of(name, l));
      } else {
        for (const auto& c : cocycle_cases())
          if (c.algebra == name) cases.push_back(&c);
        if (cases.empty()) cocycle_case_of(name);
      }
      json out = json::array();
      for (const CocycleCase* c : cases)
        for (Index k = 0; k < c->families.size(); ++k) {
          CheckReport rep = verify_family_membership(c->base(), c->families[k].phi);
          json item = check_json(c->label + " #" + std::to_string(k + 1), rep);
          item["params"] = c->families[k].params;
          item["phi"] = json::parse(to_json(c->families[k].phi))["products"]["circ"];
          out.push_back(std::move(item));
          passed = passed && rep.passed();
          err_ << (rep.passed() ? "PASS " : "FAIL ") << name << " " << c->label << " family " << k + 1 << "\n";
        }
      doc["families"] = out;
    } else if (cfg.mode == "linear") {
      const Field field = cfg.rational ? Field::rationals() : Field::prime(cfg.prime);
      const CocycleCase& c = cocycle_case_of(name, lambda());
      Assignment at_lambda;
      if (auto l = lambda()) at_lambda["lambda"] = *l;
      const Algebra concrete = evaluate(get_family(name).pair.circ, at_lambda, field);
      const auto basis = linear_space(concrete);
      json vecs = json::array();
      for (const Vector& v : basis) vecs.push_back(scalars_json(v));
      doc["field"] = json::parse(field_json(field));
      doc["dimension"] = basis.size();
      doc["basis"] = vecs;
      json spans = json::array();
      for (const CocycleFamily& fam : c.families) {
        // The recorded families are linear in their parameters; checking each
        // unit parameter point decides span membership.
        bool inside = true;
        for (Index t = 0; t < fam.params.size(); ++t) {
          Assignment at = at_lambda;
          for (Index u = 0; u < fam.params.size(); ++u) at[fam.params[u]] = u == t ? 1 : 0;
          inside = inside && in_span(basis, evaluate(fam.phi, at, field));
        }
        spans.push_back(inside);
        passed = passed && inside;
      }
      doc["families_in_span"] = spans;
      err_ << name << ": linear space of dimension " << basis.size() << " over " << field.to_string() << "\n";
    } else if (cfg.mode == "brute") {
      BruteForceOptions opt;
      opt.budget = cfg.budget;
      opt.workers = workers();
      Z2Comparison cmp = compare_z2(name, lambda(), cfg.prime, opt);
      json missing = json::array(), surplus = json::array();
      for (const auto& t : cmp.missing) missing.push_back(table_json(t));
      for (const auto& t : cmp.surplus) surplus.push_back(table_json(t));
      doc["prime"] = cfg.prime;
      doc["case"] = cmp.case_label;
      doc["candidates"] = cmp.brute.candidates;
      doc["solutions"] = cmp.brute.solutions.size();
      doc["family_sizes"] = cmp.family_sizes;
      doc["union_size"] = cmp.union_size;
      doc["contained"] = cmp.contained();
      doc["missing"] = missing;
      doc["surplus"] = surplus;
      passed = cmp.contained();
      err_ << name << " over GF(" << cfg.prime << "): " << cmp.brute.solutions.size() << " solutions, " << cmp.union_size
           << " recorded, " << cmp.missing.size() << " recorded but absent, " << cmp.surplus.size() << " surplus\n";
    } else {
      throw parse_error("--mode must be linear, brute or verify");
    }
    doc["passed"] = passed;
    write(cfg.out, canonical_json(doc.dump()));
    return passed ? ok : checks_failed;
  }

  // ------------------------------------------------------------ derive

  Vector parse_vector(const std::string& text, const Field& field, const std::vector<std::string>& basis) const {
    const Index n = basis.size();
    if (text == "0") return zero_vector(field, n);
    for (Index i = 0; i < n; ++i)
      if (basis[i] == text) return unit_vector(field, n, i);
    Vector out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(field.parse(part));
    if (out.size() != n) throw parse_error("vector '" + text + "' needs " + std::to_string(n) + " coefficients");
    return out;
  }

  int emit_pair(const AlgebraPair& p, Report& r) {
    write(cfg.out, to_json(p));
    r.doc["passed"] = r.passed;
    if (!cfg.report.empty()) write(cfg.report, canonical_json(r.doc.dump()));
    return r.passed ? ok : checks_failed;
  }

  void add_recovery(Report& r, const AlgebraPair& p, const AlgebraPair& brackets) {
    CheckReport rec;
    AlgebraPair g = commutator_pair(p);
    for (auto [got, want, name] : {std::tuple{&g.circ, &brackets.circ, "commutator_1"},
                                   std::tuple{&g.star, &brackets.star, "commutator_2"}})
      for (Index i = 0; i < got->dim(); ++i)
        for (Index j = 0; j < got->dim(); ++j) rec.expect_zero(name, {i, j}, got->product(i, j) - want->product(i, j));
    add(r, "commutator_recovery", rec);
  }

  int derive_from_cocycle() {
    AlgebraPair g = load_algebra(required(cfg.brackets, "--brackets")).pair;
    BilinearForm b = load_form(required(cfg.form, "--form"), g.field());
    AlgebraPair p = induce_from_cocycle(b, g);
    Report r = begin();
    add(r, "compatible_anti_pre_lie", check_compatible_pair(p));
    add(r, "invariant", check_invariant(b, p));
    add_recovery(r, p, g);
    return emit_pair(p, r);
  }

  int derive_from_vectors() {
    BilinearForm b = load_form(required(cfg.form, "--form"), target_field());
    const auto basis = default_basis(b.dim());
    Vector s1 = parse_vector(required(cfg.s1, "--s1"), b.field(), basis);
    Vector s2 = parse_vector(required(cfg.s2, "--s2"), b.field(), basis);
    AlgebraPair p = construct_from_vectors(b, s1, s2);
    Report r = begin();
    add(r, "compatible_anti_pre_lie", check_compatible_pair(p));
    add(r, "invariant", check_invariant(b, p));
    add(r, "commutative_2_cocycle", check_comm_2cocycle(b, commutator_pair(p)));
    return emit_pair(p, r);
  }

  int derive_semidirect() {
    RepresentationPair rep = load_rep(required(cfg.rep, "--rep"));
    AlgebraPair p = semidirect_product(rep);
    Report r = begin();
    add(r, "compatible_lie", check_compatible_lie(p));
    return emit_pair(p, r);
  }

  int derive_from_rb() {
    AlgebraPair g = load_algebra(required(cfg.brackets, "--brackets")).pair;
    LinearMap rop = load_map(required(cfg.map, "--map"), g.field());
    AlgebraPair p = induce_from_rb(rop, g);
    Report r = begin();
    add(r, "compatible_anti_pre_lie", check_compatible_pair(p));
    return emit_pair(p, r);
  }

  int derive_on_domain() {
    RepresentationPair rep = load_rep(required(cfg.rep, "--rep"));
    LinearMap t = load_map(required(cfg.map, "--map"), rep.field());
    AlgebraPair p = induce_on_domain(t, rep);
    Report r = begin();
    add(r, "strong", check_strong(t, rep));
    add(r, "compatible_anti_pre_lie", check_compatible_pair(p));
    return emit_pair(p, r);
  }

  int derive_on_image() {
    RepresentationPair rep = load_rep(required(cfg.rep, "--rep"));
    LinearMap t = load_map(required(cfg.map, "--map"), rep.field());
    ImageStructure img = induce_on_image(t, rep);
    Report r = begin();
    add(r, "compatible_anti_pre_lie", check_compatible_pair(img.pair));
    r.doc["embedding"] = json::parse(to_json(img.embedding));
    return emit_pair(img.pair, r);
  }

  int derive_from_invertible() {
    RepresentationPair rep = load_rep(required(cfg.rep, "--rep"));
    LinearMap t = load_map(required(cfg.map, "--map"), rep.field());
    AlgebraPair p = induce_from_invertible(t, rep);
    Report r = begin();
    add(r, "compatible_anti_pre_lie", check_compatible_pair(p));
    add_recovery(r, p, rep.g);
    return emit_pair(p, r);
  }

  int derive_pairing() {
    if (cfg.dim == 0) throw parse_error("--dim must be at least 1");
    BilinearForm b = pairing_form(target_field(), cfg.dim);
    Report r = begin();
    add(r, "symmetric", check_form(b, FormProperty::symmetric));
    add(r, "nondegenerate", check_form(b, FormProperty::nondegenerate));
    write(cfg.out, to_json(b));
    r.doc["passed"] = r.passed;
    if (!cfg.report.empty()) write(cfg.report, canonical_json(r.doc.dump()));
    return r.passed ? ok : checks_failed;
  }

  // ------------------------------------------------------------ rep

  int rep_check() {
    Report r = begin();
    add(r, "representation", check_representation_pair(load_rep(required(cfg.rep, "--rep"))));
    return finish(r, cfg.out);
  }

  int emit_rep(const RepresentationPair& rep) {
    Report r = begin();
    add(r, "representation", check_representation_pair(rep));
    write(cfg.out, to_json(rep));
    r.doc["passed"] = r.passed;
    if (!cfg.report.empty()) write(cfg.report, canonical_json(r.doc.dump()));
    return r.passed ? ok : checks_failed;
  }

  int rep_dual() { return emit_rep(dual_pair(load_rep(required(cfg.rep, "--rep")))); }

  int rep_left() { return emit_rep(left_multiplication_pair(load_algebra(required(cfg.pair, "--pair")).pair)); }

  int rep_adjoint() { return emit_rep(adjoint_pair(load_algebra(required(cfg.brackets, "--brackets")).pair)); }

  int rep_equivalence() {
    RepresentationPair r1 = load_rep(required(cfg.rep, "--rep"));
    RepresentationPair r2 = load_rep(required(cfg.rep2, "--rep2"));
    LinearMap phi = load_map(required(cfg.map, "--map"), r1.field());
    Report r = begin();
    add(r, "equivalence", check_equivalence(r1, r2, phi));
    return finish(r, cfg.out);
  }

  // ------------------------------------------------------------ ops

  int ops_anti_o() {
    RepresentationPair rep = load_rep(required(cfg.rep, "--rep"));
    LinearMap t = load_map(required(cfg.map, "--map"), rep.field());
    Report r = begin();
    add(r, "anti_o", check_anti_o(t, rep));
    return finish(r, cfg.out);
  }

  int ops_strong() {
    RepresentationPair rep = load_rep(required(cfg.rep, "--rep"));
    LinearMap t = load_map(required(cfg.map, "--map"), rep.field());
    Report r = begin();
    add(r, "strong", check_strong(t, rep));
    return finish(r, cfg.out);
  }

  int ops_rb() {
    AlgebraPair g = load_algebra(required(cfg.brackets, "--brackets")).pair;
    LinearMap rop = load_map(required(cfg.map, "--map"), g.field());
    Report r = begin();
    add(r, cfg.strong ? "strong_anti_rota_baxter" : "anti_rota_baxter", check_anti_rota_baxter(rop, g, cfg.strong));
    if (cfg.converse) add(r, "rb_converse", check_rb_converse(rop, g));
    return finish(r, cfg.out);
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  unsigned resolved_workers_ = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s(out, err);
  Config& c = s.cfg;
  CLI::App app{"Exact verification and construction of compatible anti-pre-Lie algebras", "apl"};
  app.require_subcommand(1);
  app.add_option("--workers", c.workers, "Worker threads (default: APL_WORKERS or 1)")->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::string name, std::function<int()> f) {
    sub->callback([&s, &action, name = std::move(name), f = std::move(f)] {
      s.command = name;
      action = f;
    });
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", c.out, "Output file (default: standard output)"); };
  auto prime_opt = [&](CLI::App* sub) {
    sub->add_option("--prime", c.prime, "Prime field GF(p), p in {2,3,5,7,11,13}");
  };
  auto params_opt = [&](CLI::App* sub) {
    sub->add_option("--params", c.params, "Parameter values, e.g. \"alpha=1,beta=-2/3\"");
  };
  auto report_opt = [&](CLI::App* sub) {
    sub->add_option("--report", c.report, "Write the verification report of the output here");
  };

  // check
  auto* check = app.add_subcommand("check", "Check identities of an algebra, pair or form");
  check->add_option("--file", c.file, "Algebra file (.alg.json)");
  check->add_option("--pair", c.pair, "Algebra pair file (.alg.json with star)");
  check->add_option("--identity", c.identities, "anti-pre-lie, pre-lie, jacobi, associative, commutative, antisymmetric");
  check->add_flag("--compatible", c.compatible, "Compatible anti-pre-Lie pair");
  check->add_flag("--compatible-lie", c.compatible_lie, "Compatible Lie bracket pair");
  check->add_flag("--compatible-associative", c.compatible_associative, "Compatible associative pair");
  check->add_option("--form", c.form, "Bilinear form file");
  check->add_flag("--symmetric", c.symmetric);
  check->add_flag("--nondegenerate", c.nondegenerate);
  check->add_flag("--cocycle", c.cocycle, "Form is a commutative 2-cocycle of the bracket pair");
  check->add_flag("--invariant", c.invariant, "Form is invariant on the pair");
  params_opt(check);
  prime_opt(check);
  out_opt(check);
  on(check, "check", [&] { return s.check(); });

  // catalog
  auto* catalog = app.add_subcommand("catalog", "The dimension-2 classification data");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List all families");
  out_opt(list);
  on(list, "catalog list", [&] { return s.catalog_list(); });
  auto* show = catalog->add_subcommand("show", "Show one family");
  show->add_option("name", c.name)->required();
  out_opt(show);
  on(show, "catalog show", [&] { return s.catalog_show(); });
  auto* verify = catalog->add_subcommand("verify", "Verify catalog data symbolically");
  verify->add_option("--scope", c.scope,
                     "a-families, ca-families, automorphisms, cocycles, internal-isos, laws or all");
  verify->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
  out_opt(verify);
  on(verify, "catalog verify", [&] { return s.catalog_verify(); });
  auto* inst = catalog->add_subcommand("instantiate", "Evaluate a family at parameter values");
  inst->add_option("name", c.name)->required();
  params_opt(inst);
  prime_opt(inst);
  out_opt(inst);
  on(inst, "catalog instantiate", [&] { return s.catalog_instantiate(); });

  // z2
  auto* z2 = app.add_subcommand("z2", "Deformation sets Z^2(A, A)");
  z2->add_option("--family", c.family, "Base algebra A2..A9")->required();
  z2->add_option("--lambda", c.lambda, "Value of lambda for A6 and A8");
  z2->add_option("--mode", c.mode, "linear, brute or verify");
  z2->add_flag("--rational", c.rational, "Linear mode over Q instead of GF(p)");
  z2->add_option("--budget", c.budget, "Largest number of brute-force candidates");
  z2->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
  prime_opt(z2);
  out_opt(z2);
  on(z2, "z2", [&] { return s.z2(); });

  // derive
  auto* derive = app.add_subcommand("derive", "Build compatible structures");
  derive->require_subcommand(1);
  auto derive_sub = [&](const char* name, const char* help, std::function<int()> f) {
    auto* sub = derive->add_subcommand(name, help);
    out_opt(sub);
    report_opt(sub);
    on(sub, std::string("derive ") + name, std::move(f));
    return sub;
  };
  auto* fc = derive_sub("from-cocycle", "Products from a nondegenerate commutative 2-cocycle",
                        [&] { return s.derive_from_cocycle(); });
  fc->add_option("--form", c.form)->required();
  fc->add_option("--brackets", c.brackets)->required();
  params_opt(fc);
  auto* fv = derive_sub("from-vectors", "Products from a symmetric form and two vectors",
                        [&] { return s.derive_from_vectors(); });
  fv->add_option("--form", c.form)->required();
  fv->add_option("--s1", c.s1, "Basis name, 0, or comma-separated coefficients")->required();
  fv->add_option("--s2", c.s2)->required();
  prime_opt(fv);
  auto* sd = derive_sub("semidirect", "Semidirect product of a representation pair",
                        [&] { return s.derive_semidirect(); });
  sd->add_option("--rep", c.rep)->required();
  auto* rb = derive_sub("from-rb", "Products from a strong anti-Rota-Baxter operator",
                        [&] { return s.derive_from_rb(); });
  rb->add_option("--map", c.map)->required();
  rb->add_option("--brackets", c.brackets)->required();
  params_opt(rb);
  auto* od = derive_sub("on-domain", "Products on V from an anti-O-operator", [&] { return s.derive_on_domain(); });
  od->add_option("--map", c.map)->required();
  od->add_option("--rep", c.rep)->required();
  auto* oi = derive_sub("on-image", "Products on T(V) from a strong anti-O-operator",
                        [&] { return s.derive_on_image(); });
  oi->add_option("--map", c.map)->required();
  oi->add_option("--rep", c.rep)->required();
  auto* fi = derive_sub("from-invertible", "Products on g from an invertible anti-O-operator",
                        [&] { return s.derive_from_invertible(); });
  fi->add_option("--map", c.map)->required();
  fi->add_option("--rep", c.rep)->required();
  auto* pf = derive_sub("pairing", "The pairing form on A + A*", [&] { return s.derive_pairing(); });
  pf->add_option("--dim", c.dim)->required();
  prime_opt(pf);

  // rep
  auto* rep = app.add_subcommand("rep", "Representation pairs");
  rep->require_subcommand(1);
  auto* rc = rep->add_subcommand("check", "Check the representation equations");
  rc->add_option("--rep", c.rep)->required();
  out_opt(rc);
  on(rc, "rep check", [&] { return s.rep_check(); });
  auto* rd = rep->add_subcommand("dual", "Dual representation pair");
  rd->add_option("--rep", c.rep)->required();
  out_opt(rd);
  report_opt(rd);
  on(rd, "rep dual", [&] { return s.rep_dual(); });
  auto* rs = rep->add_subcommand("semidirect", "Semidirect product (as derive semidirect)");
  rs->add_option("--rep", c.rep)->required();
  out_opt(rs);
  report_opt(rs);
  on(rs, "rep semidirect", [&] { return s.derive_semidirect(); });
  auto* rl = rep->add_subcommand("left-multiplication", "(-L circ, -L star) of a pair");
  rl->add_option("--pair", c.pair)->required();
  params_opt(rl);
  out_opt(rl);
  report_opt(rl);
  on(rl, "rep left-multiplication", [&] { return s.rep_left(); });
  auto* ra = rep->add_subcommand("adjoint", "Adjoint pair of a bracket pair");
  ra->add_option("--brackets", c.brackets)->required();
  params_opt(ra);
  out_opt(ra);
  report_opt(ra);
  on(ra, "rep adjoint", [&] { return s.rep_adjoint(); });
  auto* re = rep->add_subcommand("equivalence", "Check that a map intertwines two pairs");
  re->add_option("--rep", c.rep)->required();
  re->add_option("--rep2", c.rep2)->required();
  re->add_option("--map", c.map)->required();
  out_opt(re);
  on(re, "rep equivalence", [&] { return s.rep_equivalence(); });

  // ops
  auto* ops = app.add_subcommand("ops", "Anti-O and anti-Rota-Baxter operators");
  ops->require_subcommand(1);
  auto* ao = ops->add_subcommand("anti-o", "Check the anti-O-operator identity");
  ao->add_option("--map", c.map)->required();
  ao->add_option("--rep", c.rep)->required();
  out_opt(ao);
  on(ao, "ops anti-o", [&] { return s.ops_anti_o(); });
  auto* st = ops->add_subcommand("strong", "Check strongness of an anti-O-operator");
  st->add_option("--map", c.map)->required();
  st->add_option("--rep", c.rep)->required();
  out_opt(st);
  on(st, "ops strong", [&] { return s.ops_strong(); });
  auto* orb = ops->add_subcommand("rb", "Check an anti-Rota-Baxter operator");
  orb->add_option("--map", c.map)->required();
  orb->add_option("--brackets", c.brackets)->required();
  orb->add_flag("--strong", c.strong);
  orb->add_flag("--converse", c.converse, "Also check the converse condition");
  params_opt(orb);
  out_opt(orb);
  on(orb, "ops rb", [&] { return s.ops_rb(); });

  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_input;
  }
  for (CLI::App* sub : {check, inst, z2, fv, pf})
    if (sub->count("--prime") > 0) c.prime_given = true;

  try {
    s.resolve_workers();
    if (c.prime_given || s.command == "z2") s.require_prime();
    return action();
  } catch (const precondition_failed& e) {
    if (e.check() == "constraint" || e.check() == "lambda_case") {
      err << "error: " << e.what() << "\n";
      return bad_input;
    }
    return s.precondition(e);
  } catch (const not_invertible& e) {
    err << "error: " << e.what() << "\n";
    return checks_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }
}

}  // namespace apl::cli
