#include <doctest.h>

#include <random>
#include <set>

#include "apl/catalog.hpp"
#include "apl/error.hpp"
#include "helpers.hpp"

using namespace apl;
using apl::test::make_algebra;
using apl::test::make_matrix;

namespace {

const Field Q = Field::rationals();

std::set<std::string> failing(CatalogScope scope) {
  std::set<std::string> out;
  for (const CatalogItem& i : verify_catalog(scope, 4).items)
    if (!i.report.passed()) out.insert(i.name);
  return out;
}

}  // namespace

TEST_CASE("catalog contents") {
  CHECK(catalog_families().size() == 54);
  CHECK(catalog_automorphisms().size() == 9);
  CHECK(get_family("A5").pair.circ ==
        make_algebra(catalog_ring(), 2, {{1, 1, 2, "-1"}, {2, 1, 1, "-1"}}));
  const Algebra& star = get_family("CA26").pair.star;
  CHECK(star.product(1, 0) == unit_vector(catalog_ring(), 2, 0));
  CHECK(star.product(1, 1) == unit_vector(catalog_ring(), 2, 1));
  CHECK_THROWS_AS(get_family("CA99"), unknown_name);
  CHECK(get_family("CA35").parent == "A6");
  CHECK(get_family("CA34").parent_lambda == mpq_class(-1));
}

TEST_CASE("instantiate") {
  try {
    instantiate(get_family("A8"), {{"lambda", -1}});
    FAIL("expected a constraint violation");
  } catch (const precondition_failed& e) {
    CHECK(e.check() == "constraint");
  }
  const AlgebraPair ca10 = instantiate(get_family("CA10"), {{"alpha", 0}, {"beta", 0}});
  CHECK(ca10.circ == make_algebra(Q, 2, {{1, 1, 1, "1"}}));
  CHECK(ca10.star == make_algebra(Q, 2, {{2, 1, 1, "1"}, {1, 2, 1, "1"}, {2, 2, 2, "1"}}));
  const AlgebraPair ca1 = instantiate(get_family("CA1"), {});
  CHECK(ca1.circ.is_zero());
  CHECK(ca1.star.is_zero());
  CHECK_THROWS_AS(instantiate(get_family("CA10"), {{"alpha", 0}}), assignment_error);
  CHECK_THROWS_AS(instantiate(get_family("CA10"), {{"alpha", 0}, {"beta", 0}, {"mu", 1}}), assignment_error);
  CHECK_THROWS_AS(instantiate(get_family("CA11"), {{"alpha", 0}, {"delta", 2}}), assignment_error);
  CHECK_THROWS_AS(instantiate(get_family("CA11"), {{"alpha", 0}}), assignment_error);
  CHECK(instantiate(get_family("CA11"), {{"alpha", 1}, {"delta", 1}}, Field::prime(5)).field() == Field::prime(5));
  CHECK(branch_instances(get_family("CA11")).size() == 2);
  CHECK(branch_instances(get_family("CA11"))[1].first == "delta=1");
}

TEST_CASE("automorphism_of") {
  const LinearMap theta = automorphism_of("A3", {{"a", 2}, {"b", 3}});
  CHECK(theta == make_matrix(Q, {{"2", "0"}, {"3", "4"}}));
  CHECK(check_automorphism(instantiate(get_family("A3"), {}).circ, theta).passed());
  CHECK_THROWS_AS(automorphism_of("A2", {{"a", 0}}), apl::error);
  CHECK(automorphisms_of("A4").maps.size() == 2);
  CHECK(check_automorphism(instantiate(get_family("A4"), {}).circ, automorphism_of("A4", {}, 1)).passed());
  CHECK_THROWS_AS(automorphisms_of("A10"), unknown_name);
}

TEST_CASE("cocycle families") {
  const auto a4 = cocycle_families_of("A4");
  REQUIRE(a4.size() == 1);
  CHECK(a4[0].params.size() == 4);
  CHECK(a4[0].phi.product(0, 0) == apl::test::make_vector(catalog_ring(), {"alpha", "-beta"}));
  const auto a9 = cocycle_families_of("A9");
  REQUIRE(a9.size() == 1);
  CHECK(a9[0].phi.product(1, 0) == apl::test::make_vector(catalog_ring(), {"alpha+beta", "0"}));
  CHECK(cocycle_families_of("A2").size() == 3);

  CHECK(cocycle_case_of("A6", mpq_class(0)).label == "lambda=0");
  CHECK(cocycle_case_of("A6", mpq_class(5)).excludes.size() == 2);
  CHECK(cocycle_case_of("A8", mpq_class(-2)).lambda == mpq_class(-2));
  CHECK_THROWS_AS(cocycle_case_of("A6"), precondition_failed);
  CHECK_THROWS_AS(cocycle_case_of("A8", mpq_class(-1)), precondition_failed);
  CHECK_THROWS_AS(cocycle_case_of("A1"), unknown_name);
}

TEST_CASE("scope names") {
  CHECK(parse_scope("ca-families") == CatalogScope::ca_families);
  CHECK(parse_scope("internal_isos") == CatalogScope::internal_isos);
  CHECK(std::string(to_string(CatalogScope::a_families)) == "a-families");
  CHECK_THROWS_AS(parse_scope("everything"), unknown_name);
}

TEST_CASE("verify_catalog: passing scopes") {
  CHECK(verify_catalog(CatalogScope::a_families).passed());
  CHECK(verify_catalog(CatalogScope::a_families).items.size() == 9);
  CHECK(verify_catalog(CatalogScope::automorphisms).passed());
  CHECK(verify_catalog(CatalogScope::internal_isos).passed());
  CHECK(verify_catalog(CatalogScope::internal_isos).items.size() == 3);
}

TEST_CASE("verify_catalog: recorded data that does not verify") {
  // Each residual was reproduced by an independent sympy expansion of the
  // transcribed tables.
  CHECK(failing(CatalogScope::ca_families) ==
        std::set<std::string>{"CA17", "CA18", "CA19", "CA20", "CA21", "CA22", "CA23", "CA27", "CA35", "CA39", "CA41",
                              "CA42", "CA45"});
  CHECK(failing(CatalogScope::cocycles) ==
        std::set<std::string>{"Z2(A3)", "Z2(A4)", "Z2(A6; lambda=0)", "Z2(A6; lambda not in {0,-1})",
                              "Z2(A8; lambda=-2)", "Z2(A8; lambda=0)"});
  CHECK(failing(CatalogScope::laws) == std::set<std::string>{"A3 case 2", "A3 case 4", "A6 lambda=0 case 2"});
  CHECK(verify_catalog(CatalogScope::all, 4).items.size() == 100);
}

TEST_CASE("verify_catalog is independent of the worker count") {
  const CatalogReport one = verify_catalog(CatalogScope::all, 1);
  const CatalogReport many = verify_catalog(CatalogScope::all, 8);
  REQUIRE(one.items.size() == many.items.size());
  for (std::size_t i = 0; i < one.items.size(); ++i) {
    CHECK(one.items[i].name == many.items[i].name);
    CHECK(one.items[i].report.failures() == many.items[i].report.failures());
  }
}

TEST_CASE("CA projections are instances of their parents") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> val(-4, 4);
  for (const Family& f : catalog_families()) {
    if (!f.is_compatible_family()) continue;
    const Family& parent = get_family(f.parent);
    for (int t = 0; t < 5; ++t) {
      Assignment at;
      for (const auto& p : f.params) at[p] = val(rng);
      for (const auto& b : f.branches) at[b.variable] = b.values[t % b.values.size()];
      AlgebraPair p;
      try {
        p = instantiate(f, at);
      } catch (const precondition_failed&) {
        continue;
      }
      Assignment pa;
      if (f.parent_lambda) pa["lambda"] = *f.parent_lambda;
      else if (at.count("lambda")) pa["lambda"] = at["lambda"];
      CAPTURE(f.name);
      CHECK(p.circ == instantiate(parent, pa).circ);
      CHECK(check_identity(p.circ, Identity::anti_pre_lie).passed());
    }
  }
}

TEST_CASE("compare_z2 over GF(5)") {
  BruteForceOptions opt;
  opt.workers = 4;
  const Z2Comparison a2 = compare_z2("A2", {}, 5, opt);
  CHECK(a2.brute.solutions.size() == 245);
  CHECK(a2.union_size == 245);
  CHECK(a2.family_sizes == std::vector<std::size_t>{125, 125, 25});
  CHECK(a2.contained());
  CHECK(a2.surplus.empty());
  const Z2Comparison a9 = compare_z2("A9", {}, 5, opt);
  CHECK(a9.union_size == 125);
  CHECK(a9.contained());
  const Z2Comparison a3 = compare_z2("A3", {}, 5, opt);
  CHECK(a3.union_size == 1225);
  CHECK(a3.missing.size() == 800);
  CHECK(!a3.contained());
  const Z2Comparison a6 = compare_z2("A6", mpq_class(-1), 5, opt);
  CHECK(a6.contained());
  CHECK(a6.surplus.size() == 120);
}
