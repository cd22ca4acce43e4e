#include <doctest.h>

#include <random>

#include "apl/catalog.hpp"
#include "apl/error.hpp"
#include "helpers.hpp"

using namespace apl;
using apl::test::make_algebra;

namespace {

const Field Q = Field::rationals();
const Field GF5 = Field::prime(5);

Algebra a2(const Field& f = Q) { return make_algebra(f, 2, {{1, 1, 1, "1"}}); }
Algebra a3(const Field& f = Q) { return make_algebra(f, 2, {{1, 1, 2, "1"}}); }
Algebra a5(const Field& f = Q) { return make_algebra(f, 2, {{1, 1, 2, "-1"}, {2, 1, 1, "-1"}}); }

bool family_verified(const Family& f) { return verify_ca_family(f).passed(); }

}  // namespace

TEST_CASE("multiply") {
  const Vector e1 = unit_vector(Q, 2, 0), e2 = unit_vector(Q, 2, 1);
  CHECK(multiply(a5(), e1, e1) == apl::test::make_vector(Q, {"0", "-1"}));
  CHECK(is_zero(multiply(a5(), e1, zero_vector(Q, 2))));
  const Field R = Field::laurent({"lambda"});
  const Algebra a6 = make_algebra(R, 2, {{2, 1, 1, "-1"}, {2, 2, 2, "lambda"}});
  CHECK(multiply(a6, unit_vector(R, 2, 1), unit_vector(R, 2, 1)) == apl::test::make_vector(R, {"0", "lambda"}));
  CHECK_THROWS_AS(multiply(a5(), e1, unit_vector(Q, 3, 0)), shape_mismatch);
}

TEST_CASE("commutator") {
  const Field R = Field::laurent({"lambda"});
  const Algebra a6 = make_algebra(R, 2, {{2, 1, 1, "-1"}, {2, 2, 2, "lambda"}});
  CHECK(commutator(a6) == make_algebra(R, 2, {{1, 2, 1, "1"}, {2, 1, 1, "-1"}}));
  CHECK(commutator(a5()) == apl::test::affine_bracket(Q));
  CHECK(commutator(a2()).is_zero());
}

TEST_CASE("pencil") {
  const AlgebraPair p(a2(), a3());
  CHECK(pencil(p, Q.one(), Q.zero()) == p.circ);
  CHECK(pencil(p, Q.zero(), Q.zero()).is_zero());
  const Field K = Field::laurent({"k1", "k2"});
  const AlgebraPair pk = convert(p, K);
  const Algebra sym = pencil(pk, K.parse("k1"), K.parse("k2"));
  CHECK(sym(0, 0, 0) == K.parse("k1"));
  CHECK(sym(0, 0, 1) == K.parse("k2"));
}

TEST_CASE("check_identity") {
  CHECK(check_identity(a5(), Identity::anti_pre_lie).passed());
  for (auto id : {Identity::anti_pre_lie, Identity::pre_lie, Identity::jacobi, Identity::associative,
                  Identity::commutative, Identity::antisymmetric})
    CHECK(check_identity(Algebra(Q, 3), id).passed());

  // Flipping the sign of e1 e1 in A5 keeps both identities: they are linear
  // in that coefficient and hold at -1 and 0.
  CHECK(check_identity(make_algebra(Q, 2, {{1, 1, 2, "1"}, {2, 1, 1, "-1"}}), Identity::anti_pre_lie).passed());

  // A5 with e2 e1 = -e1 moved to e1 e2 = -e1.
  const CheckReport r = check_identity(make_algebra(Q, 2, {{1, 1, 2, "-1"}, {1, 2, 1, "-1"}}), Identity::anti_pre_lie);
  REQUIRE(r.failures() == 4);
  const Witness& w = r.witnesses().front();
  CHECK(w.identity == "anti_pre_lie_1");
  CHECK(w.indices == std::vector<std::size_t>{0, 1, 0});
  CHECK(w.residual == apl::test::make_vector(Q, {"0", "1"}));
  CHECK(r.witnesses()[1].indices == std::vector<std::size_t>{0, 1, 1});
  CHECK(r.witnesses()[3].residual == apl::test::make_vector(Q, {"-1", "0"}));
  CHECK(!r.has_failure("anti_pre_lie_2"));
}

TEST_CASE("witness cap") {
  std::mt19937_64 rng(3);
  const Algebra a = apl::test::random_algebra(Q, 3, rng);
  const CheckReport r = check_identity(a, Identity::associative);
  CHECK(r.failures() > CheckReport::max_witnesses);
  CHECK(r.witnesses().size() == CheckReport::max_witnesses);
}

TEST_CASE("parse_identity") {
  CHECK(parse_identity("anti-pre-lie") == Identity::anti_pre_lie);
  CHECK(parse_identity("jacobi") == Identity::jacobi);
  CHECK_THROWS_AS(parse_identity("lie"), unknown_name);
}

TEST_CASE("check_compatible_pair") {
  const Field R = Field::laurent({"beta"});
  const AlgebraPair ca26(make_algebra(R, 2, {{1, 1, 2, "1"}}),
                         make_algebra(R, 2, {{1, 1, 2, "beta"}, {1, 2, 1, "1"}, {2, 1, 1, "1"}, {2, 2, 2, "1"}}));
  CHECK(check_compatible_pair(evaluate(ca26, {{"beta", 1}})).passed());
  CHECK(check_compatible_pair(ca26).passed());
  CHECK(check_compatible_pair(AlgebraPair(a5(), Algebra(Q, 2))).passed());
  // (A2, A3) is the member alpha = 0, delta = 1 of CA11.
  CHECK(check_compatible_pair(AlgebraPair(a2(), a3())).passed());
  const CheckReport bad = check_compatible_pair(AlgebraPair(a2(), a5()));
  CHECK(!bad.passed());
  CHECK(bad.has_failure("compatible_1"));
  CHECK_THROWS_AS(AlgebraPair(a2(), Algebra(Q, 3)), shape_mismatch);
}

TEST_CASE("check_compatible_lie") {
  const Algebra b = apl::test::affine_bracket(Q);
  CHECK(check_compatible_lie(AlgebraPair(b, commutator(a2()))).passed());
  CHECK(check_compatible_lie(AlgebraPair(b, b)).passed());

  const Algebra sl2 = make_algebra(Q, 3, {{1, 2, 3, "1"}, {2, 1, 3, "-1"}, {2, 3, 1, "1"}, {3, 2, 1, "-1"},
                                          {3, 1, 2, "1"}, {1, 3, 2, "-1"}});
  const Algebra b2 = make_algebra(Q, 3, {{1, 2, 1, "1"}, {2, 1, 1, "-1"}});
  CHECK(check_identity(sl2, Identity::jacobi).passed());
  CHECK(check_identity(b2, Identity::jacobi).passed());
  const CheckReport r = check_compatible_lie(AlgebraPair(sl2, b2));
  CHECK(r.failures() == 6);
  REQUIRE(!r.witnesses().empty());
  CHECK(r.witnesses().front().identity == "compatible_lie");
  CHECK(r.witnesses().front().indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.witnesses().front().residual == apl::test::make_vector(Q, {"0", "-1", "0"}));
}

TEST_CASE("check_compatible_associative") {
  CHECK(check_compatible_associative(AlgebraPair(Algebra(Q, 2), Algebra(Q, 2))).passed());
  CHECK(check_compatible_associative(AlgebraPair(a2(), a2())).passed());
  CHECK(!check_compatible_associative(AlgebraPair(a5(), Algebra(Q, 2))).passed());
}

TEST_CASE("transform and automorphisms") {
  const Matrix swap = apl::test::make_matrix(Q, {{"0", "1"}, {"1", "0"}});
  const Algebra t = transform(a2(), swap);
  CHECK(t == make_algebra(Q, 2, {{2, 2, 2, "1"}}));
  CHECK(check_automorphism(a2(), Matrix::identity(Q, 2)).passed());
  CHECK(!check_automorphism(a2(), swap).passed());
  CHECK(!check_automorphism(a2(), Matrix(Q, 2, 2)).passed());
}

TEST_CASE("property: commutative products, anti-pre-Lie iff associative") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    Algebra a(GF5, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = i; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
          const Scalar c = apl::test::random_scalar(GF5, rng, 0, 4);
          a.set(i, j, k, c);
          a.set(j, i, k, c);
        }
    CHECK(check_identity(a, Identity::anti_pre_lie).passed() == check_identity(a, Identity::associative).passed());
  }
}

TEST_CASE("property: sub-adjacent brackets of catalog families") {
  for (const Family& f : catalog_families()) {
    if (!f.is_compatible_family()) {
      CAPTURE(f.name);
      CHECK(check_identity(commutator(f.pair.circ), Identity::jacobi).passed());
      continue;
    }
    if (!family_verified(f)) continue;
    for (const auto& [label, pair] : branch_instances(f)) {
      CAPTURE(f.name);
      CAPTURE(label);
      CHECK(check_compatible_lie(commutator_pair(pair)).passed());
    }
  }
}

TEST_CASE("property: symbolic pencil of verified CA families") {
  const Field K = catalog_ring().extended({"k1", "k2"});
  const Scalar k1 = K.variable("k1"), k2 = K.variable("k2");
  for (const Family& f : catalog_families()) {
    if (!f.is_compatible_family() || !family_verified(f)) continue;
    for (const auto& [label, pair] : branch_instances(f)) {
      CAPTURE(f.name);
      CAPTURE(label);
      CHECK(check_identity(pencil(convert(pair, K), k1, k2), Identity::anti_pre_lie).passed());
    }
  }
}

TEST_CASE("property: random pencils of instantiated CA families") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> val(-4, 4), den(1, 3);
  for (const Family& f : catalog_families()) {
    if (!f.is_compatible_family() || !family_verified(f)) continue;
    for (int t = 0; t < 50; ++t) {
      Assignment at;
      for (const auto& p : f.params) at[p] = mpq_class(val(rng), den(rng));
      for (const auto& b : f.branches) at[b.variable] = b.values[t % b.values.size()];
      AlgebraPair p;
      try {
        p = instantiate(f, at);
      } catch (const precondition_failed&) {
        continue;
      }
      const Scalar c1 = Q.from_rational(mpq_class(val(rng), den(rng)));
      const Scalar c2 = Q.from_rational(mpq_class(val(rng), den(rng)));
      CAPTURE(f.name);
      CHECK(check_identity(pencil(p, c1, c2), Identity::anti_pre_lie).passed());
    }
  }
}
