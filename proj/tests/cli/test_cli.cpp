#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "apl/cli.hpp"
#include "apl/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result apl_run(std::vector<std::string> args) {
  args.insert(args.begin(), "apl");
  std::ostringstream out, err;
  const int code = apl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(APL_TEST_DATA) + "/" + name; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "apl_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("check identities of single algebras") {
  auto r = apl_run({"check", "--file", data("a5.alg.json"), "--identity", "anti-pre-lie"});
  CHECK(r.code == apl::cli::ok);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
  CHECK(r.err.find("PASS") != std::string::npos);

  r = apl_run({"check", "--file", data("g.alg.json"), "--identity", "jacobi"});
  CHECK(r.code == apl::cli::ok);

  r = apl_run({"check", "--file", data("a5.alg.json"), "--identity", "associative"});
  CHECK(r.code == apl::cli::checks_failed);
  CHECK(r.err.find("FAIL") != std::string::npos);
}

TEST_CASE("check pairs and forms") {
  CHECK(apl_run({"check", "--pair", data("ca26.alg.json"), "--compatible", "--params", "beta=2"}).code == apl::cli::ok);
  CHECK(apl_run({"check", "--pair", data("g.alg.json"), "--compatible-lie"}).code == apl::cli::ok);
  CHECK(apl_run({"check", "--form", data("b.json")}).code == apl::cli::ok);
  CHECK(apl_run({"check", "--form", data("b.json"), "--cocycle", "--pair", data("g.alg.json")}).code ==
        apl::cli::ok);
}

TEST_CASE("bad input exits with status 2") {
  CHECK(apl_run({"check", "--file", data("corrupted.alg.json")}).code == apl::cli::bad_input);
  CHECK(apl_run({"check", "--file", data("missing.alg.json")}).code == apl::cli::bad_input);
  CHECK(apl_run({"catalog", "instantiate", "CA99"}).code == apl::cli::bad_input);
  CHECK(apl_run({"catalog", "instantiate", "CA26", "--params", "beta=1", "--prime", "4"}).code ==
        apl::cli::bad_input);
  CHECK(apl_run({"z2", "--family", "A6", "--mode", "brute"}).code == apl::cli::bad_input);
  CHECK(apl_run({"bogus"}).code == apl::cli::bad_input);
  CHECK(apl_run({}).code == apl::cli::bad_input);
  CHECK(apl_run({"--help"}).code == apl::cli::ok);
}

TEST_CASE("catalog list, show and instantiate") {
  auto r = apl_run({"catalog", "list"});
  CHECK(r.code == apl::cli::ok);
  CHECK(r.out.find("CA45") != std::string::npos);
  r = apl_run({"catalog", "show", "A5"});
  CHECK(r.code == apl::cli::ok);
  r = apl_run({"catalog", "instantiate", "CA26", "--params", "beta=2"});
  CHECK(r.code == apl::cli::ok);
  const auto file = apl::parse_algebra_json(r.out);
  CHECK(file.has_star);
  CHECK(file.pair.field().is_rational());
  r = apl_run({"catalog", "instantiate", "CA26", "--params", "beta=2", "--prime", "5"});
  CHECK(r.code == apl::cli::ok);
  CHECK(apl::parse_algebra_json(r.out).pair.field().characteristic() == 5);
}

TEST_CASE("derive from vectors and from a cocycle") {
  const fs::path out = scratch() / "fv.alg.json";
  auto r = apl_run({"derive", "from-vectors", "--form", data("id2.json"), "--s1", "e1", "--s2", "e2", "--out",
                    out.string()});
  CHECK(r.code == apl::cli::ok);
  const auto pair = apl::parse_algebra_json(apl::read_file(out.string())).pair;
  const apl::Field& q = pair.field();
  CHECK(pair.circ(0, 1, 1) == q.from_int(-1));
  CHECK(pair.circ(1, 1, 0) == q.from_int(1));

  r = apl_run({"derive", "from-cocycle", "--form", data("b.json"), "--brackets", data("g.alg.json")});
  CHECK(r.code == apl::cli::ok);
  CHECK(r.err.find("PASS commutator_recovery") != std::string::npos);
}

TEST_CASE("derive semidirect and operator constructions") {
  CHECK(apl_run({"derive", "semidirect", "--rep", data("r.json")}).code == apl::cli::ok);
  const auto r = apl_run({"derive", "on-domain", "--map", data("id.map.json"), "--rep", data("r.json")});
  CHECK(r.code == apl::cli::checks_failed);
  CHECK(r.err.find("precondition failed [anti_o]") != std::string::npos);
  CHECK(r.out.find("\"precondition\"") != std::string::npos);
  CHECK(apl_run({"derive", "pairing", "--dim", "2"}).code == apl::cli::ok);
}

TEST_CASE("ops on the zero map") {
  CHECK(apl_run({"ops", "rb", "--map", data("zero.map.json"), "--brackets", data("g.alg.json"), "--strong",
                 "--converse"})
            .code == apl::cli::ok);
  CHECK(apl_run({"ops", "anti-o", "--map", data("zero.map.json"), "--rep", data("r.json")}).code == apl::cli::ok);
}

TEST_CASE("z2 output does not depend on the worker count") {
  const auto one = apl_run({"z2", "--family", "A9", "--mode", "brute", "--workers", "1"});
  const auto many = apl_run({"z2", "--family", "A9", "--mode", "brute", "--workers", "7"});
  CHECK(one.code == many.code);
  CHECK(one.out == many.out);
  CHECK_FALSE(one.out.empty());
}

TEST_CASE("--workers overrides APL_WORKERS") {
  ::setenv("APL_WORKERS", "zero", 1);
  CHECK(apl_run({"z2", "--family", "A9", "--mode", "brute"}).code == apl::cli::bad_input);
  CHECK(apl_run({"z2", "--family", "A9", "--mode", "brute", "--workers", "2"}).code != apl::cli::bad_input);
  ::setenv("APL_WORKERS", "3", 1);
  CHECK(apl_run({"z2", "--family", "A9", "--mode", "brute"}).code != apl::cli::bad_input);
  ::unsetenv("APL_WORKERS");
}
