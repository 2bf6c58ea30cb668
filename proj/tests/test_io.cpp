#include <doctest.h>

#include <fstream>
#include <sstream>

#include "blockpoly/io.hpp"
#include "blockpoly/oracles.hpp"
#include "schema_check.hpp"
#include "test_support.hpp"

using namespace blockpoly;
using namespace testsupport;

TEST_SUITE_BEGIN("io");

TEST_CASE("matrix market ingestion of the fixture matrices") {
  auto m1 = read_matrix_file(data_path("m1.mm"));
  REQUIRE(m1.all_integer);
  CHECK(m1.integer_matrix() == matrix_m1());
  auto m2 = read_matrix_file(data_path("m2.mm"));
  CHECK(m2.integer_matrix() == matrix_m2());
}

TEST_CASE("matrix market variants and errors") {
  {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate real symmetric\n% comment\n3 3 2\n1 2 1.0\n3 3 2.5\n");
    auto m = read_matrix_market(in);
    CHECK(m.values[0 * 3 + 1] == Complex{1.0, 0.0});
    CHECK(m.values[1 * 3 + 0] == Complex{1.0, 0.0});
    CHECK_FALSE(m.all_integer);  // 2.5
    CHECK_THROWS_AS(m.integer_matrix(), ConfigError);
  }
  {
    std::istringstream in("%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 3.5 -1\n");
    auto m = read_matrix_market(in);
    CHECK(m.values[1] == Complex{3.5, -1.0});
  }
  {
    std::istringstream in("not a banner\n");
    CHECK_THROWS_AS(read_matrix_market(in), FormatError);
  }
  {
    std::istringstream in("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 5\n");
    CHECK_THROWS_WITH_AS(read_matrix_market(in), doctest::Contains("line 3"), FormatError);
  }
  {
    std::istringstream in("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 5\n");
    CHECK_THROWS_AS(read_matrix_market(in), FormatError);  // count mismatch
  }
  {
    std::istringstream in("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
    CHECK_THROWS_AS(read_matrix_market(in), FormatError);
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_matrix_market(in), FormatError);
  }
}

TEST_CASE("csv ingestion") {
  auto m1 = read_matrix_file(data_path("m1.csv"));
  CHECK(m1.integer_matrix() == matrix_m1());

  auto c = read_matrix_file(data_path("complex2.csv"));
  CHECK_FALSE(c.all_integer);
  CHECK(c.complex_matrix().at(0, 0) == Complex{1.0, 2.0});
  CHECK(c.complex_matrix().at(0, 1) == Complex{0.0, 0.0});
  CHECK(c.complex_matrix().at(1, 0) == Complex{3.0, 0.0});
  CHECK(c.complex_matrix().at(1, 1) == Complex{0.0, -4.5});

  std::istringstream ragged("1,2\n3\n");
  CHECK_THROWS_WITH_AS(read_csv(ragged), doctest::Contains("line 2"), FormatError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), FormatError);
  std::istringstream bad("1,zzz\n");
  CHECK_THROWS_AS(read_csv(bad), FormatError);
}

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("3") == Complex{3, 0});
  CHECK(parse_complex("-4.5") == Complex{-4.5, 0});
  CHECK(parse_complex("2i") == Complex{0, 2});
  CHECK(parse_complex("-i") == Complex{0, -1});
  CHECK(parse_complex("i") == Complex{0, 1});
  CHECK(parse_complex("1+2i") == Complex{1, 2});
  CHECK(parse_complex("3-0.5i") == Complex{3, -0.5});
  CHECK(parse_complex("1e-3+2.5e2i") == Complex{0.001, 250});
  CHECK(parse_complex("-1.5-2i") == Complex{-1.5, -2});
  CHECK(parse_complex(" 4+i ") == Complex{4, 1});
  CHECK_THROWS_AS(parse_complex(""), FormatError);
  CHECK_THROWS_AS(parse_complex("abc"), FormatError);

  // formatting round trip
  for (Complex z : {Complex{1, 2}, Complex{-3.5, 0}, Complex{0, -1}, Complex{0.25, 1}}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
}

TEST_CASE("dot export") {
  auto g = digraph_of_matrix(matrix_m1());
  auto d = decompose(g);
  std::string dot = to_dot(g, &d, true);
  CHECK(dot.find("v2 [label=\"v2\\n5\", color=red, fontcolor=red]") != std::string::npos);
  CHECK(dot.find("v6 [label=\"v6\\n-4\", color=red, fontcolor=red]") != std::string::npos);
  CHECK(dot.find("v7 [label=\"v7\\n3\"]") != std::string::npos);
  // the symmetric pair (1,3)/(3,1) with equal weight collapses to one edge
  CHECK(dot.find("v1 -> v3 [label=\"2\", dir=none") != std::string::npos);
  CHECK(dot.find("v3 -> v1") == std::string::npos);
  // asymmetric pair stays directed both ways
  CHECK(dot.find("v1 -> v2 [label=\"3\"") != std::string::npos);
  CHECK(dot.find("v2 -> v1 [label=\"-7\"") != std::string::npos);
}

TEST_CASE("polynomial json shape") {
  auto p = Polynomial<BigInt>(std::vector<BigInt>{BigInt(-20), BigInt(-1), BigInt(1)});
  auto j = json_io::polynomial_to_json(p);
  CHECK(j["mode"] == "int");
  CHECK(j["coeffs"] == nlohmann::json::array({-20, -1, 1}));

  // coefficients beyond int64 serialize as decimal strings
  auto big = Polynomial<BigInt>(
      std::vector<BigInt>{BigInt::from_string("123456789123456789123456789"), BigInt(1)});
  auto jb = json_io::polynomial_to_json(big);
  CHECK(jb["coeffs"][0] == "123456789123456789123456789");

  auto cp = Polynomial<Complex>(std::vector<Complex>{{1.5, -2.0}, {0, 1}});
  auto jc = json_io::polynomial_to_json(cp);
  CHECK(jc["mode"] == "complex");
  CHECK(jc["coeffs"][0] == nlohmann::json::array({1.5, -2.0}));
}

TEST_CASE("the schema checker itself accepts and rejects") {
  std::ifstream in(std::string(BLOCKPOLY_SCHEMA_DIR) + "/report.schema.json");
  REQUIRE(in.good());
  nlohmann::json schema;
  in >> schema;

  nlohmann::json ok = {{"command", "det"},
                       {"input", "x.mm"},
                       {"mode", "int"},
                       {"n", 3},
                       {"engine", "theorem"},
                       {"value", 7}};
  std::string why;
  CHECK(schemacheck::validate_report(schema, ok, &why));

  nlohmann::json bad = ok;
  bad["command"] = "frobnicate";
  CHECK_FALSE(schemacheck::validate_report(schema, bad));
  nlohmann::json missing = {{"command", "det"}};
  CHECK_FALSE(schemacheck::validate_report(schema, missing));
  nlohmann::json extra = ok;
  extra["surprise"] = 1;
  CHECK_FALSE(schemacheck::validate_report(schema, extra));
}

TEST_SUITE_END();
