#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieder/report.hpp"

using namespace lieder;

TEST_CASE("algebra documents round-trip through the canonical printer") {
  for (const char* name : {"sl2", "heis3", "aff1", "oscillator"}) {
    LieAlgebra L = zoo_build_finite(name);
    std::string text = print_algebra_description(L.description());
    LieAlgebra back = load_algebra(text);
    CHECK(back.name() == L.name());
    CHECK(back.dim() == L.dim());
    CHECK(back.constants() == L.constants());
    // canonical printer is a fixed point
    CHECK(print_algebra_description(back.description()) == text);
  }
  LieAlgebra gal3 = zoo_build_finite("gal", {{"d", rat(3)}});
  LieAlgebra back = load_algebra(print_algebra_description(gal3.description()));
  CHECK(back.constants() == gal3.constants());
  for (int i = 0; i < back.dim(); ++i)
    CHECK(back.grading(i) == gal3.grading(i));
}

TEST_CASE("gtilde round-trips with exact rational coefficients") {
  LieAlgebra g = zoo_build_finite("gtilde", {{"l", rat(3, 2)}});
  LieAlgebra back = load_algebra(print_algebra_description(g.description()));
  CHECK(back.constants() == g.constants());
}

TEST_CASE("superalgebras round-trip including odd diagonal brackets") {
  AlgebraDescription d;
  d.name = "oddheis";
  d.basis = {{"h", 0}, {"q", 1}};
  d.brackets = {{"q", "q", {{"h", rat(1)}}}};
  LieAlgebra s = LieAlgebra::build(d);
  std::string text = print_algebra_description(s.description());
  LieAlgebra back = load_algebra(text);
  CHECK(back.is_super());
  CHECK(back.odd_diagonal() == s.odd_diagonal());
  CHECK(back.validate_jacobi().pass);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_algebra_description("{\n  \"name\": \"x\",\n  bad\n}");
    FAIL("expected a parse error");
  } catch (const FormatError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
  }
}

TEST_CASE("semantic validation of algebra documents") {
  CHECK_THROWS_AS(parse_algebra_description("[1,2]"), FormatError);
  CHECK_THROWS_AS(parse_algebra_description("{\"name\":\"x\",\"basis\":[]}"),
                  FormatError);
  CHECK_THROWS_AS(
      parse_algebra_description(
          "{\"name\":\"x\",\"basis\":[{\"label\":\"a\"}],\"extra\":1}"),
      FormatError);
  CHECK_THROWS_AS(
      parse_algebra_description(
          "{\"name\":\"x\",\"basis\":[{\"label\":\"2bad\"}]}"),
      FormatError);
  // rational grammar: "1.5" is not accepted
  CHECK_THROWS_AS(
      parse_algebra_description(
          "{\"name\":\"x\",\"basis\":[{\"label\":\"a\"},{\"label\":\"b\"}],"
          "\"brackets\":[{\"x\":\"a\",\"y\":\"b\",\"value\":[{\"basis\":\"a\","
          "\"coeff\":\"1.5\"}]}]}"),
      std::exception);
  // semantic errors from the builder pass through
  CHECK_THROWS_AS(
      load_algebra(
          "{\"name\":\"x\",\"basis\":[{\"label\":\"a\"},{\"label\":\"a\"}]}"),
      BuildError);
}

TEST_CASE("coefficients accept integers and rational strings") {
  AlgebraDescription d = parse_algebra_description(
      "{\"name\":\"x\",\"basis\":[{\"label\":\"a\"},{\"label\":\"b\"},"
      "{\"label\":\"c\"}],"
      "\"brackets\":[{\"x\":\"a\",\"y\":\"b\",\"value\":["
      "{\"basis\":\"c\",\"coeff\":2},{\"basis\":\"b\",\"coeff\":\"-7/3\"}]}]}");
  REQUIRE(d.brackets.size() == 1);
  CHECK(d.brackets[0].value[0].second == 2);
  CHECK(d.brackets[0].value[1].second == rat(-7, 3));
}

TEST_CASE("linear map documents validate the target algebra") {
  LieAlgebra aff = zoo_build_finite("aff1");
  DerivationSpace D = delta_derivations(aff, rat(1, 2));
  for (const auto& b : D.basis) {
    std::string doc = serialize_linear_map(aff, b);
    LinearMap back = parse_linear_map(aff, doc);
    CHECK(back == b);
  }
  std::string doc = serialize_linear_map(aff, identity_map(2));
  LieAlgebra sl2 = zoo_build_finite("sl2");
  CHECK_THROWS_AS(parse_linear_map(sl2, doc), FormatError);

  // reordered basis is rejected
  std::string swapped = doc;
  auto pos = swapped.find("\"h\"");
  auto pos2 = swapped.find("\"x\"");
  REQUIRE(pos != std::string::npos);
  REQUIRE(pos2 != std::string::npos);
  swapped.replace(pos, 3, "\"x\"");
  swapped.replace(pos2, 3, "\"h\"");
  CHECK_THROWS_AS(parse_linear_map(aff, swapped), FormatError);
}

TEST_CASE("product documents round-trip") {
  LieAlgebra aff = zoo_build_finite("aff1");
  TPStructure tp = tp_construct_solvable(aff);
  std::string doc = serialize_product(aff, tp.product);
  CommProduct back = parse_product(aff, doc);
  CHECK(back.entries() == tp.product.entries());
  LieAlgebra sl2 = zoo_build_finite("sl2");
  CHECK_THROWS_AS(parse_product(sl2, doc), FormatError);
}

TEST_CASE("machine reports round-trip through their canonical rendering") {
  LieAlgebra aff = zoo_build_finite("aff1");
  Json report;
  report["algebra"] = algebra_json(aff);
  report["jacobi"] = jacobi_json(aff, aff.validate_jacobi());
  report["derivations"] =
      derivation_space_json(delta_derivations(aff, rat(1, 2)), true);
  report["tp"] = tp_structure_json(aff, tp_construct_solvable(aff));
  std::string printed = report.dump(2);
  CHECK(Json::parse(printed) == report);

  GradedAlgebra vir = zoo_build_graded("virasoro");
  Json graded = shift_solve_json(shift_ansatz_solve(vir, 2, 6, ParityMode::Even), true);
  CHECK(Json::parse(graded.dump(2)) == graded);
}

TEST_CASE("pretty helpers") {
  LieAlgebra aff = zoo_build_finite("aff1");
  SparseVec v{{0, rat(2)}, {1, rat(1)}};
  CHECK(pretty_value(aff, v) == "2*h + x");
  CHECK(pretty_value(aff, {}) == "0");
}
