#include "doctest.h"

#include "isospec/errors.hpp"
#include "isospec/serialize.hpp"
#include "isospec/verify.hpp"
#include "test_support.hpp"

using namespace isospec;
using namespace testing_support;

TEST_CASE("scalars travel as strings") {
  CHECK(to_json(q(-3, 4)) == Json("-3/4"));
  CHECK(to_json(Scalar(5)) == Json("5"));
  CHECK(scalar_from_json(Json("6/8")) == q(3, 4));
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json(0.5)), ParseError);
}

TEST_CASE("algebra element layout") {
  const AlgebraElement e = AlgebraElement::word(2, 1, q(1, 2)) - AlgebraElement::word(0, 0, 3);
  const Json j = to_json(e);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["m"] == 0);
  CHECK(j[0]["n"] == 0);
  CHECK(j[0]["coeff"] == "-3");
  CHECK(j[1]["m"] == 2);
  CHECK(j[1]["coeff"] == "1/2");
  CHECK(algebra_element_from_json(j) == e);
  CHECK(to_json(AlgebraElement()).empty());
}

TEST_CASE("polynomial and shift operator layout") {
  const Polynomial p({1, q(2, 3)}, BasisTag::quasi(GridStep(q(1, 2))));
  const Json j = to_json(p);
  CHECK(j["basis"]["quasi"] == "1/2");
  CHECK(j["coeffs"] == Json::array({"1", "2/3"}));
  CHECK(to_json(poly({0, 1}))["basis"] == "monomial");

  const GridStep step(-1);
  ShiftOperator s(step);
  s += ShiftOperator::term(step, 1, poly({1}));
  s += ShiftOperator::term(step, -1, poly({0, -2}));
  const Json sj = to_json(s);
  CHECK(sj["delta"] == "-1");
  CHECK(sj["terms"][0]["shift"] == -1);
  CHECK(sj["terms"][1]["shift"] == 1);
}

TEST_CASE("round trips on random values") {
  RationalSampler rng(59);
  for (int t = 0; t < 30; ++t) {
    const AlgebraElement e = rng.algebra_element(4, 4);
    CHECK(algebra_element_from_json(Json::parse(to_json(e).dump())) == e);

    const GridStep step(rng.next_nonzero());
    const Polynomial p = rng.polynomial(t % 9);
    CHECK(polynomial_from_json(Json::parse(to_json(p).dump())) == p);
    const Polynomial pq = p.retagged(BasisTag::quasi(step));
    CHECK(polynomial_from_json(Json::parse(to_json(pq).dump())) == pq);

    const ShiftOperator s = realize_lattice(e, step);
    CHECK(shift_operator_from_json(Json::parse(to_json(s).dump())) == s);
  }
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(algebra_element_from_json(Json::parse(R"([{"m": -1, "n": 0, "coeff": "1"}])")), ParseError);
  CHECK_THROWS_AS(algebra_element_from_json(Json::parse(R"({"m": 1})")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"basis": "chebyshev", "coeffs": []})")), ParseError);
  CHECK_THROWS_AS(shift_operator_from_json(Json::parse(R"({"delta": "0", "terms": []})")), std::exception);
}

TEST_CASE("report serializations") {
  const AlgebraElement h = build_E2(preset_classical(ClassicalFamily::kHermite));
  const auto m = matrix_on_basis(continuum_action(h), BasisTag::monomial(), 2);
  const Json mj = to_json(m);
  CHECK(mj.contains("orientation"));
  CHECK(mj["rows"].size() == 3);
  CHECK(mj["rows"][0][2] == "2");

  const Json rj = to_json(spectral_report(m));
  CHECK(rj["triangular"] == true);
  CHECK(rj["eigenpairs"].size() == 3);

  const Json cj = to_json(isospectral_check(h, GridStep(1), 4));
  CHECK(cj["verdict"] == true);
  CHECK(cj["continuum_char_poly"] == cj["lattice_char_poly"]);

  const auto fam = discrete_family(ClassicalFamily::kHermite, GridStep(1), 2);
  const Json fj = to_json(fam[2]);
  CHECK(fj["k"] == 2);
  CHECK(fj["eigenvalue"] == "-4");
  CHECK(fj["verified"] == true);
}

TEST_CASE("polynomial table csv") {
  const std::string csv = polynomial_table_csv({"k=0", "k=1"}, {poly({1}), poly({q(1, 2), -3})});
  CHECK(csv == "label,c0,c1\nk=0,1,0\nk=1,1/2,-3\n");
}
