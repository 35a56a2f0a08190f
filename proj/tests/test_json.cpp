#include <doctest.h>

#include "shuffle/json_io.hpp"

using namespace shuffle;

TEST_CASE("laurent wire format") {
  LaurentMPoly p = LaurentMPoly::monomial(Rational(3, 2), {{"q", 2}, {"t", -1}}) +
                   LaurentMPoly::constant(Rational(-1));
  Json j = laurent_to_json(p);
  CHECK(j["vars"] == Json::array({"q", "t"}));
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["exp"] == Json::array({0, 0}));
  CHECK(j["terms"][0]["coeff"] == "-1");
  CHECK(j["terms"][1]["exp"] == Json::array({2, -1}));
  CHECK(j["terms"][1]["coeff"] == "3/2");
  CHECK(laurent_from_json(j) == p);
  // unused variables are dropped on write
  CHECK(laurent_to_json(p * lp_y(1, 0))["vars"].size() == 2);
}

TEST_CASE("symfunc and vk round trips") {
  SymFunc f(Basis::s);
  f.add(Partition({2, 1}), lp_q() - lp_t(-1));
  f.add(Partition({1}), lp_const(2));
  CHECK(symfunc_from_json(symfunc_to_json(f)) == f);

  VkElement v = vk_scalar_mul(lp_q() * lp_y(1, 2), VkElement::unit(2));
  v = vk_add(v, vk_scalar_mul(lp_t() * lp_y(2),
                              VkElement::from_sym(2, SymFunc::generator(
                                                         Basis::s, Partition({1, 1})))));
  Json j = vk_to_json(v);
  CHECK(j["k"] == 2);
  CHECK(vk_from_json(j) == v);
}

TEST_CASE("path parsing") {
  CHECK(path_from_string("NNEENE") == DyckPath::from_word("NNEENE"));
  CHECK(path_from_string("0,1,0") == DyckPath::from_word("NNEENE"));
  CHECK(path_from_string("") == DyckPath());
  Json j = path_to_json(DyckPath::from_word("NNEENE"));
  CHECK(j["area"] == 1);
  CHECK(j["touch"] == Json::array({2, 1}));
  CHECK(j["touch_prime"] == Json::array({1, 2}));
}
