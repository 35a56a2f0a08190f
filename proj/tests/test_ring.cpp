#include <doctest.h>

#include "shuffle/bareiss.hpp"
#include "shuffle/fraction.hpp"
#include "shuffle/laurent.hpp"

using namespace shuffle;

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4).str() == "4");
}

TEST_CASE("bar involution") {
  LaurentMPoly p = lp_q(2) * lp_t(-1);
  CHECK(p.bar() == lp_q(-2) * lp_t(1));
  LaurentMPoly s = lp_const(1) + lp_q();
  CHECK(s.bar() == lp_const(1) + lp_q(-1));
  LaurentMPoly r = lp_const(3) * lp_q() - lp_t(3);
  CHECK(r.bar().bar() == r);
  CHECK_THROWS_AS((lp_y(1) * lp_q()).bar(), VariableOutOfScope);
}

TEST_CASE("frobenius power") {
  CHECK((lp_q() - lp_const(1)).frobenius(2) == lp_q(2) - lp_const(1));
  LaurentMPoly half_y_tinv =
      LaurentMPoly::monomial(Rational(1, 2), {{"y1", 1}, {"t", -1}});
  CHECK(half_y_tinv.frobenius(3) ==
        LaurentMPoly::monomial(Rational(1, 2), {{"y1", 3}, {"t", -3}}));
  LaurentMPoly p = lp_q() + lp_t(-2) * lp_y(2);
  CHECK(p.frobenius(1) == p);
  // p_m . p_n = p_{mn}
  CHECK(p.frobenius(2).frobenius(3) == p.frobenius(6));
}

TEST_CASE("exact division") {
  CHECK(exact_div(lp_q(2) - lp_const(1), lp_q() - lp_const(1)) == lp_q() + lp_const(1));
  CHECK(exact_div(LaurentMPoly(), lp_t() - lp_q()).is_zero());
  // Laurent units divide everything
  CHECK(exact_div(lp_const(1) + lp_q(), lp_q()) == lp_q(-1) + lp_const(1));
  CHECK_THROWS_AS(exact_div(lp_q() + lp_t(), lp_q() - lp_const(1)), InexactDivision);
  // round trip with several variables
  LaurentMPoly a = lp_q(2) * lp_y(1) - lp_t(-1) + LaurentMPoly::constant(Rational(5, 3));
  LaurentMPoly b = lp_y(2, 3) - lp_q(-2) * lp_t();
  CHECK(exact_div(a * b, b) == a);
}

TEST_CASE("coeff_of") {
  LaurentMPoly p = lp_var("z", 2) * lp_q() + lp_var("z");
  CHECK(p.coeff_of("z", 2) == lp_q());
  CHECK((lp_q() + lp_t()).coeff_of("z", 0) == lp_q() + lp_t());
  CHECK((lp_var("z", -1) * (lp_q() - lp_const(1))).coeff_of("z", -1) ==
        lp_q() - lp_const(1));
  CHECK(p.coeff_of("z", 5).is_zero());
}

TEST_CASE("ring axioms on fixed triples") {
  LaurentMPoly a = lp_q() + lp_t(-1), b = lp_y(1) - lp_q(2), c = lp_const(2) * lp_t();
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  // bar is an involutive ring homomorphism on the q,t subring
  LaurentMPoly qa = lp_q(3) - lp_t(2);
  CHECK((qa * a).bar() == qa.bar() * a.bar());
  CHECK(qa.bar().bar() == qa);
}

TEST_CASE("bareiss identity and 1x1") {
  PolyMatrix I = {{lp_const(1), lp_const(0)}, {lp_const(0), lp_const(1)}};
  PolyVector rhs = {lp_q(), lp_t()};
  auto sol = bareiss_solve(I, rhs);
  CHECK(sol.det == lp_const(1));
  CHECK(sol.nums[0] == lp_q());
  CHECK(sol.nums[1] == lp_t());

  auto sol1 = bareiss_solve({{lp_q() - lp_const(1)}}, {lp_q(2) - lp_const(1)});
  CHECK(exact_div(sol1.nums[0], sol1.det) == lp_q() + lp_const(1));
}

TEST_CASE("bareiss 2x2 Macdonald change of basis") {
  // H2 = s2 + q s11, H11 = s2 + t s11 => s11 = (H2 - H11)/(q - t)
  PolyMatrix M = {{lp_const(1), lp_const(1)}, {lp_q(), lp_t()}};
  PolyVector rhs = {lp_const(0), lp_const(1)};
  auto sol = bareiss_solve(M, rhs);
  RingFraction c2(sol.nums[0], sol.det), c11(sol.nums[1], sol.det);
  CHECK(c2 == RingFraction(lp_const(1), lp_q() - lp_t()));
  CHECK(c11 == RingFraction(-lp_const(1), lp_q() - lp_t()));
}

TEST_CASE("bareiss singular") {
  PolyMatrix M = {{lp_q(), lp_q()}, {lp_q(), lp_q()}};
  CHECK_THROWS_AS(bareiss_solve(M, {lp_const(1), lp_const(1)}), SingularMatrix);
  CHECK(bareiss_det(M).is_zero());
}

TEST_CASE("bareiss residual on a fixed 3x3 system") {
  PolyMatrix M = {{lp_q(), lp_const(1), lp_t()},
                  {lp_const(0), lp_q() - lp_const(1), lp_const(2)},
                  {lp_t(), lp_const(0), lp_q(2)}};
  PolyVector rhs = {lp_const(1), lp_t(2), lp_q() + lp_const(1)};
  auto sol = bareiss_solve(M, rhs);
  for (size_t i = 0; i < 3; ++i) {
    LaurentMPoly acc;
    for (size_t j = 0; j < 3; ++j) acc += M[i][j] * sol.nums[j];
    CHECK(acc == rhs[i] * sol.det);
  }
}

TEST_CASE("ring fraction equality by cross multiplication") {
  RingFraction a(lp_q(2) - lp_const(1), lp_q() - lp_const(1));
  RingFraction b(lp_q() + lp_const(1), lp_const(1));
  CHECK(a == b);
  CHECK(a.to_laurent() == lp_q() + lp_const(1));
}
