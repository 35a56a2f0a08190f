#include <doctest.h>

#include "shuffle/symfunc.hpp"

using namespace shuffle;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SymFunc gen(Basis b, std::vector<int> lam) { return SymFunc::generator(b, P(std::move(lam))); }

}  // namespace

TEST_CASE("degree one generators all coincide") {
  for (Basis b : {Basis::h, Basis::e, Basis::m, Basis::s})
    CHECK(gen(b, {1}) == gen(Basis::p, {1}));
}

TEST_CASE("forced small conversions") {
  CHECK(convert(gen(Basis::h, {2}), Basis::s) == gen(Basis::s, {2}));
  CHECK(convert(gen(Basis::e, {2}), Basis::s) == gen(Basis::s, {1, 1}));
}

TEST_CASE("paper worked m-to-p example") {
  SymFunc f(Basis::m);
  f.add(P({3}), lp_const(1));
  f.add(P({2, 1}), lp_const(1) + lp_const(2) * lp_q());
  f.add(P({1, 1, 1}), lp_const(1) + lp_const(4) * lp_q() + lp_q(2));
  SymFunc expect(Basis::p);
  expect.add(P({3}), LaurentMPoly::constant(Rational(1, 3)) *
                         (lp_q(2) - lp_const(2) * lp_q() + lp_const(1)));
  expect.add(P({2, 1}),
             LaurentMPoly::constant(Rational(1, 2)) * (lp_const(1) - lp_q(2)));
  expect.add(P({1, 1, 1}), LaurentMPoly::constant(Rational(1, 6)) *
                               (lp_q(2) + lp_const(4) * lp_q() + lp_const(1)));
  CHECK(convert(f, Basis::p) == expect);
}

TEST_CASE("conversions round trip") {
  for (int d = 0; d <= 6; ++d) {
    for (const auto& lam : partitions_of(d)) {
      for (Basis from : {Basis::p, Basis::h, Basis::e, Basis::m, Basis::s}) {
        SymFunc f = SymFunc::generator(from, lam);
        for (Basis to : {Basis::p, Basis::h, Basis::e, Basis::m, Basis::s}) {
          SymFunc g = convert(convert(f, to), from);
          CHECK(g.basis == from);
          CHECK(g.coeffs == f.coeffs);
        }
      }
    }
  }
}

TEST_CASE("hall inner product") {
  CHECK(hall_inner(gen(Basis::p, {2}), gen(Basis::p, {2})) == lp_const(2));
  CHECK(hall_inner(gen(Basis::p, {1, 1}), gen(Basis::p, {1, 1})) == lp_const(2));
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : partitions_of(d))
      for (const auto& b : partitions_of(d))
        CHECK(hall_inner(gen(Basis::s, a.parts), gen(Basis::s, b.parts)) ==
              (a == b ? LaurentMPoly::one() : LaurentMPoly()));
  // different degrees pair to zero
  CHECK(hall_inner(gen(Basis::s, {2}), gen(Basis::s, {1})).is_zero());
}

TEST_CASE("plethysm") {
  // identity alphabet
  SymFunc f = sym_add(gen(Basis::s, {2, 1}), scalar_mul(lp_q(), gen(Basis::s, {3})));
  CHECK(plethysm(f, AlphabetExpr::X()) == f);
  // p2[(q-1)X] = (q^2-1) p2
  CHECK(plethysm(gen(Basis::p, {2}), AlphabetExpr::scaled_X(q_minus_one())) ==
        scalar_mul(lp_q(2) - lp_const(1), gen(Basis::p, {2})));
  // h_n[(1-u)v] = (1-u)v^n
  for (int n = 1; n <= 5; ++n) {
    SymFunc hn = plethysm(gen(Basis::h, {n}),
                          AlphabetExpr::pure_only(lp_var("v") - lp_var("u") * lp_var("v")));
    SymFunc expect(Basis::p);
    expect.add(P({}), (lp_const(1) - lp_var("u")) * lp_var("v", n));
    CHECK(hn == expect);
  }
  // h1[(1-q)y1] = (1-q) y1
  SymFunc h1 = plethysm(gen(Basis::h, {1}), AlphabetExpr::pure_only(one_minus_q() * lp_y(1)));
  SymFunc expect(Basis::p);
  expect.add(P({}), one_minus_q() * lp_y(1));
  CHECK(h1 == expect);
  // ring homomorphism in f on fixed pairs
  AlphabetExpr A{lp_q(), lp_t() * lp_y(1) - lp_const(1)};
  SymFunc g1 = gen(Basis::s, {2}), g2 = gen(Basis::e, {2, 1});
  CHECK(plethysm(sym_mul(g1, g2), A) == sym_mul(plethysm(g1, A), plethysm(g2, A)));
  // Exp additivity h_n[A+B] = sum h_i[A] h_{n-i}[B]
  AlphabetExpr B{LaurentMPoly::one(), lp_var("u")};
  AlphabetExpr AB{lp_q() + lp_const(1), lp_t() * lp_y(1) - lp_const(1) + lp_var("u")};
  for (int n = 0; n <= 4; ++n) {
    SymFunc lhs = plethysm(gen(Basis::h, n ? std::vector<int>{n} : std::vector<int>{}), AB);
    SymFunc rhs(Basis::p);
    for (int i = 0; i <= n; ++i) {
      SymFunc hi = plethysm(gen(Basis::h, i ? std::vector<int>{i} : std::vector<int>{}), A);
      SymFunc hj = plethysm(
          gen(Basis::h, (n - i) ? std::vector<int>{n - i} : std::vector<int>{}), B);
      rhs = sym_add(rhs, sym_mul(hi, hj));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pexp") {
  auto hs = pexp(AlphabetExpr::X(), 2);
  REQUIRE(hs.size() == 3);
  CHECK(hs[0] == SymFunc::one(Basis::p));
  CHECK(hs[1] == gen(Basis::h, {1}));
  CHECK(hs[2] == gen(Basis::h, {2}));
  // h_n[-zX] = z^n h_n[-X]
  for (int n = 1; n <= 4; ++n) {
    SymFunc lhs = plethysm(gen(Basis::h, {n}), AlphabetExpr::scaled_X(-lp_var("z")));
    SymFunc rhs = scalar_mul(lp_var("z", n),
                             plethysm(gen(Basis::h, {n}), AlphabetExpr::minus_X()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("omega") {
  for (int n = 1; n <= 5; ++n) {
    SymFunc lhs = omega(gen(Basis::h, {n}));
    SymFunc rhs = scalar_mul(LaurentMPoly::constant(n % 2 ? Rational(-1) : Rational(1)),
                             gen(Basis::e, {n}));
    CHECK(lhs == rhs);
  }
  SymFunc f = sym_add(scalar_mul(lp_q() - lp_t(-2), gen(Basis::s, {2, 1})),
                      scalar_mul(lp_t(), gen(Basis::s, {1, 1})));
  CHECK(omega_bar(omega_bar(f)) == f);
  CHECK(omega(omega(f)) == f);
}

TEST_CASE("creation operators") {
  SymFunc one = SymFunc::one(Basis::p);
  for (int r = 0; r <= 5; ++r) {
    SymFunc br = op_B(r, one);
    SymFunc expect = r == 0 ? one
                            : scalar_mul(LaurentMPoly::constant(r % 2 ? Rational(-1)
                                                                      : Rational(1)),
                                         gen(Basis::e, {r}));
    CHECK(br == expect);
  }
  for (int a = 1; a <= 5; ++a) {
    SymFunc ca = op_C(a, one);
    CHECK(ca == scalar_mul(-lp_q(1 - a), gen(Basis::h, {a})));
  }
  // q B_{a+2} B_{b+1} - B_{a+1} B_{b+2} antisymmetric in a, b
  SymFunc s1 = gen(Basis::s, {1});
  for (const SymFunc& f : {one, s1}) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        SymFunc lhs = sym_sub(scalar_mul(lp_q(), op_B(a + 2, op_B(b + 1, f))),
                              op_B(a + 1, op_B(b + 2, f)));
        SymFunc rhs = sym_sub(scalar_mul(lp_q(), op_B(b + 2, op_B(a + 1, f))),
                              op_B(b + 1, op_B(a + 2, f)));
        CHECK(lhs == sym_neg(rhs));
      }
    }
  }
  // B_0 C_m = q C_m B_0 applied to 1
  for (int m = 1; m <= 5; ++m) {
    SymFunc lhs = op_B(0, op_C(m, one));
    SymFunc rhs = scalar_mul(lp_q(), op_C(m, op_B(0, one)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("realize") {
  CHECK(realize(gen(Basis::e, {1}), 2, 0) == lp_var("x1") + lp_var("x2"));
  CHECK(realize(gen(Basis::h, {2}), 0, 1).is_zero());
  CHECK(realize(gen(Basis::e, {2}), 0, 1) == lp_y(1, 2));
}

TEST_CASE("appendix closed forms, small frozen values") {
  CHECK(m_at_qminus1(P({1})) == lp_q() - lp_const(1));
  // h2[-X] = -h2 + h11
  SymFunc expect(Basis::h);
  expect.add(P({2}), -lp_const(1));
  expect.add(P({1, 1}), lp_const(1));
  CHECK(h_negX_expansion(2) == expect);
  CHECK(h_negX_expansion(2) ==
        plethysm(gen(Basis::h, {2}), AlphabetExpr::minus_X()));
  CHECK(m_qminus1_expansion(P({1})) ==
        plethysm(gen(Basis::m, {1}), AlphabetExpr::scaled_X(q_minus_one())));
}
