#include <doctest.h>

#include "shuffle/charfunc.hpp"
#include "shuffle/symfunc.hpp"

using namespace shuffle;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SymFunc s_poly(std::initializer_list<std::pair<std::vector<int>, LaurentMPoly>> terms) {
  SymFunc f(Basis::s);
  for (const auto& [parts, c] : terms) f.add(Partition(parts), c);
  return f;
}

}  // namespace

TEST_CASE("chi frozen examples") {
  CHECK(chi(DyckPath()) == SymFunc::one(Basis::m));
  DyckPath nnenee = DyckPath::from_word("NNENEE");
  SymFunc f = chi(nnenee);
  SymFunc expect(Basis::m);
  expect.add(P({3}), lp_const(1));
  expect.add(P({2, 1}), lp_const(1) + lp_const(2) * lp_q());
  expect.add(P({1, 1, 1}), lp_const(1) + lp_const(4) * lp_q() + lp_q(2));
  CHECK(f == expect);
  CHECK(hall_inner(f, sym_mul(SymFunc::generator(Basis::h, P({2})),
                              SymFunc::generator(Basis::h, P({1})))) ==
        lp_const(1) + lp_const(2) * lp_q());
  CHECK(f == s_poly({{{3}, lp_const(1)},
                     {{2, 1}, lp_const(2) * lp_q()},
                     {{1, 1, 1}, lp_q(2)}}));

  DyckPath easy = DyckPath::from_word("NNEENE");
  CHECK(chi(easy) == s_poly({{{3}, lp_const(1)},
                             {{2, 1}, lp_q() + lp_const(1)},
                             {{1, 1, 1}, lp_q()}}));
}

TEST_CASE("chi_weighted and chi_zero") {
  DyckPath easy = DyckPath::from_word("NNEENE");
  // wt == 1 (constant) recovers chi
  CornerWeight ones;
  for (const auto& c : corners(easy)) ones.emplace(c, LaurentMPoly::one());
  CHECK(chi_weighted(easy, ones) == chi(easy));
  CHECK(chi_zero(easy) == s_poly({{{2, 1}, lp_const(1)}, {{1, 1, 1}, lp_q()}}));
  // chi of the corner-flipped path
  DyckPath flipped = flip_corners(easy, corners(easy));
  CHECK(chi(flipped) == s_poly({{{3}, lp_const(1)},
                                {{2, 1}, lp_const(2) * lp_q()},
                                {{1, 1, 1}, lp_q(2)}}));
  // (1-q) chi(pi,0) = chi(pi) - chi(pi') directly
  CHECK(scalar_mul(one_minus_q(), chi_zero(easy)) ==
        sym_sub(chi(easy), chi(flipped)));
  // corner-free path: chi(pi,0) = chi(pi)
  DyckPath block = DyckPath::from_word("NNNEEE");
  CHECK(chi_zero(block) == chi(block));
  CHECK_THROWS_AS(chi_weighted(easy, CornerWeight{}), WeightDomainMismatch);
}

TEST_CASE("corner recursion with symbolic weights") {
  // (q-1) chi(pi,wt) = (q wt(c)-1) chi(pi,wt_1) + (1-wt(c)) chi(pi',wt_2)
  for (int n = 2; n <= 5; ++n) {
    for (const auto& pi : enumerate_paths(n)) {
      CellSet cs = corners(pi);
      if (cs.empty()) continue;
      CornerWeight wt;
      for (size_t i = 0; i < cs.size(); ++i)
        wt.emplace(cs[i], lp_var("w" + std::to_string(i + 1)));
      for (size_t pick = 0; pick < cs.size(); ++pick) {
        LaurentMPoly wc = wt.at(cs[pick]);
        CornerWeight wt1 = wt;
        wt1[cs[pick]] = LaurentMPoly::one();
        DyckPath flipped = flip_corners(pi, {cs[pick]});
        CornerWeight wt2;
        for (const auto& c : corners(flipped)) {
          auto it = wt.find(c);
          wt2.emplace(c, it != wt.end() && c != cs[pick] ? it->second
                                                         : LaurentMPoly::one());
        }
        SymFunc lhs = scalar_mul(q_minus_one(), chi_weighted(pi, wt));
        SymFunc rhs = sym_add(scalar_mul(lp_q() * wc - lp_const(1), chi_weighted(pi, wt1)),
                              scalar_mul(lp_const(1) - wc, chi_weighted(flipped, wt2)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("chi_prime") {
  // on N^n E^n every pair is an area cell: only all-distinct words survive
  DyckPath block = DyckPath::from_area_seq({0, 1, 2});
  SymFunc cp = chi_prime(block);
  CHECK(cp.coeffs.count(P({3})) == 0);
  CHECK(cp.coeffs.count(P({2, 1})) == 0);
  CHECK(cp.coeffs.count(P({1, 1, 1})) == 1);
}

TEST_CASE("superization") {
  DyckPath nnenee = DyckPath::from_word("NNENEE");
  LaurentMPoly sup = super_chi(nnenee, 1, 1);
  CHECK(sup.coeff_of("x1", 1).coeff_of("y1", 2) == lp_q(2) + lp_const(2) * lp_q());
  for (int n = 0; n <= 4; ++n) {
    for (const auto& pi : enumerate_paths(n)) {
      CHECK(super_chi(pi, 2, 1) == realize(chi(pi), 2, 1));
      CHECK(super_chi(pi, 2, 0) == realize(chi(pi), 2, 0));
    }
  }
}

TEST_CASE("d_alpha") {
  CHECK(d_alpha_dinv(Composition({1})) == SymFunc::generator(Basis::s, P({1})));
  CHECK(d_alpha_dinv(Composition({2})) ==
        s_poly({{{1, 1}, lp_t()}}));
  CHECK(d_alpha_dinv(Composition({1, 2})) ==
        s_poly({{{2, 1}, lp_t()}, {{1, 1, 1}, lp_q() * lp_t()}}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& alpha : compositions_of(n))
      CHECK(d_alpha_dinv(alpha) == d_alpha_bounce(alpha));
}

TEST_CASE("bar_chi") {
  CHECK(bar_chi(DyckPath::from_word("NE")) == SymFunc::generator(Basis::p, P({1})));
  for (int n = 0; n <= 4; ++n)
    for (const auto& pi : enumerate_paths(n)) CHECK(bar_chi(pi) == chi(zeta(pi)));
}

TEST_CASE("chi_k basics") {
  // chi_0 = chi on full paths
  for (int n = 0; n <= 4; ++n) {
    for (const auto& pi : enumerate_paths(n)) {
      PartialDyckPath pp(0, pi.word());
      VkElement c0 = chi_k(pp);
      CHECK(c0.k == 0);
      CHECK(c0.f == convert(chi(pi), Basis::p));
    }
  }
  CHECK_THROWS_AS(chi_sigma_prime(PartialDyckPath(2, "EENNEE"), {1, 1}), SigmaNotDistinct);
  CHECK_THROWS_AS(chi_sigma_prime(PartialDyckPath(2, "EENNEE"), {1}), SizeMismatch);
}

TEST_CASE("cap") {
  std::string big;
  for (int i = 0; i < 11; ++i) big += "NE";
  CHECK_THROWS_AS(chi(DyckPath::from_word(big)), CapExceeded);
}
