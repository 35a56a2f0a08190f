#include <doctest.h>

#include <set>

#include "shuffle/dyck.hpp"

using namespace shuffle;

namespace {
const char* kRunning = "NENNNENNEEEENNEE";  // x-sequence (1,2,2,2,3,3,7,7)
}

TEST_CASE("running example statistics") {
  DyckPath p = DyckPath::from_word(kRunning);
  CHECK(coarea_seq(p) == std::vector<int>{1, 2, 2, 2, 3, 3, 7, 7});
  CHECK(area_seq(p) == std::vector<int>{0, 0, 1, 2, 2, 3, 0, 1});
  CHECK(area(p) == 9);
  CHECK(dinv(p) == 8);
  CHECK(touch(p) == Composition({1, 5, 2}));
  std::vector<RowPair> ds = dinv_set(p);
  std::set<RowPair> dset(ds.begin(), ds.end());
  std::set<RowPair> expect = {{1, 2}, {1, 7}, {2, 7}, {3, 8}, {4, 5},
                              {7, 3}, {8, 4}, {8, 5}};
  CHECK(dset == expect);
  CHECK(reading_order(p) == std::vector<int>{1, 2, 4, 6, 7, 8, 3, 5});
}

TEST_CASE("degenerate families") {
  for (int n = 1; n <= 6; ++n) {
    DyckPath stair = DyckPath::from_area_seq(std::vector<int>(n, 0));  // (NE)^n
    std::vector<int> expect_x(n);
    for (int i = 0; i < n; ++i) expect_x[i] = i + 1;
    CHECK(coarea_seq(stair) == expect_x);
    CHECK(area(stair) == 0);
    CHECK(dinv(stair) == n * (n - 1) / 2);
    CHECK(touch(stair) == Composition(std::vector<int>(n, 1)));
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    DyckPath block = DyckPath::from_area_seq(full);  // N^n E^n
    CHECK(coarea_seq(block) == std::vector<int>(n, 1));
    CHECK(dinv_set(block).empty());
    CHECK(touch(block) == Composition({n}));
    CHECK(bounce_seq(block) == std::vector<int>(n, 0));
    CHECK(corners(block).empty());
    CellSet sc = corners(stair);
    CellSet expect_c;
    for (int i = 1; i < n; ++i) expect_c.emplace_back(i, i + 1);
    CHECK(sc == expect_c);
    CHECK(zeta(stair) == block);
  }
  CHECK(zeta(DyckPath()) == DyckPath());
  CHECK(zeta_inverse(DyckPath()) == DyckPath());
}

TEST_CASE("word parking functions") {
  DyckPath p = DyckPath::from_word(kRunning);
  std::vector<int> w{9, 5, 2, 1, 5, 2, 3, 2};
  CHECK(is_word_parking(p, w));
  CHECK(dinv_pw(p, w) == 5);
  DyckPath n2 = DyckPath::from_word("NNEE");
  CHECK(!is_word_parking(n2, {1, 1}));
  CHECK(is_word_parking(n2, {5, 3}));
  CHECK_THROWS_AS(is_word_parking(n2, {1}), LengthMismatch);
  // strictly decreasing words always park
  for (const auto& q : enumerate_paths(4)) {
    CHECK(is_word_parking(q, {9, 7, 5, 3}));
  }
}

TEST_CASE("zeta of the running example") {
  DyckPath p = DyckPath::from_word(kRunning);
  DyckPath im = zeta(p);
  CellSet expect = {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}};
  std::sort(expect.begin(), expect.end());
  CHECK(area_set(im) == expect);
  CHECK(bounce_seq(im) == std::vector<int>{0, 0, 0, 1, 1, 2, 2, 3});
  CHECK(bounce(im) == 9);
  CHECK(corners(im) == CellSet{{2, 4}, {3, 5}, {4, 6}, {7, 8}});
  CHECK(zeta_inverse(im) == p);
  // parking word transport on the running example
  std::vector<int> w{9, 5, 2, 1, 5, 2, 3, 2};
  auto sigma = reading_order(p);
  std::vector<int> wp(8);
  for (int i = 0; i < 8; ++i) wp[static_cast<size_t>(sigma[i] - 1)] = w[static_cast<size_t>(i)];
  CHECK(wp == std::vector<int>{9, 5, 3, 2, 2, 1, 5, 2});
  CHECK(wp_prime_check(im, wp));
  CHECK(inv_pw(im, wp) == 5);
}

TEST_CASE("psi gamma basics") {
  // touch'(NNEENE) = (1,2)
  CHECK(touch_prime(DyckPath::from_word("NNEENE")) == Composition({1, 2}));
  DyckPath ne = DyckPath::from_word("NE");
  CHECK(gamma_r(DyckPath(), 0) == ne);
  CHECK_THROWS_AS(gamma_r(DyckPath(), 1), IndexOutOfRange);
  CHECK(gamma_bar(ne) == DyckPath());
  CHECK(psi_r(DyckPath(), 0) == ne);
  CHECK_THROWS_AS(psi_r(ne, 2), IndexOutOfRange);
  // touch' agrees with touch through zeta-inverse for N^n E^n
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    DyckPath block = DyckPath::from_area_seq(full);
    CHECK(touch_prime(block) == touch(zeta_inverse(block)));
  }
}

TEST_CASE("corner flips") {
  DyckPath easy = DyckPath::from_word("NNEENE");
  CellSet cs = corners(easy);
  REQUIRE(cs == CellSet{{2, 3}});
  CHECK(flip_corners(easy, cs) == DyckPath::from_word("NNENEE"));
  CHECK(flip_corners(easy, {}) == easy);
  CHECK_THROWS_AS(flip_corners(easy, CellSet{{1, 3}}), WeightDomainMismatch);
  // every subset of corners flips to a valid path
  for (const auto& p : enumerate_paths(6)) {
    CellSet c = corners(p);
    for (size_t mask = 0; mask < (size_t{1} << c.size()); ++mask) {
      CellSet sub;
      for (size_t b = 0; b < c.size(); ++b)
        if (mask & (size_t{1} << b)) sub.push_back(c[b]);
      CHECK_NOTHROW(flip_corners(p, sub));
    }
  }
}

TEST_CASE("pi_mu and wt_mu") {
  CHECK(pi_mu(Partition({1})) == DyckPath::from_word("NE"));
  CHECK(corners(pi_mu(Partition({1}))).empty());
  CHECK(pi_mu(Partition({2})) == DyckPath::from_word("NNEE"));
  CHECK(pi_mu(Partition({1, 1})) == DyckPath::from_word("NENE"));
  auto wt = wt_mu(Partition({1, 1}));
  REQUIRE(wt.size() == 1);
  CHECK(wt.count(Cell{1, 2}) == 1);
  CHECK(wt.at(Cell{1, 2}) == lp_t(-1));
  // corners of pi_mu match the (i,j),(i-1,j) cell pairs for larger mu too
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) CHECK_NOTHROW(wt_mu(mu));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_paths(3).size() == 5);
  CHECK(enumerate_paths(6).size() == 132);
  CHECK_THROWS_AS(enumerate_paths(11), CapExceeded);
  CHECK(enumerate_paths(11, 11).size() == 58786);
  for (int n = 1; n <= 8; ++n) {
    size_t total = 0;
    for (const auto& alpha : compositions_of(n))
      total += enumerate_paths_touch(alpha).size();
    CHECK(total == enumerate_paths(n).size());
  }
  CHECK(enumerate_partial(2, 4).size() == 9);  // paths (0,2)->(4,4)
  for (const auto& pp : enumerate_partial(2, 5)) {
    CHECK(pp.norths() == 3);
    CHECK(pp.full().n() == 5);
  }
}

TEST_CASE("path serialization round trip") {
  DyckPath p = DyckPath::from_word(kRunning);
  CHECK(DyckPath::from_area_seq(area_seq(p)) == p);
  CHECK(DyckPath::from_area_set(p.n(), area_set(p)) == p);
  CHECK_THROWS(DyckPath::from_word("NEE"));
  CHECK_THROWS(DyckPath::from_word("EN"));
}
