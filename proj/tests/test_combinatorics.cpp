#include <doctest.h>

#include <set>

#include "shuffle/combinatorics.hpp"

using namespace shuffle;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) CHECK(conjugate(conjugate(mu)) == mu);
}

TEST_CASE("n_stat") {
  CHECK(n_stat(Partition({2})) == 0);
  CHECK(n_stat(Partition({1, 1})) == 1);
  CHECK(n_stat(Partition({3, 1})) == 1);
}

TEST_CASE("arm_leg") {
  CHECK(arm_leg(Partition({1}), 1, 1) == std::pair<int, int>{0, 0});
  CHECK(arm_leg(Partition({2, 1}), 1, 1) == std::pair<int, int>{1, 1});
  CHECK(arm_leg(Partition({3, 2}), 1, 1) == std::pair<int, int>{2, 1});
  CHECK_THROWS_AS(arm_leg(Partition({2, 1}), 2, 2), CellOutsideDiagram);
}

TEST_CASE("compositions_of") {
  auto cs = compositions_of(3);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == Composition({1, 1, 1}));
  CHECK(cs[1] == Composition({1, 2}));
  CHECK(cs[2] == Composition({2, 1}));
  CHECK(cs[3] == Composition({3}));
  for (int n = 1; n <= 10; ++n)
    CHECK(compositions_of(n).size() == (size_t{1} << (n - 1)));
}

TEST_CASE("rearrangements") {
  auto rs = rearrangements(Partition({2, 1}));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == Composition({1, 2}));
  CHECK(rs[1] == Composition({2, 1}));
  // distinct parts: l! rearrangements
  CHECK(rearrangements(Partition({4, 2, 1})).size() == 6);
  CHECK(rearrangements(Partition({2, 2})).size() == 1);
}

TEST_CASE("multiset_permutations") {
  auto ws = multiset_permutations(Composition({2, 1}));
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == std::vector<int>{1, 1, 2});
  CHECK(ws[1] == std::vector<int>{1, 2, 1});
  CHECK(ws[2] == std::vector<int>{2, 1, 1});
  std::set<std::vector<int>> uniq(ws.begin(), ws.end());
  CHECK(uniq.size() == ws.size());
}

TEST_CASE("compatibility_split") {
  auto blocks = compatibility_split(Composition({2, 1, 1, 2}), Partition({3, 3}));
  REQUIRE(blocks.has_value());
  REQUIRE(blocks->size() == 2);
  CHECK((*blocks)[0] == Composition({2, 1}));
  CHECK((*blocks)[1] == Composition({1, 2}));
  CHECK(!compatibility_split(Composition({2, 2}), Partition({3, 1})).has_value());
  auto single = compatibility_split(Composition({3}), Partition({3}));
  REQUIRE(single.has_value());
  CHECK((*single)[0] == Composition({3}));
  CHECK_THROWS_AS(compatibility_split(Composition({2}), Partition({3})), SizeMismatch);
  // when a split exists it concatenates back to alpha with block sizes mu
  for (const auto& alpha : compositions_of(6)) {
    for (const auto& mu : partitions_of(6)) {
      auto b = compatibility_split(alpha, mu);
      if (!b) continue;
      std::vector<int> cat;
      for (size_t i = 0; i < b->size(); ++i) {
        CHECK((*b)[i].size() == mu[static_cast<int>(i)]);
        cat.insert(cat.end(), (*b)[i].parts.begin(), (*b)[i].parts.end());
      }
      CHECK(cat == alpha.parts);
    }
  }
}
