#ifndef SHUFFLE_COMBINATORICS_HPP
#define SHUFFLE_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "shuffle/errors.hpp"

namespace shuffle {

// Weakly decreasing list of positive integers; the empty partition is valid.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;             // |mu|
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return parts[static_cast<size_t>(i)]; }  // 0-based

  friend bool operator==(const Partition&, const Partition&) = default;

  // Order used everywhere for deterministic output: by |mu|, then
  // lexicographically larger parts first within a degree, e.g.
  // (3) < (2,1) < (1,1,1).
  friend bool operator<(const Partition& a, const Partition& b);

  std::string str() const;
};

// Arbitrary list of positive integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

  Partition sorted() const;  // parts in weakly decreasing order

  friend bool operator==(const Composition&, const Composition&) = default;
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts < b.parts;
  }

  std::string str() const;
};

Partition conjugate(const Partition& mu);
int n_stat(const Partition& mu);  // sum (i-1) mu_i, 1-based i

// Standard arm/leg of a cell (row, col), both 1-based; row i has mu_i cells.
std::pair<int, int> arm_leg(const Partition& mu, int row, int col);

// Complete enumerations in lexicographic order.
std::vector<Composition> compositions_of(int n);
std::vector<Partition> partitions_of(int n);
std::vector<Composition> rearrangements(const Partition& nu);

// All distinct words with content[i-1] copies of letter i, lexicographic.
std::vector<std::vector<int>> multiset_permutations(const Composition& content);
void for_each_multiset_permutation(const Composition& content,
                                   const std::function<void(const std::vector<int>&)>& fn);

// The unique split of alpha into consecutive blocks of sizes mu_1,...,mu_l,
// or nullopt when the prefix sums do not line up.
std::optional<std::vector<Composition>> compatibility_split(const Composition& alpha,
                                                            const Partition& mu);

long binomial(int n, int k);
long multinomial(int n, const Composition& alpha);

}  // namespace shuffle

#endif
