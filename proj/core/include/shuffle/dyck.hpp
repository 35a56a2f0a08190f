#ifndef SHUFFLE_DYCK_HPP
#define SHUFFLE_DYCK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/combinatorics.hpp"
#include "shuffle/laurent.hpp"

namespace shuffle {

// Grid cell addressed by its top-right corner (i,j): i = column, j = row,
// both 1-based, exactly as in the coordinate convention of the source
// formulas.
using Cell = std::pair<int, int>;
using CellSet = std::vector<Cell>;  // kept sorted, duplicate-free

// Dinv pairs are row pairs (j,j'): primary pairs have j < j' and equal area
// entries; secondary pairs have j > j' and a_{j'} = a_j + 1. The first
// component is always the row whose label must be larger to score.
using RowPair = std::pair<int, int>;

class DyckPath {
 public:
  DyckPath() = default;  // empty path
  static DyckPath from_word(const std::string& word);
  static DyckPath from_area_seq(const std::vector<int>& a);
  // Builds the path whose area set is exactly `cells`; throws
  // AssertionFailure when the set is not the area set of any path.
  static DyckPath from_area_set(int n, const CellSet& cells);

  int n() const { return static_cast<int>(word_.size() / 2); }
  const std::string& word() const { return word_; }
  bool empty_path() const { return word_.empty(); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.word_ < b.word_; }

 private:
  std::string word_;
};

// Path from (0,k) to (n,n). |pi| = n-k North steps; Area refers to the full
// path N^k pi.
class PartialDyckPath {
 public:
  PartialDyckPath() : k_(0) {}
  PartialDyckPath(int k, const std::string& word);

  int k() const { return k_; }
  int n() const;                         // target diagonal size
  int norths() const;                    // |pi| = n-k
  const std::string& word() const { return word_; }
  DyckPath full() const;                 // N^k word

  PartialDyckPath prepend_east() const;  // E pi in D_{k+1,n+1}
  PartialDyckPath prepend_north() const; // N pi in D_{k-1,n}

  friend bool operator==(const PartialDyckPath&, const PartialDyckPath&) = default;
  friend bool operator<(const PartialDyckPath& a, const PartialDyckPath& b) {
    return std::tie(a.k_, a.word_) < std::tie(b.k_, b.word_);
  }

 private:
  int k_;
  std::string word_;
};

// x_j = column of the cell immediately right of the j-th North step. The
// footnoted coarea sequence proper is (x_1-1,...,x_n-1); x itself is what
// every formula here consumes, so x is what we expose.
std::vector<int> coarea_seq(const DyckPath& pi);
std::vector<int> area_seq(const DyckPath& pi);
int area(const DyckPath& pi);
CellSet area_set(const DyckPath& pi);

std::vector<RowPair> dinv_set(const DyckPath& pi);
int dinv(const DyckPath& pi);

Composition touch(const DyckPath& pi);

bool is_word_parking(const DyckPath& pi, const std::vector<int>& w);
int dinv_pw(const DyckPath& pi, const std::vector<int>& w);

// Reading order permutation sigma (1-based values), the unique labeling with
// dinv(pi, sigma) = 0.
std::vector<int> reading_order(const DyckPath& pi);

DyckPath zeta(const DyckPath& pi);
DyckPath zeta_inverse(const DyckPath& pi_prime);

std::vector<int> bounce_seq(const DyckPath& pi_prime);
int bounce(const DyckPath& pi_prime);

CellSet corners(const DyckPath& pi);
// Flip the given subset of corners (valleys EN -> NE); always yields a path.
DyckPath flip_corners(const DyckPath& pi, const CellSet& subset);

DyckPath psi_r(const DyckPath& pi, int r);
DyckPath psi_bar(const DyckPath& pi);
DyckPath gamma_r(const DyckPath& pi_prime, int r);
DyckPath gamma_bar(const DyckPath& pi_prime);

Composition touch_prime(const DyckPath& pi_prime);

bool wp_prime_check(const DyckPath& pi_prime, const std::vector<int>& w);
int inv_pw(const DyckPath& pi_prime, const std::vector<int>& w);

// Macdonald path of a partition and its corner weights q^{arm} t^{-1-leg}.
DyckPath pi_mu(const Partition& mu);
std::map<Cell, LaurentMPoly> wt_mu(const Partition& mu);

inline constexpr int kDefaultEnumCap = 10;
std::vector<DyckPath> enumerate_paths(int n, int cap = kDefaultEnumCap);
std::vector<DyckPath> enumerate_paths_touch(const Composition& alpha,
                                            int cap = kDefaultEnumCap);
std::vector<PartialDyckPath> enumerate_partial(int k, int n, int cap = kDefaultEnumCap);

}  // namespace shuffle

#endif
