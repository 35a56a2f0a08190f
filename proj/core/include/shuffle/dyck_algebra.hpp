#ifndef SHUFFLE_DYCK_ALGEBRA_HPP
#define SHUFFLE_DYCK_ALGEBRA_HPP

#include <vector>

#include "shuffle/bareiss.hpp"
#include "shuffle/dyck.hpp"
#include "shuffle/vk.hpp"

namespace shuffle {

// Generator tokens of the big algebra; words apply right-to-left and track
// levels as they go.
struct OpToken {
  enum Kind { DPlus, DMinus, DPlusStar, T, TInv, Y, Z, E } kind;
  int index = 0;  // for T/TInv/Y/Z/E
};

struct OperatorWord {
  std::vector<OpToken> tokens;

  VkElement apply(const VkElement& start) const;
  // Resulting level when starting from level k; throws when the word is not
  // composable from that level.
  int level_after(int k) const;
};

// chi(pi) as a d-word applied to 1: plus = East, minus = North, path read
// bottom-left to top-right, leftmost step outermost.
SymFunc chi_via_word(const DyckPath& pi);

// chi(pi,0): same walk with 1/(q-1)[d_-,d_+] at each EN corner.
SymFunc chi0_via_word(const DyckPath& pi);

// N_alpha in V_{l(alpha)} by the main recursion; memoized.
VkElement n_alpha(const Composition& alpha);

// B_{lam_1}...B_{lam_l}(1), cached.
const SymFunc& b_lambda_one(const Partition& lam);

// Exact expansion over the basis {y^a B_lambda(1)}.
struct CanonicalExpansion {
  struct Term {
    std::vector<int> yexp;
    Partition lam;
    RingFraction coeff;
  };
  int k = 0;
  std::vector<Term> terms;

  VkElement reconstruct() const;  // throws InexactDivision if not Laurent
};
CanonicalExpansion canonical_expand(const VkElement& F);

// The antilinear involution: bar the canonical coefficients and replace the
// canonical d_- y-word d_+ form by its starred image d_- z-word d_+*.
VkElement involution_N(const VkElement& F);

}  // namespace shuffle

#endif
