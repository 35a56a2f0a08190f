#ifndef SHUFFLE_CHARFUNC_HPP
#define SHUFFLE_CHARFUNC_HPP

#include <map>

#include "shuffle/dyck.hpp"
#include "shuffle/symfunc.hpp"
#include "shuffle/vk.hpp"

namespace shuffle {

// wt : corners(pi) -> scalar ring.
using CornerWeight = std::map<Cell, LaurentMPoly>;

inline constexpr int kDefaultChiCap = 10;

// chi(pi) = sum_w q^{inv(pi,w)} x_w in the m-basis, coefficients computed by
// content-restricted word enumeration (labels <= n suffice in degree n).
SymFunc chi(const DyckPath& pi, int cap = kDefaultChiCap);

// Same sum restricted to no-attack words.
SymFunc chi_prime(const DyckPath& pi, int cap = kDefaultChiCap);

// Weighted sum: corners with w_i <= w_j contribute wt(i,j).
SymFunc chi_weighted(const DyckPath& pi, const CornerWeight& wt, int cap = kDefaultChiCap);

// chi(pi,0): computed by direct enumeration (w_i > w_j at every corner) and
// cross-checked against the corner-flip formula
// (1-q)^{-|c|} sum_S (-1)^{|S|} chi(pi_S); the two must agree exactly.
SymFunc chi_zero(const DyckPath& pi, int cap = kDefaultChiCap);

// LLT-type sum over all words with the dinv statistic.
SymFunc bar_chi(const DyckPath& pi, int cap = kDefaultChiCap);

// Superization: signed words over 1 < 1bar < 2 < 2bar < ..., z_i = x_i,
// z_{ibar} = -y_i, counting w_a > w_b or w_a = w_b < 0 on area pairs.
LaurentMPoly super_chi(const DyckPath& pi, int max_pos, int max_neg);

// chi'_sigma for a partial path: no-attack words with w_i = sigma_i on the
// first k rows; special labels (<= max sigma) become y's, generic ones x's.
// Result in the m-basis with y-extended scalars.
SymFunc chi_sigma_prime(const PartialDyckPath& pi, const std::vector<int>& sigma);

// chi_k : D_k -> V_k, the normalized characteristic function.
VkElement chi_k(const PartialDyckPath& pi);

// Both combinatorial forms of D_alpha, in the m-basis.
SymFunc d_alpha_dinv(const Composition& alpha, int cap = kDefaultChiCap);
SymFunc d_alpha_bounce(const Composition& alpha, int cap = kDefaultChiCap);

}  // namespace shuffle

#endif
