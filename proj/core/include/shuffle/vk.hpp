#ifndef SHUFFLE_VK_HPP
#define SHUFFLE_VK_HPP

#include <string>
#include <vector>

#include "shuffle/symfunc.hpp"

namespace shuffle {

// Element of V_k = Sym[X] (x) Q[y_1..y_k] over Q(q,t). The X-part is kept in
// the p-basis; y's live inside the scalar coefficients. The level k decides
// which operators apply (T_i needs i <= k-1, d_- needs k >= 1).
struct VkElement {
  int k = 0;
  SymFunc f{Basis::p};

  static VkElement unit(int k);                  // 1 in V_k
  static VkElement from_sym(int k, const SymFunc& g);

  bool is_zero() const { return f.is_zero(); }
  std::string str() const;
};

bool operator==(const VkElement& a, const VkElement& b);
inline bool operator!=(const VkElement& a, const VkElement& b) { return !(a == b); }

VkElement vk_add(const VkElement& a, const VkElement& b);
VkElement vk_sub(const VkElement& a, const VkElement& b);
VkElement vk_neg(const VkElement& a);
VkElement vk_scalar_mul(const LaurentMPoly& c, const VkElement& a);
VkElement vk_exact_div_scalar(const VkElement& a, const LaurentMPoly& c);

// (q-1)vP(u,v) + (v-qu)P(v,u) over (v-u); starred variant has (q-1)uP(u,v).
// P must be a polynomial in the two chosen variables; the division is exact.
LaurentMPoly delta_apply(const LaurentMPoly& P, const std::string& u, const std::string& v,
                         bool starred);
LaurentMPoly delta_op(const LaurentMPoly& P, bool starred);  // variables u, v

// Closed form of Delta*_{u v} u^a v^b (no division).
LaurentMPoly delta_star_closed(int a, int b, const std::string& u, const std::string& v);

VkElement t_op(int i, const VkElement& F);       // T_i = Delta*_{y_i y_{i+1}}
VkElement t_inv(int i, const VkElement& F);      // T_i^{-1} = (T_i + q - 1)/q

VkElement d_plus(const VkElement& F);            // V_k -> V_{k+1}
VkElement d_minus(const VkElement& F);           // V_k -> V_{k-1}, k >= 1
VkElement d_plus_star(const VkElement& F);       // V_k -> V_{k+1}

VkElement y_mult(int i, const VkElement& F);
VkElement z_op(int i, const VkElement& F);       // bar-image of y_i, via operator words

// [d-,d+] = d- d+ - d+ d-  and the starred commutator d+* d- - d- d+*.
VkElement dm_dp_commutator(const VkElement& F);
VkElement star_commutator(const VkElement& F);

// F * _m G twisted multiplication: F[X + (q-1)(t y_1+..+t y_m + y_{m+1}+..+y_k)] G.
VkElement twisted_mul(const SymFunc& F, const VkElement& G, int m = 0);

// Spanning vector s_lambda * y^a of V_k (the *-basis).
VkElement star_basis_vector(int k, const Partition& lam, const std::vector<int>& yexp);

// View of the coefficients as (X-partition in Schur basis, y-exponent) ->
// Laurent(q,t); this is the wire format of VkElement.
struct VkTerm {
  std::vector<int> yexp;
  Partition lam;
  LaurentMPoly value;  // in q,t only
};
std::vector<VkTerm> vk_terms_schur(const VkElement& F);
VkElement vk_from_terms_schur(int k, const std::vector<VkTerm>& terms);

}  // namespace shuffle

#endif
