#ifndef SHUFFLE_SYMFUNC_HPP
#define SHUFFLE_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "shuffle/combinatorics.hpp"
#include "shuffle/laurent.hpp"

namespace shuffle {

enum class Basis { p, h, e, m, s };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Basis-tagged finitely supported Partition -> LaurentMPoly map. Power sums
// are the internal canonical basis: plethysm, omega and the Hall pairing are
// trivial there, and exact rationals make the denominators harmless.
struct SymFunc {
  Basis basis = Basis::p;
  std::map<Partition, LaurentMPoly> coeffs;

  SymFunc() = default;
  explicit SymFunc(Basis b) : basis(b) {}

  static SymFunc zero(Basis b = Basis::p) { return SymFunc(b); }
  static SymFunc one(Basis b = Basis::p);
  static SymFunc generator(Basis b, const Partition& lam);

  bool is_zero() const { return coeffs.empty(); }
  void add(const Partition& lam, const LaurentMPoly& c);
  std::vector<int> degrees() const;
  SymFunc component(int d) const;   // homogeneous piece of degree d
  int max_degree() const;

  std::string str() const;
};

bool operator==(const SymFunc& a, const SymFunc& b);  // exact, basis-independent
inline bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

SymFunc convert(const SymFunc& f, Basis target);

SymFunc sym_add(const SymFunc& a, const SymFunc& b);
SymFunc sym_sub(const SymFunc& a, const SymFunc& b);
SymFunc sym_mul(const SymFunc& a, const SymFunc& b);          // p-basis result
SymFunc scalar_mul(const LaurentMPoly& c, const SymFunc& f);
SymFunc sym_neg(const SymFunc& f);
SymFunc sym_exact_div_scalar(const SymFunc& f, const LaurentMPoly& c);

LaurentMPoly hall_inner(const SymFunc& f, const SymFunc& g);

// A = x_coeff * X + pure. Coefficients are Laurent polynomials; rational
// alphabets like X/(1-q) are not representable here.
struct AlphabetExpr {
  LaurentMPoly x_coeff;
  LaurentMPoly pure;

  static AlphabetExpr X() { return {LaurentMPoly::one(), LaurentMPoly()}; }
  static AlphabetExpr minus_X() { return {-LaurentMPoly::one(), LaurentMPoly()}; }
  static AlphabetExpr scaled_X(const LaurentMPoly& c) { return {c, LaurentMPoly()}; }
  static AlphabetExpr pure_only(const LaurentMPoly& p) { return {LaurentMPoly(), p}; }
  static AlphabetExpr shifted_X(const LaurentMPoly& p) { return {LaurentMPoly::one(), p}; }
};

// f[A]: p_n -> frobenius(x_coeff,n) p_n + frobenius(pure,n). Result in the
// p-basis, scalars extended by whatever variables A carries.
SymFunc plethysm(const SymFunc& f, const AlphabetExpr& A);

// h_n[A] for n = 0..max_deg (graded slices of the plethystic exponential).
std::vector<SymFunc> pexp(const AlphabetExpr& A, int max_deg);

SymFunc omega(const SymFunc& f);      // F[-X]
SymFunc omega_bar(const SymFunc& f);  // bar(F)[-X]

// Hall-Littlewood-type creation operators (z-coefficient extraction of the
// defining plethystic kernels).
SymFunc op_B(int r, const SymFunc& f);
SymFunc op_C(int r, const SymFunc& f);
SymFunc op_B_word(const Composition& alpha, const SymFunc& f);  // B_{a1}..B_al
SymFunc op_C_word(const Composition& alpha, const SymFunc& f);

// Image under p_k -> x_1^k+..+x_nx^k - y_1^k-..-y_ny^k.
LaurentMPoly realize(const SymFunc& f, int num_x, int num_y);

// Appendix closed forms.
SymFunc h_negX_expansion(int m);                       // h-basis
LaurentMPoly m_at_qminus1(const Partition& nu);
SymFunc m_qminus1_expansion(const Partition& lam);     // m-basis

// z_lambda = prod i^{m_i} m_i!
Rational z_stat(const Partition& lam);

// Cached expansions of basis elements in power sums (shared by conversions
// and Jacobi-Trudi; thread-safe, computed once per degree).
const std::map<Partition, Rational>& h_in_p(const Partition& lam);
const std::map<Partition, Rational>& e_in_p(const Partition& lam);
const std::map<Partition, Rational>& s_in_p(const Partition& lam);

}  // namespace shuffle

#endif
