#include "shuffle/vk.hpp"

#include <algorithm>

namespace shuffle {

VkElement VkElement::unit(int k) {
  VkElement v;
  v.k = k;
  v.f = SymFunc::one(Basis::p);
  return v;
}

VkElement VkElement::from_sym(int k, const SymFunc& g) {
  VkElement v;
  v.k = k;
  v.f = convert(g, Basis::p);
  return v;
}

std::string VkElement::str() const {
  return "V" + std::to_string(k) + "{" + f.str() + "}";
}

bool operator==(const VkElement& a, const VkElement& b) {
  return a.k == b.k && a.f == b.f;
}

VkElement vk_add(const VkElement& a, const VkElement& b) {
  if (a.k != b.k) throw LevelZero("vk_add: level mismatch");
  VkElement out;
  out.k = a.k;
  out.f = sym_add(a.f, b.f);
  return out;
}

VkElement vk_sub(const VkElement& a, const VkElement& b) { return vk_add(a, vk_neg(b)); }

VkElement vk_neg(const VkElement& a) {
  VkElement out;
  out.k = a.k;
  out.f = sym_neg(a.f);
  return out;
}

VkElement vk_scalar_mul(const LaurentMPoly& c, const VkElement& a) {
  VkElement out;
  out.k = a.k;
  out.f = scalar_mul(c, a.f);
  return out;
}

VkElement vk_exact_div_scalar(const VkElement& a, const LaurentMPoly& c) {
  VkElement out;
  out.k = a.k;
  out.f = sym_exact_div_scalar(a.f, c);
  return out;
}

LaurentMPoly delta_apply(const LaurentMPoly& P, const std::string& u, const std::string& v,
                         bool starred) {
  if (P.min_exponent(u) < 0 || P.min_exponent(v) < 0)
    throw VariableOutOfScope("delta_apply: P must be polynomial in " + u + "," + v);
  LaurentMPoly pu = lp_var(u), pv = lp_var(v);
  LaurentMPoly swapped = P.substituted({{u, pv}, {v, pu}});
  LaurentMPoly front = starred ? pu : pv;
  LaurentMPoly num = (lp_q() - lp_const(1)) * front * P + (pv - lp_q() * pu) * swapped;
  return exact_div(num, pv - pu);
}

LaurentMPoly delta_op(const LaurentMPoly& P, bool starred) {
  return delta_apply(P, "u", "v", starred);
}

namespace {

// h_m[u+v] = sum_{s=0..m} u^s v^{m-s}; zero for m < 0.
LaurentMPoly h_uv(int m, const std::string& u, const std::string& v) {
  LaurentMPoly out;
  for (int s = 0; s >= 0 && s <= m; ++s)
    out += LaurentMPoly::monomial(Rational(1), {{u, s}, {v, m - s}});
  return out;
}

}  // namespace

LaurentMPoly delta_star_closed(int a, int b, const std::string& u, const std::string& v) {
  LaurentMPoly lead = LaurentMPoly::monomial(Rational(1), {{u, std::min(a, b)}, {v, std::min(a, b)}});
  if (a < b) {
    LaurentMPoly inner = lp_q() * lp_var(u) * h_uv(b - a - 1, u, v) -
                         lp_var(u) * lp_var(v) * h_uv(b - a - 2, u, v);
    return lead * inner;
  }
  LaurentMPoly inner = h_uv(a - b, u, v) - lp_q() * lp_var(u) * h_uv(a - b - 1, u, v);
  return lead * inner;
}

VkElement t_op(int i, const VkElement& F) {
  if (i < 1 || i > F.k - 1) throw IndexOutOfRange("t_op: need 1 <= i <= k-1");
  std::string u = "y" + std::to_string(i), v = "y" + std::to_string(i + 1);
  VkElement out;
  out.k = F.k;
  out.f = SymFunc(Basis::p);
  for (const auto& [lam, c] : F.f.coeffs) {
    // Apply Delta* to the (y_i, y_{i+1}) content of each scalar term; the
    // X-part and all other variables are inert.
    LaurentMPoly acc;
    const auto& vars = c.vars();
    int iu = -1, iv = -1;
    for (size_t idx = 0; idx < vars.size(); ++idx) {
      if (vars[idx] == u) iu = static_cast<int>(idx);
      if (vars[idx] == v) iv = static_cast<int>(idx);
    }
    for (const auto& [e, coef] : c.terms()) {
      int a = iu >= 0 ? e[static_cast<size_t>(iu)] : 0;
      int b = iv >= 0 ? e[static_cast<size_t>(iv)] : 0;
      std::vector<std::pair<std::string, int>> rest;
      for (size_t idx = 0; idx < vars.size(); ++idx) {
        if (static_cast<int>(idx) == iu || static_cast<int>(idx) == iv) continue;
        if (e[idx] != 0) rest.emplace_back(vars[idx], e[idx]);
      }
      acc += LaurentMPoly::monomial(coef, rest) * delta_star_closed(a, b, u, v);
    }
    out.f.add(lam, acc);
  }
  return out;
}

VkElement t_inv(int i, const VkElement& F) {
  VkElement g = t_op(i, F);
  g = vk_add(g, vk_scalar_mul(q_minus_one(), F));
  return vk_scalar_mul(lp_q(-1), g);
}

VkElement d_plus(const VkElement& F) {
  int k = F.k;
  VkElement out;
  out.k = k + 1;
  out.f = plethysm(F.f, AlphabetExpr::shifted_X(q_minus_one() * lp_y(k + 1)));
  for (int i = k; i >= 1; --i) out = t_op(i, out);
  return out;
}

VkElement d_minus(const VkElement& F) {
  int k = F.k;
  if (k < 1) throw LevelZero("d_minus: no d_- out of V_0");
  std::string yk = "y" + std::to_string(k);
  SymFunc g = plethysm(F.f, AlphabetExpr::shifted_X(-(q_minus_one() * lp_y(k))));
  VkElement out;
  out.k = k - 1;
  out.f = SymFunc(Basis::p);
  for (const auto& [lam, c] : g.coeffs) {
    int top = c.max_exponent(yk);
    for (int i = 0; i <= top; ++i) {
      LaurentMPoly gi = c.coeff_of(yk, i);
      if (gi.is_zero()) continue;
      // y_k^i -> -h_{i+1}[-X]
      for (const auto& [mu, hc] : h_in_p(Partition(std::vector<int>{i + 1}))) {
        Rational coef = mu.length() % 2 ? hc : -hc;  // -(-1)^{l} / z
        std::vector<int> parts = lam.parts;
        parts.insert(parts.end(), mu.parts.begin(), mu.parts.end());
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.f.add(Partition(std::move(parts)), LaurentMPoly::constant(coef) * gi);
      }
    }
  }
  return out;
}

VkElement d_plus_star(const VkElement& F) {
  int k = F.k;
  SymFunc g = plethysm(F.f, AlphabetExpr::shifted_X(q_minus_one() * lp_y(k + 1)));
  // gamma: y_i -> y_{i+1} (i <= k), y_{k+1} -> t y_1, applied simultaneously.
  std::map<std::string, LaurentMPoly> repl;
  for (int i = 1; i <= k; ++i) repl.emplace("y" + std::to_string(i), lp_y(i + 1));
  repl.emplace("y" + std::to_string(k + 1), lp_t() * lp_y(1));
  VkElement out;
  out.k = k + 1;
  out.f = SymFunc(Basis::p);
  for (const auto& [lam, c] : g.coeffs) out.f.add(lam, c.substituted(repl));
  return out;
}

VkElement y_mult(int i, const VkElement& F) {
  if (i < 1 || i > F.k) throw IndexOutOfRange("y_mult: need 1 <= i <= k");
  return vk_scalar_mul(lp_y(i), F);
}

VkElement dm_dp_commutator(const VkElement& F) {
  return vk_sub(d_minus(d_plus(F)), d_plus(d_minus(F)));
}

VkElement star_commutator(const VkElement& F) {
  return vk_sub(d_plus_star(d_minus(F)), d_minus(d_plus_star(F)));
}

VkElement z_op(int i, const VkElement& F) {
  if (i < 1 || i > F.k) throw IndexOutOfRange("z_op: need 1 <= i <= k");
  if (i > 1) return vk_scalar_mul(lp_q(-1), t_op(i - 1, z_op(i - 1, t_op(i - 1, F))));
  int k = F.k;
  // z_1 = q^{k-1}/(q^{-1}-1) (d_+^* d_- - d_- d_+^*) T_{k-1}^{-1} ... T_1^{-1}
  VkElement g = F;
  for (int j = 1; j <= k - 1; ++j) g = t_inv(j, g);
  g = star_commutator(g);
  g = vk_scalar_mul(-lp_q(k), g);
  return vk_exact_div_scalar(g, q_minus_one());
}

VkElement twisted_mul(const SymFunc& F, const VkElement& G, int m) {
  if (m < 0 || m > G.k) throw IndexOutOfRange("twisted_mul: need 0 <= m <= k");
  LaurentMPoly shift;
  for (int i = 1; i <= m; ++i) shift += lp_t() * lp_y(i);
  for (int i = m + 1; i <= G.k; ++i) shift += lp_y(i);
  SymFunc Fs = plethysm(F, AlphabetExpr::shifted_X(q_minus_one() * shift));
  VkElement out;
  out.k = G.k;
  out.f = sym_mul(Fs, G.f);
  return out;
}

VkElement star_basis_vector(int k, const Partition& lam, const std::vector<int>& yexp) {
  if (static_cast<int>(yexp.size()) != k)
    throw SizeMismatch("star_basis_vector: y-exponent length != k");
  std::vector<std::pair<std::string, int>> mono;
  for (int i = 0; i < k; ++i)
    if (yexp[static_cast<size_t>(i)] != 0)
      mono.emplace_back("y" + std::to_string(i + 1), yexp[static_cast<size_t>(i)]);
  VkElement ym = VkElement::unit(k);
  ym.f = scalar_mul(LaurentMPoly::monomial(Rational(1), mono), ym.f);
  return twisted_mul(SymFunc::generator(Basis::s, lam), ym, 0);
}

std::vector<VkTerm> vk_terms_schur(const VkElement& F) {
  // Regroup by y-exponent, then convert each X-slice to the Schur basis.
  std::map<std::vector<int>, SymFunc> by_y;
  for (const auto& [lam, c] : F.f.coeffs) {
    const auto& vars = c.vars();
    std::vector<int> ypos(static_cast<size_t>(F.k), -1);
    for (size_t idx = 0; idx < vars.size(); ++idx) {
      for (int i = 1; i <= F.k; ++i)
        if (vars[idx] == "y" + std::to_string(i)) ypos[static_cast<size_t>(i - 1)] = static_cast<int>(idx);
    }
    for (const auto& [e, coef] : c.terms()) {
      std::vector<int> yexp(static_cast<size_t>(F.k), 0);
      std::vector<std::pair<std::string, int>> rest;
      for (size_t idx = 0; idx < vars.size(); ++idx) {
        if (e[idx] == 0) continue;
        bool is_y = false;
        for (int i = 0; i < F.k; ++i) {
          if (static_cast<int>(idx) == ypos[static_cast<size_t>(i)]) {
            yexp[static_cast<size_t>(i)] = e[idx];
            is_y = true;
            break;
          }
        }
        if (!is_y) rest.emplace_back(vars[idx], e[idx]);
      }
      auto [it, fresh] = by_y.emplace(yexp, SymFunc(Basis::p));
      it->second.add(lam, LaurentMPoly::monomial(coef, rest));
    }
  }
  std::vector<VkTerm> out;
  for (const auto& [yexp, g] : by_y) {
    SymFunc s = convert(g, Basis::s);
    for (const auto& [lam, c] : s.coeffs) out.push_back(VkTerm{yexp, lam, c});
  }
  return out;
}

VkElement vk_from_terms_schur(int k, const std::vector<VkTerm>& terms) {
  VkElement out;
  out.k = k;
  out.f = SymFunc(Basis::p);
  for (const auto& t : terms) {
    if (static_cast<int>(t.yexp.size()) != k)
      throw SizeMismatch("vk_from_terms_schur: y-exponent length != k");
    std::vector<std::pair<std::string, int>> mono;
    for (int i = 0; i < k; ++i)
      if (t.yexp[static_cast<size_t>(i)] != 0)
        mono.emplace_back("y" + std::to_string(i + 1), t.yexp[static_cast<size_t>(i)]);
    LaurentMPoly scale = LaurentMPoly::monomial(Rational(1), mono) * t.value;
    SymFunc part = scalar_mul(scale, convert(SymFunc::generator(Basis::s, t.lam), Basis::p));
    out.f = sym_add(out.f, part);
  }
  return out;
}

}  // namespace shuffle
