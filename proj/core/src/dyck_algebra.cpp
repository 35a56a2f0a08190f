#include "shuffle/dyck_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace shuffle {

VkElement OperatorWord::apply(const VkElement& start) const {
  VkElement cur = start;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    switch (it->kind) {
      case OpToken::DPlus: cur = d_plus(cur); break;
      case OpToken::DMinus: cur = d_minus(cur); break;
      case OpToken::DPlusStar: cur = d_plus_star(cur); break;
      case OpToken::T: cur = t_op(it->index, cur); break;
      case OpToken::TInv: cur = t_inv(it->index, cur); break;
      case OpToken::Y: cur = y_mult(it->index, cur); break;
      case OpToken::Z: cur = z_op(it->index, cur); break;
      case OpToken::E:
        if (cur.k != it->index) cur = VkElement{.k = cur.k, .f = SymFunc(Basis::p)};
        break;
    }
  }
  return cur;
}

int OperatorWord::level_after(int k) const {
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    switch (it->kind) {
      case OpToken::DPlus:
      case OpToken::DPlusStar: ++k; break;
      case OpToken::DMinus:
        if (k < 1) throw LevelZero("OperatorWord: d_- below level 0");
        --k;
        break;
      case OpToken::T:
      case OpToken::TInv:
        if (it->index < 1 || it->index > k - 1)
          throw IndexOutOfRange("OperatorWord: T index out of range");
        break;
      case OpToken::Y:
      case OpToken::Z:
        if (it->index < 1 || it->index > k)
          throw IndexOutOfRange("OperatorWord: y/z index out of range");
        break;
      case OpToken::E: break;
    }
  }
  return k;
}

SymFunc chi_via_word(const DyckPath& pi) {
  VkElement cur = VkElement::unit(0);
  const std::string& w = pi.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    cur = *it == 'E' ? d_plus(cur) : d_minus(cur);
  if (cur.k != 0) throw AssertionFailure("chi_via_word: did not land in V_0");
  return cur.f;
}

SymFunc chi0_via_word(const DyckPath& pi) {
  VkElement cur = VkElement::unit(0);
  const std::string& w = pi.word();
  int s = static_cast<int>(w.size());
  while (s > 0) {
    if (s >= 2 && w[static_cast<size_t>(s - 2)] == 'E' && w[static_cast<size_t>(s - 1)] == 'N') {
      cur = vk_exact_div_scalar(dm_dp_commutator(cur), q_minus_one());
      s -= 2;
    } else {
      cur = w[static_cast<size_t>(s - 1)] == 'E' ? d_plus(cur) : d_minus(cur);
      s -= 1;
    }
  }
  if (cur.k != 0) throw AssertionFailure("chi0_via_word: did not land in V_0");
  return cur.f;
}

namespace {

std::map<std::vector<int>, VkElement>& n_alpha_cache() {
  static auto* c = new std::map<std::vector<int>, VkElement>();
  return *c;
}
std::mutex n_alpha_mutex;

}  // namespace

VkElement n_alpha(const Composition& alpha) {
  if (alpha.empty()) return VkElement::unit(0);
  {
    std::lock_guard<std::mutex> lock(n_alpha_mutex);
    auto it = n_alpha_cache().find(alpha.parts);
    if (it != n_alpha_cache().end()) return it->second;
  }
  int a = alpha[0];
  Composition rest(std::vector<int>(alpha.parts.begin() + 1, alpha.parts.end()));
  VkElement result;
  if (a == 1) {
    result = d_plus(n_alpha(rest));
  } else {
    VkElement acc;
    bool have_acc = false;
    for (const auto& beta : compositions_of(a - 1)) {
      std::vector<int> concat = rest.parts;
      concat.insert(concat.end(), beta.parts.begin(), beta.parts.end());
      VkElement term = n_alpha(Composition(std::move(concat)));
      for (int i = 0; i < beta.length() - 1; ++i) term = d_minus(term);
      acc = have_acc ? vk_add(acc, term) : term;
      have_acc = true;
    }
    acc = dm_dp_commutator(acc);
    acc = vk_scalar_mul(lp_t(a - 1), acc);
    result = vk_exact_div_scalar(acc, q_minus_one());
  }
  std::lock_guard<std::mutex> lock(n_alpha_mutex);
  n_alpha_cache().emplace(alpha.parts, result);
  return result;
}

const SymFunc& b_lambda_one(const Partition& lam) {
  static std::mutex mu;
  static auto* cache = new std::map<Partition, SymFunc>();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(lam);
  if (it == cache->end()) {
    SymFunc v = op_B_word(Composition(lam.parts), SymFunc::one(Basis::p));
    it = cache->emplace(lam, std::move(v)).first;
  }
  return it->second;
}

namespace {

// Split a V_k element into (y-exponent vector) -> X-part in p-basis over q,t.
std::map<std::vector<int>, SymFunc> split_by_y(const VkElement& F) {
  std::map<std::vector<int>, SymFunc> out;
  for (const auto& [lam, c] : F.f.coeffs) {
    const auto& vars = c.vars();
    std::vector<int> ypos(static_cast<size_t>(F.k), -1);
    for (size_t idx = 0; idx < vars.size(); ++idx)
      for (int i = 1; i <= F.k; ++i)
        if (vars[idx] == "y" + std::to_string(i)) ypos[static_cast<size_t>(i - 1)] = static_cast<int>(idx);
    for (const auto& [e, coef] : c.terms()) {
      std::vector<int> yexp(static_cast<size_t>(F.k), 0);
      std::vector<std::pair<std::string, int>> rest;
      for (size_t idx = 0; idx < vars.size(); ++idx) {
        if (e[idx] == 0) continue;
        bool took = false;
        for (int i = 0; i < F.k; ++i) {
          if (ypos[static_cast<size_t>(i)] == static_cast<int>(idx)) {
            yexp[static_cast<size_t>(i)] = e[idx];
            took = true;
            break;
          }
        }
        if (!took) rest.emplace_back(vars[idx], e[idx]);
      }
      auto [it, fresh] = out.emplace(yexp, SymFunc(Basis::p));
      (void)fresh;
      it->second.add(lam, LaurentMPoly::monomial(coef, rest));
    }
  }
  return out;
}

// Cached per-degree inverse of the matrix whose columns are B_lam(1) in the
// p-basis; expansion slices become matrix-vector products.
struct BBasisSolver {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  PolyMatrix inv_num;
  LaurentMPoly det;
};

const BBasisSolver& b_basis_solver(int d) {
  static std::mutex mu;
  static auto* cache = new std::map<int, BBasisSolver>();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(d);
  if (it != cache->end()) return it->second;
  BBasisSolver s;
  s.parts = partitions_of(d);
  size_t n = s.parts.size();
  for (size_t i = 0; i < n; ++i) s.index.emplace(s.parts[i], static_cast<int>(i));
  PolyMatrix M(n, PolyVector(n));
  for (size_t j = 0; j < n; ++j) {
    const SymFunc& b = b_lambda_one(s.parts[j]);
    for (const auto& [mu, c] : b.coeffs) M[static_cast<size_t>(s.index.at(mu))][j] = c;
  }
  std::vector<PolyVector> units(n, PolyVector(n));
  for (size_t j = 0; j < n; ++j) units[j][j] = LaurentMPoly::one();
  auto sol = bareiss_solve_many(M, units);
  s.det = std::move(sol.det);
  s.inv_num.assign(n, PolyVector(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) s.inv_num[i][j] = std::move(sol.nums[j][i]);
  return cache->emplace(d, std::move(s)).first->second;
}

struct SliceSolution {
  std::vector<Partition> parts;
  PolyVector nums;
  LaurentMPoly det;
};

SliceSolution solve_against_b_basis(const SymFunc& slice_p, int d) {
  const BBasisSolver& s = b_basis_solver(d);
  size_t n = s.parts.size();
  PolyVector rhs(n);
  for (const auto& [mu, c] : slice_p.coeffs) rhs[static_cast<size_t>(s.index.at(mu))] = c;
  SliceSolution sol;
  sol.parts = s.parts;
  sol.det = s.det;
  sol.nums.assign(n, LaurentMPoly());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!rhs[j].is_zero() && !s.inv_num[i][j].is_zero())
        sol.nums[i] += s.inv_num[i][j] * rhs[j];
  return sol;
}

}  // namespace

CanonicalExpansion canonical_expand(const VkElement& F) {
  CanonicalExpansion out;
  out.k = F.k;
  for (const auto& [yexp, part] : split_by_y(F)) {
    for (int d : part.degrees()) {
      SymFunc slice = part.component(d);
      auto sol = solve_against_b_basis(slice, d);
      for (size_t j = 0; j < sol.parts.size(); ++j) {
        if (sol.nums[j].is_zero()) continue;
        out.terms.push_back(
            CanonicalExpansion::Term{yexp, sol.parts[j], RingFraction(sol.nums[j], sol.det)});
      }
    }
  }
  return out;
}

VkElement CanonicalExpansion::reconstruct() const {
  VkElement acc = VkElement{.k = k, .f = SymFunc(Basis::p)};
  for (const auto& t : terms) {
    std::vector<std::pair<std::string, int>> mono;
    for (size_t i = 0; i < t.yexp.size(); ++i)
      if (t.yexp[i] != 0) mono.emplace_back("y" + std::to_string(i + 1), t.yexp[i]);
    LaurentMPoly ym = LaurentMPoly::monomial(Rational(1), mono);
    SymFunc term = scalar_mul(ym * t.coeff.to_laurent(), b_lambda_one(t.lam));
    acc.f = sym_add(acc.f, term);
  }
  return acc;
}

VkElement involution_N(const VkElement& F) {
  int k = F.k;
  VkElement acc = VkElement{.k = k, .f = SymFunc(Basis::p)};
  for (const auto& [yexp, part] : split_by_y(F)) {
    for (int d : part.degrees()) {
      auto sol = solve_against_b_basis(part.component(d), d);
      // Per (y-exponent, degree) group the images share the denominator
      // bar(det); the group image is an honest element of V_k, so one exact
      // division at the end suffices.
      VkElement group = VkElement{.k = k, .f = SymFunc(Basis::p)};
      for (size_t j = 0; j < sol.parts.size(); ++j) {
        if (sol.nums[j].is_zero()) continue;
        const Partition& lam = sol.parts[j];
        int l = lam.length();
        // c * y^a B_lam(1) = c * (-1)^l d_-^l y^a y^{lam-1} d_+^{k+l}(1)
        // maps to bar(c) (-1)^l d_-^l z^a z^{lam-1} d_+*^{k+l}(1).
        VkElement img = VkElement::unit(0);
        for (int s = 0; s < k + l; ++s) img = d_plus_star(img);
        for (int i = l; i >= 1; --i)
          for (int rep = 0; rep < lam[i - 1] - 1; ++rep) img = z_op(k + i, img);
        for (int i = k; i >= 1; --i)
          for (int rep = 0; rep < yexp[static_cast<size_t>(i - 1)]; ++rep) img = z_op(i, img);
        for (int s = 0; s < l; ++s) img = d_minus(img);
        LaurentMPoly c = sol.nums[j].bar();
        if (l % 2) c = -c;
        group = vk_add(group, vk_scalar_mul(c, img));
      }
      acc = vk_add(acc, vk_exact_div_scalar(group, sol.det.bar()));
    }
  }
  return acc;
}

}  // namespace shuffle
