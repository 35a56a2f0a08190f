#include "shuffle/charfunc.hpp"

#include <algorithm>
#include <functional>

namespace shuffle {

namespace {

void check_cap(const DyckPath& pi, int cap, const char* who) {
  if (pi.n() > cap)
    throw CapExceeded(std::string(who) + ": path length exceeds cap " + std::to_string(cap));
}

// Coefficient of m_lambda as a word sum with per-word weight.
LaurentMPoly word_sum(int n, const Partition& lam,
                      const std::function<LaurentMPoly(const std::vector<int>&)>& weight) {
  LaurentMPoly acc;
  Composition content(std::vector<int>(lam.parts.begin(), lam.parts.end()));
  for_each_multiset_permutation(content, [&](const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != n) throw LengthMismatch("word_sum: content size");
    acc += weight(w);
  });
  return acc;
}

SymFunc m_basis_sum(const DyckPath& pi, int cap, const char* who,
                    const std::function<LaurentMPoly(const std::vector<int>&)>& weight) {
  check_cap(pi, cap, who);
  int n = pi.n();
  SymFunc out(Basis::m);
  if (n == 0) return SymFunc::one(Basis::m);
  for (const auto& lam : partitions_of(n)) out.add(lam, word_sum(n, lam, weight));
  return out;
}

int inv_count(const CellSet& cells, const std::vector<int>& w) {
  int c = 0;
  for (const auto& [i, j] : cells)
    if (w[static_cast<size_t>(i - 1)] > w[static_cast<size_t>(j - 1)]) ++c;
  return c;
}

bool no_attack(const CellSet& cells, const std::vector<int>& w) {
  for (const auto& [i, j] : cells)
    if (w[static_cast<size_t>(i - 1)] == w[static_cast<size_t>(j - 1)]) return false;
  return true;
}

}  // namespace

SymFunc chi(const DyckPath& pi, int cap) {
  CellSet cells = area_set(pi);
  return m_basis_sum(pi, cap, "chi", [&](const std::vector<int>& w) {
    return lp_q(inv_count(cells, w));
  });
}

SymFunc chi_prime(const DyckPath& pi, int cap) {
  CellSet cells = area_set(pi);
  return m_basis_sum(pi, cap, "chi_prime", [&](const std::vector<int>& w) {
    if (!no_attack(cells, w)) return LaurentMPoly();
    return lp_q(inv_count(cells, w));
  });
}

SymFunc chi_weighted(const DyckPath& pi, const CornerWeight& wt, int cap) {
  CellSet cells = area_set(pi);
  CellSet cs = corners(pi);
  for (const auto& c : cs)
    if (wt.find(c) == wt.end())
      throw WeightDomainMismatch("chi_weighted: missing weight for corner (" +
                                 std::to_string(c.first) + "," + std::to_string(c.second) + ")");
  if (wt.size() != cs.size())
    throw WeightDomainMismatch("chi_weighted: weight domain is not corners(pi)");
  return m_basis_sum(pi, cap, "chi_weighted", [&](const std::vector<int>& w) {
    LaurentMPoly term = lp_q(inv_count(cells, w));
    for (const auto& c : cs)
      if (w[static_cast<size_t>(c.first - 1)] <= w[static_cast<size_t>(c.second - 1)])
        term = term * wt.at(c);
    return term;
  });
}

namespace {

SymFunc chi_zero_direct(const DyckPath& pi, int cap) {
  CellSet cells = area_set(pi);
  CellSet cs = corners(pi);
  return m_basis_sum(pi, cap, "chi_zero", [&](const std::vector<int>& w) {
    for (const auto& c : cs)
      if (!(w[static_cast<size_t>(c.first - 1)] > w[static_cast<size_t>(c.second - 1)]))
        return LaurentMPoly();
    return lp_q(inv_count(cells, w));
  });
}

SymFunc chi_zero_flip(const DyckPath& pi, int cap) {
  CellSet cs = corners(pi);
  size_t m = cs.size();
  SymFunc acc(Basis::m);
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    CellSet subset;
    for (size_t b = 0; b < m; ++b)
      if (mask & (size_t{1} << b)) subset.push_back(cs[b]);
    SymFunc term = chi(flip_corners(pi, subset), cap);
    acc = subset.size() % 2 ? sym_sub(acc, term) : sym_add(acc, term);
  }
  return sym_exact_div_scalar(acc, one_minus_q().pow(static_cast<int>(m)));
}

}  // namespace

SymFunc chi_zero(const DyckPath& pi, int cap) {
  SymFunc direct = chi_zero_direct(pi, cap);
  if (direct != chi_zero_flip(pi, cap))
    throw AssertionFailure("chi_zero: direct enumeration and corner-flip formula disagree");
  return direct;
}

SymFunc bar_chi(const DyckPath& pi, int cap) {
  return m_basis_sum(pi, cap, "bar_chi", [&](const std::vector<int>& w) {
    return lp_q(dinv_pw(pi, w));
  });
}

LaurentMPoly super_chi(const DyckPath& pi, int max_pos, int max_neg) {
  if (max_pos < 0 || max_neg < 0) throw SizeMismatch("super_chi: alphabet bounds");
  int n = pi.n();
  CellSet cells = area_set(pi);
  // letters 0..max_pos-1 are x_{i+1}; letters max_pos..max_pos+max_neg-1 are
  // the barred -y_{i+1}. Order 1 < 1bar < 2 < 2bar < ...
  int alpha = max_pos + max_neg;
  auto rank = [&](int letter) {
    return letter < max_pos ? 2 * (letter + 1) - 1 : 2 * (letter - max_pos + 1);
  };
  auto negative = [&](int letter) { return letter >= max_pos; };
  LaurentMPoly out;
  std::vector<int> w(static_cast<size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      int invp = 0;
      for (const auto& [i, j] : cells) {
        int a = w[static_cast<size_t>(i - 1)], b = w[static_cast<size_t>(j - 1)];
        if (rank(a) > rank(b) || (a == b && negative(a))) ++invp;
      }
      std::vector<std::pair<std::string, int>> mono;
      int sign = 0;
      std::vector<int> xdeg(static_cast<size_t>(max_pos), 0), ydeg(static_cast<size_t>(max_neg), 0);
      for (int l : w) {
        if (negative(l)) {
          ++ydeg[static_cast<size_t>(l - max_pos)];
          ++sign;
        } else {
          ++xdeg[static_cast<size_t>(l)];
        }
      }
      for (int i = 0; i < max_pos; ++i)
        if (xdeg[static_cast<size_t>(i)])
          mono.emplace_back("x" + std::to_string(i + 1), xdeg[static_cast<size_t>(i)]);
      for (int i = 0; i < max_neg; ++i)
        if (ydeg[static_cast<size_t>(i)])
          mono.emplace_back("y" + std::to_string(i + 1), ydeg[static_cast<size_t>(i)]);
      Rational c = sign % 2 ? Rational(-1) : Rational(1);
      out += LaurentMPoly::monomial(c, mono) * lp_q(invp);
      return;
    }
    for (int l = 0; l < alpha; ++l) {
      w[static_cast<size_t>(pos)] = l;
      rec(pos + 1);
    }
  };
  if (n > 0 && alpha == 0) return LaurentMPoly();
  rec(0);
  return out;
}

namespace {

// Enumeration core shared by chi_sigma_prime and chi_k: subsets S of
// positions carrying special labels, with labels prescribed on the first k
// rows, no attack among special positions.
struct SpecialAssignment {
  std::vector<int> special;       // 0 = generic, else label in 1..K
  int q_power = 0;                // the A statistic
  std::vector<int> generic_rows;  // rows not in S, ascending
};

void enumerate_special(
    const DyckPath& full, int k, const std::vector<int>& sigma, int K,
    const std::function<void(const SpecialAssignment&)>& emit) {
  int n = full.n();
  CellSet cells = area_set(full);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n + 1));  // earlier attack partners
  for (const auto& [i, j] : cells) adj[static_cast<size_t>(j)].push_back(i);
  std::vector<int> w(static_cast<size_t>(n + 1), 0);
  SpecialAssignment cur;
  cur.special.assign(static_cast<size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos > n) {
      SpecialAssignment out = cur;
      // A = inversions among special pairs + (generic below, special above)
      out.q_power = 0;
      for (const auto& [i, j] : cells) {
        int wi = out.special[static_cast<size_t>(i - 1)];
        int wj = out.special[static_cast<size_t>(j - 1)];
        if (wi > 0 && wj > 0 && wi > wj) out.q_power++;
        if (wi == 0 && wj > 0) out.q_power++;
      }
      for (int r = 1; r <= n; ++r)
        if (out.special[static_cast<size_t>(r - 1)] == 0) out.generic_rows.push_back(r);
      emit(out);
      return;
    }
    auto try_label = [&](int label) {
      for (int i : adj[static_cast<size_t>(pos)])
        if (cur.special[static_cast<size_t>(i - 1)] == label) return;  // attack clash
      cur.special[static_cast<size_t>(pos - 1)] = label;
      rec(pos + 1);
      cur.special[static_cast<size_t>(pos - 1)] = 0;
    };
    if (pos <= k) {
      try_label(sigma[static_cast<size_t>(pos - 1)]);
      return;
    }
    cur.special[static_cast<size_t>(pos - 1)] = 0;
    rec(pos + 1);
    for (int label = 1; label <= K; ++label) try_label(label);
  };
  rec(1);
}

DyckPath restricted_path(const DyckPath& full, const std::vector<int>& rows) {
  CellSet cells = area_set(full);
  std::vector<int> rank(static_cast<size_t>(full.n() + 1), 0);
  for (size_t idx = 0; idx < rows.size(); ++idx) rank[static_cast<size_t>(rows[idx])] = static_cast<int>(idx + 1);
  CellSet sub;
  for (const auto& [i, j] : cells)
    if (rank[static_cast<size_t>(i)] && rank[static_cast<size_t>(j)])
      sub.emplace_back(rank[static_cast<size_t>(i)], rank[static_cast<size_t>(j)]);
  std::sort(sub.begin(), sub.end());
  return DyckPath::from_area_set(static_cast<int>(rows.size()), sub);
}

void check_sigma(const std::vector<int>& sigma) {
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 1) throw SigmaNotDistinct("sigma entries must be positive");
    for (size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] == sigma[j]) throw SigmaNotDistinct("sigma entries must be distinct");
  }
}

}  // namespace

SymFunc chi_sigma_prime(const PartialDyckPath& pi, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != pi.k())
    throw SizeMismatch("chi_sigma_prime: |sigma| != k");
  check_sigma(sigma);
  int K = 0;
  for (int s : sigma) K = std::max(K, s);
  DyckPath full = pi.full();
  SymFunc acc(Basis::m);
  enumerate_special(full, pi.k(), sigma, K, [&](const SpecialAssignment& sa) {
    std::vector<std::pair<std::string, int>> ymono;
    std::map<int, int> ycount;
    for (int r = 1; r <= full.n(); ++r) {
      int lab = sa.special[static_cast<size_t>(r - 1)];
      if (lab > 0) ycount[lab]++;
    }
    for (const auto& [lab, c] : ycount) ymono.emplace_back("y" + std::to_string(lab), c);
    LaurentMPoly scale = LaurentMPoly::monomial(Rational(1), ymono) * lp_q(sa.q_power);
    SymFunc part = chi_prime(restricted_path(full, sa.generic_rows));
    acc = sym_add(acc, scalar_mul(scale, part));
  });
  return acc;
}

VkElement chi_k(const PartialDyckPath& pi) {
  int k = pi.k();
  std::vector<int> sigma(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) sigma[static_cast<size_t>(i)] = i + 1;
  DyckPath full = pi.full();
  VkElement out;
  out.k = k;
  out.f = SymFunc(Basis::p);
  enumerate_special(full, k, sigma, k, [&](const SpecialAssignment& sa) {
    // (q-1)^{|S|-k} q^A y^{extra} chi(pi_S)
    int extra = full.n() - static_cast<int>(sa.generic_rows.size()) - k;
    std::vector<std::pair<std::string, int>> ymono;
    std::map<int, int> ycount;
    for (int r = k + 1; r <= full.n(); ++r) {
      int lab = sa.special[static_cast<size_t>(r - 1)];
      if (lab > 0) ycount[lab]++;
    }
    for (const auto& [lab, c] : ycount) ymono.emplace_back("y" + std::to_string(lab), c);
    LaurentMPoly scale = LaurentMPoly::monomial(Rational(1), ymono) * lp_q(sa.q_power) *
                         q_minus_one().pow(extra);
    SymFunc part = convert(chi(restricted_path(full, sa.generic_rows)), Basis::p);
    out.f = sym_add(out.f, scalar_mul(scale, part));
  });
  return out;
}

SymFunc d_alpha_dinv(const Composition& alpha, int cap) {
  int n = alpha.size();
  if (n > cap) throw CapExceeded("d_alpha_dinv: |alpha| exceeds cap");
  SymFunc acc(Basis::m);
  for (const auto& pi : enumerate_paths_touch(alpha, cap)) {
    LaurentMPoly tpow = lp_t(area(pi));
    SymFunc part = m_basis_sum(pi, cap, "d_alpha_dinv", [&](const std::vector<int>& w) {
      if (!is_word_parking(pi, w)) return LaurentMPoly();
      return lp_q(dinv_pw(pi, w));
    });
    acc = sym_add(acc, scalar_mul(tpow, part));
  }
  return acc;
}

SymFunc d_alpha_bounce(const Composition& alpha, int cap) {
  int n = alpha.size();
  if (n > cap) throw CapExceeded("d_alpha_bounce: |alpha| exceeds cap");
  SymFunc acc(Basis::m);
  for (const auto& pi : enumerate_paths(n, cap)) {
    if (!(touch_prime(pi) == alpha)) continue;
    CellSet cells = area_set(pi);
    CellSet cs = corners(pi);
    LaurentMPoly tpow = lp_t(bounce(pi));
    SymFunc part = m_basis_sum(pi, cap, "d_alpha_bounce", [&](const std::vector<int>& w) {
      for (const auto& c : cs)
        if (!(w[static_cast<size_t>(c.first - 1)] > w[static_cast<size_t>(c.second - 1)]))
          return LaurentMPoly();
      return lp_q(inv_count(cells, w));
    });
    acc = sym_add(acc, scalar_mul(tpow, part));
  }
  return acc;
}

}  // namespace shuffle
