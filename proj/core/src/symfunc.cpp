#include "shuffle/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace shuffle {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  if (s == "p") return Basis::p;
  if (s == "h") return Basis::h;
  if (s == "e") return Basis::e;
  if (s == "m") return Basis::m;
  if (s == "s") return Basis::s;
  throw SizeMismatch("unknown basis '" + s + "'");
}

SymFunc SymFunc::one(Basis b) {
  SymFunc f(b);
  f.coeffs.emplace(Partition(), LaurentMPoly::one());
  return f;
}

SymFunc SymFunc::generator(Basis b, const Partition& lam) {
  SymFunc f(b);
  f.coeffs.emplace(lam, LaurentMPoly::one());
  return f;
}

void SymFunc::add(const Partition& lam, const LaurentMPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.emplace(lam, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

std::vector<int> SymFunc::degrees() const {
  std::vector<int> ds;
  for (const auto& [lam, c] : coeffs) {
    int d = lam.size();
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

SymFunc SymFunc::component(int d) const {
  SymFunc out(basis);
  for (const auto& [lam, c] : coeffs)
    if (lam.size() == d) out.coeffs.emplace(lam, c);
  return out;
}

int SymFunc::max_degree() const {
  int m = 0;
  for (const auto& [lam, c] : coeffs) m = std::max(m, lam.size());
  return m;
}

std::string SymFunc::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_name(basis);
    os << "[";
    for (int i = 0; i < lam.length(); ++i) os << (i ? "," : "") << lam[i];
    os << "]";
  }
  return os.str();
}

Rational z_stat(const Partition& lam) {
  Rational z(1);
  int run = 0;
  for (int i = 0; i < lam.length(); ++i) {
    ++run;
    z *= Rational(lam[i]);
    if (i + 1 == lam.length() || lam[i + 1] != lam[i]) {
      for (int m = 2; m <= run; ++m) z *= Rational(m);
      run = 0;
    } else {
      // same part continues; factorial applied when the run closes
    }
  }
  return z;
}

namespace {

using PExpansion = std::map<Partition, Rational>;

PExpansion pexp_mul(const PExpansion& a, const PExpansion& b) {
  PExpansion out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) {
      std::vector<int> parts = la.parts;
      parts.insert(parts.end(), lb.parts.begin(), lb.parts.end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition key(std::move(parts));
      auto [it, fresh] = out.emplace(key, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

PExpansion h_n_in_p(int n) {
  PExpansion out;
  for (const auto& lam : partitions_of(n)) out.emplace(lam, Rational(1) / z_stat(lam));
  return out;
}

PExpansion e_n_in_p(int n) {
  PExpansion out;
  for (const auto& lam : partitions_of(n)) {
    Rational c = Rational(1) / z_stat(lam);
    if ((n - lam.length()) % 2 != 0) c = -c;
    out.emplace(lam, c);
  }
  return out;
}

struct BasisCache {
  std::mutex mu;
  std::map<Partition, PExpansion> h, e, s;
};

BasisCache& basis_cache() {
  static BasisCache* c = new BasisCache();
  return *c;
}

PExpansion product_over_parts(const Partition& lam, PExpansion (*unit)(int)) {
  PExpansion acc{{Partition(), Rational(1)}};
  for (int i = 0; i < lam.length(); ++i) acc = pexp_mul(acc, unit(lam[i]));
  return acc;
}

// Jacobi-Trudi: s_lam = det(h_{lam_i - i + j}), expanded over permutations.
PExpansion s_in_p_compute(const Partition& lam) {
  int l = lam.length();
  if (l == 0) return {{Partition(), Rational(1)}};
  std::vector<int> perm(static_cast<size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  PExpansion acc;
  do {
    // sign of the permutation
    int sign = 1;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
    std::vector<int> hparts;
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      int d = lam[i] - (i + 1) + (perm[static_cast<size_t>(i)] + 1);
      if (d < 0) dead = true;
      else if (d > 0) hparts.push_back(d);
    }
    if (dead) continue;
    std::sort(hparts.begin(), hparts.end(), std::greater<int>());
    PExpansion term = product_over_parts(Partition(std::move(hparts)), h_n_in_p);
    for (const auto& [mu, c] : term) {
      Rational v = sign < 0 ? -c : c;
      auto [it, fresh] = acc.emplace(mu, v);
      if (!fresh) it->second += v;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

}  // namespace

const PExpansion& h_in_p(const Partition& lam) {
  auto& c = basis_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.h.find(lam);
  if (it == c.h.end()) it = c.h.emplace(lam, product_over_parts(lam, h_n_in_p)).first;
  return it->second;
}

const PExpansion& e_in_p(const Partition& lam) {
  auto& c = basis_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.e.find(lam);
  if (it == c.e.end()) it = c.e.emplace(lam, product_over_parts(lam, e_n_in_p)).first;
  return it->second;
}

const PExpansion& s_in_p(const Partition& lam) {
  auto& c = basis_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.s.find(lam);
  if (it == c.s.end()) it = c.s.emplace(lam, s_in_p_compute(lam)).first;
  return it->second;
}

namespace {

// Per-degree transition data for the m-basis and the inverse maps out of p.
struct DegreeTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  // p_to_m[mu][lam]: coefficient of m_mu in p_lam   (= z_lam * [p_lam](h_mu))
  std::vector<std::vector<Rational>> p_to_m;
  std::vector<std::vector<Rational>> m_to_p;  // inverse
  std::vector<std::vector<Rational>> p_to_h;  // x = p_to_h * f_p gives h-coeffs
  std::vector<std::vector<Rational>> p_to_e;
};

std::vector<std::vector<Rational>> invert_rational(std::vector<std::vector<Rational>> A) {
  size_t n = A.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("invert_rational: singular transition matrix");
    std::swap(A[piv], A[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = A[col][col];
    for (size_t j = 0; j < n; ++j) {
      A[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      Rational f = A[r][col];
      for (size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

const DegreeTables& degree_tables(int d) {
  static std::mutex mu;
  static std::map<int, DegreeTables>* cache = new std::map<int, DegreeTables>();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(d);
  if (it != cache->end()) return it->second;

  DegreeTables t;
  t.parts = partitions_of(d);
  size_t n = t.parts.size();
  for (size_t i = 0; i < n; ++i) t.index.emplace(t.parts[i], static_cast<int>(i));

  std::vector<std::vector<Rational>> h_mat(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<Rational>> e_mat(n, std::vector<Rational>(n, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    for (const auto& [mu, c] : h_in_p(t.parts[j])) h_mat[static_cast<size_t>(t.index.at(mu))][j] = c;
    for (const auto& [mu, c] : e_in_p(t.parts[j])) e_mat[static_cast<size_t>(t.index.at(mu))][j] = c;
  }
  t.p_to_m.assign(n, std::vector<Rational>(n, Rational(0)));
  for (size_t mu = 0; mu < n; ++mu)
    for (size_t lam = 0; lam < n; ++lam)
      t.p_to_m[mu][lam] = h_mat[lam][mu] * z_stat(t.parts[lam]);
  t.m_to_p = invert_rational(t.p_to_m);
  t.p_to_h = invert_rational(h_mat);
  t.p_to_e = invert_rational(e_mat);
  return cache->emplace(d, std::move(t)).first->second;
}

SymFunc to_p(const SymFunc& f) {
  if (f.basis == Basis::p) return f;
  SymFunc out(Basis::p);
  if (f.basis == Basis::m) {
    for (int d : f.degrees()) {
      const auto& t = degree_tables(d);
      size_t n = t.parts.size();
      std::vector<LaurentMPoly> c(n);
      for (const auto& [lam, v] : f.component(d).coeffs)
        c[static_cast<size_t>(t.index.at(lam))] = v;
      for (size_t i = 0; i < n; ++i) {
        LaurentMPoly acc;
        for (size_t j = 0; j < n; ++j)
          if (!c[j].is_zero() && !t.m_to_p[i][j].is_zero())
            acc += LaurentMPoly::constant(t.m_to_p[i][j]) * c[j];
        out.add(t.parts[i], acc);
      }
    }
    return out;
  }
  auto expand = f.basis == Basis::h   ? h_in_p
                : f.basis == Basis::e ? e_in_p
                                      : s_in_p;
  for (const auto& [lam, v] : f.coeffs)
    for (const auto& [mu, c] : expand(lam)) out.add(mu, LaurentMPoly::constant(c) * v);
  return out;
}

SymFunc from_p(const SymFunc& g, Basis target) {
  if (target == Basis::p) return g;
  SymFunc out(target);
  for (int d : g.degrees()) {
    const auto& t = degree_tables(d);
    size_t n = t.parts.size();
    std::vector<LaurentMPoly> c(n);
    for (const auto& [lam, v] : g.component(d).coeffs)
      c[static_cast<size_t>(t.index.at(lam))] = v;
    if (target == Basis::s) {
      for (size_t i = 0; i < n; ++i) {
        LaurentMPoly acc;
        const auto& sp = s_in_p(t.parts[i]);
        for (const auto& [mu, sc] : sp) {
          size_t j = static_cast<size_t>(t.index.at(mu));
          if (!c[j].is_zero()) acc += LaurentMPoly::constant(sc * z_stat(mu)) * c[j];
        }
        out.add(t.parts[i], acc);
      }
      continue;
    }
    const auto& mat = target == Basis::m   ? t.p_to_m
                      : target == Basis::h ? t.p_to_h
                                           : t.p_to_e;
    for (size_t i = 0; i < n; ++i) {
      LaurentMPoly acc;
      for (size_t j = 0; j < n; ++j)
        if (!c[j].is_zero() && !mat[i][j].is_zero())
          acc += LaurentMPoly::constant(mat[i][j]) * c[j];
      out.add(t.parts[i], acc);
    }
  }
  return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  return from_p(to_p(f), target);
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = convert(a, Basis::p), pb = convert(b, Basis::p);
  return pa.coeffs == pb.coeffs;
}

SymFunc sym_add(const SymFunc& a, const SymFunc& b) {
  if (a.basis == b.basis) {
    SymFunc out = a;
    for (const auto& [lam, c] : b.coeffs) out.add(lam, c);
    return out;
  }
  SymFunc out = to_p(a);
  for (const auto& [lam, c] : to_p(b).coeffs) out.add(lam, c);
  return out;
}

SymFunc sym_neg(const SymFunc& f) {
  SymFunc out(f.basis);
  for (const auto& [lam, c] : f.coeffs) out.coeffs.emplace(lam, -c);
  return out;
}

SymFunc sym_sub(const SymFunc& a, const SymFunc& b) { return sym_add(a, sym_neg(b)); }

SymFunc scalar_mul(const LaurentMPoly& c, const SymFunc& f) {
  SymFunc out(f.basis);
  if (c.is_zero()) return out;
  for (const auto& [lam, v] : f.coeffs) out.add(lam, c * v);
  return out;
}

SymFunc sym_mul(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = to_p(a), pb = to_p(b);
  SymFunc out(Basis::p);
  for (const auto& [la, ca] : pa.coeffs) {
    for (const auto& [lb, cb] : pb.coeffs) {
      std::vector<int> parts = la.parts;
      parts.insert(parts.end(), lb.parts.begin(), lb.parts.end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      out.add(Partition(std::move(parts)), ca * cb);
    }
  }
  return out;
}

SymFunc sym_exact_div_scalar(const SymFunc& f, const LaurentMPoly& c) {
  SymFunc out(f.basis);
  for (const auto& [lam, v] : f.coeffs) out.add(lam, exact_div(v, c));
  return out;
}

LaurentMPoly hall_inner(const SymFunc& f, const SymFunc& g) {
  SymFunc pf = to_p(f), pg = to_p(g);
  LaurentMPoly acc;
  for (const auto& [lam, cf] : pf.coeffs) {
    auto it = pg.coeffs.find(lam);
    if (it == pg.coeffs.end()) continue;
    acc += LaurentMPoly::constant(z_stat(lam)) * (cf * it->second);
  }
  return acc;
}

SymFunc plethysm(const SymFunc& f, const AlphabetExpr& A) {
  SymFunc pf = to_p(f);
  SymFunc out(Basis::p);
  for (const auto& [lam, c] : pf.coeffs) {
    // Product over parts of (frob(x_coeff,n) p_n + frob(pure,n)), expanded by
    // choosing, for each part, whether it stays a power sum.
    std::vector<std::pair<std::vector<int>, LaurentMPoly>> acc{{{}, c}};
    for (int idx = 0; idx < lam.length(); ++idx) {
      int n = lam[idx];
      LaurentMPoly fx = A.x_coeff.is_zero() ? LaurentMPoly() : A.x_coeff.frobenius(n);
      LaurentMPoly fp = A.pure.is_zero() ? LaurentMPoly() : A.pure.frobenius(n);
      std::vector<std::pair<std::vector<int>, LaurentMPoly>> next;
      for (const auto& [parts, coef] : acc) {
        if (!fx.is_zero()) {
          auto np = parts;
          np.push_back(n);
          next.emplace_back(std::move(np), coef * fx);
        }
        if (!fp.is_zero()) next.emplace_back(parts, coef * fp);
      }
      acc = std::move(next);
    }
    for (auto& [parts, coef] : acc) {
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      out.add(Partition(std::move(parts)), coef);
    }
  }
  return out;
}

std::vector<SymFunc> pexp(const AlphabetExpr& A, int max_deg) {
  if (max_deg < 0) throw SizeMismatch("pexp: max_deg must be >= 0");
  std::vector<SymFunc> out;
  for (int n = 0; n <= max_deg; ++n)
    out.push_back(plethysm(SymFunc::generator(Basis::h, n == 0 ? Partition() : Partition({n})), A));
  return out;
}

SymFunc omega(const SymFunc& f) {
  SymFunc pf = to_p(f);
  SymFunc out(Basis::p);
  for (const auto& [lam, c] : pf.coeffs)
    out.add(lam, lam.length() % 2 ? -c : c);
  return out;
}

SymFunc omega_bar(const SymFunc& f) {
  SymFunc pf = to_p(f);
  SymFunc out(Basis::p);
  for (const auto& [lam, c] : pf.coeffs)
    out.add(lam, lam.length() % 2 ? -c.bar() : c.bar());
  return out;
}

namespace {

// h_n[sign*X] as a p-basis SymFunc.
SymFunc h_of_signed_X(int n, int sign) {
  SymFunc out(Basis::p);
  if (n == 0) return SymFunc::one(Basis::p);
  for (const auto& [lam, c] : h_n_in_p(n))
    out.add(lam, LaurentMPoly::constant(sign < 0 && lam.length() % 2 ? -c : c));
  return out;
}

}  // namespace

SymFunc op_B(int r, const SymFunc& f) {
  // (B_r F)[X] = F[X-(q-1)z^{-1}] Exp[-zX] |_{z^r}
  AlphabetExpr A{LaurentMPoly::one(), -(q_minus_one() * lp_var("z", -1))};
  SymFunc g = plethysm(f, A);
  SymFunc out(Basis::p);
  int max_m = r + convert(f, Basis::p).max_degree();
  for (int m = std::max(0, r); m <= max_m; ++m) {
    SymFunc slice(Basis::p);
    for (const auto& [lam, c] : g.coeffs) slice.add(lam, c.coeff_of("z", r - m));
    if (slice.is_zero()) continue;
    out = sym_add(out, sym_mul(slice, h_of_signed_X(m, -1)));
  }
  return out;
}

SymFunc op_C(int r, const SymFunc& f) {
  // (C_r F)[X] = -q^{1-r} F[X+(q^{-1}-1)z^{-1}] Exp[zX] |_{z^r}
  AlphabetExpr A{LaurentMPoly::one(), (lp_q(-1) - lp_const(1)) * lp_var("z", -1)};
  SymFunc g = plethysm(f, A);
  SymFunc out(Basis::p);
  int max_m = r + convert(f, Basis::p).max_degree();
  for (int m = std::max(0, r); m <= max_m; ++m) {
    SymFunc slice(Basis::p);
    for (const auto& [lam, c] : g.coeffs) slice.add(lam, c.coeff_of("z", r - m));
    if (slice.is_zero()) continue;
    out = sym_add(out, sym_mul(slice, h_of_signed_X(m, +1)));
  }
  return scalar_mul(-lp_q(1 - r), out);
}

SymFunc op_B_word(const Composition& alpha, const SymFunc& f) {
  SymFunc g = f;
  for (int i = alpha.length(); i-- > 0;) g = op_B(alpha[i], g);
  return g;
}

SymFunc op_C_word(const Composition& alpha, const SymFunc& f) {
  SymFunc g = f;
  for (int i = alpha.length(); i-- > 0;) g = op_C(alpha[i], g);
  return g;
}

LaurentMPoly realize(const SymFunc& f, int num_x, int num_y) {
  if (num_x < 0 || num_y < 0) throw SizeMismatch("realize: alphabet sizes must be >= 0");
  SymFunc pf = to_p(f);
  LaurentMPoly out;
  for (const auto& [lam, c] : pf.coeffs) {
    LaurentMPoly term = c;
    for (int idx = 0; idx < lam.length(); ++idx) {
      int k = lam[idx];
      LaurentMPoly pk;
      for (int i = 1; i <= num_x; ++i) pk += lp_var("x" + std::to_string(i), k);
      for (int j = 1; j <= num_y; ++j) pk -= lp_y(j, k);
      term = term * pk;
    }
    out += term;
  }
  return out;
}

SymFunc h_negX_expansion(int m) {
  SymFunc out(Basis::h);
  if (m == 0) return SymFunc::one(Basis::h);
  for (const auto& nu : partitions_of(m)) {
    long r = static_cast<long>(rearrangements(nu).size());
    Rational c(nu.length() % 2 ? -r : r);
    out.add(nu, LaurentMPoly::constant(c));
  }
  return out;
}

LaurentMPoly m_at_qminus1(const Partition& nu) {
  if (nu.empty()) return LaurentMPoly::one();
  LaurentMPoly acc;
  for (const auto& alpha : rearrangements(nu))
    acc += lp_const(1) - lp_q(alpha[0]);
  return nu.length() % 2 ? -acc : acc;
}

SymFunc m_qminus1_expansion(const Partition& lam) {
  SymFunc out(Basis::m);
  if (lam.empty()) return SymFunc::one(Basis::m);
  int n = lam.size();
  for (const auto& mu : partitions_of(n)) {
    LaurentMPoly acc;
    for (const auto& alpha : rearrangements(lam)) {
      auto blocks = compatibility_split(alpha, mu);
      if (!blocks) continue;
      LaurentMPoly prod = LaurentMPoly::one();
      for (const auto& blk : *blocks) {
        LaurentMPoly f = lp_const(1) - lp_q(blk[0]);
        if (blk.length() % 2) f = -f;
        prod = prod * f;
      }
      acc += prod;
    }
    out.add(mu, acc);
  }
  return out;
}

}  // namespace shuffle
