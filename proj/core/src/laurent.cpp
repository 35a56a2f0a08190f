#include "shuffle/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace shuffle {

namespace {

// Rank families so q < t < y* < z < u < v < x* < w* < other.
std::pair<int, long> var_rank(const std::string& v) {
  auto family_index = [](const std::string& s) -> long {
    long idx = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
      idx = idx * 10 + (s[i] - '0');
    }
    return idx;
  };
  if (v == "q") return {0, 0};
  if (v == "t") return {1, 0};
  if (!v.empty()) {
    long idx = family_index(v);
    if (idx >= 0) {
      switch (v[0]) {
        case 'y': return {2, idx};
        case 'z': return {3, idx};
        case 'u': return {4, idx};
        case 'v': return {5, idx};
        case 'x': return {6, idx};
        case 'w': return {7, idx};
        default: break;
      }
    }
  }
  return {8, 0};
}

}  // namespace

bool var_less(const std::string& a, const std::string& b) {
  auto ra = var_rank(a), rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool LaurentMPoly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LaurentMPoly LaurentMPoly::constant(const Rational& c) {
  LaurentMPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
  return p;
}

LaurentMPoly LaurentMPoly::variable(const std::string& name, int exp) {
  return monomial(Rational(1), {{name, exp}});
}

LaurentMPoly LaurentMPoly::monomial(
    const Rational& c, const std::vector<std::pair<std::string, int>>& factors) {
  LaurentMPoly p;
  if (c.is_zero()) return p;
  std::vector<std::pair<std::string, int>> fs;
  for (const auto& f : factors)
    if (f.second != 0) fs.push_back(f);
  std::sort(fs.begin(), fs.end(),
            [](const auto& a, const auto& b) { return var_less(a.first, b.first); });
  Exponents e;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i && fs[i].first == fs[i - 1].first) {
      e.back() += fs[i].second;
      continue;
    }
    p.vars_.push_back(fs[i].first);
    e.push_back(fs[i].second);
  }
  p.terms_.emplace(std::move(e), c);
  return p;
}

bool LaurentMPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentMPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw AssertionFailure("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

bool LaurentMPoly::depends_on(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return false;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_)
    if (e[idx] != 0) return true;
  return false;
}

int LaurentMPoly::min_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] < m) m = e[idx];
    first = false;
  }
  return m;
}

int LaurentMPoly::max_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] > m) m = e[idx];
    first = false;
  }
  return m;
}

LaurentMPoly LaurentMPoly::with_vars(const std::vector<std::string>& vars) const {
  // vars must be a canonical-sorted superset of the used variables.
  LaurentMPoly out(vars);
  std::vector<int> pos(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    pos[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (pos[i] < 0)
        throw VariableOutOfScope("with_vars: dropping used variable " + vars_[i]);
      ne[static_cast<size_t>(pos[i])] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

LaurentMPoly LaurentMPoly::without_unused_vars() const {
  std::vector<std::string> used;
  for (const auto& v : vars_)
    if (depends_on(v)) used.push_back(v);
  if (used.size() == vars_.size()) return *this;
  return with_vars(used);
}

void LaurentMPoly::align(const LaurentMPoly& a, const LaurentMPoly& b, LaurentMPoly& oa,
                         LaurentMPoly& ob) {
  if (a.vars_ == b.vars_) {
    oa = a;
    ob = b;
    return;
  }
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged), var_less);
  oa = a.with_vars(merged);
  ob = b.with_vars(merged);
}

void LaurentMPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentMPoly& LaurentMPoly::operator+=(const LaurentMPoly& o) {
  if (o.is_zero()) return *this;
  if (vars_ != o.vars_) {
    LaurentMPoly a, b;
    align(*this, o, a, b);
    *this = std::move(a);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentMPoly& LaurentMPoly::operator-=(const LaurentMPoly& o) { return *this += -o; }

LaurentMPoly operator-(const LaurentMPoly& a) {
  LaurentMPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentMPoly operator*(const Rational& c, const LaurentMPoly& p) {
  if (c.is_zero()) return LaurentMPoly();
  LaurentMPoly out = p;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

LaurentMPoly operator*(const LaurentMPoly& a, const LaurentMPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentMPoly();
  LaurentMPoly x, y;
  LaurentMPoly::align(a, b, x, y);
  LaurentMPoly out;
  out.vars_ = x.vars_;
  LaurentMPoly::Exponents e(x.vars_.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentMPoly LaurentMPoly::pow(int n) const {
  if (n == 0) return one();
  if (n < 0) {
    if (terms_.size() != 1)
      throw InexactDivision("pow: negative power of a non-monomial");
    LaurentMPoly out;
    out.vars_ = vars_;
    Exponents e = terms_.begin()->first;
    for (auto& x : e) x *= n;
    Rational c = Rational(1) / terms_.begin()->second;
    Rational cn = Rational(1);
    for (int i = 0; i < -n; ++i) cn *= c;
    out.terms_.emplace(std::move(e), cn);
    return out;
  }
  LaurentMPoly acc = one();
  LaurentMPoly base = *this;
  int m = n;
  while (m > 0) {
    if (m & 1) acc = acc * base;
    base = base * base;
    m >>= 1;
  }
  return acc;
}

bool operator==(const LaurentMPoly& a, const LaurentMPoly& b) {
  LaurentMPoly x, y;
  LaurentMPoly::align(a, b, x, y);
  return x.terms_ == y.terms_;
}

LaurentMPoly LaurentMPoly::bar() const {
  int qi = -1, ti = -1;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == "q") qi = static_cast<int>(i);
    else if (vars_[i] == "t") ti = static_cast<int>(i);
    else if (depends_on(vars_[i]))
      throw VariableOutOfScope("bar_involution: variable " + vars_[i] + " not in {q,t}");
  }
  LaurentMPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    if (qi >= 0) ne[static_cast<size_t>(qi)] = -ne[static_cast<size_t>(qi)];
    if (ti >= 0) ne[static_cast<size_t>(ti)] = -ne[static_cast<size_t>(ti)];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

LaurentMPoly LaurentMPoly::frobenius(int n) const {
  if (n < 1) throw IndexOutOfRange("frobenius_power: n must be >= 1");
  LaurentMPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    for (auto& x : ne) x *= n;
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

LaurentMPoly LaurentMPoly::coeff_of(const std::string& var, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return k == 0 ? *this : LaurentMPoly();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  LaurentMPoly out;
  out.vars_ = vars_;
  out.vars_.erase(out.vars_.begin() + static_cast<long>(idx));
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents ne;
    ne.reserve(e.size() - 1);
    for (size_t i = 0; i < e.size(); ++i)
      if (i != idx) ne.push_back(e[i]);
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

LaurentMPoly exact_div(const LaurentMPoly& a, const LaurentMPoly& b) {
  if (b.is_zero()) throw InexactDivision("exact_div: division by zero");
  if (a.is_zero()) return LaurentMPoly();
  LaurentMPoly x, y;
  LaurentMPoly::align(a, b, x, y);
  size_t nv = x.vars_.size();

  // Strip each operand to its Laurent-primitive polynomial part; the
  // quotient of the stripped parts is an honest polynomial when the Laurent
  // quotient exists (per-variable minimal degrees are additive).
  std::vector<int> sa(nv, 0), sb(nv, 0);
  for (size_t i = 0; i < nv; ++i) {
    sa[i] = x.min_exponent(x.vars_[i]);
    sb[i] = y.min_exponent(y.vars_[i]);
  }
  auto shift = [&](const LaurentMPoly& p, const std::vector<int>& s) {
    LaurentMPoly::TermMap shifted;
    for (const auto& [e, c] : p.terms()) {
      LaurentMPoly::Exponents ne = e;
      for (size_t i = 0; i < nv; ++i) ne[i] -= s[i];
      shifted.emplace(std::move(ne), c);
    }
    LaurentMPoly q;
    q.vars_ = p.vars();
    q.terms_ = std::move(shifted);
    return q;
  };
  LaurentMPoly rem = shift(x, sa);
  LaurentMPoly den = shift(y, sb);

  LaurentMPoly quot;
  quot.vars_ = x.vars_;
  const auto& ld = *den.terms_.rbegin();  // leading term under graded lex
  while (!rem.is_zero()) {
    const auto& lr = *rem.terms_.rbegin();
    LaurentMPoly::Exponents d(nv);
    for (size_t i = 0; i < nv; ++i) {
      d[i] = lr.first[i] - ld.first[i];
      if (d[i] < 0) throw InexactDivision("exact_div: no exact quotient");
    }
    Rational c = lr.second / ld.second;
    quot.add_term(d, c);
    LaurentMPoly piece;
    piece.vars_ = x.vars_;
    piece.terms_.emplace(std::move(d), c);
    rem -= piece * den;
  }

  // Undo the strip: multiply by x^{sa-sb}.
  LaurentMPoly::TermMap unshifted;
  for (const auto& [e, c] : quot.terms_) {
    LaurentMPoly::Exponents ne = e;
    for (size_t i = 0; i < nv; ++i) ne[i] += sa[i] - sb[i];
    unshifted.emplace(std::move(ne), c);
  }
  quot.terms_ = std::move(unshifted);
  return quot.without_unused_vars();
}

LaurentMPoly LaurentMPoly::substituted(const std::map<std::string, LaurentMPoly>& repl) const {
  LaurentMPoly out;
  for (const auto& [e, c] : terms_) {
    LaurentMPoly term = constant(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = repl.find(vars_[i]);
      if (it == repl.end()) {
        term = term * variable(vars_[i], e[i]);
        continue;
      }
      const LaurentMPoly& r = it->second;
      if (r.terms_.size() != 1)
        throw AssertionFailure("substituted: replacement must be a single-term monomial");
      term = term * r.pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::string LaurentMPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.str();
    } else if (a.is_one()) {
      os << mono;
    } else {
      os << a.str() << "*" << mono;
    }
  }
  return os.str();
}

LaurentMPoly lp_q(int e) { return LaurentMPoly::variable("q", e); }
LaurentMPoly lp_t(int e) { return LaurentMPoly::variable("t", e); }
LaurentMPoly lp_y(int i, int e) { return LaurentMPoly::variable("y" + std::to_string(i), e); }
LaurentMPoly lp_var(const std::string& name, int e) { return LaurentMPoly::variable(name, e); }
LaurentMPoly lp_const(long n) { return LaurentMPoly::constant(Rational(n)); }
LaurentMPoly q_minus_one() { return lp_q() - lp_const(1); }
LaurentMPoly one_minus_q() { return lp_const(1) - lp_q(); }

}  // namespace shuffle
