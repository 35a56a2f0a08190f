#include "shuffle/dyck.hpp"

#include <algorithm>
#include <numeric>

namespace shuffle {

namespace {

void validate_word(const std::string& w) {
  int bal = 0;
  for (char c : w) {
    if (c == 'N') ++bal;
    else if (c == 'E') --bal;
    else throw SizeMismatch("DyckPath: word must be over {N,E}, got '" + w + "'");
    if (bal < 0) throw SizeMismatch("DyckPath: word dips below the diagonal: " + w);
  }
  if (bal != 0) throw SizeMismatch("DyckPath: unbalanced word: " + w);
}

DyckPath path_from_x(const std::vector<int>& x) {
  int n = static_cast<int>(x.size());
  std::string w;
  int prev = 1;
  for (int j = 0; j < n; ++j) {
    if (x[j] < prev) throw AssertionFailure("path_from_x: x not weakly increasing");
    w.append(static_cast<size_t>(x[j] - prev), 'E');
    w.push_back('N');
    prev = x[j];
  }
  w.append(static_cast<size_t>(n - prev + 1), 'E');
  return DyckPath::from_word(w);
}

int leading_norths(const DyckPath& p) {
  int l = 0;
  for (char c : p.word()) {
    if (c != 'N') break;
    ++l;
  }
  return l;
}

// Step index (into the word) of the m-th touch point, m = 0..l.
std::vector<int> touch_positions(const DyckPath& p) {
  std::vector<int> pos{0};
  int bal = 0;
  for (int s = 0; s < static_cast<int>(p.word().size()); ++s) {
    bal += p.word()[static_cast<size_t>(s)] == 'N' ? 1 : -1;
    if (bal == 0) pos.push_back(s + 1);
  }
  return pos;
}

}  // namespace

DyckPath DyckPath::from_word(const std::string& word) {
  validate_word(word);
  DyckPath p;
  p.word_ = word;
  return p;
}

DyckPath DyckPath::from_area_seq(const std::vector<int>& a) {
  std::vector<int> x(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    x[j] = static_cast<int>(j + 1) - a[j];
    if (x[j] < 1) throw AssertionFailure("from_area_seq: a_j > j-1");
  }
  return path_from_x(x);
}

DyckPath DyckPath::from_area_set(int n, const CellSet& cells) {
  std::vector<int> a(static_cast<size_t>(n), 0);
  for (const auto& [i, j] : cells) {
    if (j < 1 || j > n || i < 1 || i >= j)
      throw AssertionFailure("from_area_set: cell outside the strict upper triangle");
    a[static_cast<size_t>(j - 1)]++;
  }
  DyckPath p = from_area_seq(a);
  if (area_set(p) != cells)
    throw AssertionFailure("from_area_set: set is not down-left closed");
  return p;
}

PartialDyckPath::PartialDyckPath(int k, const std::string& word) : k_(k), word_(word) {
  if (k < 0) throw IndexOutOfRange("PartialDyckPath: negative start height");
  int y = k, x = 0;
  for (char c : word) {
    if (c == 'N') ++y;
    else if (c == 'E') ++x;
    else throw SizeMismatch("PartialDyckPath: word must be over {N,E}");
    if (y < x) throw SizeMismatch("PartialDyckPath: word dips below the diagonal");
  }
  if (y != x) throw SizeMismatch("PartialDyckPath: does not end on the diagonal");
}

int PartialDyckPath::n() const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), 'E'));
}

int PartialDyckPath::norths() const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), 'N'));
}

DyckPath PartialDyckPath::full() const {
  return DyckPath::from_word(std::string(static_cast<size_t>(k_), 'N') + word_);
}

PartialDyckPath PartialDyckPath::prepend_east() const {
  return PartialDyckPath(k_ + 1, "E" + word_);
}

PartialDyckPath PartialDyckPath::prepend_north() const {
  if (k_ < 1) throw LevelZero("prepend_north: already a full path");
  return PartialDyckPath(k_ - 1, "N" + word_);
}

std::vector<int> coarea_seq(const DyckPath& pi) {
  std::vector<int> x;
  int easts = 0;
  for (char c : pi.word()) {
    if (c == 'E') ++easts;
    else x.push_back(easts + 1);
  }
  return x;
}

std::vector<int> area_seq(const DyckPath& pi) {
  std::vector<int> a = coarea_seq(pi);
  for (size_t j = 0; j < a.size(); ++j) a[j] = static_cast<int>(j + 1) - a[j];
  return a;
}

int area(const DyckPath& pi) {
  auto a = area_seq(pi);
  return std::accumulate(a.begin(), a.end(), 0);
}

CellSet area_set(const DyckPath& pi) {
  CellSet cells;
  auto x = coarea_seq(pi);
  for (int j = 1; j <= pi.n(); ++j)
    for (int i = x[static_cast<size_t>(j - 1)]; i <= j - 1; ++i) cells.emplace_back(i, j);
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<RowPair> dinv_set(const DyckPath& pi) {
  auto a = area_seq(pi);
  int n = pi.n();
  std::vector<RowPair> out;
  for (int j = 1; j <= n; ++j)
    for (int jp = j + 1; jp <= n; ++jp)
      if (a[static_cast<size_t>(j - 1)] == a[static_cast<size_t>(jp - 1)])
        out.emplace_back(j, jp);
  for (int j = 1; j <= n; ++j)
    for (int jp = 1; jp < j; ++jp)
      if (a[static_cast<size_t>(jp - 1)] == a[static_cast<size_t>(j - 1)] + 1)
        out.emplace_back(j, jp);
  return out;
}

int dinv(const DyckPath& pi) { return static_cast<int>(dinv_set(pi).size()); }

Composition touch(const DyckPath& pi) {
  auto a = area_seq(pi);
  std::vector<int> zeros;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] == 0) zeros.push_back(static_cast<int>(j + 1));
  std::vector<int> parts;
  for (size_t m = 0; m < zeros.size(); ++m) {
    int next = m + 1 < zeros.size() ? zeros[m + 1] : pi.n() + 1;
    parts.push_back(next - zeros[m]);
  }
  return Composition(std::move(parts));
}

bool is_word_parking(const DyckPath& pi, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi.n())
    throw LengthMismatch("is_word_parking: |w| != n");
  auto x = coarea_seq(pi);
  for (size_t j = 0; j + 1 < x.size(); ++j)
    if (x[j] == x[j + 1] && !(w[j] > w[j + 1])) return false;
  return true;
}

int dinv_pw(const DyckPath& pi, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi.n()) throw LengthMismatch("dinv_pw: |w| != n");
  int c = 0;
  for (const auto& [j, jp] : dinv_set(pi))
    if (w[static_cast<size_t>(j - 1)] > w[static_cast<size_t>(jp - 1)]) ++c;
  return c;
}

std::vector<int> reading_order(const DyckPath& pi) {
  auto a = area_seq(pi);
  int n = pi.n();
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int rank = 1;
    for (int j = 0; j < n; ++j) {
      if (a[static_cast<size_t>(j)] < a[static_cast<size_t>(i)] ||
          (a[static_cast<size_t>(j)] == a[static_cast<size_t>(i)] && j < i))
        ++rank;
    }
    sigma[static_cast<size_t>(i)] = rank;
  }
  return sigma;
}

DyckPath zeta(const DyckPath& pi) {
  auto sigma = reading_order(pi);
  CellSet cells;
  for (const auto& [j, jp] : dinv_set(pi))
    cells.emplace_back(sigma[static_cast<size_t>(j - 1)], sigma[static_cast<size_t>(jp - 1)]);
  std::sort(cells.begin(), cells.end());
  return DyckPath::from_area_set(pi.n(), cells);
}

DyckPath zeta_inverse(const DyckPath& pi_prime) {
  if (pi_prime.empty_path()) return DyckPath();
  int l = leading_norths(pi_prime);
  return psi_r(zeta_inverse(gamma_bar(pi_prime)), l - 1);
}

std::vector<int> bounce_seq(const DyckPath& pi_prime) {
  int n = pi_prime.n();
  std::vector<int> e(static_cast<size_t>(n), 0);  // e[x] = height of the E step leaving column x
  int x = 0, y = 0;
  for (char c : pi_prime.word()) {
    if (c == 'N') ++y;
    else e[static_cast<size_t>(x++)] = y;
  }
  std::vector<int> b(static_cast<size_t>(n));
  int v = 0, block = 0;
  while (v < n) {
    int next = e[static_cast<size_t>(v)];
    for (int i = v + 1; i <= next; ++i) b[static_cast<size_t>(i - 1)] = block;
    v = next;
    ++block;
  }
  return b;
}

int bounce(const DyckPath& pi_prime) {
  auto b = bounce_seq(pi_prime);
  return std::accumulate(b.begin(), b.end(), 0);
}

CellSet corners(const DyckPath& pi) {
  auto x = coarea_seq(pi);
  CellSet out;
  for (int j = 2; j <= pi.n(); ++j)
    if (x[static_cast<size_t>(j - 2)] < x[static_cast<size_t>(j - 1)])
      out.emplace_back(x[static_cast<size_t>(j - 1)] - 1, j);
  std::sort(out.begin(), out.end());
  return out;
}

DyckPath flip_corners(const DyckPath& pi, const CellSet& subset) {
  auto x = coarea_seq(pi);
  CellSet cs = corners(pi);
  for (const auto& cell : subset) {
    if (std::find(cs.begin(), cs.end(), cell) == cs.end())
      throw WeightDomainMismatch("flip_corners: not a corner of the path");
    x[static_cast<size_t>(cell.second - 1)]--;
  }
  return path_from_x(x);
}

DyckPath psi_r(const DyckPath& pi, int r) {
  auto pos = touch_positions(pi);
  int l = static_cast<int>(pos.size()) - 1;
  if (r < 0 || r > l) throw IndexOutOfRange("psi_r: r out of range");
  std::string pi2 = pi.word().substr(0, static_cast<size_t>(pos[static_cast<size_t>(r)]));
  std::string pi1 = pi.word().substr(static_cast<size_t>(pos[static_cast<size_t>(r)]));
  return DyckPath::from_word("N" + pi1 + "E" + pi2);
}

DyckPath psi_bar(const DyckPath& pi) {
  if (pi.empty_path()) throw IndexOutOfRange("psi_bar: empty path");
  auto pos = touch_positions(pi);
  int first = pos[1];  // end of the first arch N pi_1 E
  std::string pi1 = pi.word().substr(1, static_cast<size_t>(first - 2));
  std::string pi2 = pi.word().substr(static_cast<size_t>(first));
  return DyckPath::from_word(pi2 + pi1);
}

DyckPath gamma_r(const DyckPath& pi_prime, int r) {
  if (pi_prime.empty_path()) {
    if (r == 0) return DyckPath::from_word("NE");
    throw IndexOutOfRange("gamma_r: empty path only admits r = 0");
  }
  int l = leading_norths(pi_prime);
  if (r < 0 || r > l) throw IndexOutOfRange("gamma_r: r out of range");
  std::string tail = pi_prime.word().substr(static_cast<size_t>(l + 1));  // strip N^l E
  std::string w = std::string(static_cast<size_t>(r + 1), 'N') + "E" +
                  std::string(static_cast<size_t>(l - r), 'N') + "E" + tail;
  return DyckPath::from_word(w);
}

DyckPath gamma_bar(const DyckPath& pi_prime) {
  if (pi_prime.empty_path()) throw IndexOutOfRange("gamma_bar: empty path");
  int l = leading_norths(pi_prime);
  std::string tail = pi_prime.word().substr(static_cast<size_t>(l + 1));
  return DyckPath::from_word(std::string(static_cast<size_t>(l - 1), 'N') + tail);
}

Composition touch_prime(const DyckPath& pi_prime) {
  if (pi_prime.empty_path()) return Composition();
  int l = leading_norths(pi_prime);
  std::vector<int> t(static_cast<size_t>(l + 1));
  for (int r = 0; r <= l; ++r) t[static_cast<size_t>(r)] = bounce(gamma_r(pi_prime, r));
  std::vector<int> parts(static_cast<size_t>(l));
  for (int r = 0; r < l; ++r)
    parts[static_cast<size_t>(r)] = t[static_cast<size_t>(r)] - t[static_cast<size_t>(r + 1)];
  return Composition(std::move(parts));
}

bool wp_prime_check(const DyckPath& pi_prime, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi_prime.n())
    throw LengthMismatch("wp_prime_check: |w| != n");
  for (const auto& [i, j] : corners(pi_prime))
    if (!(w[static_cast<size_t>(i - 1)] > w[static_cast<size_t>(j - 1)])) return false;
  return true;
}

int inv_pw(const DyckPath& pi_prime, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi_prime.n())
    throw LengthMismatch("inv_pw: |w| != n");
  int c = 0;
  for (const auto& [i, j] : area_set(pi_prime))
    if (w[static_cast<size_t>(i - 1)] > w[static_cast<size_t>(j - 1)]) ++c;
  return c;
}

namespace {

// Cells of mu listed in reading order (l,1)..(l,mu_l),(l-1,1),...,(1,mu_1);
// returns 0-based positions.
std::vector<std::pair<int, int>> mu_reading_cells(const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int i = mu.length(); i >= 1; --i)
    for (int j = 1; j <= mu[i - 1]; ++j) cells.emplace_back(i, j);
  return cells;
}

CellSet mu_attack_set(const Partition& mu) {
  auto cells = mu_reading_cells(mu);
  int n = static_cast<int>(cells.size());
  std::map<std::pair<int, int>, int> pos;
  for (int m = 0; m < n; ++m) pos[cells[static_cast<size_t>(m)]] = m;
  CellSet attacks;
  for (int m1 = 0; m1 < n; ++m1) {
    auto [i, j] = cells[static_cast<size_t>(m1)];
    int stop = i > 1 ? pos.at({i - 1, j}) : n;  // attack everything before (i-1,j)
    for (int m2 = m1 + 1; m2 < stop; ++m2) attacks.emplace_back(m1 + 1, m2 + 1);
  }
  std::sort(attacks.begin(), attacks.end());
  return attacks;
}

}  // namespace

DyckPath pi_mu(const Partition& mu) {
  if (mu.empty()) throw SizeMismatch("pi_mu: mu must be nonempty");
  return DyckPath::from_area_set(mu.size(), mu_attack_set(mu));
}

std::map<Cell, LaurentMPoly> wt_mu(const Partition& mu) {
  auto cells = mu_reading_cells(mu);
  std::map<std::pair<int, int>, int> pos;
  for (int m = 0; m < static_cast<int>(cells.size()); ++m)
    pos[cells[static_cast<size_t>(m)]] = m;
  DyckPath path = pi_mu(mu);
  CellSet cs = corners(path);
  std::map<Cell, LaurentMPoly> wt;
  for (int i = 2; i <= mu.length(); ++i) {
    for (int j = 1; j <= mu[i - 1]; ++j) {
      Cell corner{pos.at({i, j}) + 1, pos.at({i - 1, j}) + 1};
      if (std::find(cs.begin(), cs.end(), corner) == cs.end())
        throw AssertionFailure("wt_mu: cell pair did not land on a corner");
      auto [arm, leg] = arm_leg(mu, i, j);
      wt.emplace(corner, LaurentMPoly::monomial(Rational(1), {{"q", arm}, {"t", -1 - leg}}));
    }
  }
  if (wt.size() != cs.size())
    throw AssertionFailure("wt_mu: corner count mismatch");
  return wt;
}

namespace {

void gen_paths(int n, int norths, int easts, std::string& cur, std::vector<DyckPath>& out) {
  if (norths == n && easts == n) {
    out.push_back(DyckPath::from_word(cur));
    return;
  }
  if (easts < norths) {  // 'E' < 'N' lexicographically
    cur.push_back('E');
    gen_paths(n, norths, easts + 1, cur, out);
    cur.pop_back();
  }
  if (norths < n) {
    cur.push_back('N');
    gen_paths(n, norths + 1, easts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int n, int cap) {
  if (n < 0) throw SizeMismatch("enumerate_paths: n < 0");
  if (n > cap) throw CapExceeded("enumerate_paths: n exceeds cap " + std::to_string(cap));
  std::vector<DyckPath> out;
  std::string cur;
  gen_paths(n, 0, 0, cur, out);
  return out;
}

std::vector<DyckPath> enumerate_paths_touch(const Composition& alpha, int cap) {
  std::vector<DyckPath> out;
  for (const auto& p : enumerate_paths(alpha.size(), cap))
    if (touch(p) == alpha) out.push_back(p);
  return out;
}

namespace {

void gen_partial(int k, int n, int norths, int easts, std::string& cur,
                 std::vector<PartialDyckPath>& out) {
  if (norths == n - k && easts == n) {
    out.push_back(PartialDyckPath(k, cur));
    return;
  }
  if (easts < n && k + norths > easts) {
    cur.push_back('E');
    gen_partial(k, n, norths, easts + 1, cur, out);
    cur.pop_back();
  }
  if (norths < n - k) {
    cur.push_back('N');
    gen_partial(k, n, norths + 1, easts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PartialDyckPath> enumerate_partial(int k, int n, int cap) {
  if (k < 0 || n < k) throw SizeMismatch("enumerate_partial: need 0 <= k <= n");
  if (n > cap) throw CapExceeded("enumerate_partial: n exceeds cap " + std::to_string(cap));
  std::vector<PartialDyckPath> out;
  std::string cur;
  gen_partial(k, n, 0, 0, cur, out);
  return out;
}

}  // namespace shuffle
