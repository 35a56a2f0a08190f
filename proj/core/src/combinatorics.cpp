#include "shuffle/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace shuffle {

namespace {

std::string int_list_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw SizeMismatch("Partition: parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw SizeMismatch("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool operator<(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(),
                                      a.parts.end());
}

std::string Partition::str() const { return int_list_str(parts); }

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw SizeMismatch("Composition: parts must be positive");
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Composition::sorted() const {
  std::vector<int> p = parts;
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

std::string Composition::str() const { return int_list_str(parts); }

Partition conjugate(const Partition& mu) {
  std::vector<int> out;
  if (mu.empty()) return Partition();
  out.resize(static_cast<size_t>(mu.parts[0]), 0);
  for (int p : mu.parts)
    for (int j = 0; j < p; ++j) out[static_cast<size_t>(j)]++;
  return Partition(std::move(out));
}

int n_stat(const Partition& mu) {
  int s = 0;
  for (int i = 0; i < mu.length(); ++i) s += i * mu[i];
  return s;
}

std::pair<int, int> arm_leg(const Partition& mu, int row, int col) {
  if (row < 1 || row > mu.length() || col < 1 || col > mu[row - 1])
    throw CellOutsideDiagram("arm_leg: cell " + std::to_string(row) + "," +
                             std::to_string(col) + " outside " + mu.str());
  int arm = mu[row - 1] - col;
  int leg = 0;
  for (int i = row; i < mu.length(); ++i)
    if (mu[i] >= col) ++leg;
  return {arm, leg};
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw SizeMismatch("compositions_of: n must be >= 0");
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int a = 1; a <= rest; ++a) {
      cur.push_back(a);
      rec(rest - a);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int a = std::min(rest, maxp); a >= 1; --a) {
      cur.push_back(a);
      rec(rest - a, a);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> rearrangements(const Partition& nu) {
  std::vector<int> w = nu.parts;
  std::sort(w.begin(), w.end());
  std::vector<Composition> out;
  if (w.empty()) {
    out.emplace_back();
    return out;
  }
  do {
    out.push_back(Composition(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

void for_each_multiset_permutation(const Composition& content,
                                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w;
  for (int i = 0; i < content.length(); ++i)
    for (int c = 0; c < content[i]; ++c) w.push_back(i + 1);
  if (w.empty()) {
    fn(w);
    return;
  }
  std::sort(w.begin(), w.end());
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<std::vector<int>> multiset_permutations(const Composition& content) {
  std::vector<std::vector<int>> out;
  for_each_multiset_permutation(content, [&](const std::vector<int>& w) { out.push_back(w); });
  return out;
}

std::optional<std::vector<Composition>> compatibility_split(const Composition& alpha,
                                                            const Partition& mu) {
  if (alpha.size() != mu.size())
    throw SizeMismatch("compatibility_split: |alpha| != |mu|");
  std::vector<Composition> blocks;
  size_t pos = 0;
  for (int i = 0; i < mu.length(); ++i) {
    std::vector<int> block;
    int need = mu[i];
    while (need > 0) {
      if (pos >= alpha.parts.size()) return std::nullopt;
      int p = alpha.parts[pos++];
      if (p > need) return std::nullopt;
      block.push_back(p);
      need -= p;
    }
    blocks.push_back(Composition(std::move(block)));
  }
  if (pos != alpha.parts.size()) return std::nullopt;
  return blocks;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long multinomial(int n, const Composition& alpha) {
  long r = 1;
  int rest = n;
  for (int i = 0; i < alpha.length(); ++i) {
    r *= binomial(rest, alpha[i]);
    rest -= alpha[i];
  }
  if (rest != 0) throw SizeMismatch("multinomial: composition does not sum to n");
  return r;
}

}  // namespace shuffle
