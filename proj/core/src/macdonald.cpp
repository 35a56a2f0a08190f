#include "shuffle/macdonald.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "shuffle/bareiss.hpp"
#include "shuffle/json_io.hpp"

namespace shuffle {

namespace {

std::mutex cache_dir_mutex;
std::optional<std::string> cache_dir_override;

std::string effective_cache_dir() {
  std::lock_guard<std::mutex> lock(cache_dir_mutex);
  if (cache_dir_override) return *cache_dir_override;
  const char* env = std::getenv("SHUFFLE_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

std::optional<MacdonaldTable> load_table(int degree) {
  std::string dir = effective_cache_dir();
  if (dir.empty()) return std::nullopt;
  std::filesystem::path file =
      std::filesystem::path(dir) / ("H_n" + std::to_string(degree) + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("artifact_version").get<std::string>() != kArtifactVersion) return std::nullopt;
    if (j.at("degree").get<int>() != degree) return std::nullopt;
    MacdonaldTable t;
    t.degree = degree;
    for (const auto& e : j.at("entries")) {
      Partition mu = partition_from_json(e.at("mu"));
      t.mus.push_back(mu);
      t.H.emplace(mu, symfunc_from_json(e.at("H")));
    }
    if (t.mus != partitions_of(degree)) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    // Corrupt cache entries are discarded and recomputed.
    return std::nullopt;
  }
}

void store_table(const MacdonaldTable& t) {
  std::string dir = effective_cache_dir();
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  Json j;
  j["artifact_version"] = kArtifactVersion;
  j["degree"] = t.degree;
  Json entries = Json::array();
  for (const auto& mu : t.mus) {
    Json e;
    e["mu"] = partition_to_json(mu);
    e["H"] = symfunc_to_json(t.H.at(mu));
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  std::ofstream out(std::filesystem::path(dir) / ("H_n" + std::to_string(t.degree) + ".json"));
  if (out) out << j.dump(1) << "\n";
}

SymFunc compute_H(const Partition& mu) {
  // H_mu = q^{-n(mu') + binom(mu_1,2)} t^{n(mu)} chi(pi_mu, wt_mu)
  DyckPath path = pi_mu(mu);
  CornerWeight wt;
  for (const auto& [cell, w] : wt_mu(mu)) wt.emplace(cell, w);
  SymFunc chiw = chi_weighted(path, wt, std::max(kDefaultChiCap, mu.size()));
  int mu1 = mu.empty() ? 0 : mu[0];
  LaurentMPoly pre = LaurentMPoly::monomial(
      Rational(1), {{"q", -n_stat(conjugate(mu)) + mu1 * (mu1 - 1) / 2}, {"t", n_stat(mu)}});
  return convert(scalar_mul(pre, chiw), Basis::s);
}

}  // namespace

void set_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(cache_dir_mutex);
  cache_dir_override = dir;
}

std::string cache_dir() { return effective_cache_dir(); }

const MacdonaldTable& macdonald_table(int degree, int cap) {
  if (degree > cap)
    throw CapExceeded("macdonald_table: degree exceeds cap " + std::to_string(cap));
  static std::mutex mu;
  static auto* cache = new std::map<int, MacdonaldTable>();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(degree);
  if (it != cache->end()) return it->second;
  if (auto loaded = load_table(degree)) return cache->emplace(degree, *loaded).first->second;
  MacdonaldTable t;
  t.degree = degree;
  t.mus = partitions_of(degree);
  for (const auto& m : t.mus) t.H.emplace(m, compute_H(m));
  store_table(t);
  return cache->emplace(degree, std::move(t)).first->second;
}

SymFunc macdonald_H(const Partition& mu, int cap) {
  if (mu.size() > cap) throw CapExceeded("macdonald_H: |mu| exceeds cap");
  return macdonald_table(mu.size(), cap).H.at(mu);
}

namespace {

// Per-degree factorization: inv_num[i][j] / det is (M^{-1})_{ij} for the
// matrix M whose columns are the H_mu in the p-basis. Computed once, so
// every later expansion is a polynomial matrix-vector product.
struct HBasisSolver {
  std::vector<Partition> mus;
  std::map<Partition, int> index;
  PolyMatrix inv_num;
  LaurentMPoly det;
};

const HBasisSolver& h_basis_solver(int n) {
  static std::mutex mu;
  static auto* cache = new std::map<int, HBasisSolver>();
  const MacdonaldTable& table = macdonald_table(n, std::max(n, kDefaultMacdonaldCap));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(n);
  if (it != cache->end()) return it->second;
  HBasisSolver s;
  s.mus = partitions_of(n);
  size_t m = s.mus.size();
  for (size_t i = 0; i < m; ++i) s.index.emplace(s.mus[i], static_cast<int>(i));
  PolyMatrix M(m, PolyVector(m));
  for (size_t j = 0; j < m; ++j) {
    SymFunc hp = convert(table.H.at(s.mus[j]), Basis::p);
    for (const auto& [lamp, c] : hp.coeffs) M[static_cast<size_t>(s.index.at(lamp))][j] = c;
  }
  std::vector<PolyVector> units(m, PolyVector(m));
  for (size_t j = 0; j < m; ++j) units[j][j] = LaurentMPoly::one();
  auto sol = bareiss_solve_many(M, units);
  s.det = std::move(sol.det);
  s.inv_num.assign(m, PolyVector(m));
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < m; ++i) s.inv_num[i][j] = std::move(sol.nums[j][i]);
  return cache->emplace(n, std::move(s)).first->second;
}

struct HSolve {
  std::vector<Partition> mus;
  PolyVector nums;
  LaurentMPoly det;
};

HSolve solve_in_H(const SymFunc& f, int n) {
  const HBasisSolver& s = h_basis_solver(n);
  size_t m = s.mus.size();
  SymFunc fp = convert(f, Basis::p);
  PolyVector rhs(m);
  for (const auto& [lamp, c] : fp.coeffs) {
    if (lamp.size() != n) throw SizeMismatch("expand_in_H: f not homogeneous of degree n");
    rhs[static_cast<size_t>(s.index.at(lamp))] = c;
  }
  HSolve out;
  out.mus = s.mus;
  out.det = s.det;
  out.nums.assign(m, LaurentMPoly());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (!rhs[j].is_zero() && !s.inv_num[i][j].is_zero())
        out.nums[i] += s.inv_num[i][j] * rhs[j];
  return out;
}

}  // namespace

std::map<Partition, RingFraction> expand_in_H(const SymFunc& f, int n) {
  auto sol = solve_in_H(f, n);
  std::map<Partition, RingFraction> out;
  for (size_t j = 0; j < sol.mus.size(); ++j)
    if (!sol.nums[j].is_zero()) out.emplace(sol.mus[j], RingFraction(sol.nums[j], sol.det));
  return out;
}

LaurentMPoly nabla_eigenvalue(const Partition& mu) {
  LaurentMPoly e = LaurentMPoly::monomial(Rational(1), {{"q", n_stat(conjugate(mu))},
                                                        {"t", n_stat(mu)}});
  return mu.size() % 2 ? -e : e;
}

SymFunc nabla(const SymFunc& f) {
  SymFunc out(Basis::s);
  for (int d : f.degrees()) {
    SymFunc comp = f.component(d);
    if (d == 0) {
      out = sym_add(out, comp);
      continue;
    }
    auto sol = solve_in_H(comp, d);
    SymFunc num_acc(Basis::p);
    for (size_t j = 0; j < sol.mus.size(); ++j) {
      if (sol.nums[j].is_zero()) continue;
      SymFunc hp = convert(macdonald_table(d, std::max(d, kDefaultMacdonaldCap)).H.at(sol.mus[j]),
                            Basis::p);
      num_acc = sym_add(num_acc, scalar_mul(sol.nums[j] * nabla_eigenvalue(sol.mus[j]), hp));
    }
    out = sym_add(out, convert(sym_exact_div_scalar(num_acc, sol.det), Basis::s));
  }
  return out;
}

SymFunc nabla_C(const Composition& alpha, int cap) {
  if (alpha.size() > cap) throw CapExceeded("nabla_C: |alpha| exceeds cap");
  return nabla(op_C_word(alpha, SymFunc::one(Basis::p)));
}

SymFunc script_N_V0(const SymFunc& f) { return nabla(omega_bar(f)); }

namespace {

// F[X + pure] Exp[sign*uX] |_{u^1} with pure supported on negative powers of u.
SymFunc u_kernel_op(const SymFunc& f, const LaurentMPoly& pure, int sign) {
  SymFunc g = plethysm(f, AlphabetExpr::shifted_X(pure));
  SymFunc out(Basis::p);
  int max_m = 1 + convert(f, Basis::p).max_degree();
  for (int m = 0; m <= max_m; ++m) {
    SymFunc slice(Basis::p);
    for (const auto& [lam, c] : g.coeffs) slice.add(lam, c.coeff_of("u", 1 - m));
    if (slice.is_zero()) continue;
    SymFunc hm(Basis::p);
    if (m == 0) {
      hm = SymFunc::one(Basis::p);
    } else {
      for (const auto& [lam, c] : h_in_p(Partition(std::vector<int>{m}))) {
        Rational v = (sign < 0 && lam.length() % 2) ? -c : c;
        hm.add(lam, LaurentMPoly::constant(v));
      }
    }
    out = sym_add(out, sym_mul(slice, hm));
  }
  return out;
}

}  // namespace

SymFunc D1_op(const SymFunc& f) {
  LaurentMPoly pure = (lp_const(1) - lp_q()) * (lp_const(1) - lp_t()) * lp_var("u", -1);
  return u_kernel_op(f, pure, -1);
}

SymFunc D1_star_op(const SymFunc& f) {
  LaurentMPoly pure =
      -(lp_const(1) - lp_q(-1)) * (lp_const(1) - lp_t(-1)) * lp_var("u", -1);
  return u_kernel_op(f, pure, +1);
}

}  // namespace shuffle
