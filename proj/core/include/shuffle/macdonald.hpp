#ifndef SHUFFLE_MACDONALD_HPP
#define SHUFFLE_MACDONALD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shuffle/charfunc.hpp"
#include "shuffle/fraction.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

inline constexpr const char* kArtifactVersion = "shuffle-0.1.0";
inline constexpr int kDefaultMacdonaldCap = 8;

// Modified Macdonald polynomials of one degree, built from the weighted
// characteristic function of pi_mu. Cached in memory and, when a cache
// directory is configured, persisted as H_n<degree>.json.
struct MacdonaldTable {
  int degree = 0;
  std::vector<Partition> mus;
  std::map<Partition, SymFunc> H;  // s-basis, coefficients in q,t
};

// Directory for persistent caches; empty disables persistence. Initialized
// from SHUFFLE_CACHE_DIR when unset.
void set_cache_dir(const std::string& dir);
std::string cache_dir();

const MacdonaldTable& macdonald_table(int degree, int cap = kDefaultMacdonaldCap);

SymFunc macdonald_H(const Partition& mu, int cap = kDefaultMacdonaldCap);

// f = sum_mu c_mu H_mu for homogeneous f of degree n, exact fractions.
std::map<Partition, RingFraction> expand_in_H(const SymFunc& f, int n);

// nabla H_mu = (-1)^{|mu|} q^{n(mu')} t^{n(mu)} H_mu, extended linearly; the
// result must reassemble to Laurent coefficients (InexactDivision otherwise).
SymFunc nabla(const SymFunc& f);
LaurentMPoly nabla_eigenvalue(const Partition& mu);

SymFunc nabla_C(const Composition& alpha, int cap = kDefaultMacdonaldCap);

// The involution on V_0: script_N = nabla . omega_bar.
SymFunc script_N_V0(const SymFunc& f);

// (D_1 F)[X] = F[X+(1-q)(1-t)u^{-1}] Exp[-uX] |_{u^1} and its star.
SymFunc D1_op(const SymFunc& f);
SymFunc D1_star_op(const SymFunc& f);

}  // namespace shuffle

#endif
