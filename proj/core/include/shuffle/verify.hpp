#ifndef SHUFFLE_VERIFY_HPP
#define SHUFFLE_VERIFY_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace shuffle {

struct IdentityResult {
  std::string id;
  long instances = 0;
  bool pass = true;
  std::string counterexample;  // serialized first failing instance
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, int> params;
  std::vector<IdentityResult> results;
  double wall_ms = 0;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string text() const;
};

// Exhaustive zeta-suite: bijectivity, statistic transport, psi/gamma
// conjugation, parking-function transport, and the D'-set recursion.
VerificationReport verify_zeta(int maxn, int jobs = 1);

// chi as a d-word (all paths up to maxn) and the chi(pi,0) corner-word
// analogue (up to maxn0).
VerificationReport verify_dpthm(int maxn, int maxn0, int jobs = 1);

// chi_k recursions on partial paths: raising on E, lowering on N.
VerificationReport verify_recs(int max_norths, int maxk);

// Operator relation suites on the spanning set {s_lam * y^a} plus d-words.
// Suites: dpa, astar, addrel, commutator, addingback, recy, twisted, imker,
// t1ki, delta.
VerificationReport verify_relations(const std::string& suite, int maxk, int deg,
                                    int dword_len = 6);

VerificationReport verify_involution(int max_alpha, int maxk, int maxdeg);

VerificationReport verify_appendix(int maxn, int jobs = 1);

VerificationReport verify_macdonald(int maxn);

// For every alpha |= n: dinv form = bounce form = d_-^l N_alpha = nabla
// C_alpha(1), exact.
VerificationReport verify_shuffle(int n, int jobs = 1);

std::vector<VerificationReport> verify_all(int maxn, int maxk, int maxdeg, int jobs = 1);

const std::vector<std::string>& verify_suite_names();

}  // namespace shuffle

#endif
