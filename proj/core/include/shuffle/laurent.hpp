#ifndef SHUFFLE_LAURENT_HPP
#define SHUFFLE_LAURENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/errors.hpp"
#include "shuffle/rational.hpp"

namespace shuffle {

// Canonical global order on variable names: q < t < y1 < y2 < ... < z < u < v
// < x0 < x1 < ... < w1 < w2 < ... < (anything else, lexicographic). All
// polynomials keep their variable lists sorted this way, so aligning two
// operands is a plain merge.
bool var_less(const std::string& a, const std::string& b);

// Finitely supported map from integer exponent vectors to Rational over an
// ordered variable list. Exponents may be negative. The zero polynomial
// stores no terms; no zero coefficients are ever stored.
class LaurentMPoly {
 public:
  using Exponents = std::vector<int>;

  // Graded lexicographic: total degree first, then lex on the exponent
  // vector. This is the monomial order used for all serialized output.
  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  LaurentMPoly() = default;  // zero, no variables
  static LaurentMPoly constant(const Rational& c);
  static LaurentMPoly variable(const std::string& name, int exp = 1);
  static LaurentMPoly monomial(
      const Rational& c, const std::vector<std::pair<std::string, int>>& factors);

  static LaurentMPoly zero() { return LaurentMPoly(); }
  static LaurentMPoly one() { return constant(Rational(1)); }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  // Variable bookkeeping.
  bool depends_on(const std::string& var) const;
  int min_exponent(const std::string& var) const;  // 0 for absent/unused var
  int max_exponent(const std::string& var) const;
  LaurentMPoly with_vars(const std::vector<std::string>& vars) const;  // superset required
  LaurentMPoly without_unused_vars() const;

  LaurentMPoly& operator+=(const LaurentMPoly& o);
  LaurentMPoly& operator-=(const LaurentMPoly& o);
  friend LaurentMPoly operator+(LaurentMPoly a, const LaurentMPoly& b) { return a += b; }
  friend LaurentMPoly operator-(LaurentMPoly a, const LaurentMPoly& b) { return a -= b; }
  friend LaurentMPoly operator*(const LaurentMPoly& a, const LaurentMPoly& b);
  friend LaurentMPoly operator-(const LaurentMPoly& a);
  friend LaurentMPoly operator*(const Rational& c, const LaurentMPoly& p);
  LaurentMPoly pow(int n) const;  // n >= 0; any n when *this is a single term

  friend bool operator==(const LaurentMPoly& a, const LaurentMPoly& b);
  friend bool operator!=(const LaurentMPoly& a, const LaurentMPoly& b) { return !(a == b); }

  // q,t -> q^{-1},t^{-1}. Error if any other variable is actually used.
  LaurentMPoly bar() const;

  // lambda-ring Frobenius p_n: every exponent vector scaled by n; rational
  // coefficients fixed. n >= 1.
  LaurentMPoly frobenius(int n) const;

  // Coefficient of var^k; the result no longer involves var.
  LaurentMPoly coeff_of(const std::string& var, int k) const;

  // Exact quotient a/b in the Laurent ring; throws InexactDivision if none.
  friend LaurentMPoly exact_div(const LaurentMPoly& a, const LaurentMPoly& b);

  // Simultaneous substitution var -> single-term monomial (coeff * monomial).
  // Every replacement value must have exactly one term.
  LaurentMPoly substituted(const std::map<std::string, LaurentMPoly>& repl) const;

  // Adds c * monomial (given over this poly's variable list). Internal-ish
  // but handy for builders.
  void add_term(const Exponents& exps, const Rational& c);

  std::string str() const;

 private:
  explicit LaurentMPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static void align(const LaurentMPoly& a, const LaurentMPoly& b, LaurentMPoly& oa,
                    LaurentMPoly& ob);

  std::vector<std::string> vars_;  // sorted by var_less
  TermMap terms_;
};

LaurentMPoly exact_div(const LaurentMPoly& a, const LaurentMPoly& b);

// Convenience builders for the ubiquitous scalars.
LaurentMPoly lp_q(int e = 1);
LaurentMPoly lp_t(int e = 1);
LaurentMPoly lp_y(int i, int e = 1);          // y_i
LaurentMPoly lp_var(const std::string& name, int e = 1);
LaurentMPoly lp_const(long n);
LaurentMPoly q_minus_one();                   // q - 1
LaurentMPoly one_minus_q();                   // 1 - q

}  // namespace shuffle

#endif
