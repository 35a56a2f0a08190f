#ifndef SHUFFLE_FRACTION_HPP
#define SHUFFLE_FRACTION_HPP

#include <string>

#include "shuffle/laurent.hpp"

namespace shuffle {

// num/den over LaurentMPoly. Not gcd-reduced; equality is decided by
// cross-multiplication. Denominators are kept as-is, so values coming out of
// one Bareiss solve share the determinant as denominator.
class RingFraction {
 public:
  RingFraction() : num_(), den_(LaurentMPoly::one()) {}
  explicit RingFraction(LaurentMPoly num)
      : num_(std::move(num)), den_(LaurentMPoly::one()) {}
  RingFraction(LaurentMPoly num, LaurentMPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InexactDivision("RingFraction: zero denominator");
  }

  const LaurentMPoly& num() const { return num_; }
  const LaurentMPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RingFraction operator+(const RingFraction& o) const {
    return RingFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RingFraction operator-(const RingFraction& o) const {
    return RingFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RingFraction operator*(const RingFraction& o) const {
    return RingFraction(num_ * o.num_, den_ * o.den_);
  }
  RingFraction operator/(const RingFraction& o) const {
    if (o.num_.is_zero()) throw InexactDivision("RingFraction: division by zero");
    return RingFraction(num_ * o.den_, den_ * o.num_);
  }
  RingFraction operator-() const { return RingFraction(-num_, den_); }

  friend bool operator==(const RingFraction& a, const RingFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RingFraction& a, const RingFraction& b) { return !(a == b); }

  // Exact Laurent value; throws InexactDivision if den does not divide num.
  LaurentMPoly to_laurent() const { return exact_div(num_, den_); }

  RingFraction bar() const { return RingFraction(num_.bar(), den_.bar()); }

  std::string str() const {
    if (den_ == LaurentMPoly::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  LaurentMPoly num_;
  LaurentMPoly den_;
};

}  // namespace shuffle

#endif
