#ifndef SHUFFLE_BAREISS_HPP
#define SHUFFLE_BAREISS_HPP

#include <vector>

#include "shuffle/fraction.hpp"
#include "shuffle/laurent.hpp"

namespace shuffle {

using PolyMatrix = std::vector<std::vector<LaurentMPoly>>;
using PolyVector = std::vector<LaurentMPoly>;

// Solution of M x = rhs with all components over the common denominator
// det(M): x_i = nums[i] / det.
struct BareissSolution {
  PolyVector nums;
  LaurentMPoly det;

  std::vector<RingFraction> fractions() const {
    std::vector<RingFraction> out;
    out.reserve(nums.size());
    for (const auto& n : nums) out.emplace_back(n, det);
    return out;
  }
};

// Fraction-free Gaussian elimination (Bareiss). M must be square and
// nonsingular over the fraction field; throws SingularMatrix otherwise.
// All intermediate divisions are exact by the Sylvester identity. Matrices
// whose entries involve at most the variables q and t take a dense bivariate
// fast path.
BareissSolution bareiss_solve(const PolyMatrix& M, const PolyVector& rhs);

// One elimination, many right-hand sides (shared determinant).
struct BareissManySolution {
  std::vector<PolyVector> nums;  // one vector per rhs
  LaurentMPoly det;
};
BareissManySolution bareiss_solve_many(const PolyMatrix& M,
                                       const std::vector<PolyVector>& rhss);

// Determinant by the same elimination; zero for singular input.
LaurentMPoly bareiss_det(const PolyMatrix& M);

}  // namespace shuffle

#endif
