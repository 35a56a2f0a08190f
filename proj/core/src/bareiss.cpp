#include "shuffle/bareiss.hpp"

#include <algorithm>

namespace shuffle {

namespace {

// ---------------------------------------------------------------------------
// Dense bivariate (q,t) arithmetic over integer grids. Bareiss intermediates
// are minors whose support fills out a rectangle, where the generic map-based
// polynomials pay a heavy log factor, and clearing denominators up front
// turns every coefficient operation into plain mpz work with exact
// divisions.
// ---------------------------------------------------------------------------

struct Dense2 {
  int qmin = 0, tmin = 0, qs = 0, ts = 0;  // offsets and grid dimensions
  std::vector<mpz_class> a;                // row-major

  bool is_zero() const { return qs == 0; }
};

// p scaled by the integer L (which must clear all coefficient denominators).
Dense2 dense_from_poly(const LaurentMPoly& p, const mpz_class& L) {
  Dense2 d;
  if (p.is_zero()) return d;
  int qi = -1, ti = -1;
  const auto& vars = p.vars();
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == "q") qi = static_cast<int>(i);
    else if (vars[i] == "t") ti = static_cast<int>(i);
  }
  int qlo = 0, qhi = 0, tlo = 0, thi = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    int eq = qi >= 0 ? e[static_cast<size_t>(qi)] : 0;
    int et = ti >= 0 ? e[static_cast<size_t>(ti)] : 0;
    if (first) {
      qlo = qhi = eq;
      tlo = thi = et;
      first = false;
    } else {
      qlo = std::min(qlo, eq);
      qhi = std::max(qhi, eq);
      tlo = std::min(tlo, et);
      thi = std::max(thi, et);
    }
  }
  d.qmin = qlo;
  d.tmin = tlo;
  d.qs = qhi - qlo + 1;
  d.ts = thi - tlo + 1;
  d.a.assign(static_cast<size_t>(d.qs * d.ts), mpz_class(0));
  for (const auto& [e, c] : p.terms()) {
    int eq = qi >= 0 ? e[static_cast<size_t>(qi)] : 0;
    int et = ti >= 0 ? e[static_cast<size_t>(ti)] : 0;
    mpz_class scaled = c.numerator() * (L / c.denominator());
    d.a[static_cast<size_t>((eq - d.qmin) * d.ts + (et - d.tmin))] = scaled;
  }
  return d;
}

LaurentMPoly dense_to_poly(const Dense2& d, const Rational& scale) {
  LaurentMPoly out;
  for (int i = 0; i < d.qs; ++i)
    for (int j = 0; j < d.ts; ++j) {
      const mpz_class& c = d.a[static_cast<size_t>(i * d.ts + j)];
      if (c != 0)
        out += LaurentMPoly::monomial(Rational(mpq_class(c)) * scale,
                                      {{"q", d.qmin + i}, {"t", d.tmin + j}});
    }
  return out;
}

void dense_trim(Dense2& d) {
  int lo_q = d.qs, hi_q = -1, lo_t = d.ts, hi_t = -1;
  for (int i = 0; i < d.qs; ++i)
    for (int j = 0; j < d.ts; ++j)
      if (d.a[static_cast<size_t>(i * d.ts + j)] != 0) {
        lo_q = std::min(lo_q, i);
        hi_q = std::max(hi_q, i);
        lo_t = std::min(lo_t, j);
        hi_t = std::max(hi_t, j);
      }
  if (hi_q < 0) {
    d = Dense2{};
    return;
  }
  if (lo_q == 0 && hi_q == d.qs - 1 && lo_t == 0 && hi_t == d.ts - 1) return;
  Dense2 out;
  out.qmin = d.qmin + lo_q;
  out.tmin = d.tmin + lo_t;
  out.qs = hi_q - lo_q + 1;
  out.ts = hi_t - lo_t + 1;
  out.a.assign(static_cast<size_t>(out.qs * out.ts), mpz_class(0));
  for (int i = lo_q; i <= hi_q; ++i)
    for (int j = lo_t; j <= hi_t; ++j)
      out.a[static_cast<size_t>((i - lo_q) * out.ts + (j - lo_t))] =
          d.a[static_cast<size_t>(i * d.ts + j)];
  d = std::move(out);
}

Dense2 dense_mul(const Dense2& x, const Dense2& y) {
  if (x.is_zero() || y.is_zero()) return Dense2{};
  Dense2 out;
  out.qmin = x.qmin + y.qmin;
  out.tmin = x.tmin + y.tmin;
  out.qs = x.qs + y.qs - 1;
  out.ts = x.ts + y.ts - 1;
  out.a.assign(static_cast<size_t>(out.qs * out.ts), mpz_class(0));
  for (int i = 0; i < x.qs; ++i) {
    for (int j = 0; j < x.ts; ++j) {
      const mpz_class& c = x.a[static_cast<size_t>(i * x.ts + j)];
      if (c == 0) continue;
      for (int u = 0; u < y.qs; ++u) {
        size_t dst = static_cast<size_t>((i + u) * out.ts + j);
        size_t src = static_cast<size_t>(u * y.ts);
        for (int v = 0; v < y.ts; ++v) {
          const mpz_class& b = y.a[src + static_cast<size_t>(v)];
          if (b != 0)
            mpz_addmul(out.a[dst + static_cast<size_t>(v)].get_mpz_t(), c.get_mpz_t(),
                       b.get_mpz_t());
        }
      }
    }
  }
  return out;
}

Dense2 dense_sub(const Dense2& x, const Dense2& y) {
  if (y.is_zero()) return x;
  Dense2 out;
  out.qmin = std::min(x.is_zero() ? y.qmin : x.qmin, y.qmin);
  out.tmin = std::min(x.is_zero() ? y.tmin : x.tmin, y.tmin);
  int qhi = std::max(x.is_zero() ? y.qmin + y.qs : x.qmin + x.qs, y.qmin + y.qs);
  int thi = std::max(x.is_zero() ? y.tmin + y.ts : x.tmin + x.ts, y.tmin + y.ts);
  out.qs = qhi - out.qmin;
  out.ts = thi - out.tmin;
  out.a.assign(static_cast<size_t>(out.qs * out.ts), mpz_class(0));
  for (int i = 0; i < x.qs; ++i)
    for (int j = 0; j < x.ts; ++j)
      out.a[static_cast<size_t>((x.qmin + i - out.qmin) * out.ts + (x.tmin + j - out.tmin))] =
          x.a[static_cast<size_t>(i * x.ts + j)];
  for (int i = 0; i < y.qs; ++i)
    for (int j = 0; j < y.ts; ++j)
      out.a[static_cast<size_t>((y.qmin + i - out.qmin) * out.ts + (y.tmin + j - out.tmin))] -=
          y.a[static_cast<size_t>(i * y.ts + j)];
  dense_trim(out);
  return out;
}

// Exact quotient under the q-major lex order. Inside Bareiss every quotient
// coefficient is itself a coefficient of an integer polynomial, so the mpz
// divisions are exact; a failed divisibility check means no exact quotient.
Dense2 dense_exact_div(const Dense2& num, const Dense2& den) {
  if (den.is_zero()) throw InexactDivision("dense_exact_div: division by zero");
  if (num.is_zero()) return Dense2{};
  int bq = -1, bt = -1;
  for (int i = den.qs - 1; i >= 0 && bq < 0; --i)
    for (int j = den.ts - 1; j >= 0; --j)
      if (den.a[static_cast<size_t>(i * den.ts + j)] != 0) {
        bq = i;
        bt = j;
        break;
      }
  const mpz_class& lead = den.a[static_cast<size_t>(bq * den.ts + bt)];

  Dense2 rem = num;
  Dense2 quot;
  // grid cell (i-bq, j-bt) carries absolute exponent (num.min - den.min) + cell
  quot.qmin = num.qmin - den.qmin;
  quot.tmin = num.tmin - den.tmin;
  quot.qs = rem.qs;
  quot.ts = rem.ts;
  quot.a.assign(static_cast<size_t>(quot.qs * quot.ts), mpz_class(0));

  mpz_class c;
  for (int i = rem.qs - 1; i >= 0; --i) {
    for (int j = rem.ts - 1; j >= 0; --j) {
      mpz_class& cell = rem.a[static_cast<size_t>(i * rem.ts + j)];
      if (cell == 0) continue;
      int di = i - bq, dj = j - bt;
      if (di < 0 || dj < 0 || !mpz_divisible_p(cell.get_mpz_t(), lead.get_mpz_t()))
        throw InexactDivision("dense_exact_div: no exact quotient");
      mpz_divexact(c.get_mpz_t(), cell.get_mpz_t(), lead.get_mpz_t());
      quot.a[static_cast<size_t>(di * quot.ts + dj)] = c;
      // rem -= c * den shifted by (di, dj); exact division keeps writes
      // inside num's bounding box, so an out-of-range target is a failure.
      for (int u = 0; u <= bq; ++u) {
        size_t dst = static_cast<size_t>((di + u) * rem.ts + dj);
        size_t src = static_cast<size_t>(u * den.ts);
        for (int v = 0; v <= (u == bq ? bt : den.ts - 1); ++v) {
          const mpz_class& b = den.a[src + static_cast<size_t>(v)];
          if (b == 0) continue;
          if (dj + v >= rem.ts)
            throw InexactDivision("dense_exact_div: no exact quotient");
          mpz_submul(rem.a[dst + static_cast<size_t>(v)].get_mpz_t(), c.get_mpz_t(),
                     b.get_mpz_t());
        }
      }
    }
  }
  dense_trim(quot);
  return quot;
}

bool qt_only(const LaurentMPoly& p) {
  for (const auto& v : p.vars())
    if (v != "q" && v != "t" && p.depends_on(v)) return false;
  return true;
}

mpz_class denominator_lcm(const LaurentMPoly& p, mpz_class acc) {
  for (const auto& [e, c] : p.terms()) {
    mpz_class den = c.denominator();
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
  }
  return acc;
}

using DenseMatrix = std::vector<std::vector<Dense2>>;

// Forward Bareiss elimination over the dense integer grids; returns the
// permutation sign or 0 for singular.
int dense_eliminate(DenseMatrix& A, size_t n) {
  int sign = 1;
  Dense2 prev;  // empty means 1
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && A[r][k].is_zero()) ++r;
      if (r == n) return 0;
      std::swap(A[k], A[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < A[i].size(); ++j) {
        Dense2 num = dense_sub(dense_mul(A[k][k], A[i][j]), dense_mul(A[i][k], A[k][j]));
        A[i][j] = prev.is_zero() ? std::move(num) : dense_exact_div(num, prev);
      }
      A[i][k] = Dense2{};
    }
    prev = A[k][k];
  }
  return A[n - 1][n - 1].is_zero() ? 0 : sign;
}

int eliminate(PolyMatrix& A, size_t n) {
  int sign = 1;
  LaurentMPoly prev_pivot = LaurentMPoly::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && A[r][k].is_zero()) ++r;
      if (r == n) return 0;
      std::swap(A[k], A[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < A[i].size(); ++j) {
        A[i][j] = exact_div(A[k][k] * A[i][j] - A[i][k] * A[k][j], prev_pivot);
      }
      A[i][k] = LaurentMPoly();
    }
    prev_pivot = A[k][k];
  }
  return A[n - 1][n - 1].is_zero() ? 0 : sign;
}

bool all_qt(const PolyMatrix& M, const std::vector<PolyVector>& rhss) {
  for (const auto& row : M)
    for (const auto& e : row)
      if (!qt_only(e)) return false;
  for (const auto& rhs : rhss)
    for (const auto& e : rhs)
      if (!qt_only(e)) return false;
  return true;
}

// Scaled system: (L_M M) x' = (L_r rhs) solved fraction-free over Z[q,t];
// unscale at the boundary: det = det'/L_M^n, x_i = nums'_i L_M / (det' L_r).
BareissManySolution solve_many_dense(const PolyMatrix& M,
                                     const std::vector<PolyVector>& rhss) {
  size_t n = M.size();
  size_t m = rhss.size();
  mpz_class LM(1);
  for (const auto& row : M)
    for (const auto& e : row) LM = denominator_lcm(e, LM);
  std::vector<mpz_class> LR(m, mpz_class(1));
  for (size_t r = 0; r < m; ++r)
    for (const auto& e : rhss[r]) LR[r] = denominator_lcm(e, LR[r]);

  DenseMatrix A(n);
  for (size_t i = 0; i < n; ++i) {
    A[i].reserve(n + m);
    for (size_t j = 0; j < n; ++j) A[i].push_back(dense_from_poly(M[i][j], LM));
    for (size_t r = 0; r < m; ++r) A[i].push_back(dense_from_poly(rhss[r][i], LR[r]));
  }
  int sign = dense_eliminate(A, n);
  if (sign == 0) throw SingularMatrix("bareiss_solve: singular matrix");
  Dense2 det = A[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : det.a) c = -c;

  // det' = LM^n det; report det as-is scaled back, and nums so that
  // nums_i/det is the true solution: nums_i = nums'_i LM / LR.
  Rational det_scale(1);
  for (size_t i = 0; i < n; ++i) det_scale /= Rational(mpq_class(LM));

  BareissManySolution out;
  out.det = dense_to_poly(det, det_scale);
  out.nums.assign(m, PolyVector(n));
  for (size_t r = 0; r < m; ++r) {
    std::vector<Dense2> X(n);
    size_t aug = n + r;
    X[n - 1] = A[n - 1][aug];
    if (sign < 0)
      for (auto& c : X[n - 1].a) c = -c;
    for (size_t ii = n - 1; ii-- > 0;) {
      Dense2 num = dense_mul(det, A[ii][aug]);
      for (size_t j = ii + 1; j < n; ++j)
        num = dense_sub(num, dense_mul(A[ii][j], X[j]));
      X[ii] = dense_exact_div(num, A[ii][ii]);
    }
    Rational x_scale = det_scale * Rational(mpq_class(LM)) / Rational(mpq_class(LR[r]));
    for (size_t i = 0; i < n; ++i) out.nums[r][i] = dense_to_poly(X[i], x_scale);
  }
  return out;
}

BareissManySolution solve_many_generic(const PolyMatrix& M,
                                       const std::vector<PolyVector>& rhss) {
  size_t n = M.size();
  size_t m = rhss.size();
  PolyMatrix A(n);
  for (size_t i = 0; i < n; ++i) {
    A[i] = M[i];
    for (size_t r = 0; r < m; ++r) A[i].push_back(rhss[r][i]);
  }
  int sign = eliminate(A, n);
  if (sign == 0) throw SingularMatrix("bareiss_solve: singular matrix");
  LaurentMPoly det = sign < 0 ? -A[n - 1][n - 1] : A[n - 1][n - 1];

  BareissManySolution out;
  out.det = det;
  out.nums.assign(m, PolyVector(n));
  for (size_t r = 0; r < m; ++r) {
    size_t aug = n + r;
    PolyVector X(n);
    X[n - 1] = sign < 0 ? -A[n - 1][aug] : A[n - 1][aug];
    for (size_t ii = n - 1; ii-- > 0;) {
      LaurentMPoly num = det * A[ii][aug];
      for (size_t j = ii + 1; j < n; ++j) num -= A[ii][j] * X[j];
      X[ii] = exact_div(num, A[ii][ii]);
    }
    out.nums[r] = std::move(X);
  }
  return out;
}

}  // namespace

LaurentMPoly bareiss_det(const PolyMatrix& M) {
  size_t n = M.size();
  if (n == 0) return LaurentMPoly::one();
  if (all_qt(M, {})) {
    mpz_class LM(1);
    for (const auto& row : M)
      for (const auto& e : row) LM = denominator_lcm(e, LM);
    DenseMatrix A(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) A[i].push_back(dense_from_poly(M[i][j], LM));
    int sign = dense_eliminate(A, n);
    if (sign == 0) return LaurentMPoly();
    Dense2 det = A[n - 1][n - 1];
    if (sign < 0)
      for (auto& c : det.a) c = -c;
    Rational det_scale(1);
    for (size_t i = 0; i < n; ++i) det_scale /= Rational(mpq_class(LM));
    return dense_to_poly(det, det_scale);
  }
  PolyMatrix A = M;
  int sign = eliminate(A, n);
  if (sign == 0) return LaurentMPoly();
  LaurentMPoly d = A[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

BareissManySolution bareiss_solve_many(const PolyMatrix& M,
                                       const std::vector<PolyVector>& rhss) {
  size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw SizeMismatch("bareiss_solve: matrix not square");
  for (const auto& rhs : rhss)
    if (rhs.size() != n) throw SizeMismatch("bareiss_solve: rhs size mismatch");
  if (n == 0)
    return BareissManySolution{std::vector<PolyVector>(rhss.size()), LaurentMPoly::one()};
  if (all_qt(M, rhss)) return solve_many_dense(M, rhss);
  return solve_many_generic(M, rhss);
}

BareissSolution bareiss_solve(const PolyMatrix& M, const PolyVector& rhs) {
  auto many = bareiss_solve_many(M, {rhs});
  return BareissSolution{std::move(many.nums[0]), std::move(many.det)};
}

}  // namespace shuffle
