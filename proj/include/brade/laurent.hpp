#pragma once

/* Exact arithmetic in the ring Z[delta, delta^-1] of integer Laurent
   polynomials, plus the fraction-free determinant used for Gram matrices.
   Coefficients are arbitrary-precision integers (GMP); evaluation points are
   exact rationals.  Nothing here is ever rounded. */

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace brade {

using Int = mpz_class;
using Rat = mpq_class;

/* Raised when a computation contradicts a structural theorem the engine is
   entitled to rely on (unique maximal orbit element, exact orbit-stabilizer
   division, ...).  The CLI maps it to exit code 2. */
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long v) { if (v != 0) c_[0] = v; }
  explicit LaurentPoly(const Int& v) { if (v != 0) c_[0] = v; }

  // the monomial coeff * delta^exp
  static LaurentPoly monomial(const Int& coeff, long exp);
  static LaurentPoly delta(long exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  long min_exp() const;  // undefined on zero; both throw
  long max_exp() const;
  Int coeff(long exp) const;

  // exponent -> coefficient, ascending, no zero coefficients
  const std::map<long, Int>& terms() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly pow(unsigned long e) const;

  // delta -> delta^2 (doubles every exponent; a ring homomorphism)
  LaurentPoly substitute_square() const;

  // Value at delta = x.  x = 0 requires min_exp() >= 0.
  Rat eval(const Rat& x) const;

  // All rational roots, ascending.  0 counts as a root exactly when the
  // polynomial is delta^m * (unit constant term) with m > 0.  Rejects the
  // zero polynomial.
  std::vector<Rat> rational_roots() const;

  // "2 - 3δ + δ^3" style, terms ascending; "0" for zero.
  std::string str() const;

private:
  std::map<long, Int> c_;  // invariant: no zero values stored
  void trim();
};

// Exact quotient a / b in Z[delta, delta^-1]; throws std::logic_error if the
// division does not come out exact.  (Bareiss guarantees exactness for the
// divisions the determinant performs.)
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Determinant of a square matrix over Z[delta, delta^-1], computed exactly:
// each row is first cleared of its minimal delta power, then fraction-free
// (Bareiss) elimination runs over plain polynomials.
LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace brade
