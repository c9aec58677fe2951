#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "itk/errors.hpp"

namespace itk {

// Exact polynomials over Z, dense representation, index = degree of X.
// Kept normalized: no trailing zero coefficients, zero polynomial = {}.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }
  static IntPoly x();
  static IntPoly constant(mpz_class v);
  static IntPoly monomial(int degree, mpz_class lead = mpz_class(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  mpz_class coeff(int j) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly shifted(int k) const;  // multiply by X^k
  mpz_class evaluate(const mpz_class& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) {
    return !(a == b);
  }

  // Division by a monic divisor stays in Z[X]: f = q*g + r, deg r < deg g.
  static void divmod_monic(const IntPoly& f, const IntPoly& g, IntPoly* q,
                           IntPoly* r);
  // Same, but the remainder must vanish.
  static IntPoly exact_div_monic(const IntPoly& f, const IntPoly& g);

  // "X^2 + 3*X + 3", "-X - 3", "0".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

// Determinant of the Sylvester matrix of f and g, computed by fraction-free
// (Bareiss) elimination.  Zero when either input is zero (and for two
// constants the empty matrix gives 1).
mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g);

// The same resultant obtained from the Euclidean remainder sequence over Q,
// via Res(a, b) = (-1)^(da*db) * lc(b)^(da-dr) * Res(b, r) for a = q*b + r.
// Shares no code with the Sylvester route above.
mpq_class resultant_via_remainders(const IntPoly& f, const IntPoly& g);

// Largest k with p^k | v (v != 0).
int p_valuation(const mpz_class& v, unsigned long p);

// Exact polynomials over Q, used by the extended Euclidean algorithm.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static RatPoly from_int(const IntPoly& f);
  static RatPoly constant(mpq_class v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int j) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const mpq_class& s, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c_ == b.c_;
  }

  static void divmod(const RatPoly& f, const RatPoly& g, RatPoly* q,
                     RatPoly* r);

 private:
  void normalize();
  std::vector<mpq_class> c_;
};

// Bezout pair for coprime integer polynomials: a*f + b*g = 1 over Q with
// deg a < deg g and deg b < deg f.  Error when gcd(f, g) != 1.
struct RatBezout {
  RatPoly a;
  RatPoly b;
};
RatBezout extended_euclid_coprime(const IntPoly& f, const IntPoly& g);

}  // namespace itk
