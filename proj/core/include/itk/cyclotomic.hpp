#pragma once

#include <map>
#include <string>

#include "itk/int_poly.hpp"

namespace itk {

/*
 * The polynomial families attached to the tower: with T = X the variable of
 * the Iwasawa algebra,
 *
 *   Phi_0 = X,
 *   Phi_n = ((X+1)^(p^n) - 1) / ((X+1)^(p^(n-1)) - 1)      for n >= 1,
 *   omega_n = (X+1)^(p^n) - 1 = Phi_0 * Phi_1 * ... * Phi_n,
 *
 * and the signed products
 *
 *   omega~_n^- = prod of Phi_m over odd  m in [1, n],
 *   omega_n^+  = prod of Phi_m over even m in [0, n]   (includes Phi_0).
 *
 * Everything here is exact over Z.
 */

// deg Phi_n: 1 for n = 0, (p-1) * p^(n-1) for n >= 1.
long phi_degree(unsigned long p, int n);
// p^n as a long; Error if it does not fit.
long p_power_long(unsigned long p, int n);

IntPoly cyclotomic_phi(unsigned long p, int n);
IntPoly cyclotomic_omega(unsigned long p, int n);

enum class Sign { plus, minus };

IntPoly cyclotomic_omega_pm(unsigned long p, int n, Sign sign);

// Formal product of Phi_n powers: the exponent map {n -> a_n} with a_n >= 1
// for every stored key.  Used as an exact ideal descriptor.
class CyclotomicProduct {
 public:
  CyclotomicProduct() = default;
  explicit CyclotomicProduct(std::map<int, int> exponents);

  static CyclotomicProduct unit() { return CyclotomicProduct(); }
  static CyclotomicProduct single(int n, int a);

  bool is_unit() const { return e_.empty(); }
  int exponent(int n) const;
  const std::map<int, int>& exponents() const { return e_; }

  friend bool operator==(const CyclotomicProduct& a,
                         const CyclotomicProduct& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const CyclotomicProduct& a,
                         const CyclotomicProduct& b) {
    return !(a == b);
  }

 private:
  std::map<int, int> e_;
};

CyclotomicProduct cyclo_gcd(const CyclotomicProduct& a,
                            const CyclotomicProduct& b);
CyclotomicProduct cyclo_mul(const CyclotomicProduct& a,
                            const CyclotomicProduct& b);
// Does a divide b?
bool cyclo_divides(const CyclotomicProduct& a, const CyclotomicProduct& b);
// b / a; NotDivisible unless a divides b.
CyclotomicProduct cyclo_quotient(const CyclotomicProduct& b,
                                 const CyclotomicProduct& a);

// Sum of a_n * deg Phi_n.
long cyclo_total_degree(const CyclotomicProduct& c, unsigned long p);

// Expansion to an exact integer polynomial.
IntPoly cyclo_to_int_poly(const CyclotomicProduct& c, unsigned long p);

// Printing convention: "X^1 * Phi_2^2" (Phi_0 renders as X, exponents are
// always written), unit ideal renders as "(1)".
std::string format_ideal(const CyclotomicProduct& c);

}  // namespace itk
