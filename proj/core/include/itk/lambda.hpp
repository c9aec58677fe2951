#pragma once

#include <optional>
#include <vector>

#include "itk/cyclotomic.hpp"
#include "itk/int_poly.hpp"
#include "itk/padic.hpp"

namespace itk {

/*
 * Elements of the Iwasawa algebra truncated to the quotient
 * Z_p[[X]] / (p^N, X^M): a coefficient vector of length M whose entries are
 * PadicInt values with individually tracked precision.
 *
 * Divisibility questions are answered on the stored representative, which
 * is a polynomial of degree < M.  Remainders are compared against zero with
 * a two-digit guard (see divide_by_phi), which absorbs p-adic precision
 * noise but NOT the fuzz introduced by cutting an infinite series at X^M;
 * producers of series data are expected to leave enough X-degree headroom
 * that everything being divided is an honest polynomial product.
 */
class LambdaElement {
 public:
  // The zero element.
  explicit LambdaElement(PadicContext ctx);
  // Pads with exact zeros; Error if more than M coefficients are given.
  static LambdaElement from_coeffs(const PadicContext& ctx,
                                   std::vector<PadicInt> coeffs);
  // Canonical truncation of an exact polynomial, full precision;
  // TruncationOverflow when deg f >= M.
  static LambdaElement from_int_poly(const PadicContext& ctx,
                                     const IntPoly& f);

  const PadicContext& ctx() const { return ctx_; }
  int size() const { return static_cast<int>(c_.size()); }
  const PadicInt& coeff(int j) const { return c_[j]; }
  void set_coeff(int j, PadicInt v);

  // Index of the highest coefficient with a nonzero residue, -1 if none.
  int degree_bound() const;
  bool indistinguishable_from_zero() const;
  int min_precision() const;
  // Minimum capped coefficient valuation (the p-power content visible at
  // the working precision); empty when the element vanishes at precision.
  std::optional<int> p_content() const;

  // Canonical integer lift of the residues.
  IntPoly lift() const;

  LambdaElement operator-() const;
  friend LambdaElement operator+(const LambdaElement& a,
                                 const LambdaElement& b);
  friend LambdaElement operator-(const LambdaElement& a,
                                 const LambdaElement& b);
  friend LambdaElement operator*(const LambdaElement& a,
                                 const LambdaElement& b);

  LambdaElement mul_scalar(const PadicInt& s) const;
  LambdaElement mul_pow_p(int k) const;
  // Exact coefficientwise division by p^k; lowers precision by k.
  LambdaElement div_pow_p(int k) const;

  // Residues congruent mod p^min(k, tracked precisions), coefficientwise.
  friend bool equal_at_precision(const LambdaElement& a,
                                 const LambdaElement& b, int k);
  friend bool operator==(const LambdaElement& a, const LambdaElement& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }

 private:
  PadicContext ctx_;
  std::vector<PadicInt> c_;
};

LambdaElement phi(int n, const PadicContext& ctx);
LambdaElement omega(int n, const PadicContext& ctx);
LambdaElement omega_pm(int n, Sign sign, const PadicContext& ctx);

// Multiplicative inverse of a unit power series (unit constant term).
LambdaElement invert_series(const LambdaElement& f);

// The involution X |-> (1+X)^(-1) - 1, computed modulo (p^N, X^M).
LambdaElement iota(const LambdaElement& f);

// Monic integer polynomial of degree `lambda` whose lower coefficients are
// all divisible by p, lifted from residues known modulo p^precision.
struct DistinguishedPoly {
  IntPoly poly;
  int precision = 0;
  int degree() const { return poly.degree(); }
};

struct WeierstrassFactorization {
  int mu = 0;
  LambdaElement unit;
  DistinguishedPoly distinguished;
  int lambda() const { return distinguished.degree(); }
};

// f = p^mu * unit * distinguished, an exact identity in the truncated ring.
// The factorization is unique only up to annihilators of the distinguished
// part: unit coefficients of degree j >= M - lambda * N may differ from the
// untruncated series by terms of valuation at least (M - 1 - j) / lambda.
// Low-degree unit coefficients are exact.  IndistinguishableFromZero when
// every coefficient vanishes at precision; PrecisionExhausted when no digits
// are known at all.
WeierstrassFactorization weierstrass_prepare(const LambdaElement& f);

struct IwasawaInvariants {
  int mu = 0;
  int lambda = 0;
};
IwasawaInvariants iwasawa_invariants(const LambdaElement& f);

struct PhiDivision {
  LambdaElement quotient;
  bool divisible = false;
};

// Division of the stored representative by the monic Phi_n.  When every
// remainder coefficient vanishes up to the guard (valuation >= N - 2 at
// full precision, proportionally lower when the element's own precision is
// lower), returns (quotient, true); otherwise returns (f, false).
PhiDivision divide_by_phi(const LambdaElement& f, int n);

struct CyclotomicGcdResult {
  CyclotomicProduct common;
  int mu_common = 0;
};

// Common Phi-multiplicities of f and g for n <= n_max, plus the common
// p-power content.  PrecisionExhausted when either input vanishes at
// precision or has too little precision left to certify divisibility.
CyclotomicGcdResult cyclotomic_gcd(const LambdaElement& f,
                                   const LambdaElement& g, int n_max);

// Largest n whose Phi_n leaves division headroom: deg Phi_n <= M / 2.
int default_n_max(const PadicContext& ctx);

// Truncated expansion of an ideal descriptor; TruncationOverflow when the
// total degree does not fit below X^M.
LambdaElement cyclo_expand(const CyclotomicProduct& c, const PadicContext& ctx);

// Exact solution of A * omega~_n^- + B * omega_n^+ = p^m with
// deg A < deg omega_n^+ and deg B < deg omega~_n^-.  For these inputs the
// resultant is a pure p-power, so A and B have integer coefficients and the
// identity holds over Z.  PrecisionExhausted when m >= N.
struct PlusMinusBezout {
  IntPoly a;
  IntPoly b;
  int m = 0;
};
PlusMinusBezout bezout_pm(int n, const PadicContext& ctx);

}  // namespace itk
