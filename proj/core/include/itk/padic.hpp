#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "itk/errors.hpp"

namespace itk {

/*
 * Fixed-precision p-adic integers.
 *
 * A PadicInt stores a residue in [0, p^k) together with the exponent k
 * ("known precision"): the element is known modulo p^k and nothing more.
 * All arithmetic runs through a PadicContext, which fixes the odd prime p,
 * the coefficient precision cap N and the series truncation M used by the
 * power-series layer on top of this one.
 *
 * Precision bookkeeping is deliberately conservative: every operation
 * records the minimum precision that provably survives.  Addition and
 * subtraction keep min(k_a, k_b); multiplication gains the valuation of the
 * other operand; exact division by p^j costs j digits.  Subtracting nearly
 * equal values therefore leaves a high-valuation result whose *relative*
 * accuracy has silently dropped, and a later div_pow_p makes that loss
 * explicit in the tracked exponent.
 */

class PadicInt {
 public:
  PadicInt() : residue_(0), prec_(0) {}
  PadicInt(mpz_class residue, int prec)
      : residue_(std::move(residue)), prec_(prec) {}

  const mpz_class& residue() const { return residue_; }
  int precision() const { return prec_; }

  // Bitwise identity (same residue and same tracked precision).
  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.prec_ == b.prec_ && a.residue_ == b.residue_;
  }
  friend bool operator!=(const PadicInt& a, const PadicInt& b) {
    return !(a == b);
  }

 private:
  mpz_class residue_;
  int prec_;
};

// Result of a valuation query.  `value` is empty when the residue is zero at
// the full known precision: the element is indistinguishable from 0 and only
// the precision of that statement is reported.
struct Valuation {
  std::optional<int> value;
  int precision = 0;

  bool is_infinite() const { return !value.has_value(); }
  int finite() const { return value.value(); }
};

class PadicContext {
 public:
  // p must be an odd prime, coefficient_precision >= 1 (exponent N),
  // series_truncation >= 1 (power-series cutoff M).
  PadicContext(unsigned long p, int coefficient_precision,
               int series_truncation);

  unsigned long p() const { return p_; }
  int precision() const { return n_; }
  int truncation() const { return m_; }

  // p^k for 0 <= k <= N.
  const mpz_class& pow_p(int k) const;

  // Canonical representative: value mod p^prec, prec clamped to [0, N].
  PadicInt reduce(const mpz_class& value, int prec) const;
  PadicInt from_integer(const mpz_class& value) const;
  PadicInt from_integer(long value) const;
  PadicInt zero() const { return PadicInt(0, n_); }
  PadicInt one() const { return PadicInt(1, n_); }

  PadicInt add(const PadicInt& a, const PadicInt& b) const;
  PadicInt sub(const PadicInt& a, const PadicInt& b) const;
  PadicInt mul(const PadicInt& a, const PadicInt& b) const;
  PadicInt neg(const PadicInt& a) const;

  Valuation valuation(const PadicInt& a) const;

  // Valuation clamped to the known precision; a residue that vanishes at
  // precision k counts as valuation k.  This is the exponent usable in
  // precision propagation.
  int capped_valuation(const PadicInt& a) const;

  // Multiplicative inverse of a unit.  NotAUnit when the valuation is
  // positive or the element vanishes at precision; PrecisionExhausted when
  // nothing at all is known (precision 0).
  PadicInt invert(const PadicInt& a) const;

  PadicInt mul_pow_p(const PadicInt& a, int k) const;
  // Exact division by p^k; lowers the known precision by k.  NotDivisible
  // when p^k does not divide the residue.
  PadicInt div_pow_p(const PadicInt& a, int k) const;

  bool is_zero_at_precision(const PadicInt& a) const {
    return a.residue() == 0;
  }

  // a == b modulo p^min(k, prec_a, prec_b).
  bool congruent(const PadicInt& a, const PadicInt& b, int k) const;

  friend bool operator==(const PadicContext& a, const PadicContext& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.m_ == b.m_;
  }
  friend bool operator!=(const PadicContext& a, const PadicContext& b) {
    return !(a == b);
  }

 private:
  unsigned long p_;
  int n_;
  int m_;
  std::shared_ptr<const std::vector<mpz_class>> pow_;
};

}  // namespace itk
