#include "itk/padic.hpp"

#include <algorithm>
#include <string>

namespace itk {

namespace {

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PadicContext::PadicContext(unsigned long p, int coefficient_precision,
                           int series_truncation)
    : p_(p), n_(coefficient_precision), m_(series_truncation) {
  if (!is_odd_prime(p)) {
    throw Error("PadicContext: p must be an odd prime, got " +
                std::to_string(p));
  }
  if (n_ < 1) throw Error("PadicContext: precision N must be >= 1");
  if (m_ < 1) throw Error("PadicContext: truncation M must be >= 1");
  auto pow = std::make_shared<std::vector<mpz_class>>(n_ + 1);
  (*pow)[0] = 1;
  for (int k = 1; k <= n_; ++k) (*pow)[k] = (*pow)[k - 1] * p;
  pow_ = std::move(pow);
}

const mpz_class& PadicContext::pow_p(int k) const { return (*pow_)[k]; }

PadicInt PadicContext::reduce(const mpz_class& value, int prec) const {
  prec = std::clamp(prec, 0, n_);
  if (prec == 0) return PadicInt(0, 0);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), pow_p(prec).get_mpz_t());
  return PadicInt(std::move(r), prec);
}

PadicInt PadicContext::from_integer(const mpz_class& value) const {
  return reduce(value, n_);
}

PadicInt PadicContext::from_integer(long value) const {
  return reduce(mpz_class(value), n_);
}

PadicInt PadicContext::add(const PadicInt& a, const PadicInt& b) const {
  int prec = std::min(a.precision(), b.precision());
  return reduce(a.residue() + b.residue(), prec);
}

PadicInt PadicContext::sub(const PadicInt& a, const PadicInt& b) const {
  int prec = std::min(a.precision(), b.precision());
  return reduce(a.residue() - b.residue(), prec);
}

int PadicContext::capped_valuation(const PadicInt& a) const {
  if (a.residue() == 0) return a.precision();
  // Residues are canonical, so a nonzero residue has valuation < precision.
  int v = 0;
  mpz_class r = a.residue();
  while (mpz_divisible_ui_p(r.get_mpz_t(), p_)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
    ++v;
  }
  return v;
}

PadicInt PadicContext::mul(const PadicInt& a, const PadicInt& b) const {
  int va = capped_valuation(a);
  int vb = capped_valuation(b);
  int prec = std::min({a.precision() + vb, b.precision() + va, n_});
  return reduce(a.residue() * b.residue(), prec);
}

PadicInt PadicContext::neg(const PadicInt& a) const {
  return reduce(-a.residue(), a.precision());
}

Valuation PadicContext::valuation(const PadicInt& a) const {
  if (a.residue() == 0) return Valuation{std::nullopt, a.precision()};
  return Valuation{capped_valuation(a), a.precision()};
}

PadicInt PadicContext::invert(const PadicInt& a) const {
  if (a.precision() == 0) {
    throw PrecisionExhausted("invert: no digits known");
  }
  if (a.residue() == 0) {
    throw NotAUnit("invert: element is indistinguishable from zero at precision " +
                   std::to_string(a.precision()));
  }
  if (mpz_divisible_ui_p(a.residue().get_mpz_t(), p_)) {
    throw NotAUnit("invert: element has positive valuation");
  }
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.residue().get_mpz_t(),
                  pow_p(a.precision()).get_mpz_t())) {
    throw NotAUnit("invert: residue not invertible");
  }
  return PadicInt(std::move(r), a.precision());
}

PadicInt PadicContext::mul_pow_p(const PadicInt& a, int k) const {
  if (k == 0) return a;
  if (k < 0) return div_pow_p(a, -k);
  int prec = std::min(a.precision() + k, n_);
  if (k > n_) return PadicInt(0, n_);
  return reduce(a.residue() * pow_p(k), prec);
}

PadicInt PadicContext::div_pow_p(const PadicInt& a, int k) const {
  if (k == 0) return a;
  if (k < 0) return mul_pow_p(a, -k);
  int prec = std::max(a.precision() - k, 0);
  if (a.residue() == 0) return PadicInt(0, prec);
  if (k > a.precision() ||
      !mpz_divisible_p(a.residue().get_mpz_t(), pow_p(k).get_mpz_t())) {
    throw NotDivisible("div_pow_p: residue not divisible by p^" +
                       std::to_string(k));
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.residue().get_mpz_t(), pow_p(k).get_mpz_t());
  return reduce(q, prec);
}

bool PadicContext::congruent(const PadicInt& a, const PadicInt& b,
                             int k) const {
  int prec = std::min({k, a.precision(), b.precision()});
  if (prec <= 0) return true;
  mpz_class d = a.residue() - b.residue();
  return mpz_divisible_p(d.get_mpz_t(), pow_p(prec).get_mpz_t()) != 0;
}

}  // namespace itk
