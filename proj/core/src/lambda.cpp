#include "itk/lambda.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace itk {

namespace {

constexpr int kGuardDigits = 2;

void require_same_ctx(const LambdaElement& a, const LambdaElement& b,
                      const char* op) {
  if (a.ctx() != b.ctx()) {
    throw Error(std::string(op) + ": mismatched contexts");
  }
}

}  // namespace

LambdaElement::LambdaElement(PadicContext ctx)
    : ctx_(std::move(ctx)),
      c_(ctx_.truncation(), PadicInt(0, ctx_.precision())) {}

LambdaElement LambdaElement::from_coeffs(const PadicContext& ctx,
                                         std::vector<PadicInt> coeffs) {
  if (static_cast<int>(coeffs.size()) > ctx.truncation()) {
    throw Error("LambdaElement: more than M coefficients");
  }
  LambdaElement out(ctx);
  for (size_t j = 0; j < coeffs.size(); ++j) {
    out.c_[j] = ctx.reduce(coeffs[j].residue(), coeffs[j].precision());
  }
  return out;
}

LambdaElement LambdaElement::from_int_poly(const PadicContext& ctx,
                                           const IntPoly& f) {
  if (f.degree() >= ctx.truncation()) {
    throw TruncationOverflow("LambdaElement: degree " +
                             std::to_string(f.degree()) +
                             " does not fit below X^" +
                             std::to_string(ctx.truncation()));
  }
  LambdaElement out(ctx);
  for (int j = 0; j <= f.degree(); ++j) {
    out.c_[j] = ctx.from_integer(f.coeff(j));
  }
  return out;
}

void LambdaElement::set_coeff(int j, PadicInt v) {
  c_[j] = ctx_.reduce(v.residue(), v.precision());
}

int LambdaElement::degree_bound() const {
  for (int j = size() - 1; j >= 0; --j) {
    if (c_[j].residue() != 0) return j;
  }
  return -1;
}

bool LambdaElement::indistinguishable_from_zero() const {
  return degree_bound() < 0;
}

int LambdaElement::min_precision() const {
  int m = ctx_.precision();
  for (const auto& c : c_) m = std::min(m, c.precision());
  return m;
}

std::optional<int> LambdaElement::p_content() const {
  bool seen = false;
  int mu = ctx_.precision();
  for (const auto& c : c_) {
    if (c.residue() == 0) continue;
    seen = true;
    mu = std::min(mu, ctx_.capped_valuation(c));
  }
  if (!seen) return std::nullopt;
  return mu;
}

IntPoly LambdaElement::lift() const {
  std::vector<mpz_class> c(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j].residue();
  return IntPoly(std::move(c));
}

LambdaElement LambdaElement::operator-() const {
  LambdaElement out(ctx_);
  for (int j = 0; j < size(); ++j) out.c_[j] = ctx_.neg(c_[j]);
  return out;
}

LambdaElement operator+(const LambdaElement& a, const LambdaElement& b) {
  require_same_ctx(a, b, "add");
  LambdaElement out(a.ctx_);
  for (int j = 0; j < a.size(); ++j) {
    out.c_[j] = a.ctx_.add(a.c_[j], b.c_[j]);
  }
  return out;
}

LambdaElement operator-(const LambdaElement& a, const LambdaElement& b) {
  require_same_ctx(a, b, "sub");
  LambdaElement out(a.ctx_);
  for (int j = 0; j < a.size(); ++j) {
    out.c_[j] = a.ctx_.sub(a.c_[j], b.c_[j]);
  }
  return out;
}

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
  require_same_ctx(a, b, "mul");
  const PadicContext& ctx = a.ctx_;
  const int m = ctx.truncation();
  const int n = ctx.precision();

  std::vector<int> ap(m), av(m), bp(m), bv(m);
  for (int i = 0; i < m; ++i) {
    ap[i] = a.c_[i].precision();
    av[i] = ctx.capped_valuation(a.c_[i]);
    bp[i] = b.c_[i].precision();
    bv[i] = ctx.capped_valuation(b.c_[i]);
  }

  LambdaElement out(ctx);
  mpz_class acc;
  for (int k = 0; k < m; ++k) {
    acc = 0;
    int prec = n;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      prec = std::min({prec, ap[i] + bv[j], bp[j] + av[i]});
      if (a.c_[i].residue() != 0 && b.c_[j].residue() != 0) {
        mpz_addmul(acc.get_mpz_t(), a.c_[i].residue().get_mpz_t(),
                   b.c_[j].residue().get_mpz_t());
      }
    }
    out.c_[k] = ctx.reduce(acc, prec);
  }
  return out;
}

LambdaElement LambdaElement::mul_scalar(const PadicInt& s) const {
  LambdaElement out(ctx_);
  for (int j = 0; j < size(); ++j) out.c_[j] = ctx_.mul(c_[j], s);
  return out;
}

LambdaElement LambdaElement::mul_pow_p(int k) const {
  LambdaElement out(ctx_);
  for (int j = 0; j < size(); ++j) out.c_[j] = ctx_.mul_pow_p(c_[j], k);
  return out;
}

LambdaElement LambdaElement::div_pow_p(int k) const {
  LambdaElement out(ctx_);
  for (int j = 0; j < size(); ++j) out.c_[j] = ctx_.div_pow_p(c_[j], k);
  return out;
}

bool equal_at_precision(const LambdaElement& a, const LambdaElement& b,
                        int k) {
  require_same_ctx(a, b, "equal_at_precision");
  for (int j = 0; j < a.size(); ++j) {
    if (!a.ctx_.congruent(a.c_[j], b.c_[j], k)) return false;
  }
  return true;
}

LambdaElement phi(int n, const PadicContext& ctx) {
  return LambdaElement::from_int_poly(ctx, cyclotomic_phi(ctx.p(), n));
}

LambdaElement omega(int n, const PadicContext& ctx) {
  return LambdaElement::from_int_poly(ctx, cyclotomic_omega(ctx.p(), n));
}

LambdaElement omega_pm(int n, Sign sign, const PadicContext& ctx) {
  return LambdaElement::from_int_poly(ctx,
                                      cyclotomic_omega_pm(ctx.p(), n, sign));
}

LambdaElement invert_series(const LambdaElement& f) {
  const PadicContext& ctx = f.ctx();
  const int m = ctx.truncation();
  const PadicInt& f0 = f.coeff(0);
  PadicInt inv0 = ctx.invert(f0);  // NotAUnit unless the constant term is one

  std::vector<PadicInt> c(m, PadicInt(0, ctx.precision()));
  c[0] = inv0;
  for (int k = 1; k < m; ++k) {
    PadicInt acc = ctx.zero();
    for (int j = 1; j <= k; ++j) {
      if (f.coeff(j).residue() == 0 &&
          f.coeff(j).precision() == ctx.precision()) {
        continue;
      }
      acc = ctx.add(acc, ctx.mul(f.coeff(j), c[k - j]));
    }
    c[k] = ctx.neg(ctx.mul(inv0, acc));
  }
  return LambdaElement::from_coeffs(ctx, std::move(c));
}

namespace {

// Coefficients lam..M-1 of s, shifted down; the vacated top entries are
// filled with exact zeros (any fill yields a valid Weierstrass quotient in
// the truncated ring).
LambdaElement shift_down(const LambdaElement& s, int lam) {
  LambdaElement out(s.ctx());
  const int m = s.ctx().truncation();
  for (int j = 0; j + lam < m; ++j) out.set_coeff(j, s.coeff(j + lam));
  return out;
}

LambdaElement low_part(const LambdaElement& s, int lam) {
  LambdaElement out(s.ctx());
  for (int j = 0; j < lam; ++j) out.set_coeff(j, s.coeff(j));
  return out;
}

// Weierstrass division of X^lam by g, where g's coefficients below lam all
// have positive valuation and g_lam is a unit: returns (q, r) with
// X^lam = q*g + r and deg r < lam, exact in the truncated ring.
void weierstrass_divide_xlam(const LambdaElement& g, int lam,
                             LambdaElement* q_out, LambdaElement* r_out) {
  const PadicContext& ctx = g.ctx();

  // g = p*a + X^lam * b.
  LambdaElement a(ctx);
  for (int j = 0; j < lam; ++j) {
    a.set_coeff(j, ctx.div_pow_p(g.coeff(j), 1));
  }
  LambdaElement b = shift_down(g, lam);
  LambdaElement binv = invert_series(b);

  LambdaElement h(ctx);
  h.set_coeff(lam, ctx.one());  // lam < m by construction

  LambdaElement q(ctx);
  LambdaElement s = h;
  // The correction gains one factor of p per round, so the fixed point is
  // reached after at most N+1 rounds.
  for (int iter = 0; iter <= ctx.precision() + 1; ++iter) {
    s = h - (a * q).mul_pow_p(1);
    LambdaElement qn = binv * shift_down(s, lam);
    if (qn == q) break;
    q = qn;
  }
  s = h - (a * q).mul_pow_p(1);
  *q_out = q;
  *r_out = low_part(s, lam);
}

}  // namespace

WeierstrassFactorization weierstrass_prepare(const LambdaElement& f) {
  const PadicContext& ctx = f.ctx();
  std::optional<int> content = f.p_content();
  if (!content) {
    if (f.min_precision() <= 0) {
      throw PrecisionExhausted("weierstrass_prepare: no digits known");
    }
    throw IndistinguishableFromZero(
        "weierstrass_prepare: element vanishes at precision " +
        std::to_string(f.min_precision()));
  }
  const int mu = *content;
  LambdaElement g = f.div_pow_p(mu);

  int lam = -1;
  for (int j = 0; j < g.size(); ++j) {
    const PadicInt& c = g.coeff(j);
    if (c.precision() <= 0) {
      throw PrecisionExhausted(
          "weierstrass_prepare: coefficient " + std::to_string(j) +
          " retains no digits after removing p^" + std::to_string(mu));
    }
    if (c.residue() != 0 && ctx.capped_valuation(c) == 0) {
      lam = j;
      break;
    }
  }
  if (lam < 0) {
    // Unreachable for a well-formed content computation.
    throw Error("weierstrass_prepare: no unit coefficient found");
  }

  LambdaElement q(ctx), r(ctx);
  weierstrass_divide_xlam(g, lam, &q, &r);

  // P = X^lam - r, with canonical non-negative lifts.
  std::vector<mpz_class> pc(lam + 1);
  int pprec = ctx.precision();
  for (int j = 0; j < lam; ++j) {
    const PadicInt& c = r.coeff(j);
    pprec = std::min(pprec, c.precision());
    PadicInt lifted = ctx.neg(c);
    if (c.residue() != 0 && ctx.capped_valuation(c) == 0) {
      throw Error("weierstrass_prepare: remainder has a unit coefficient");
    }
    pc[j] = lifted.residue();
  }
  pc[lam] = 1;

  WeierstrassFactorization out{mu, invert_series(q),
                               DistinguishedPoly{IntPoly(std::move(pc)),
                                                 pprec}};
  return out;
}

IwasawaInvariants iwasawa_invariants(const LambdaElement& f) {
  WeierstrassFactorization w = weierstrass_prepare(f);
  return IwasawaInvariants{w.mu, w.lambda()};
}

namespace {

bool remainder_vanishes(const PadicContext& ctx,
                        const std::vector<PadicInt>& rem, int base_prec) {
  bool exact = true;
  for (const auto& c : rem) {
    if (c.residue() != 0) {
      exact = false;
      break;
    }
  }
  if (exact) return true;
  const int guard_level = base_prec - kGuardDigits;
  if (guard_level < 1) return false;
  for (const auto& c : rem) {
    if (ctx.capped_valuation(c) < std::min(c.precision(), guard_level)) {
      return false;
    }
  }
  return true;
}

}  // namespace

PhiDivision divide_by_phi(const LambdaElement& f, int n) {
  const PadicContext& ctx = f.ctx();
  const int m = ctx.truncation();
  const long d = phi_degree(ctx.p(), n);
  if (d >= m) {
    throw TruncationOverflow("divide_by_phi: deg Phi_" + std::to_string(n) +
                             " = " + std::to_string(d) +
                             " does not fit below X^" + std::to_string(m));
  }
  IntPoly ph = cyclotomic_phi(ctx.p(), n);
  std::vector<PadicInt> phc(d);
  for (long j = 0; j < d; ++j) phc[j] = ctx.from_integer(ph.coeff(j));

  std::vector<PadicInt> rem;
  rem.reserve(m);
  for (int j = 0; j < m; ++j) rem.push_back(f.coeff(j));
  std::vector<PadicInt> quo(m, PadicInt(0, ctx.precision()));

  for (int k = m - 1; k >= d; --k) {
    PadicInt c = rem[k];
    quo[k - d] = c;
    if (c.residue() == 0 && c.precision() == ctx.precision()) continue;
    for (long j = 0; j < d; ++j) {
      rem[k - d + j] = ctx.sub(rem[k - d + j], ctx.mul(c, phc[j]));
    }
    rem[k] = ctx.sub(rem[k], c);
  }
  rem.resize(d);

  if (!remainder_vanishes(ctx, rem, f.min_precision())) {
    return PhiDivision{f, false};
  }
  return PhiDivision{LambdaElement::from_coeffs(ctx, std::move(quo)), true};
}

CyclotomicGcdResult cyclotomic_gcd(const LambdaElement& f,
                                   const LambdaElement& g, int n_max) {
  require_same_ctx(f, g, "cyclotomic_gcd");
  std::optional<int> mf = f.p_content();
  std::optional<int> mg = g.p_content();
  if (!mf || !mg) {
    throw PrecisionExhausted(
        "cyclotomic_gcd: an input vanishes at its precision");
  }
  LambdaElement f1 = f.div_pow_p(*mf);
  LambdaElement g1 = g.div_pow_p(*mg);
  if (std::min(f1.min_precision(), g1.min_precision()) - kGuardDigits < 1) {
    throw PrecisionExhausted(
        "cyclotomic_gcd: not enough precision left to certify divisibility");
  }

  auto multiplicity = [&](LambdaElement work, int n) {
    int count = 0;
    for (;;) {
      PhiDivision dv = divide_by_phi(work, n);
      if (!dv.divisible) return count;
      if (dv.quotient.indistinguishable_from_zero()) {
        throw PrecisionExhausted(
            "cyclotomic_gcd: division left nothing distinguishable at "
            "precision");
      }
      work = dv.quotient;
      ++count;
    }
  };

  std::map<int, int> e;
  for (int n = 0; n <= n_max; ++n) {
    int a = multiplicity(f1, n);
    if (a == 0) continue;
    int b = multiplicity(g1, n);
    int c = std::min(a, b);
    if (c > 0) e[n] = c;
  }
  return CyclotomicGcdResult{CyclotomicProduct(std::move(e)),
                             std::min(*mf, *mg)};
}

int default_n_max(const PadicContext& ctx) {
  int n = -1;
  while (phi_degree(ctx.p(), n + 1) * 2 <= ctx.truncation()) ++n;
  return n;
}

LambdaElement cyclo_expand(const CyclotomicProduct& c,
                           const PadicContext& ctx) {
  long d = cyclo_total_degree(c, ctx.p());
  if (d >= ctx.truncation()) {
    throw TruncationOverflow("cyclo_expand: total degree " +
                             std::to_string(d) + " does not fit below X^" +
                             std::to_string(ctx.truncation()));
  }
  return LambdaElement::from_int_poly(ctx, cyclo_to_int_poly(c, ctx.p()));
}

PlusMinusBezout bezout_pm(int n, const PadicContext& ctx) {
  if (n < 1) throw Error("bezout_pm: n must be >= 1");
  const IntPoly f = cyclotomic_omega_pm(ctx.p(), n, Sign::minus);
  const IntPoly g = cyclotomic_omega_pm(ctx.p(), n, Sign::plus);
  RatBezout bez = extended_euclid_coprime(f, g);

  // The exponent is read off the resultant, reached through the remainder
  // sequence so that it stays independent of the Sylvester route.
  mpq_class res = resultant_via_remainders(f, g);
  if (res == 0) throw Error("bezout_pm: inputs share a factor");
  if (res.get_den() != 1) throw Error("bezout_pm: non-integral resultant");
  mpz_class res_z = abs(mpz_class(res.get_num()));
  int m = p_valuation(res_z, ctx.p());
  mpz_class rest;
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), ctx.p(), m);
  mpz_divexact(rest.get_mpz_t(), res_z.get_mpz_t(), pv.get_mpz_t());
  if (rest != 1) {
    throw Error("bezout_pm: resultant " + res_z.get_str() +
                " is not a power of p");
  }
  if (m >= ctx.precision()) {
    throw PrecisionExhausted("bezout_pm: p^" + std::to_string(m) +
                             " vanishes at precision " +
                             std::to_string(ctx.precision()));
  }

  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), ctx.p(), m);
  auto clear = [&](const RatPoly& r) {
    std::vector<mpz_class> c(r.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
      mpq_class scaled = mpq_class(pm) * r.coeffs()[i];
      if (scaled.get_den() != 1) {
        throw Error("bezout_pm: non p-power denominator survived");
      }
      c[i] = scaled.get_num();
    }
    return IntPoly(std::move(c));
  };
  PlusMinusBezout out{clear(bez.a), clear(bez.b), m};

  IntPoly check = out.a * f + out.b * g;
  if (check != IntPoly::constant(pm)) {
    throw Error("bezout_pm: identity check failed");
  }
  return out;
}

LambdaElement iota(const LambdaElement& f) {
  const PadicContext& ctx = f.ctx();
  const int m = ctx.truncation();

  // t = (1+X)^(-1) - 1 = -X + X^2 - X^3 + ...
  LambdaElement t(ctx);
  for (int j = 1; j < m; ++j) {
    t.set_coeff(j, ctx.from_integer((j % 2 == 1) ? -1L : 1L));
  }

  // Horner over the coefficients of f, starting above the last index that
  // carries information (nonzero residue or degraded precision).
  int top = -1;
  for (int j = m - 1; j >= 0; --j) {
    if (f.coeff(j).residue() != 0 ||
        f.coeff(j).precision() < ctx.precision()) {
      top = j;
      break;
    }
  }
  LambdaElement acc(ctx);
  for (int j = top; j >= 0; --j) {
    acc = acc * t;
    acc.set_coeff(0, ctx.add(acc.coeff(0), f.coeff(j)));
  }
  return acc;
}

}  // namespace itk
