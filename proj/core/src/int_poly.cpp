#include "itk/int_poly.hpp"

#include <algorithm>
#include <utility>

namespace itk {

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x() { return monomial(1); }

IntPoly IntPoly::constant(mpz_class v) {
  std::vector<mpz_class> c;
  if (v != 0) c.push_back(std::move(v));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int degree, mpz_class lead) {
  if (lead == 0) return IntPoly();
  std::vector<mpz_class> c(degree + 1);
  c[degree] = std::move(lead);
  return IntPoly(std::move(c));
}

mpz_class IntPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return mpz_class(0);
  return c_[j];
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> c(c_.size() + k);
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return IntPoly(std::move(c));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (int j = degree(); j >= 0; --j) acc = acc * x + c_[j];
  return acc;
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                 b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
  return IntPoly(std::move(c));
}

void IntPoly::divmod_monic(const IntPoly& f, const IntPoly& g, IntPoly* q,
                           IntPoly* r) {
  if (!g.is_monic()) throw Error("divmod_monic: divisor must be monic");
  int d = g.degree();
  std::vector<mpz_class> rem = f.c_;
  std::vector<mpz_class> quo;
  if (f.degree() >= d) quo.assign(f.degree() - d + 1, mpz_class(0));
  for (int k = f.degree(); k >= d; --k) {
    if (rem[k] == 0) continue;
    mpz_class c = rem[k];
    quo[k - d] = c;
    for (int j = 0; j <= d; ++j) {
      rem[k - d + j] -= c * g.c_[j];
    }
  }
  if (q) *q = IntPoly(std::move(quo));
  if (r) {
    rem.resize(std::min<size_t>(rem.size(), d));
    *r = IntPoly(std::move(rem));
  }
}

IntPoly IntPoly::exact_div_monic(const IntPoly& f, const IntPoly& g) {
  IntPoly q, r;
  divmod_monic(f, g, &q, &r);
  if (!r.is_zero()) throw Error("exact_div_monic: nonzero remainder");
  return q;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    const mpz_class& c = c_[j];
    if (c == 0) continue;
    mpz_class a = abs(c);
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = a.get_str();
    if (j == 0) {
      out += mag;
    } else {
      if (a != 1) out += mag + "*";
      out += (j == 1) ? "X" : "X^" + std::to_string(j);
    }
  }
  return out;
}

int p_valuation(const mpz_class& v, unsigned long p) {
  if (v == 0) throw Error("p_valuation: zero input");
  mpz_class r = abs(v);
  int k = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++k;
  }
  return k;
}

mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  int df = f.degree();
  int dg = g.degree();
  if (df < 0 || dg < 0) return mpz_class(0);
  if (df == 0 && dg == 0) return mpz_class(1);
  if (df == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), dg);
    return r;
  }
  if (dg == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), df);
    return r;
  }

  int n = df + dg;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < dg; ++i) {
    for (int j = 0; j <= df; ++j) a[i][i + j] = f.coeff(df - j);
  }
  for (int i = 0; i < df; ++i) {
    for (int j = 0; j <= dg; ++j) a[dg + i][i + j] = g.coeff(dg - j);
  }

  // Bareiss fraction-free elimination; every division below is exact.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          s = i;
          break;
        }
      }
      if (s < 0) return mpz_class(0);
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

mpq_class resultant_via_remainders(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return mpq_class(0);
  if (f.degree() == 0 && g.degree() == 0) return mpq_class(1);

  RatPoly a = RatPoly::from_int(f);
  RatPoly b = RatPoly::from_int(g);
  mpq_class acc(1);
  while (b.degree() > 0) {
    RatPoly q, r;
    RatPoly::divmod(a, b, &q, &r);
    if (r.is_zero()) return mpq_class(0);
    if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
    mpq_class lc = b.coeff(b.degree());
    mpq_class scale(1);
    for (int i = 0; i < a.degree() - r.degree(); ++i) scale *= lc;
    acc *= scale;
    a = b;
    b = r;
  }
  // Res(a, c) = c^(deg a) for constant c.
  mpq_class c = b.coeff(0);
  mpq_class fin(1);
  for (int i = 0; i < a.degree(); ++i) fin *= c;
  return acc * fin;
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  for (auto& q : c_) q.canonicalize();
}

RatPoly RatPoly::from_int(const IntPoly& f) {
  std::vector<mpq_class> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::constant(mpq_class v) {
  std::vector<mpq_class> c;
  if (v != 0) c.push_back(std::move(v));
  return RatPoly(std::move(c));
}

mpq_class RatPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return mpq_class(0);
  return c_[j];
}

RatPoly RatPoly::operator-() const {
  std::vector<mpq_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const mpq_class& s, const RatPoly& a) {
  std::vector<mpq_class> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
  return RatPoly(std::move(c));
}

void RatPoly::divmod(const RatPoly& f, const RatPoly& g, RatPoly* q,
                     RatPoly* r) {
  if (g.is_zero()) throw Error("RatPoly::divmod: division by zero");
  int d = g.degree();
  std::vector<mpq_class> rem = f.c_;
  std::vector<mpq_class> quo;
  if (f.degree() >= d) quo.assign(f.degree() - d + 1, mpq_class(0));
  mpq_class lead_inv = 1 / g.c_.back();
  for (int k = f.degree(); k >= d; --k) {
    if (rem[k] == 0) continue;
    mpq_class c = rem[k] * lead_inv;
    quo[k - d] = c;
    for (int j = 0; j <= d; ++j) rem[k - d + j] -= c * g.c_[j];
  }
  if (q) *q = RatPoly(std::move(quo));
  if (r) {
    rem.resize(std::min<size_t>(rem.size(), d));
    *r = RatPoly(std::move(rem));
  }
}

RatBezout extended_euclid_coprime(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    throw Error("extended_euclid_coprime: zero input");
  }
  RatPoly r0 = RatPoly::from_int(f), r1 = RatPoly::from_int(g);
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    RatPoly q, r;
    RatPoly::divmod(r0, r1, &q, &r);
    r0 = r1;
    r1 = r;
    RatPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    RatPoly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) {
    throw Error("extended_euclid_coprime: inputs are not coprime");
  }
  mpq_class inv = 1 / r0.coeff(0);
  RatBezout out{inv * s0, inv * t0};
  // The iteration already keeps deg a < deg g and deg b < deg f except in
  // degenerate constant cases; reduce defensively.
  if (out.a.degree() >= g.degree() && g.degree() > 0) {
    RatPoly q, r;
    RatPoly::divmod(out.a, RatPoly::from_int(g), &q, &r);
    out.a = r;
    out.b = out.b + q * RatPoly::from_int(f);
  }
  return out;
}

}  // namespace itk
