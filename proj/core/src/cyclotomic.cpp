#include "itk/cyclotomic.hpp"

#include <limits>

namespace itk {

namespace {

// (X+1)^e as an exact polynomial.
IntPoly binomial_power(long e) {
  std::vector<mpz_class> c(e + 1);
  mpz_class b = 1;
  for (long k = 0; k <= e; ++k) {
    c[k] = b;
    if (k < e) {
      b *= (e - k);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
    }
  }
  return IntPoly(std::move(c));
}

}  // namespace

long p_power_long(unsigned long p, int n) {
  if (n < 0) throw Error("p_power_long: negative exponent");
  long r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > std::numeric_limits<long>::max() / static_cast<long>(p)) {
      throw Error("p_power_long: p^n out of range");
    }
    r *= static_cast<long>(p);
  }
  return r;
}

long phi_degree(unsigned long p, int n) {
  if (n < 0) throw Error("phi_degree: negative level");
  if (n == 0) return 1;
  return (static_cast<long>(p) - 1) * p_power_long(p, n - 1);
}

IntPoly cyclotomic_phi(unsigned long p, int n) {
  if (n < 0) throw Error("cyclotomic_phi: negative level");
  if (n == 0) return IntPoly::x();
  // Phi_n = sum_{k=0}^{p-1} (X+1)^(k * p^(n-1)), by telescoping the
  // defining quotient against Y^p - 1 = (Y - 1)(1 + Y + ... + Y^(p-1))
  // at Y = (X+1)^(p^(n-1)).
  IntPoly g = binomial_power(p_power_long(p, n - 1));
  IntPoly acc = IntPoly::one();
  for (unsigned long k = 1; k < p; ++k) acc = acc * g + IntPoly::one();
  return acc;
}

IntPoly cyclotomic_omega(unsigned long p, int n) {
  if (n < 0) throw Error("cyclotomic_omega: negative level");
  return binomial_power(p_power_long(p, n)) - IntPoly::one();
}

IntPoly cyclotomic_omega_pm(unsigned long p, int n, Sign sign) {
  if (n < 0) throw Error("cyclotomic_omega_pm: negative level");
  IntPoly out = IntPoly::one();
  int start = (sign == Sign::minus) ? 1 : 0;
  for (int m = start; m <= n; m += 2) out = out * cyclotomic_phi(p, m);
  return out;
}

CyclotomicProduct::CyclotomicProduct(std::map<int, int> exponents)
    : e_(std::move(exponents)) {
  for (auto it = e_.begin(); it != e_.end();) {
    if (it->first < 0) throw Error("CyclotomicProduct: negative index");
    if (it->second < 0) throw Error("CyclotomicProduct: negative exponent");
    it = (it->second == 0) ? e_.erase(it) : std::next(it);
  }
}

CyclotomicProduct CyclotomicProduct::single(int n, int a) {
  return CyclotomicProduct(std::map<int, int>{{n, a}});
}

int CyclotomicProduct::exponent(int n) const {
  auto it = e_.find(n);
  return it == e_.end() ? 0 : it->second;
}

CyclotomicProduct cyclo_gcd(const CyclotomicProduct& a,
                            const CyclotomicProduct& b) {
  std::map<int, int> e;
  for (const auto& [n, an] : a.exponents()) {
    int m = std::min(an, b.exponent(n));
    if (m > 0) e[n] = m;
  }
  return CyclotomicProduct(std::move(e));
}

CyclotomicProduct cyclo_mul(const CyclotomicProduct& a,
                            const CyclotomicProduct& b) {
  std::map<int, int> e = a.exponents();
  for (const auto& [n, bn] : b.exponents()) e[n] += bn;
  return CyclotomicProduct(std::move(e));
}

bool cyclo_divides(const CyclotomicProduct& a, const CyclotomicProduct& b) {
  for (const auto& [n, an] : a.exponents()) {
    if (b.exponent(n) < an) return false;
  }
  return true;
}

CyclotomicProduct cyclo_quotient(const CyclotomicProduct& b,
                                 const CyclotomicProduct& a) {
  if (!cyclo_divides(a, b)) {
    throw NotDivisible("cyclo_quotient: " + format_ideal(a) +
                       " does not divide " + format_ideal(b));
  }
  std::map<int, int> e = b.exponents();
  for (const auto& [n, an] : a.exponents()) e[n] -= an;
  return CyclotomicProduct(std::move(e));
}

long cyclo_total_degree(const CyclotomicProduct& c, unsigned long p) {
  long d = 0;
  for (const auto& [n, a] : c.exponents()) d += a * phi_degree(p, n);
  return d;
}

IntPoly cyclo_to_int_poly(const CyclotomicProduct& c, unsigned long p) {
  IntPoly out = IntPoly::one();
  for (const auto& [n, a] : c.exponents()) {
    IntPoly f = cyclotomic_phi(p, n);
    for (int i = 0; i < a; ++i) out = out * f;
  }
  return out;
}

std::string format_ideal(const CyclotomicProduct& c) {
  if (c.is_unit()) return "(1)";
  std::string out;
  for (const auto& [n, a] : c.exponents()) {
    if (!out.empty()) out += " * ";
    out += (n == 0) ? "X" : "Phi_" + std::to_string(n);
    out += "^" + std::to_string(a);
  }
  return out;
}

}  // namespace itk
