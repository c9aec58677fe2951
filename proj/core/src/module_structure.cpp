#include "itk/module_structure.hpp"

#include <string>

#include "itk/lambda.hpp"

namespace itk {

ElementaryModule::ElementaryModule(int free_rank,
                                   std::vector<CyclotomicProduct> factors)
    : free_rank_(free_rank), factors_(std::move(factors)) {
  if (free_rank_ < 0) throw Error("ElementaryModule: negative free rank");
  for (const auto& f : factors_) {
    if (f.is_unit()) {
      throw UnsupportedShape("ElementaryModule: unit ideal is not a factor");
    }
  }
}

ElementaryModule module_from_multiplicities(const std::map<int, int>& mult) {
  std::vector<CyclotomicProduct> factors;
  for (const auto& [n, k] : mult) {
    if (k < 0) throw Error("module_from_multiplicities: negative count");
    for (int i = 0; i < k; ++i) factors.push_back(CyclotomicProduct::single(n, 1));
  }
  return ElementaryModule(0, std::move(factors));
}

namespace {

// The single index c of a factor required to be Phi_c^1.
int single_phi_index(const CyclotomicProduct& f, const char* op) {
  const auto& e = f.exponents();
  if (e.size() != 1 || e.begin()->second != 1) {
    throw UnsupportedShape(std::string(op) +
                           ": factor is not a single Phi_c^1: " +
                           format_ideal(f));
  }
  return e.begin()->first;
}

}  // namespace

ElementaryModule truncate_at_level(const ElementaryModule& m, int n) {
  if (m.free_rank() != 0) {
    throw UnsupportedShape("truncate_at_level: free rank must be zero");
  }
  std::vector<CyclotomicProduct> kept;
  for (const auto& f : m.factors()) {
    int c = single_phi_index(f, "truncate_at_level");
    if (c <= n) kept.push_back(f);
  }
  return ElementaryModule(0, std::move(kept));
}

ElementaryModule tate_dual_form(const ElementaryModule& m) { return m; }

bool verify_iota_invariance(const ElementaryModule& m,
                            const PadicContext& ctx) {
  std::map<int, bool> seen;
  for (const auto& f : m.factors()) {
    for (const auto& [n, a] : f.exponents()) seen[n] = true;
  }
  for (const auto& [n, unused] : seen) {
    PhiDivision dv = divide_by_phi(iota(phi(n, ctx)), n);
    if (!dv.divisible) return false;
    const PadicInt& c0 = dv.quotient.coeff(0);
    if (c0.residue() == 0 || ctx.capped_valuation(c0) != 0) return false;
  }
  return true;
}

CoinvariantOrder coinvariant_order(int c, int n, const PadicContext& ctx) {
  if (c < 0 || n < 0) throw Error("coinvariant_order: negative level");
  if (c <= n) {
    // omega_n kills Lambda/(Phi_c) entirely: the coinvariants stay infinite.
    return CoinvariantOrder{false, ctx.p(), 0, mpz_class(0)};
  }
  mpz_class res = sylvester_resultant(cyclotomic_phi(ctx.p(), c),
                                      cyclotomic_omega(ctx.p(), n));
  if (res == 0) throw Error("coinvariant_order: unexpected zero resultant");
  int e = p_valuation(res, ctx.p());
  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), ctx.p(), e);
  return CoinvariantOrder{true, ctx.p(), e, std::move(order)};
}

long corank_growth(const ElementaryModule& m, int n, unsigned long p) {
  if (m.free_rank() != 0) {
    throw UnsupportedShape("corank_growth: free rank must be zero");
  }
  long total = 0;
  for (const auto& f : m.factors()) {
    const auto& e = f.exponents();
    if (e.size() != 1) {
      throw UnsupportedShape("corank_growth: factor is not a Phi-power: " +
                             format_ideal(f));
    }
    const auto& [c, a] = *e.begin();
    if (c <= n) total += a * phi_degree(p, c);
  }
  return total;
}

CyclotomicProduct char_ideal(const ElementaryModule& m) {
  if (m.free_rank() > 0) {
    throw NotTorsion("char_ideal: module has free rank " +
                     std::to_string(m.free_rank()));
  }
  CyclotomicProduct out;
  for (const auto& f : m.factors()) out = cyclo_mul(out, f);
  return out;
}

}  // namespace itk
