#pragma once

#include <map>
#include <vector>

#include "itk/cyclotomic.hpp"
#include "itk/padic.hpp"

namespace itk {

// Elementary Lambda-module descriptor: Lambda^free_rank (+) sum of cyclic
// torsion factors Lambda/(f) with f a formal Phi-product.  Unit factors are
// rejected (a unit ideal gives the zero module, not a factor).
class ElementaryModule {
 public:
  ElementaryModule() = default;
  ElementaryModule(int free_rank, std::vector<CyclotomicProduct> factors);

  int free_rank() const { return free_rank_; }
  const std::vector<CyclotomicProduct>& factors() const { return factors_; }

  friend bool operator==(const ElementaryModule& a, const ElementaryModule& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

 private:
  int free_rank_ = 0;
  std::vector<CyclotomicProduct> factors_;
};

// One torsion factor Phi_n per unit of multiplicity: {n -> k} contributes k
// copies of Lambda/(Phi_n).
ElementaryModule module_from_multiplicities(const std::map<int, int>& mult);

// Keeps the factors Lambda/(Phi_c) with c <= n.  Requires free_rank = 0 and
// every factor a single Phi_c^1 (UnsupportedShape otherwise).
ElementaryModule truncate_at_level(const ElementaryModule& m, int n);

// The Tate-dual shape.  On Phi-product descriptors the involution
// X |-> (1+X)^(-1) - 1 fixes every ideal (Phi_n), so this is the identity
// on the descriptor level; verify_iota_invariance checks the underlying
// numeric fact on request.
ElementaryModule tate_dual_form(const ElementaryModule& m);

// Numeric check that iota(Phi_n) is a Phi_n-multiple with unit cofactor for
// every index appearing in the module's factors.
bool verify_iota_invariance(const ElementaryModule& m, const PadicContext& ctx);

// |Lambda / (Phi_c, omega_n)|: infinite when c <= n, a pure p-power
// otherwise, computed from the p-valuation of the exact resultant
// Res(Phi_c, omega_n).
struct CoinvariantOrder {
  bool finite = false;
  unsigned long p = 0;
  int exponent = 0;   // order = p^exponent when finite
  mpz_class order;    // 0 when infinite
};
CoinvariantOrder coinvariant_order(int c, int n, const PadicContext& ctx);

// Z_p-corank sum over the factors kept at level n:
// sum of a_c * deg Phi_c over c <= n.  Requires free_rank = 0 and pure
// Phi-power factors (UnsupportedShape otherwise).
long corank_growth(const ElementaryModule& m, int n, unsigned long p);

// Product of all torsion factor ideals; NotTorsion when free_rank > 0.
CyclotomicProduct char_ideal(const ElementaryModule& m);

}  // namespace itk
