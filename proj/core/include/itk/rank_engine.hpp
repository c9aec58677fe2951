#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itk/cyclotomic.hpp"
#include "itk/lambda.hpp"
#include "itk/module_structure.hpp"

namespace itk {

/*
 * Rank-growth profiles along the cyclotomic tower of Q.  Level n has degree
 * p^n over Q, and the normalized jump at level n >= 1 is
 *
 *   e_n = (rank(F_n) - rank(F_(n-1))) / deg Phi_n,   e_0 = rank over Q,
 *
 * which must come out a non-negative integer.  Everything downstream is
 * pure combinatorics in these jumps.
 */
class RankProfile {
 public:
  enum class Provenance { ranks, direct };

  RankProfile(unsigned long p, std::vector<int> e, Provenance prov);

  unsigned long p() const { return p_; }
  const std::vector<int>& e() const { return e_; }
  int levels() const { return static_cast<int>(e_.size()) - 1; }
  int e_at(int n) const { return (n >= 0 && n <= levels()) ? e_[n] : 0; }
  Provenance provenance() const { return prov_; }

  friend bool operator==(const RankProfile& a, const RankProfile& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.prov_ == b.prov_;
  }

 private:
  unsigned long p_;
  std::vector<int> e_;
  Provenance prov_;
};

// DecreasingRank when ranks drop, NonIntegralJump when a jump is not a
// multiple of deg Phi_n.
RankProfile profile_from_ranks(unsigned long p, const std::vector<int>& ranks);
// Direct jump list; ValidationError("NegativeJump") on a negative entry.
RankProfile profile_from_jumps(unsigned long p, const std::vector<int>& e);

// s_n = max(0, e_n - 1), aligned with the profile's levels.
std::vector<int> s_from_e(const RankProfile& profile);

// prod over n with e_n > 1 of Phi_n^(e_n - 1).
CyclotomicProduct fine_char_ideal(const RankProfile& profile);

// Signed multiplicities r_n^+/-.  At n = 0 both equal e_0.  At n >= 1 with
// e_n > 0 the unordered pair is {e_n - 1, e_n}; which sign carries which is
// not determined, so `ambiguous` is set and the stored assignment is the
// convention r^- = e_n - 1 <= e_n = r^+.
struct PMMultiplicities {
  std::vector<int> r_plus;
  std::vector<int> r_minus;
  std::vector<bool> ambiguous;
};
PMMultiplicities pm_multiplicities(const RankProfile& profile);

// Characteristic ideal of one signed assignment; flip[n] swaps the two
// values at an ambiguous index n.
CyclotomicProduct pm_char_ideal(const PMMultiplicities& pm, Sign sign,
                                const std::vector<bool>& flip = {});

// gcd of the two signed characteristic ideals, which is independent of the
// ambiguous assignments: X^(e_0) * prod over n >= 1, e_n > 0 of
// Phi_n^(e_n - 1).
CyclotomicProduct pm_gcd_char(const RankProfile& profile);

// Accumulated Mordell-Weil rank at level n: sum of e_m * deg Phi_m, m <= n.
long mordell_weil_rank(const RankProfile& profile, int n);

// Quotient of the level-zero Selmer characteristic ideal by the fine part;
// NotDivisible when the profile's fine part does not divide it.
CyclotomicProduct greenberg_residual(const CyclotomicProduct& sel0_char,
                                     const RankProfile& profile);

struct IndexComparison {
  int n = 0;
  int expected = 0;
  int observed = 0;
  bool match = false;
};

// Hypotheses travel with every report; empty optionals render as "assumed".
struct Hypotheses {
  std::optional<bool> sha_finite_all_levels;
  std::optional<bool> a_p_zero;
  std::string reduction = "assumed";

  friend bool operator==(const Hypotheses& a, const Hypotheses& b) {
    return a.sha_finite_all_levels == b.sha_finite_all_levels &&
           a.a_p_zero == b.a_p_zero && a.reduction == b.reduction;
  }
};

struct KPReport {
  RankProfile profile;
  std::vector<int> s;
  PMMultiplicities r_pm;
  CyclotomicProduct fine_char;
  CyclotomicProduct pm_gcd;
  int n_max = 0;
  std::vector<IndexComparison> comparisons;
  int mu_plus = 0;
  int mu_minus = 0;
  int mu_common = 0;
  bool all_match = false;
  Hypotheses hypotheses;
};

bool operator==(const KPReport& a, const KPReport& b);

// Compares the observed common Phi-multiplicities of the two supplied
// p-adic L-functions against the profile's predicted gcd, index by index up
// to n_max.  The residual mu-invariants are reported, never asserted away.
KPReport kurihara_pollack_check(const LambdaElement& lp_plus,
                                const LambdaElement& lp_minus,
                                const RankProfile& profile, int n_max,
                                Hypotheses hypotheses = {});

}  // namespace itk
