#include "itk/rank_engine.hpp"

#include <algorithm>
#include <string>

namespace itk {

RankProfile::RankProfile(unsigned long p, std::vector<int> e, Provenance prov)
    : p_(p), e_(std::move(e)), prov_(prov) {
  if (e_.empty()) throw Error("RankProfile: empty jump list");
  for (int v : e_) {
    if (v < 0) {
      throw ValidationError("NegativeJump",
                            "e_n must be non-negative, got " +
                                std::to_string(v));
    }
  }
}

RankProfile profile_from_ranks(unsigned long p,
                               const std::vector<int>& ranks) {
  if (ranks.empty()) {
    throw ValidationError("EmptyRanks", "at least rank over Q is required");
  }
  std::vector<int> e(ranks.size());
  e[0] = ranks[0];
  if (ranks[0] < 0) {
    throw ValidationError("NegativeRank", "rank must be non-negative");
  }
  for (size_t n = 1; n < ranks.size(); ++n) {
    long jump = static_cast<long>(ranks[n]) - ranks[n - 1];
    if (jump < 0) {
      throw DecreasingRank("rank[" + std::to_string(n) + "] = " +
                           std::to_string(ranks[n]) + " < rank[" +
                           std::to_string(n - 1) + "] = " +
                           std::to_string(ranks[n - 1]));
    }
    long d = phi_degree(p, static_cast<int>(n));
    if (jump % d != 0) {
      throw NonIntegralJump("jump " + std::to_string(jump) + " at level " +
                            std::to_string(n) +
                            " is not a multiple of deg Phi_" +
                            std::to_string(n) + " = " + std::to_string(d));
    }
    e[n] = static_cast<int>(jump / d);
  }
  return RankProfile(p, std::move(e), RankProfile::Provenance::ranks);
}

RankProfile profile_from_jumps(unsigned long p, const std::vector<int>& e) {
  return RankProfile(p, e, RankProfile::Provenance::direct);
}

std::vector<int> s_from_e(const RankProfile& profile) {
  std::vector<int> s(profile.e().size());
  for (size_t n = 0; n < s.size(); ++n) {
    s[n] = std::max(0, profile.e()[n] - 1);
  }
  return s;
}

CyclotomicProduct fine_char_ideal(const RankProfile& profile) {
  std::map<int, int> e;
  for (int n = 0; n <= profile.levels(); ++n) {
    if (profile.e_at(n) > 1) e[n] = profile.e_at(n) - 1;
  }
  return CyclotomicProduct(std::move(e));
}

PMMultiplicities pm_multiplicities(const RankProfile& profile) {
  PMMultiplicities pm;
  const int top = profile.levels();
  pm.r_plus.resize(top + 1, 0);
  pm.r_minus.resize(top + 1, 0);
  pm.ambiguous.resize(top + 1, false);
  pm.r_plus[0] = pm.r_minus[0] = profile.e_at(0);
  for (int n = 1; n <= top; ++n) {
    int en = profile.e_at(n);
    if (en == 0) continue;
    // r^+ + r^- = e_n + s_n = 2 e_n - 1 is odd and min(r^+, r^-) = s_n, so
    // the unordered pair is {e_n - 1, e_n}; the signs are interchangeable.
    pm.r_minus[n] = en - 1;
    pm.r_plus[n] = en;
    pm.ambiguous[n] = true;
  }
  return pm;
}

CyclotomicProduct pm_char_ideal(const PMMultiplicities& pm, Sign sign,
                                const std::vector<bool>& flip) {
  std::map<int, int> e;
  for (size_t n = 0; n < pm.r_plus.size(); ++n) {
    int rp = pm.r_plus[n];
    int rm = pm.r_minus[n];
    bool swap = pm.ambiguous[n] && n < flip.size() && flip[n];
    if (swap) std::swap(rp, rm);
    int r = (sign == Sign::plus) ? rp : rm;
    if (r > 0) e[static_cast<int>(n)] = r;
  }
  return CyclotomicProduct(std::move(e));
}

CyclotomicProduct pm_gcd_char(const RankProfile& profile) {
  std::map<int, int> e;
  if (profile.e_at(0) > 0) e[0] = profile.e_at(0);
  for (int n = 1; n <= profile.levels(); ++n) {
    if (profile.e_at(n) > 1) e[n] = profile.e_at(n) - 1;
  }
  return CyclotomicProduct(std::move(e));
}

long mordell_weil_rank(const RankProfile& profile, int n) {
  if (n < 0) throw Error("mordell_weil_rank: negative level");
  long r = 0;
  for (int m = 0; m <= n; ++m) {
    r += profile.e_at(m) * phi_degree(profile.p(), m);
  }
  return r;
}

CyclotomicProduct greenberg_residual(const CyclotomicProduct& sel0_char,
                                     const RankProfile& profile) {
  return cyclo_quotient(sel0_char, fine_char_ideal(profile));
}

bool operator==(const KPReport& a, const KPReport& b) {
  auto cmp_eq = [](const std::vector<IndexComparison>& x,
                   const std::vector<IndexComparison>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].n != y[i].n || x[i].expected != y[i].expected ||
          x[i].observed != y[i].observed || x[i].match != y[i].match) {
        return false;
      }
    }
    return true;
  };
  return a.profile == b.profile && a.s == b.s &&
         a.r_pm.r_plus == b.r_pm.r_plus && a.r_pm.r_minus == b.r_pm.r_minus &&
         a.r_pm.ambiguous == b.r_pm.ambiguous && a.fine_char == b.fine_char &&
         a.pm_gcd == b.pm_gcd && a.n_max == b.n_max &&
         cmp_eq(a.comparisons, b.comparisons) && a.mu_plus == b.mu_plus &&
         a.mu_minus == b.mu_minus && a.mu_common == b.mu_common &&
         a.all_match == b.all_match && a.hypotheses == b.hypotheses;
}

KPReport kurihara_pollack_check(const LambdaElement& lp_plus,
                                const LambdaElement& lp_minus,
                                const RankProfile& profile, int n_max,
                                Hypotheses hypotheses) {
  if (lp_plus.ctx() != lp_minus.ctx()) {
    throw ValidationError("ContextMismatch",
                          "L_p^+ and L_p^- carry different (p, N, M)");
  }
  if (lp_plus.ctx().p() != profile.p()) {
    throw ValidationError("PrimeMismatch",
                          "profile prime differs from the elements' prime");
  }
  if (n_max < 0) throw Error("kurihara_pollack_check: negative n_max");

  CyclotomicGcdResult obs = cyclotomic_gcd(lp_plus, lp_minus, n_max);
  CyclotomicProduct expected = pm_gcd_char(profile);

  KPReport rep{profile,
               s_from_e(profile),
               pm_multiplicities(profile),
               fine_char_ideal(profile),
               expected,
               n_max,
               {},
               *lp_plus.p_content(),
               *lp_minus.p_content(),
               obs.mu_common,
               true,
               std::move(hypotheses)};
  for (int n = 0; n <= n_max; ++n) {
    IndexComparison c;
    c.n = n;
    c.expected = expected.exponent(n);
    c.observed = obs.common.exponent(n);
    c.match = (c.expected == c.observed);
    if (!c.match) rep.all_match = false;
    rep.comparisons.push_back(c);
  }
  return rep;
}

}  // namespace itk
