#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grbraid/config.hpp"
#include "grbraid/ext_crystal.hpp"
#include "grbraid/kring.hpp"
#include "grbraid/pluecker.hpp"

namespace grbraid {

/// i_{i,a} for m = n+1; never frozen.
MinorIndex phi_tuple(int n, FundIndex f);

/// Y_{i,a} -> P_{i_{i,a}}, extended to a ring homomorphism into width n+1.
PlueckerPoly Phi(const KPoly& p);

/// [a,b]_k -> D^k(b-a+1, a+b-2).
FundIndex seg_to_fund(int n, Segment s, int k);
/// Inverse of seg_to_fund.
std::pair<int, Segment> fund_to_seg(int n, FundIndex f);

DominantMonomial ext_to_monomial(const ExtElement& b);
ExtElement monomial_to_ext(int n, const DominantMonomial& m);

/// Plücker image of the simple class [V(m)] when it is determined: single
/// fundamentals in any rank, and the rank-2 identities tabulated from the
/// worked example (closed under spectral shift).
std::optional<PlueckerPoly> known_simple_image(int n, const DominantMonomial& m);

struct CheckEntry {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  std::optional<EqModWitness> witness;
};

struct CheckReport {
  std::string kind;
  int n = 0;
  std::vector<int> word;
  std::pair<int, int> window{0, 0};
  EqModOptions options;
  std::vector<CheckEntry> entries;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Phi(T_i(Y_{j,a})) against sigma_i(Phi(Y_{j,a})) for all j and a in
/// [lo, hi].
CheckReport commute_check(int n, int i, int lo, int hi, const EqModOptions& opts = {});

/// Phi-image of R_word(b) against sigma_word applied to the Phi-image of b.
/// Throws std::invalid_argument when either image is not determined.
CheckReport crystal_commute_check(int n, const std::vector<int>& word,
                                  const std::vector<ExtElement>& cases, const EqModOptions& opts = {});

/// The worked rank-2 identities: sigma-side equalities in width 3 and the
/// matching R-side monomial identities.
CheckReport example63_report(const EqModOptions& opts = {});

/// The five-term expansion of P_{1,4,5}P_{2,3,6} - 1.
PlueckerPoly example63_expansion();

}  // namespace grbraid
