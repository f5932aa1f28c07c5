#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "grbraid/config.hpp"
#include "grbraid/pluecker.hpp"

namespace grbraid {

struct RecognizeOptions {
  int fingerprints = 4;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  std::uint64_t prime = kDefaultPrime;
  /// Constants tried: -max_constant .. max_constant.
  int max_constant = 2;
  /// Products P_I P_J are only tabulated when the number of candidate
  /// minors stays below this bound.
  int max_minors_for_pairs = 600;
};

using TargetEvaluator = std::function<PrimeField::Elem(const Config<PrimeField>&)>;

/// Looks for an element equal to `target` of the form A or A + B, where A
/// and B range over constants, +-P_J and +-P_I P_J with every index inside
/// [lo, hi]. Fingerprints are evaluations on configurations over
/// [lo - m, hi + m]; callers confirm hits independently.
std::optional<PlueckerPoly> recognize(int m, int lo, int hi, const TargetEvaluator& target,
                                      const RecognizeOptions& opts = {});

/// A recognized form of p with fewer terms, confirmed by eq_mod; p itself
/// when none is found.
PlueckerPoly simplify(const PlueckerPoly& p, const RecognizeOptions& opts = {});

}  // namespace grbraid
