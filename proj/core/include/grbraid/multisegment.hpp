#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grbraid {

/// The interval [start, end] inside [1, n].
struct Segment {
  int start = 1;
  int end = 1;

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Canonical multisegment order: end descending, then start descending.
struct CanonicalSegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.end != y.end) return x.end > y.end;
    return x.start > y.start;
  }
};

/// A finite multiset of segments of [1, rank]; the empty multiset is the
/// highest-weight element of B(infinity) in type A_rank.
class Multisegment {
 public:
  using Counts = std::map<Segment, int, CanonicalSegmentOrder>;

  explicit Multisegment(int rank);
  Multisegment(int rank, std::span<const Segment> segments);

  int rank() const { return rank_; }
  bool empty() const { return counts_.empty(); }
  /// Number of segments counted with multiplicity.
  std::size_t size() const;
  int count(Segment s) const;
  const Counts& counts() const { return counts_; }
  /// Segments in canonical order, repeated by multiplicity.
  std::vector<Segment> segments() const;

  Multisegment plus(Segment s, int times = 1) const;
  /// Removes one copy of `s`; throws std::invalid_argument if absent.
  Multisegment minus(Segment s) const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend bool operator<(const Multisegment& x, const Multisegment& y) {
    if (x.rank_ != y.rank_) return x.rank_ < y.rank_;
    return x.counts_ < y.counts_;
  }

 private:
  void check_segment(Segment s) const;

  int rank_;
  Counts counts_;
};

/// Text form in the usual notation, e.g. "2[1,2] + [1]" or "1".
std::string to_string(const Multisegment& m);

// ---------------------------------------------------------------------------
// Crystal structure

struct CrystalStats {
  int eps = 0;
  int eps_star = 0;
  int phi = 0;
  int phi_star = 0;
  int wt_i = 0;  ///< <h_i, wt(m)>

  friend bool operator==(const CrystalStats&, const CrystalStats&) = default;
};

enum class CrystalOp { f, e, f_star, e_star };

std::optional<CrystalOp> parse_crystal_op(const std::string& name);
std::string to_string(CrystalOp op);

/// <h_i, wt(m)> with wt(m) = -sum of alpha_a + ... + alpha_b over segments.
int weight_pairing(const Multisegment& m, int i);

CrystalStats crystal_stats(const Multisegment& m, int i);

/// Applies one Kashiwara operator; std::nullopt stands for the value 0.
/// The f-type operators never return std::nullopt.
std::optional<Multisegment> apply_operator(const Multisegment& m, CrystalOp op, int i);

/// Applies `op` `times` times; throws std::logic_error if an intermediate
/// step is 0.
Multisegment apply_power(const Multisegment& m, CrystalOp op, int i, int times);

/// S_i(m) = f_i^{phi*_i(m)} (e*_i)^{eps*_i(m)} (m), defined on eps_i(m) = 0.
Multisegment saito_reflection(const Multisegment& m, int i);

/// (f*_i)^{phi_i(m)} e_i^{eps_i(m)} (m), defined on eps*_i(m) = 0.
Multisegment saito_reflection_star(const Multisegment& m, int i);

/// S_i applied after raising m by e_i exactly eps_i(m) times.
Multisegment tilde_saito_reflection(const Multisegment& m, int i);

}  // namespace grbraid
