#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grbraid/multisegment.hpp"

namespace grbraid {

/// A finitely supported sequence (b_k) of multisegments indexed by k in Z.
/// Absent grades hold the highest-weight element; stored entries are never
/// empty.
class ExtElement {
 public:
  explicit ExtElement(int rank);
  ExtElement(int rank, std::map<int, Multisegment> entries);

  int rank() const { return rank_; }
  bool is_one() const { return entries_.empty(); }
  const std::map<int, Multisegment>& entries() const { return entries_; }
  Multisegment at(int k) const;
  ExtElement with(int k, Multisegment m) const;

  std::size_t segment_count() const;
  /// Smallest and largest occupied grade.
  std::optional<std::pair<int, int>> support() const;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
  friend bool operator<(const ExtElement& x, const ExtElement& y) {
    if (x.rank_ != y.rank_) return x.rank_ < y.rank_;
    return x.entries_ < y.entries_;
  }

 private:
  int rank_;
  std::map<int, Multisegment> entries_;
};

/// Notation [a,b]_k, e.g. "[1]_1 + 2[1,2]_0"; "1" for the unit.
std::string to_string(const ExtElement& b);

/// eps_i(b_k) - eps*_i(b_{k+1}).
int eps_hat(const ExtElement& b, int i, int k);

/// The extended crystal operator F_(i,k).
ExtElement extended_f(const ExtElement& b, int i, int k);

/// E_(i,k), the inverse of F_(i,k).
ExtElement extended_e(const ExtElement& b, int i, int k);

/// The braid action R_i: b'_k = (f*_i)^{eps_i(b_{k-1})} (tilde S_i(b_k)).
ExtElement braid_R(const ExtElement& b, int i);

/// Applies R_{w_1}, then R_{w_2}, and so on.
ExtElement braid_R_word(const ExtElement& b, const std::vector<int>& word);

/// iota_k: places m at grade k.
ExtElement embed(const Multisegment& m, int k);

/// (b_{k-t})_k, i.e. every grade moves up by t.
ExtElement grade_shift(const ExtElement& b, int t);

/// Bounded search for preimages of `target` under R_i among all elements
/// with support in [lo, hi] and at most `max_segments` segments.
std::vector<ExtElement> braid_R_preimages(const ExtElement& target, int i, int lo, int hi,
                                          int max_segments);

/// Every multisegment of the given rank with exactly `size` segments.
std::vector<Multisegment> enumerate_multisegments(int rank, int size);

/// Uniform-ish sampler: segment count uniform in [0, max_segments], each
/// segment uniform among the rank*(rank+1)/2 segments, grade uniform in
/// [-support, support].
ExtElement random_ext_element(int rank, std::mt19937_64& rng, int support = 2,
                              int max_segments = 6);

}  // namespace grbraid
