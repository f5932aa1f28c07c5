#pragma once

// Closed forms for crystal operators on small inputs, written out case by
// case. Nothing here calls the bracketing rule in core.

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Seg = std::pair<int, int>;
using SegList = std::vector<Seg>;
/// A segment [a,b] at grade k.
struct GradedSeg {
  int a, b, k;
  friend bool operator==(const GradedSeg&, const GradedSeg&) = default;
};

inline SegList sorted(SegList v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Operators on a single segment [a,b]; nullopt is the value 0, an empty
// list the element 1.

inline std::optional<SegList> single_f(int a, int b, int i) {
  if (i == a - 1) return SegList{{a - 1, b}};
  return sorted({{i, i}, {a, b}});
}

inline std::optional<SegList> single_e(int a, int b, int i) {
  if (i == a && a == b) return SegList{};
  if (i == a && a < b) return SegList{{a + 1, b}};
  return std::nullopt;
}

inline std::optional<SegList> single_f_star(int a, int b, int i) {
  if (i == b + 1) return SegList{{a, b + 1}};
  return sorted({{i, i}, {a, b}});
}

inline std::optional<SegList> single_e_star(int a, int b, int i) {
  if (i == a && a == b) return SegList{};
  if (i == b && a < b) return SegList{{a, b - 1}};
  return std::nullopt;
}

inline int single_eps(int a, int, int i) { return i == a ? 1 : 0; }
inline int single_eps_star(int, int b, int i) { return i == b ? 1 : 0; }

// Rank 2: m = a[2] + b[1,2] + c[1], written as the triple (a, b, c).

using Triple = std::tuple<int, int, int>;

inline std::optional<Triple> rank2_f1(int a, int b, int c) {
  if (a <= c) return Triple{a, b, c + 1};
  return Triple{a - 1, b + 1, c};
}

inline std::optional<Triple> rank2_e1(int a, int b, int c) {
  if (a < c) return Triple{a, b, c - 1};
  if (b == 0) return std::nullopt;
  return Triple{a + 1, b - 1, c};
}

inline std::optional<Triple> rank2_f2(int a, int b, int c) { return Triple{a + 1, b, c}; }

inline std::optional<Triple> rank2_e2(int a, int b, int c) {
  if (a == 0) return std::nullopt;
  return Triple{a - 1, b, c};
}

inline std::optional<Triple> rank2_f1_star(int a, int b, int c) { return Triple{a, b, c + 1}; }

inline std::optional<Triple> rank2_e1_star(int a, int b, int c) {
  if (c == 0) return std::nullopt;
  return Triple{a, b, c - 1};
}

inline std::optional<Triple> rank2_f2_star(int a, int b, int c) {
  if (a >= c) return Triple{a + 1, b, c};
  return Triple{a, b + 1, c - 1};
}

inline std::optional<Triple> rank2_e2_star(int a, int b, int c) {
  if (a > c) return Triple{a - 1, b, c};
  if (b == 0) return std::nullopt;
  return Triple{a, b - 1, c + 1};
}

inline int rank2_eps1(int a, int b, int c) { return b + std::max(c - a, 0); }
inline int rank2_eps2(int a, int, int) { return a; }
inline int rank2_eps1_star(int, int, int c) { return c; }
inline int rank2_eps2_star(int a, int b, int c) { return b + std::max(a - c, 0); }

/// tilde S_1 and S_2 (on eps_2 = 0) in rank 2.
inline Triple rank2_tilde_saito1(int a, int b, int c) { return {std::min(a, c), b + std::max(a - c, 0), 0}; }
inline Triple rank2_saito2(int, int b, int c) { return {c, 0, b + c}; }

/// R_1 on a single graded segment [a,b]_k.
inline std::vector<GradedSeg> r1_single(int a, int b, int k) {
  if (a == 1 && b == 1) return {{1, 1, k + 1}};
  if (a == 1) return {{1, 1, k + 1}, {1, b, k}};
  if (a == 2) return {{1, b, k}};
  return {{a, b, k}};
}

}  // namespace oracle
