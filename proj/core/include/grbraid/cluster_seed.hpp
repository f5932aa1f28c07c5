#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grbraid/config.hpp"
#include "grbraid/pluecker.hpp"

namespace grbraid {

/// Grid label (a, b); (0, 0) is the extra frozen vertex.
struct Vertex {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

/// Arrow multiset with multiplicities; no loops and no 2-cycles.
class Quiver {
 public:
  using Arrows = std::map<std::pair<Vertex, Vertex>, int>;

  Quiver() = default;

  void add_vertex(Vertex v) { vertices_.insert(v); }
  void add_arrow(Vertex from, Vertex to, int count = 1);

  const std::set<Vertex>& vertices() const { return vertices_; }
  const Arrows& arrows() const { return arrows_; }
  bool contains(Vertex v) const { return vertices_.count(v) > 0; }
  int arrow_count() const;
  /// Arrows from `from` to `to` (0 if none).
  int arrows_between(Vertex from, Vertex to) const;

  /// Standard quiver mutation at k.
  Quiver mutated(Vertex k) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::set<Vertex> vertices_;
  Arrows arrows_;
};

/// A fraction num/den of elements of the frozen quotient; den = 1 once the
/// value has been expanded to a polynomial.
struct RationalFn {
  PlueckerPoly num;
  PlueckerPoly den;

  explicit RationalFn(PlueckerPoly p) : num(std::move(p)), den(PlueckerPoly::constant(num.width(), 1)) {}
  RationalFn(PlueckerPoly n, PlueckerPoly d) : num(std::move(n)), den(std::move(d)) {}

  bool expanded() const { return den.constant_value() == BigInt(1); }
  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

std::string to_string(const RationalFn& f);
RationalFn operator*(const RationalFn& x, const RationalFn& y);
RationalFn operator+(const RationalFn& x, const RationalFn& y);

/// Equality of fractions through cross-multiplication and eq_mod.
EqModResult eq_mod(const RationalFn& x, const RationalFn& y, const EqModOptions& opts = {});

enum class VertexRole { frozen, boundary, mutable_ };

/// Quiver plus one variable per vertex.
class Seed {
 public:
  Seed(int m, int N, Quiver quiver, std::map<Vertex, RationalFn> vars, std::map<Vertex, MinorIndex> labels);

  int width() const { return m_; }
  int columns() const { return N_; }
  const Quiver& quiver() const { return quiver_; }
  const std::map<Vertex, RationalFn>& vars() const { return vars_; }
  /// Initial Pluecker label of each vertex, kept for frozen ones as markers.
  const std::map<Vertex, MinorIndex>& labels() const { return labels_; }
  const RationalFn& var(Vertex v) const;
  Seed with_var(Vertex v, RationalFn f) const;

  VertexRole role(Vertex v) const;
  bool exchangeable(Vertex v) const { return role(v) == VertexRole::mutable_; }
  std::vector<Vertex> exchangeable_vertices() const;

  /// Pi(in-neighbours) + Pi(out-neighbours) at v.
  RationalFn exchange_sum(Vertex v) const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  int m_;
  int N_;
  Quiver quiver_;
  std::map<Vertex, RationalFn> vars_;
  std::map<Vertex, MinorIndex> labels_;
};

/// The initial seed of the m x (N-m) grid plus (0,0): frozen (0,0) and
/// column m, boundary row a = N-m.
Seed initial_seed(int m, int N);

struct MutateOptions {
  /// Seed for the candidate search and the confirming eq_mod.
  std::uint64_t seed = 0x5eedULL;
  int trials = 8;
};

/// Mutation at an exchangeable vertex. The new variable is expanded to a
/// polynomial when a candidate is found and confirmed; otherwise it is the
/// formal quotient. Throws std::invalid_argument at frozen, boundary or
/// absent vertices.
Seed mutate(const Seed& s, Vertex v, const MutateOptions& opts = {});

/// x_v * x'_v against the exchange sum under eq_mod, with x'_v required to
/// expand to an element of the quotient.
bool verify_exchange(const Seed& s, Vertex v, const EqModOptions& opts = {});

/// Same variables (eq_mod) and same quiver.
bool seeds_equivalent(const Seed& x, const Seed& y, const EqModOptions& opts = {});

}  // namespace grbraid
