#include "grbraid/cluster_seed.hpp"

#include <algorithm>
#include <stdexcept>

#include "grbraid/recognize.hpp"

namespace grbraid {

std::string to_string(Vertex v) { return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")"; }

void Quiver::add_arrow(Vertex from, Vertex to, int count) {
  if (from == to) throw std::invalid_argument("loop at " + to_string(from));
  if (!contains(from) || !contains(to)) throw std::invalid_argument("arrow endpoint not a vertex");
  if (count <= 0) return;
  // Cancel against opposite arrows so that no 2-cycle is ever stored.
  auto back = arrows_.find({to, from});
  if (back != arrows_.end()) {
    const int cancel = std::min(count, back->second);
    back->second -= cancel;
    count -= cancel;
    if (back->second == 0) arrows_.erase(back);
  }
  if (count > 0) arrows_[{from, to}] += count;
}

int Quiver::arrow_count() const {
  int total = 0;
  for (const auto& [edge, c] : arrows_) total += c;
  return total;
}

int Quiver::arrows_between(Vertex from, Vertex to) const {
  auto it = arrows_.find({from, to});
  return it == arrows_.end() ? 0 : it->second;
}

Quiver Quiver::mutated(Vertex k) const {
  if (!contains(k)) throw std::invalid_argument("mutation at absent vertex " + to_string(k));
  std::vector<std::pair<Vertex, int>> in, out;
  for (const auto& [edge, c] : arrows_) {
    if (edge.second == k) in.emplace_back(edge.first, c);
    if (edge.first == k) out.emplace_back(edge.second, c);
  }
  Quiver q;
  q.vertices_ = vertices_;
  for (const auto& [edge, c] : arrows_) {
    if (edge.first == k || edge.second == k) continue;
    q.arrows_[edge] = c;
  }
  for (const auto& [i, ci] : in)
    for (const auto& [j, cj] : out)
      if (i != j) q.add_arrow(i, j, ci * cj);
  for (const auto& [i, ci] : in) q.add_arrow(k, i, ci);
  for (const auto& [j, cj] : out) q.add_arrow(j, k, cj);
  return q;
}

std::string to_string(const RationalFn& f) {
  if (f.expanded()) return to_string(f.num);
  return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")";
}

RationalFn operator*(const RationalFn& x, const RationalFn& y) { return {x.num * y.num, x.den * y.den}; }

RationalFn operator+(const RationalFn& x, const RationalFn& y) {
  if (x.den == y.den) return {x.num + y.num, x.den};
  return {x.num * y.den + y.num * x.den, x.den * y.den};
}

EqModResult eq_mod(const RationalFn& x, const RationalFn& y, const EqModOptions& opts) {
  return eq_mod(x.num * y.den, y.num * x.den, opts);
}

Seed::Seed(int m, int N, Quiver quiver, std::map<Vertex, RationalFn> vars, std::map<Vertex, MinorIndex> labels)
    : m_(m), N_(N), quiver_(std::move(quiver)), vars_(std::move(vars)), labels_(std::move(labels)) {
  for (Vertex v : quiver_.vertices()) {
    if (!vars_.count(v)) throw std::invalid_argument("vertex " + to_string(v) + " has no variable");
  }
  for (const auto& [v, f] : vars_) {
    if (f.num.width() != m_ || f.den.width() != m_) throw std::invalid_argument("seed variable width mismatch");
  }
}

const RationalFn& Seed::var(Vertex v) const {
  auto it = vars_.find(v);
  if (it == vars_.end()) throw std::invalid_argument("no vertex " + to_string(v));
  return it->second;
}

Seed Seed::with_var(Vertex v, RationalFn f) const {
  Seed out = *this;
  out.vars_.at(v) = std::move(f);
  return out;
}

VertexRole Seed::role(Vertex v) const {
  if (!quiver_.contains(v)) throw std::invalid_argument("no vertex " + to_string(v));
  if (v == Vertex{0, 0} || v.b == m_) return VertexRole::frozen;
  if (v.a == N_ - m_) return VertexRole::boundary;
  return VertexRole::mutable_;
}

std::vector<Vertex> Seed::exchangeable_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v : quiver_.vertices())
    if (exchangeable(v)) out.push_back(v);
  return out;
}

RationalFn Seed::exchange_sum(Vertex v) const {
  RationalFn in(PlueckerPoly::constant(m_, 1));
  RationalFn out(PlueckerPoly::constant(m_, 1));
  for (const auto& [edge, c] : quiver_.arrows()) {
    for (int t = 0; t < c; ++t) {
      if (edge.second == v) in = in * var(edge.first);
      if (edge.first == v) out = out * var(edge.second);
    }
  }
  return in + out;
}

Seed initial_seed(int m, int N) {
  if (m < 2 || m > kMaxMinorWidth) throw std::invalid_argument("seed width m outside supported range");
  if (N <= m) throw std::invalid_argument("initial seed needs m < N");
  const int rows = N - m;
  Quiver q;
  q.add_vertex({0, 0});
  for (int a = 1; a <= rows; ++a)
    for (int b = 1; b <= m; ++b) q.add_vertex({a, b});
  q.add_arrow({1, 1}, {0, 0});
  for (int a = 1; a <= rows; ++a) {
    for (int b = 1; b <= m; ++b) {
      if (a >= 2) q.add_arrow({a, b}, {a - 1, b});
      if (b >= 2) q.add_arrow({a, b}, {a, b - 1});
      if (a <= rows - 1 && b <= m - 1) q.add_arrow({a, b}, {a + 1, b + 1});
    }
  }
  std::map<Vertex, MinorIndex> labels;
  std::vector<int> idx;
  for (int s = 1; s <= m; ++s) idx.push_back(s);
  labels.emplace(Vertex{0, 0}, MinorIndex(idx));
  for (int a = 1; a <= rows; ++a) {
    for (int b = 1; b <= m; ++b) {
      // Column b: P_{1..m-b, m-b+1+a..m+a}.
      idx.clear();
      for (int s = 1; s <= m - b; ++s) idx.push_back(s);
      for (int s = m - b + 1 + a; s <= m + a; ++s) idx.push_back(s);
      labels.emplace(Vertex{a, b}, MinorIndex(idx));
    }
  }
  std::map<Vertex, RationalFn> vars;
  for (const auto& [v, label] : labels) vars.emplace(v, RationalFn(PlueckerPoly::variable(label)));
  return Seed(m, N, std::move(q), std::move(vars), std::move(labels));
}

namespace {

void require_exchangeable(const Seed& s, Vertex v) {
  switch (s.role(v)) {
    case VertexRole::frozen:
      throw std::invalid_argument("vertex " + to_string(v) + " is frozen");
    case VertexRole::boundary:
      throw std::invalid_argument("vertex " + to_string(v) + " lies on the truncation boundary");
    case VertexRole::mutable_:
      break;
  }
}

RationalFn expand_quotient(const RationalFn& q, int m, const MutateOptions& opts) {
  if (q.den.constant_value()) {
    const BigInt d = *q.den.constant_value();
    if (d == 1) return q;
    if (d == -1) return RationalFn(-q.num);
  }
  const PlueckerPoly* parts[] = {&q.num, &q.den};
  const auto [lo, hi] = joint_range(parts, 0);
  RecognizeOptions ropts;
  ropts.seed = opts.seed;
  const PrimeField field(ropts.prime);
  const auto found = recognize(
      m, lo, hi,
      [&](const Config<PrimeField>& c) {
        const auto d = evaluate(q.den, c);
        return field.is_zero(d) ? field.zero() : field.mul(evaluate(q.num, c), field.inv(d));
      },
      ropts);
  if (!found) return q;
  EqModOptions check;
  check.seed = opts.seed + 1;
  check.trials = opts.trials;
  if (!eq_mod(RationalFn(*found), q, check)) return q;
  return RationalFn(*found);
}

}  // namespace

Seed mutate(const Seed& s, Vertex v, const MutateOptions& opts) {
  require_exchangeable(s, v);
  const RationalFn sum = s.exchange_sum(v);
  const RationalFn& x = s.var(v);
  const RationalFn quotient{sum.num * x.den, sum.den * x.num};
  Seed out(s.width(), s.columns(), s.quiver().mutated(v), s.vars(), s.labels());
  return out.with_var(v, expand_quotient(quotient, s.width(), opts));
}

bool verify_exchange(const Seed& s, Vertex v, const EqModOptions& opts) {
  require_exchangeable(s, v);
  MutateOptions mopts;
  mopts.seed = opts.seed ^ 0x5eedULL;
  const RationalFn next = mutate(s, v, mopts).var(v);
  if (!next.expanded()) return false;
  return eq_mod(s.var(v) * next, s.exchange_sum(v), opts).equal;
}

bool seeds_equivalent(const Seed& x, const Seed& y, const EqModOptions& opts) {
  if (x.width() != y.width() || !(x.quiver() == y.quiver())) return false;
  for (const auto& [v, f] : x.vars()) {
    auto it = y.vars().find(v);
    if (it == y.vars().end() || !eq_mod(f, it->second, opts)) return false;
  }
  return true;
}

}  // namespace grbraid
