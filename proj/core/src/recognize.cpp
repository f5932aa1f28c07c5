#include "grbraid/recognize.hpp"

#include <unordered_map>
#include <vector>

namespace grbraid {

namespace {

using Elem = PrimeField::Elem;

// A candidate summand: sign * (constant, P_I, or P_I P_J).
struct Atom {
  int sign = 1;
  int constant = 0;  // used when first < 0
  int first = -1;
  int second = -1;
  std::vector<Elem> fp;
};

void enumerate_minors(int m, int lo, int hi, std::vector<int>& cur, std::vector<MinorIndex>& out) {
  if (static_cast<int>(cur.size()) == m) {
    MinorIndex idx(cur);
    if (!idx.is_frozen()) out.push_back(idx);
    return;
  }
  const int start = cur.empty() ? lo : cur.back() + 1;
  for (int v = start; v <= hi - (m - static_cast<int>(cur.size()) - 1); ++v) {
    cur.push_back(v);
    enumerate_minors(m, lo, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<PlueckerPoly> recognize(int m, int lo, int hi, const TargetEvaluator& target,
                                      const RecognizeOptions& opts) {
  if (hi - lo + 1 < m) return std::nullopt;
  const PrimeField field(opts.prime);
  const int K = opts.fingerprints;
  std::vector<Config<PrimeField>> configs;
  for (int t = 0; t < K; ++t) {
    configs.push_back(
        random_normalized_config(field, m, lo - m, hi + m, opts.seed, static_cast<std::uint64_t>(t)));
  }
  std::vector<Elem> goal;
  for (const auto& c : configs) goal.push_back(target(c));

  std::vector<MinorIndex> minors;
  std::vector<int> cur;
  enumerate_minors(m, lo, hi, cur, minors);
  std::vector<std::vector<Elem>> minor_fp(minors.size());
  for (std::size_t s = 0; s < minors.size(); ++s)
    for (const auto& c : configs) minor_fp[s].push_back(c.minor(minors[s]));

  std::vector<Atom> atoms;
  auto signed_fp = [&](int sign, std::vector<Elem> fp) {
    if (sign < 0)
      for (auto& x : fp) x = field.neg(x);
    return fp;
  };
  for (int c = 0; c <= opts.max_constant; ++c) {
    for (int sign : {1, -1}) {
      if (c == 0 && sign < 0) continue;
      atoms.push_back({sign, c, -1, -1, std::vector<Elem>(static_cast<std::size_t>(K), field.from_int(sign * c))});
    }
  }
  for (std::size_t s = 0; s < minors.size(); ++s)
    for (int sign : {1, -1}) atoms.push_back({sign, 0, static_cast<int>(s), -1, signed_fp(sign, minor_fp[s])});
  if (static_cast<int>(minors.size()) <= opts.max_minors_for_pairs) {
    for (std::size_t x = 0; x < minors.size(); ++x) {
      for (std::size_t y = x; y < minors.size(); ++y) {
        std::vector<Elem> fp(static_cast<std::size_t>(K));
        for (int t = 0; t < K; ++t) {
          const auto tz = static_cast<std::size_t>(t);
          fp[tz] = field.mul(minor_fp[x][tz], minor_fp[y][tz]);
        }
        for (int sign : {1, -1})
          atoms.push_back({sign, 0, static_cast<int>(x), static_cast<int>(y), signed_fp(sign, fp)});
      }
    }
  }

  std::unordered_map<Elem, std::vector<std::size_t>> table;
  for (std::size_t s = 0; s < atoms.size(); ++s) table[atoms[s].fp[0]].push_back(s);

  auto to_poly = [&](const Atom& a) {
    PlueckerPoly p = a.first < 0 ? PlueckerPoly::constant(m, a.constant)
                                 : PlueckerPoly::variable(minors[static_cast<std::size_t>(a.first)]);
    if (a.second >= 0) p = p * PlueckerPoly::variable(minors[static_cast<std::size_t>(a.second)]);
    return p.scaled(a.sign);
  };

  // Atoms are ordered simplest first, so B = 0 finds single atoms before sums.
  for (const Atom& b : atoms) {
    const Elem need = field.sub(goal[0], b.fp[0]);
    auto it = table.find(need);
    if (it == table.end()) continue;
    for (std::size_t idx : it->second) {
      const Atom& a = atoms[idx];
      bool ok = true;
      for (int t = 1; t < K && ok; ++t) {
        const auto tz = static_cast<std::size_t>(t);
        ok = field.add(a.fp[tz], b.fp[tz]) == goal[tz];
      }
      if (ok) return to_poly(a) + to_poly(b);
    }
  }
  return std::nullopt;
}

PlueckerPoly simplify(const PlueckerPoly& p, const RecognizeOptions& opts) {
  if (p.size() <= 1) return p;
  const auto r = p.index_range();
  if (!r) return p;
  const auto found = recognize(
      p.width(), r->first, r->second, [&](const Config<PrimeField>& c) { return evaluate(p, c); }, opts);
  if (!found || found->size() >= p.size()) return p;
  EqModOptions check;
  check.seed = opts.seed ^ 0xa5a5a5a5ULL;
  check.prime = opts.prime;
  if (!eq_mod(p, *found, check)) return p;
  return *found;
}

}  // namespace grbraid
