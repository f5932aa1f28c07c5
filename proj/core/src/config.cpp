#include "grbraid/config.hpp"

#include <algorithm>

namespace grbraid {

std::pair<int, int> joint_range(std::span<const PlueckerPoly* const> polys, int margin) {
  std::optional<std::pair<int, int>> r;
  int m = 2;
  for (const PlueckerPoly* p : polys) {
    m = p->width();
    const auto pr = p->index_range();
    if (!pr) continue;
    if (!r) {
      r = pr;
    } else {
      r->first = std::min(r->first, pr->first);
      r->second = std::max(r->second, pr->second);
    }
  }
  if (!r) return {1, m};
  return {r->first - margin, r->second + margin};
}

namespace {

template <class F>
EqModResult eq_mod_in(const F& field, const PlueckerPoly& p, const PlueckerPoly& q,
                      const EqModOptions& opts) {
  const int m = p.width();
  const PlueckerPoly* both[] = {&p, &q};
  const auto [lo, hi] = joint_range(both, m);
  for (int t = 0; t < opts.trials; ++t) {
    const auto c = random_normalized_config(field, m, lo, hi, opts.seed, static_cast<std::uint64_t>(t));
    const auto lhs = evaluate(p, c);
    const auto rhs = evaluate(q, c);
    if (!field.equal(lhs, rhs)) {
      return {false, EqModWitness{opts.seed, t, lo, hi, field.name(), field.str(lhs), field.str(rhs)}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

EqModResult eq_mod(const PlueckerPoly& p, const PlueckerPoly& q, const EqModOptions& opts) {
  if (p.width() != q.width()) throw std::invalid_argument("eq_mod: width mismatch");
  const PlueckerPoly diff = p - q;
  if (diff.is_zero()) return {true, std::nullopt};
  if (opts.field == FieldKind::rational) return eq_mod_in(RationalField(), p, q, opts);
  return eq_mod_in(PrimeField(opts.prime), p, q, opts);
}

}  // namespace grbraid
