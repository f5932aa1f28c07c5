#include "grbraid/ext_crystal.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace grbraid {

namespace {

void check_index(const ExtElement& b, int i) {
  if (i < 1 || i > b.rank()) {
    throw std::out_of_range("crystal index " + std::to_string(i) + " outside [1, " +
                            std::to_string(b.rank()) + "]");
  }
}

std::vector<Segment> all_segments(int rank) {
  std::vector<Segment> out;
  for (int a = 1; a <= rank; ++a)
    for (int b = a; b <= rank; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

ExtElement::ExtElement(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("extended crystal rank must be >= 1");
}

ExtElement::ExtElement(int rank, std::map<int, Multisegment> entries) : ExtElement(rank) {
  for (auto& [k, m] : entries) {
    if (m.rank() != rank) {
      throw std::invalid_argument("grade " + std::to_string(k) + " has rank " +
                                  std::to_string(m.rank()) + ", expected " +
                                  std::to_string(rank));
    }
    if (!m.empty()) entries_.emplace(k, std::move(m));
  }
}

Multisegment ExtElement::at(int k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Multisegment(rank_) : it->second;
}

ExtElement ExtElement::with(int k, Multisegment m) const {
  if (m.rank() != rank_) throw std::invalid_argument("rank mismatch in ExtElement::with");
  ExtElement out = *this;
  if (m.empty()) {
    out.entries_.erase(k);
  } else {
    out.entries_.insert_or_assign(k, std::move(m));
  }
  return out;
}

std::size_t ExtElement::segment_count() const {
  std::size_t total = 0;
  for (const auto& [k, m] : entries_) total += m.size();
  return total;
}

std::optional<std::pair<int, int>> ExtElement::support() const {
  if (entries_.empty()) return std::nullopt;
  return std::make_pair(entries_.begin()->first, entries_.rbegin()->first);
}

std::string to_string(const ExtElement& b) {
  if (b.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  // Highest grade first, matching the ordered product convention.
  for (auto it = b.entries().rbegin(); it != b.entries().rend(); ++it) {
    for (const auto& [s, c] : it->second.counts()) {
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << c;
      os << '[' << s.start;
      if (s.end != s.start) os << ',' << s.end;
      os << "]_" << it->first;
    }
  }
  return os.str();
}

int eps_hat(const ExtElement& b, int i, int k) {
  check_index(b, i);
  return crystal_stats(b.at(k), i).eps - crystal_stats(b.at(k + 1), i).eps_star;
}

ExtElement extended_f(const ExtElement& b, int i, int k) {
  if (eps_hat(b, i, k) >= 0) {
    return b.with(k, *apply_operator(b.at(k), CrystalOp::f, i));
  }
  auto lowered = apply_operator(b.at(k + 1), CrystalOp::e_star, i);
  if (!lowered) throw std::logic_error("e*_i vanished although eps_hat < 0");
  return b.with(k + 1, std::move(*lowered));
}

ExtElement extended_e(const ExtElement& b, int i, int k) {
  if (eps_hat(b, i, k) > 0) {
    auto raised = apply_operator(b.at(k), CrystalOp::e, i);
    if (!raised) throw std::logic_error("e_i vanished although eps_hat > 0");
    return b.with(k, std::move(*raised));
  }
  return b.with(k + 1, *apply_operator(b.at(k + 1), CrystalOp::f_star, i));
}

ExtElement braid_R(const ExtElement& b, int i) {
  check_index(b, i);
  std::set<int> grades;
  for (const auto& [k, m] : b.entries()) {
    grades.insert(k);
    grades.insert(k + 1);
  }
  std::map<int, Multisegment> out;
  for (int k : grades) {
    const Multisegment reflected = tilde_saito_reflection(b.at(k), i);
    const int power = crystal_stats(b.at(k - 1), i).eps;
    out.emplace(k, apply_power(reflected, CrystalOp::f_star, i, power));
  }
  return ExtElement(b.rank(), std::move(out));
}

ExtElement braid_R_word(const ExtElement& b, const std::vector<int>& word) {
  ExtElement cur = b;
  for (int i : word) cur = braid_R(cur, i);
  return cur;
}

ExtElement embed(const Multisegment& m, int k) {
  return ExtElement(m.rank()).with(k, m);
}

ExtElement grade_shift(const ExtElement& b, int t) {
  std::map<int, Multisegment> out;
  for (const auto& [k, m] : b.entries()) out.emplace(k + t, m);
  return ExtElement(b.rank(), std::move(out));
}

std::vector<Multisegment> enumerate_multisegments(int rank, int size) {
  const std::vector<Segment> segs = all_segments(rank);
  std::vector<Multisegment> out;
  std::vector<Segment> chosen;
  // Multisets as non-decreasing index sequences into `segs`.
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.emplace_back(rank, chosen);
      return;
    }
    for (std::size_t j = from; j < segs.size(); ++j) {
      chosen.push_back(segs[j]);
      self(self, j, left - 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, size);
  return out;
}

std::vector<ExtElement> braid_R_preimages(const ExtElement& target, int i, int lo, int hi,
                                          int max_segments) {
  if (lo > hi) throw std::invalid_argument("empty preimage search window");
  const std::vector<Segment> segs = all_segments(target.rank());
  std::vector<std::pair<int, Segment>> items;
  for (int k = lo; k <= hi; ++k)
    for (const auto& s : segs) items.emplace_back(k, s);

  std::vector<ExtElement> found;
  std::map<int, std::vector<Segment>> chosen;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    std::map<int, Multisegment> entries;
    for (const auto& [k, ss] : chosen) entries.emplace(k, Multisegment(target.rank(), ss));
    ExtElement candidate(target.rank(), std::move(entries));
    if (braid_R(candidate, i) == target) found.push_back(candidate);
    if (left == 0) return;
    for (std::size_t j = from; j < items.size(); ++j) {
      chosen[items[j].first].push_back(items[j].second);
      self(self, j, left - 1);
      auto& v = chosen[items[j].first];
      v.pop_back();
      if (v.empty()) chosen.erase(items[j].first);
    }
  };
  rec(rec, 0, max_segments);
  return found;
}

ExtElement random_ext_element(int rank, std::mt19937_64& rng, int support, int max_segments) {
  const std::vector<Segment> segs = all_segments(rank);
  std::uniform_int_distribution<int> count_dist(0, max_segments);
  std::uniform_int_distribution<std::size_t> seg_dist(0, segs.size() - 1);
  std::uniform_int_distribution<int> grade_dist(-support, support);
  std::map<int, std::vector<Segment>> chosen;
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    const Segment s = segs[seg_dist(rng)];
    chosen[grade_dist(rng)].push_back(s);
  }
  std::map<int, Multisegment> entries;
  for (const auto& [k, ss] : chosen) entries.emplace(k, Multisegment(rank, ss));
  return ExtElement(rank, std::move(entries));
}

}  // namespace grbraid
