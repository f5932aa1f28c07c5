#include "grbraid/multisegment.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grbraid {

namespace {

void check_index(const Multisegment& m, int i) {
  if (i < 1 || i > m.rank()) {
    throw std::out_of_range("crystal index " + std::to_string(i) + " outside [1, " +
                            std::to_string(m.rank()) + "]");
  }
}

// One run of equal symbols in a signature word.
struct Group {
  Segment segment;
  int count = 0;
  bool plus = false;
};

// Result of cancelling every adjacent "+-" pair: the reduced word is
// -...- +...+, so the survivors split cleanly into the two lists.
struct Reduced {
  std::vector<Group> minus;
  std::vector<Group> plus;

  int minus_count() const {
    int total = 0;
    for (const auto& g : minus) total += g.count;
    return total;
  }
};

Reduced reduce(const std::vector<Group>& word) {
  std::vector<Group> stack;
  for (Group g : word) {
    if (g.plus) {
      stack.push_back(g);
      continue;
    }
    while (g.count > 0 && !stack.empty() && stack.back().plus) {
      const int k = std::min(g.count, stack.back().count);
      g.count -= k;
      stack.back().count -= k;
      if (stack.back().count == 0) stack.pop_back();
    }
    if (g.count > 0) stack.push_back(g);
  }
  Reduced r;
  for (const auto& g : stack) (g.plus ? r.plus : r.minus).push_back(g);
  return r;
}

// f_i / e_i: [i,b] reads "-", [i+1,b] reads "+"; ends descending, and at
// equal end the "-" segment first.
Reduced signature(const Multisegment& m, int i) {
  std::vector<Group> word;
  for (const auto& [s, c] : m.counts()) {
    if (s.start == i) word.push_back({s, c, false});
    if (s.start == i + 1) word.push_back({s, c, true});
  }
  std::sort(word.begin(), word.end(), [](const Group& x, const Group& y) {
    if (x.segment.end != y.segment.end) return x.segment.end > y.segment.end;
    return !x.plus && y.plus;
  });
  return reduce(word);
}

// f*_i / e*_i: [a,i] reads "-", [a,i-1] reads "+"; starts ascending, and at
// equal start the "-" segment first.
Reduced star_signature(const Multisegment& m, int i) {
  std::vector<Group> word;
  for (const auto& [s, c] : m.counts()) {
    if (s.end == i) word.push_back({s, c, false});
    if (s.end == i - 1) word.push_back({s, c, true});
  }
  std::sort(word.begin(), word.end(), [](const Group& x, const Group& y) {
    if (x.segment.start != y.segment.start) return x.segment.start < y.segment.start;
    return !x.plus && y.plus;
  });
  return reduce(word);
}

Multisegment replace_one(const Multisegment& m, Segment from, Segment to) {
  return m.minus(from).plus(to);
}

}  // namespace

Multisegment::Multisegment(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("multisegment rank must be >= 1");
}

Multisegment::Multisegment(int rank, std::span<const Segment> segments) : Multisegment(rank) {
  for (const auto& s : segments) {
    check_segment(s);
    ++counts_[s];
  }
}

void Multisegment::check_segment(Segment s) const {
  if (s.start < 1 || s.start > s.end || s.end > rank_) {
    throw std::invalid_argument("segment [" + std::to_string(s.start) + "," +
                                std::to_string(s.end) + "] is not inside [1, " +
                                std::to_string(rank_) + "]");
  }
}

std::size_t Multisegment::size() const {
  std::size_t total = 0;
  for (const auto& [s, c] : counts_) total += static_cast<std::size_t>(c);
  return total;
}

int Multisegment::count(Segment s) const {
  auto it = counts_.find(s);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Segment> Multisegment::segments() const {
  std::vector<Segment> out;
  for (const auto& [s, c] : counts_) out.insert(out.end(), static_cast<std::size_t>(c), s);
  return out;
}

Multisegment Multisegment::plus(Segment s, int times) const {
  check_segment(s);
  if (times < 0) throw std::invalid_argument("negative multiplicity");
  Multisegment out = *this;
  if (times > 0) out.counts_[s] += times;
  return out;
}

Multisegment Multisegment::minus(Segment s) const {
  auto it = counts_.find(s);
  if (it == counts_.end()) {
    throw std::invalid_argument("segment [" + std::to_string(s.start) + "," +
                                std::to_string(s.end) + "] not present");
  }
  Multisegment out = *this;
  auto jt = out.counts_.find(s);
  if (--jt->second == 0) out.counts_.erase(jt);
  return out;
}

std::string to_string(const Multisegment& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : m.counts()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c;
    os << '[' << s.start;
    if (s.end != s.start) os << ',' << s.end;
    os << ']';
  }
  return os.str();
}

std::optional<CrystalOp> parse_crystal_op(const std::string& name) {
  if (name == "f") return CrystalOp::f;
  if (name == "e") return CrystalOp::e;
  if (name == "f_star" || name == "fstar" || name == "f*") return CrystalOp::f_star;
  if (name == "e_star" || name == "estar" || name == "e*") return CrystalOp::e_star;
  return std::nullopt;
}

std::string to_string(CrystalOp op) {
  switch (op) {
    case CrystalOp::f: return "f";
    case CrystalOp::e: return "e";
    case CrystalOp::f_star: return "f_star";
    case CrystalOp::e_star: return "e_star";
  }
  return "?";
}

int weight_pairing(const Multisegment& m, int i) {
  check_index(m, i);
  // <h_i, alpha_a + ... + alpha_b> = d(i,a) + d(i,b) - d(i,a-1) - d(i,b+1)
  int total = 0;
  for (const auto& [s, c] : m.counts()) {
    const int pairing = (i == s.start) + (i == s.end) - (i == s.start - 1) - (i == s.end + 1);
    total -= c * pairing;
  }
  return total;
}

CrystalStats crystal_stats(const Multisegment& m, int i) {
  check_index(m, i);
  CrystalStats st;
  st.eps = signature(m, i).minus_count();
  st.eps_star = star_signature(m, i).minus_count();
  st.wt_i = weight_pairing(m, i);
  st.phi = st.eps + st.wt_i;
  st.phi_star = st.eps_star + st.wt_i;
  return st;
}

std::optional<Multisegment> apply_operator(const Multisegment& m, CrystalOp op, int i) {
  check_index(m, i);
  switch (op) {
    case CrystalOp::f: {
      const Reduced r = signature(m, i);
      if (r.plus.empty()) return m.plus({i, i});
      const Segment s = r.plus.front().segment;
      return replace_one(m, s, {i, s.end});
    }
    case CrystalOp::e: {
      const Reduced r = signature(m, i);
      if (r.minus.empty()) return std::nullopt;
      const Segment s = r.minus.back().segment;
      if (s.end == i) return m.minus(s);
      return replace_one(m, s, {i + 1, s.end});
    }
    case CrystalOp::f_star: {
      const Reduced r = star_signature(m, i);
      if (r.plus.empty()) return m.plus({i, i});
      const Segment s = r.plus.front().segment;
      return replace_one(m, s, {s.start, i});
    }
    case CrystalOp::e_star: {
      const Reduced r = star_signature(m, i);
      if (r.minus.empty()) return std::nullopt;
      const Segment s = r.minus.back().segment;
      if (s.start == i) return m.minus(s);
      return replace_one(m, s, {s.start, i - 1});
    }
  }
  return std::nullopt;
}

Multisegment apply_power(const Multisegment& m, CrystalOp op, int i, int times) {
  if (times < 0) throw std::invalid_argument("negative operator power");
  Multisegment cur = m;
  for (int t = 0; t < times; ++t) {
    auto next = apply_operator(cur, op, i);
    if (!next) {
      throw std::logic_error("crystal operator " + to_string(op) + "_" + std::to_string(i) +
                             " vanished on " + to_string(cur));
    }
    cur = std::move(*next);
  }
  return cur;
}

Multisegment saito_reflection(const Multisegment& m, int i) {
  const CrystalStats st = crystal_stats(m, i);
  if (st.eps != 0) {
    throw std::invalid_argument("Saito reflection S_" + std::to_string(i) +
                                " needs eps_i = 0, got " + std::to_string(st.eps));
  }
  if (st.phi_star < 0) {
    throw std::logic_error("negative phi*_" + std::to_string(i) + " on " + to_string(m));
  }
  const Multisegment lowered = apply_power(m, CrystalOp::e_star, i, st.eps_star);
  return apply_power(lowered, CrystalOp::f, i, st.phi_star);
}

Multisegment saito_reflection_star(const Multisegment& m, int i) {
  const CrystalStats st = crystal_stats(m, i);
  if (st.eps_star != 0) {
    throw std::invalid_argument("S*_" + std::to_string(i) + " needs eps*_i = 0, got " +
                                std::to_string(st.eps_star));
  }
  if (st.phi < 0) {
    throw std::logic_error("negative phi_" + std::to_string(i) + " on " + to_string(m));
  }
  const Multisegment raised = apply_power(m, CrystalOp::e, i, st.eps);
  return apply_power(raised, CrystalOp::f_star, i, st.phi);
}

Multisegment tilde_saito_reflection(const Multisegment& m, int i) {
  const CrystalStats st = crystal_stats(m, i);
  return saito_reflection(apply_power(m, CrystalOp::e, i, st.eps), i);
}

}  // namespace grbraid
