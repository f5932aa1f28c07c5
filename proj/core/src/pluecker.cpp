#include "grbraid/pluecker.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace grbraid {

BigInt parse_bigint(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  for (std::size_t j = pos; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed integer '" + text + "'");
    }
  }
  BigInt value(text.substr(pos));
  return negative ? BigInt(-value) : value;
}

// ---------------------------------------------------------------------------
// MinorIndex

MinorIndex::MinorIndex(std::span<const int> entries) {
  if (entries.size() < 2 || entries.size() > static_cast<std::size_t>(kMaxMinorWidth)) {
    throw std::invalid_argument("minor width " + std::to_string(entries.size()) +
                                " outside [2, " + std::to_string(kMaxMinorWidth) + "]");
  }
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k - 1] >= entries[k]) {
      throw std::invalid_argument("minor index entries must be strictly increasing");
    }
  }
  width_ = static_cast<std::uint8_t>(entries.size());
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

bool MinorIndex::contains(int value) const {
  const auto e = entries();
  return std::binary_search(e.begin(), e.end(), value);
}

MinorIndex MinorIndex::shifted(int t) const {
  MinorIndex out = *this;
  for (int k = 0; k < width_; ++k) out.entries_[static_cast<std::size_t>(k)] += t;
  return out;
}

std::string to_string(const MinorIndex& idx) {
  std::ostringstream os;
  os << "P_{";
  for (int k = 0; k < idx.width(); ++k) {
    if (k) os << ',';
    os << idx[k];
  }
  os << '}';
  return os.str();
}

std::optional<SignedMinor> normalize_minor(std::span<const int> raw, int m) {
  if (static_cast<int>(raw.size()) != m) {
    throw std::invalid_argument("expected " + std::to_string(m) + " column indices, got " +
                                std::to_string(raw.size()));
  }
  std::array<int, kMaxMinorWidth> buf{};
  if (m > kMaxMinorWidth) throw std::invalid_argument("minor width too large");
  std::copy(raw.begin(), raw.end(), buf.begin());
  int sign = 1;
  // Insertion sort; each adjacent swap flips the parity.
  for (int a = 1; a < m; ++a) {
    for (int b = a; b > 0 && buf[static_cast<std::size_t>(b - 1)] >= buf[static_cast<std::size_t>(b)];
         --b) {
      if (buf[static_cast<std::size_t>(b - 1)] == buf[static_cast<std::size_t>(b)]) {
        return std::nullopt;
      }
      std::swap(buf[static_cast<std::size_t>(b - 1)], buf[static_cast<std::size_t>(b)]);
      sign = -sign;
    }
  }
  return SignedMinor{sign, MinorIndex(std::span<const int>(buf.data(), static_cast<std::size_t>(m)))};
}

// ---------------------------------------------------------------------------
// PlueckerPoly

PlueckerPoly::PlueckerPoly(int m) : m_(m) {
  if (m < 2 || m > kMaxMinorWidth) {
    throw std::invalid_argument("Pluecker width " + std::to_string(m) + " outside [2, " +
                                std::to_string(kMaxMinorWidth) + "]");
  }
}

PlueckerPoly::PlueckerPoly(int m, const std::vector<std::pair<Monomial, BigInt>>& terms)
    : PlueckerPoly(m) {
  for (const auto& [mono, c] : terms) add_term(mono, c);
}

void PlueckerPoly::add_term(Monomial mono, const BigInt& coeff) {
  if (coeff == 0) return;
  std::erase_if(mono, [&](const MinorIndex& v) {
    if (v.width() != m_) throw std::invalid_argument("variable width does not match polynomial");
    return v.is_frozen();
  });
  std::sort(mono.begin(), mono.end());
  auto [it, inserted] = terms_.try_emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PlueckerPoly PlueckerPoly::constant(int m, const BigInt& c) {
  PlueckerPoly p(m);
  p.add_term({}, c);
  return p;
}

PlueckerPoly PlueckerPoly::variable(int m, std::span<const int> raw) {
  const auto n = normalize_minor(raw, m);
  PlueckerPoly p(m);
  if (n) p.add_term({n->index}, BigInt(n->sign));
  return p;
}

PlueckerPoly PlueckerPoly::variable(const MinorIndex& idx) {
  PlueckerPoly p(idx.width());
  p.add_term({idx}, BigInt(1));
  return p;
}

std::optional<BigInt> PlueckerPoly::constant_value() const {
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

int PlueckerPoly::degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.size()));
  return d;
}

std::set<MinorIndex> PlueckerPoly::variables() const {
  std::set<MinorIndex> out;
  for (const auto& [mono, c] : terms_) out.insert(mono.begin(), mono.end());
  return out;
}

std::optional<std::pair<int, int>> PlueckerPoly::index_range() const {
  std::optional<std::pair<int, int>> r;
  for (const auto& [mono, c] : terms_) {
    for (const auto& v : mono) {
      if (!r) {
        r = std::make_pair(v.front(), v.back());
      } else {
        r->first = std::min(r->first, v.front());
        r->second = std::max(r->second, v.back());
      }
    }
  }
  return r;
}

void PlueckerPoly::check_width(const PlueckerPoly& other) const {
  if (other.m_ != m_) {
    throw std::invalid_argument("Pluecker width mismatch: " + std::to_string(m_) + " vs " +
                                std::to_string(other.m_));
  }
}

PlueckerPoly PlueckerPoly::operator-() const {
  PlueckerPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

PlueckerPoly& PlueckerPoly::operator+=(const PlueckerPoly& other) {
  check_width(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

PlueckerPoly& PlueckerPoly::operator-=(const PlueckerPoly& other) {
  check_width(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

PlueckerPoly operator*(const PlueckerPoly& a, const PlueckerPoly& b) {
  a.check_width(b);
  PlueckerPoly out(a.m_);
  PlueckerPoly::Monomial merged;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      merged.clear();
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      BigInt prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(merged, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

PlueckerPoly PlueckerPoly::scaled(const BigInt& c) const {
  if (c == 0) return PlueckerPoly(m_);
  PlueckerPoly out = *this;
  for (auto& [mono, v] : out.terms_) v *= c;
  return out;
}

PlueckerPoly PlueckerPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  PlueckerPoly result = constant(m_, 1);
  PlueckerPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string to_string(const PlueckerPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (k) os << '*';
      os << to_string(mono[k]);
    }
  }
  return os.str();
}

PlueckerPoly plucker_generator(std::span<const int> i, std::span<const int> j) {
  const int m = static_cast<int>(i.size()) + 1;
  if (static_cast<int>(j.size()) != m + 1) {
    throw std::invalid_argument("Pluecker generator needs |i| = m-1 and |j| = m+1");
  }
  auto increasing = [](std::span<const int> v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (!increasing(i) || !increasing(j)) {
    throw std::invalid_argument("Pluecker generator tuples must be strictly increasing");
  }
  PlueckerPoly out(m);
  std::vector<int> left(i.begin(), i.end());
  left.push_back(0);
  std::vector<int> right;
  for (int t = 1; t <= m + 1; ++t) {
    left.back() = j[static_cast<std::size_t>(t - 1)];
    right.clear();
    for (int s = 1; s <= m + 1; ++s)
      if (s != t) right.push_back(j[static_cast<std::size_t>(s - 1)]);
    PlueckerPoly term = PlueckerPoly::variable(m, left) * PlueckerPoly::variable(m, right);
    if (t % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

PlueckerPoly shift(const PlueckerPoly& p, int t) {
  std::vector<std::pair<PlueckerPoly::Monomial, BigInt>> terms;
  terms.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) {
    PlueckerPoly::Monomial shifted;
    shifted.reserve(mono.size());
    for (const auto& v : mono) shifted.push_back(v.shifted(t));
    terms.emplace_back(std::move(shifted), c);
  }
  return PlueckerPoly(p.width(), terms);
}

}  // namespace grbraid
