#include "orient/ring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orient {

std::size_t minimal_period(std::span<const Symbol> symbols) {
  const auto m = symbols.size();
  if (m == 0) return 0;
  // prefix function: the smallest period is m - border, if it divides m
  std::vector<std::size_t> border(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    auto k = border[i - 1];
    while (k > 0 && symbols[i] != symbols[k]) k = border[k - 1];
    if (symbols[i] == symbols[k]) ++k;
    border[i] = k;
  }
  const auto p = m - border[m - 1];
  return m % p == 0 ? p : m;
}

RingSequence::RingSequence(std::vector<Symbol> symbols, Alphabet alphabet)
    : ring_(std::move(symbols)), alphabet_(alphabet) {
  if (ring_.empty()) throw std::invalid_argument("ring sequence must be nonempty");
  for (const auto s : ring_) {
    if (!alphabet_.contains(s)) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " out of range for q=" +
                                  std::to_string(alphabet_.q()));
    }
  }
  ring_.resize(minimal_period(ring_));
}

RingSequence::RingSequence(std::initializer_list<Symbol> symbols, std::uint32_t q)
    : RingSequence(std::vector<Symbol>(symbols), Alphabet(q)) {}

std::ostream& operator<<(std::ostream& os, const RingSequence& s) {
  const bool digits = s.q() <= 10;
  os << '[';
  for (std::size_t i = 0; i < s.period(); ++i) {
    if (i && !digits) os << ',';
    os << s[i];
  }
  return os << ']';
}

RingSequence make_ring(std::vector<Symbol> symbols, std::uint32_t q) {
  return RingSequence(std::move(symbols), Alphabet(q));
}

ZqTuple window(const RingSequence& s, std::size_t i, std::size_t n) {
  if (n == 0) throw std::invalid_argument("window length must be >= 1");
  std::vector<Symbol> out;
  out.reserve(n);
  const auto m = s.period();
  i %= m;
  for (std::size_t k = 0; k < n; ++k) out.push_back(s[(i + k) % m]);
  return ZqTuple(std::move(out), s.alphabet());
}

RingSequence rotate(const RingSequence& s, std::size_t k) {
  const auto sym = s.symbols();
  k %= sym.size();
  std::vector<Symbol> out(sym.begin() + static_cast<std::ptrdiff_t>(k), sym.end());
  out.insert(out.end(), sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(k));
  return RingSequence(std::move(out), s.alphabet());
}

RingSequence reversed(const RingSequence& s) {
  return RingSequence(std::vector<Symbol>(s.symbols().rbegin(), s.symbols().rend()), s.alphabet());
}

RingSequence negated(const RingSequence& s) {
  std::vector<Symbol> out;
  out.reserve(s.period());
  for (const auto x : s.symbols()) out.push_back(s.alphabet().neg(x));
  return RingSequence(std::move(out), s.alphabet());
}

RingSequence translate(const RingSequence& s, Symbol lambda) {
  std::vector<Symbol> out;
  out.reserve(s.period());
  const auto l = lambda % s.q();
  for (const auto x : s.symbols()) out.push_back(s.alphabet().add(x, l));
  return RingSequence(std::move(out), s.alphabet());
}

std::size_t least_rotation_offset(std::span<const Symbol> s) {
  // two-pointer minimal rotation (Shiloach / Booth variant), O(m)
  const auto m = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < m && j < m && k < m) {
    const auto a = s[(i + k) % m];
    const auto b = s[(j + k) % m];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

RingSequence canonical_rotation(const RingSequence& s) {
  return rotate(s, least_rotation_offset(s.symbols()));
}

bool rotation_equal(const RingSequence& a, const RingSequence& b) {
  if (a.q() != b.q() || a.period() != b.period()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

std::uint64_t weight(const RingSequence& s) {
  std::uint64_t w = 0;
  for (const auto x : s.symbols()) w += x;
  return w;
}

Symbol weight_mod_q(const RingSequence& s) { return static_cast<Symbol>(weight(s) % s.q()); }

Symbol alt_weight_mod_q(const RingSequence& s) {
  const auto& z = s.alphabet();
  const auto m = s.period();
  Symbol acc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool positive = (m - 1 - i) % 2 == 0;
    acc = positive ? z.add(acc, s[i]) : z.sub(acc, s[i]);
  }
  return acc;
}

}  // namespace orient
