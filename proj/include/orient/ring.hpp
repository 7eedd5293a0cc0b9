#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "orient/alphabet.hpp"
#include "orient/tuple.hpp"

namespace orient {

/// One period of a periodic q-ary sequence.
///
/// The stored ring is always the minimal period: a ring that is a power of a
/// shorter ring is reduced on construction. Equality is rotation-sensitive;
/// use rotation_equal() or canonical_rotation() to compare cycles.
class RingSequence {
 public:
  /// Throws std::invalid_argument on empty input or out-of-range symbols.
  RingSequence(std::vector<Symbol> symbols, Alphabet alphabet);
  RingSequence(std::initializer_list<Symbol> symbols, std::uint32_t q);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t q() const { return alphabet_.q(); }
  std::size_t period() const { return ring_.size(); }
  std::span<const Symbol> symbols() const { return ring_; }

  Symbol operator[](std::size_t i) const { return ring_[i]; }
  /// Cyclic access; any index is reduced modulo the period.
  Symbol at(std::size_t i) const { return ring_[i % ring_.size()]; }

  friend bool operator==(const RingSequence&, const RingSequence&) = default;
  friend auto operator<=>(const RingSequence& a, const RingSequence& b) {
    if (auto c = a.q() <=> b.q(); c != 0) return c;
    return a.ring_ <=> b.ring_;
  }

 private:
  std::vector<Symbol> ring_;
  Alphabet alphabet_;
};

std::ostream& operator<<(std::ostream& os, const RingSequence& s);

/// Builds a ring from one period of symbols, reducing to the minimal period.
RingSequence make_ring(std::vector<Symbol> symbols, std::uint32_t q);

/// Smallest p dividing |symbols| such that symbols is a power of its length-p prefix.
std::size_t minimal_period(std::span<const Symbol> symbols);

/// The n-tuple (s_i, ..., s_{i+n-1}) read cyclically; i is reduced modulo the period.
ZqTuple window(const RingSequence& s, std::size_t i, std::size_t n);

RingSequence rotate(const RingSequence& s, std::size_t k);
RingSequence reversed(const RingSequence& s);
RingSequence negated(const RingSequence& s);
RingSequence translate(const RingSequence& s, Symbol lambda);

/// Lexicographically least rotation.
RingSequence canonical_rotation(const RingSequence& s);
/// Offset k such that rotate(s, k) is the least rotation.
std::size_t least_rotation_offset(std::span<const Symbol> symbols);
bool rotation_equal(const RingSequence& a, const RingSequence& b);

/// Integer sum of one period (not reduced).
std::uint64_t weight(const RingSequence& s);
Symbol weight_mod_q(const RingSequence& s);
/// Sum of (-1)^(m-1-i) s_i over the stored ring, reduced mod q. For odd m the
/// value depends on the rotation; index 0 of the stored ring is i = 0.
Symbol alt_weight_mod_q(const RingSequence& s);

}  // namespace orient
