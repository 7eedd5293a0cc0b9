#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace orient {

using Symbol = std::uint32_t;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// The residue ring Z_q. All symbols handled by the library are canonical
/// representatives in [0, q).
class Alphabet {
 public:
  /// Throws std::invalid_argument when q < 2.
  explicit Alphabet(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  bool contains(Symbol s) const { return s < q_; }

  Symbol reduce(std::int64_t v) const;
  Symbol add(Symbol a, Symbol b) const { return static_cast<Symbol>((std::uint64_t{a} + b) % q_); }
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
  Symbol neg(Symbol a) const { return a == 0 ? 0 : q_ - a; }
  Symbol mul(Symbol a, Symbol b) const { return static_cast<Symbol>((std::uint64_t{a} * b) % q_); }

  bool is_unit(Symbol a) const { return gcd(a % q_, q_) == 1; }

  /// Multiplicative inverse; throws std::invalid_argument if a is not a unit.
  Symbol inverse(Symbol a) const;

  /// Least h >= 1 with h*a = 0 (mod q), i.e. q / gcd(a, q).
  std::uint32_t additive_order(Symbol a) const;

  /// All x in [0, q) with 2x = c (mod q), ascending.
  std::vector<Symbol> halves(Symbol c) const;

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t q_;
};

}  // namespace orient
