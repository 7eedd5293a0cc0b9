#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "orient/alphabet.hpp"

namespace orient {

/// A word of fixed length n >= 1 over Z_q (a vertex of the de Bruijn digraph).
class ZqTuple {
 public:
  /// Throws std::invalid_argument when symbols is empty or any symbol is >= q.
  ZqTuple(std::vector<Symbol> symbols, Alphabet alphabet);
  ZqTuple(std::initializer_list<Symbol> symbols, std::uint32_t q);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t q() const { return alphabet_.q(); }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  friend bool operator==(const ZqTuple&, const ZqTuple&) = default;
  friend auto operator<=>(const ZqTuple& a, const ZqTuple& b) {
    if (auto c = a.q() <=> b.q(); c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

std::ostream& operator<<(std::ostream& os, const ZqTuple& u);

enum class TupleClass { uniform, alternating, neither };

const char* to_string(TupleClass c);

ZqTuple reverse(const ZqTuple& u);
ZqTuple negate(const ZqTuple& u);
ZqTuple translate(const ZqTuple& u, Symbol lambda);
/// Adds lambda to the first symbol only.
ZqTuple conjugate(const ZqTuple& u, Symbol lambda);

bool is_symmetric(const ZqTuple& u);
/// True iff the length-m prefix of u is a palindrome. Requires 1 <= m <= |u|.
bool is_m_symmetric(const ZqTuple& u, std::size_t m);
TupleClass classify_tuple(const ZqTuple& u);
/// Each symbol is the negative of its predecessor: (c, -c, c, -c, ...).
bool is_alternating_sign_form(const ZqTuple& u);

}  // namespace orient
