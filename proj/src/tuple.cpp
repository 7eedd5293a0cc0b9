#include "orient/tuple.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orient {

ZqTuple::ZqTuple(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (symbols_.empty()) throw std::invalid_argument("tuple must have length >= 1");
  for (const auto s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " out of range for q=" +
                                  std::to_string(alphabet_.q()));
    }
  }
}

ZqTuple::ZqTuple(std::initializer_list<Symbol> symbols, std::uint32_t q)
    : ZqTuple(std::vector<Symbol>(symbols), Alphabet(q)) {}

std::ostream& operator<<(std::ostream& os, const ZqTuple& u) {
  os << '(';
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) os << ',';
    os << u[i];
  }
  return os << ')';
}

const char* to_string(TupleClass c) {
  switch (c) {
    case TupleClass::uniform: return "uniform";
    case TupleClass::alternating: return "alternating";
    case TupleClass::neither: return "neither";
  }
  return "?";
}

ZqTuple reverse(const ZqTuple& u) {
  std::vector<Symbol> out(u.symbols().rbegin(), u.symbols().rend());
  return ZqTuple(std::move(out), u.alphabet());
}

ZqTuple negate(const ZqTuple& u) {
  std::vector<Symbol> out;
  out.reserve(u.size());
  for (const auto s : u.symbols()) out.push_back(u.alphabet().neg(s));
  return ZqTuple(std::move(out), u.alphabet());
}

ZqTuple translate(const ZqTuple& u, Symbol lambda) {
  const auto& z = u.alphabet();
  const auto l = lambda % z.q();
  std::vector<Symbol> out;
  out.reserve(u.size());
  for (const auto s : u.symbols()) out.push_back(z.add(s, l));
  return ZqTuple(std::move(out), z);
}

ZqTuple conjugate(const ZqTuple& u, Symbol lambda) {
  std::vector<Symbol> out(u.symbols().begin(), u.symbols().end());
  out[0] = u.alphabet().add(out[0], lambda % u.q());
  return ZqTuple(std::move(out), u.alphabet());
}

bool is_symmetric(const ZqTuple& u) { return is_m_symmetric(u, u.size()); }

bool is_m_symmetric(const ZqTuple& u, std::size_t m) {
  if (m < 1 || m > u.size()) {
    throw std::invalid_argument("symmetry prefix length " + std::to_string(m) +
                                " outside [1, " + std::to_string(u.size()) + "]");
  }
  for (std::size_t i = 0; i < m / 2; ++i) {
    if (u[i] != u[m - 1 - i]) return false;
  }
  return true;
}

TupleClass classify_tuple(const ZqTuple& u) {
  const auto syms = u.symbols();
  if (std::all_of(syms.begin(), syms.end(), [&](Symbol s) { return s == syms[0]; })) {
    return TupleClass::uniform;
  }
  // non-uniform here, so a length-1 tuple cannot reach this point
  if (u[0] == u[1]) return TupleClass::neither;
  for (std::size_t i = 2; i < u.size(); ++i) {
    if (u[i] != u[i % 2]) return TupleClass::neither;
  }
  return TupleClass::alternating;
}

bool is_alternating_sign_form(const ZqTuple& u) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i + 1] != u.alphabet().neg(u[i])) return false;
  }
  return true;
}

}  // namespace orient
