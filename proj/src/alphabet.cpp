#include "orient/alphabet.hpp"

#include <stdexcept>
#include <string>

namespace orient {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
  if (q < 2) {
    throw std::invalid_argument("alphabet size q must be at least 2, got " + std::to_string(q));
  }
}

Symbol Alphabet::reduce(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(q_);
  auto r = v % m;
  if (r < 0) r += m;
  return static_cast<Symbol>(r);
}

Symbol Alphabet::inverse(Symbol a) const {
  // extended Euclid on (a, q)
  std::int64_t old_r = a % q_, r = q_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const auto quot = old_r / r;
    auto tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::invalid_argument(std::to_string(a) + " is not a unit modulo " + std::to_string(q_));
  }
  return reduce(old_s);
}

std::uint32_t Alphabet::additive_order(Symbol a) const {
  return static_cast<std::uint32_t>(q_ / gcd(a % q_, q_));
}

std::vector<Symbol> Alphabet::halves(Symbol c) const {
  std::vector<Symbol> out;
  for (Symbol x = 0; x < q_; ++x) {
    if (add(x, x) == c % q_) out.push_back(x);
  }
  return out;
}

}  // namespace orient
