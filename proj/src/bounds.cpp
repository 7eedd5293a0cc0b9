#include "orient/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace orient {
namespace {

BigInt power(std::uint32_t q, std::uint32_t e) { return boost::multiprecision::pow(BigInt(q), e); }

std::uint32_t ceil_half(std::uint32_t x) { return (x + 1) / 2; }

// Halves a numerator, flooring and flagging the report when it is odd.
BigInt halve(const BigInt& numerator, BoundReport& report) {
  if (numerator < 0) return 0;
  if (numerator % 2 != 0) report.parity_anomaly = true;
  return numerator / 2;
}

BigInt strengthened(std::uint32_t q, std::uint32_t n, BoundReport& report) {
  if (n % 2 == 0) {
    return halve(power(q, n) - 2 * power(q, n / 2) - power(q, (n - 2) / 2) + 2 * BigInt(q), report);
  }
  return halve(power(q, n) - power(q, (n + 1) / 2) - 2 * power(q, (n - 1) / 2) + BigInt(q) +
                   BigInt(q) * q,
               report);
}

}  // namespace

BigInt nonsymmetric_count(std::uint32_t q, std::uint32_t n) {
  if (q < 2 || n < 1) throw std::invalid_argument("nonsymmetric_count requires q >= 2, n >= 1");
  return power(q, n) - power(q, ceil_half(n));
}

BigInt naive_bound(std::uint32_t q, std::uint32_t n) { return nonsymmetric_count(q, n) / 2; }

BoundReport period_bound(std::uint32_t q, std::uint32_t n, bool diagnostic) {
  if (q < 2) throw std::invalid_argument("period_bound requires q >= 2");
  if (n < 2) throw std::invalid_argument("period_bound requires n >= 2");

  BoundReport r;
  r.q = q;
  r.n = n;
  r.nonsymmetric_count = nonsymmetric_count(q, n);
  r.naive_bound = halve(r.nonsymmetric_count, r);
  if (q % 2 == 1) {
    r.parity_bound = halve(r.nonsymmetric_count - power(q, ceil_half(n - 1)) + q, r);
  } else {
    r.parity_bound = halve(r.nonsymmetric_count - q, r);
  }
  r.table_bound = std::min(r.naive_bound, r.parity_bound);

  if (q % 2 == 1 && n >= 6) {
    r.strengthened_bound = strengthened(q, n, r);
    r.table_bound = std::min(r.table_bound, *r.strengthened_bound);
    r.applicability_notes = "odd q, n >= 6: strengthened bound applied";
  } else if (q % 2 == 1 && (n == 4 || n == 5)) {
    r.applicability_notes =
        "odd q, n in {4,5}: strengthened bound not applied (stated for n >= 6)";
    if (diagnostic) {
      BoundReport scratch;
      r.diagnostic_strengthened = strengthened(q, n, scratch);
      r.applicability_notes += "; diagnostic value reported separately";
    }
  } else if (q % 2 == 1) {
    r.applicability_notes = "odd q: parity bound";
  } else {
    r.applicability_notes = "even q: parity bound";
  }
  if (r.parity_anomaly) r.applicability_notes += "; warning: odd numerator floored";
  return r;
}

std::vector<std::vector<BigInt>> bounds_table(const std::vector<std::uint32_t>& qs,
                                              const std::vector<std::uint32_t>& ns) {
  std::vector<std::vector<BigInt>> table;
  table.reserve(qs.size());
  for (const auto q : qs) {
    auto& row = table.emplace_back();
    row.reserve(ns.size());
    for (const auto n : ns) row.push_back(period_bound(q, n).table_bound);
  }
  return table;
}

std::optional<std::uint64_t> table_bound_u64(std::uint32_t q, std::uint32_t n) {
  const auto b = period_bound(q, n).table_bound;
  if (b > BigInt(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
  return static_cast<std::uint64_t>(b);
}

}  // namespace orient
