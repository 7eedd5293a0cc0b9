#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orient {

using BigInt = boost::multiprecision::cpp_int;

/// Upper bounds on the period of an orientable sequence of order n over Z_q.
struct BoundReport {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  BigInt nonsymmetric_count;  // q^n - q^ceil(n/2)
  BigInt naive_bound;         // nonsymmetric_count / 2
  BigInt parity_bound;        // parity-of-q refinement
  std::optional<BigInt> strengthened_bound;  // odd q, n >= 6
  /// The odd-q strengthened formula evaluated at n in {4, 5}; reported only,
  /// never folded into table_bound.
  std::optional<BigInt> diagnostic_strengthened;
  BigInt table_bound;  // minimum of the applicable bounds
  bool parity_anomaly = false;  // some numerator was odd and got floored
  std::string applicability_notes;
};

BigInt nonsymmetric_count(std::uint32_t q, std::uint32_t n);
BigInt naive_bound(std::uint32_t q, std::uint32_t n);

/// Requires q >= 2 and n >= 2 (std::invalid_argument otherwise).
BoundReport period_bound(std::uint32_t q, std::uint32_t n, bool diagnostic = false);

/// table[i][j] = period_bound(qs[i], ns[j]).table_bound, i.e. one row per alphabet size.
std::vector<std::vector<BigInt>> bounds_table(const std::vector<std::uint32_t>& qs,
                                              const std::vector<std::uint32_t>& ns);

/// table_bound as a machine integer, or empty if it does not fit.
std::optional<std::uint64_t> table_bound_u64(std::uint32_t q, std::uint32_t n);

}  // namespace orient
