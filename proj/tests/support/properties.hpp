#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brute.hpp"
#include "orient/ring.hpp"

namespace props {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // first few only

  void fail(const std::string& what);
  bool ok() const { return cases > 0 && violations == 0; }
};

orient::RingSequence to_ring(const brute::Word& w, std::uint32_t q);
brute::Word to_word(const orient::RingSequence& s);

/// Symmetric and (n-1)-symmetric tuples are uniform; symmetric and
/// (n-2)-symmetric tuples are uniform (even n) or uniform/alternating (odd n).
SuiteResult symmetry_exhaustion(std::uint32_t max_q, std::size_t max_n);

/// D and A lifts of random rings: round trips, cycle and period counts against
/// the closed-form oracle, and the orientability statements on a corpus of
/// orientable and negative orientable rings.
SuiteResult random_lifts(std::size_t count, std::uint64_t seed);

/// Weight-unit rings with a zero run 0^t: every lift contains a^{t+1} as a
/// longest run for every a.
SuiteResult lift_runs(std::size_t count, std::uint64_t seed);

/// Fast verifiers agree with the naive ones and with the brute oracle.
SuiteResult verifier_agreement(std::size_t count, std::uint64_t seed);

/// D_beta^{-1}(gamma^n) is exactly the set of translates of the alternating
/// string with step beta^-1 gamma, for q <= max_q, n <= max_n.
SuiteResult constant_preimages(std::uint32_t max_q, std::size_t max_n);

}  // namespace props
