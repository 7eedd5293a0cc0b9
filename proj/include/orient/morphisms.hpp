#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orient/ring.hpp"
#include "orient/tuple.hpp"

namespace orient {

// The generalized Lempel map D_beta sends consecutive pairs (x, y) to
// beta*(y - x); the map A sends them to x + y. Both take a ring of period m
// to a ring whose period divides m.

/// Requires gcd(beta, q) = 1 (std::invalid_argument otherwise).
RingSequence apply_D(const RingSequence& s, Symbol beta = 1);
RingSequence apply_A(const RingSequence& s);

/// Tuple forms: an n-tuple maps to an (n-1)-tuple. Require n >= 2.
ZqTuple apply_D(const ZqTuple& u, Symbol beta = 1);
ZqTuple apply_A(const ZqTuple& u);

enum class LiftRelation { translates, alternating_sign_translates };

/// Which structural case produced a lift.
enum class LiftCase {
  d_lift,               // D^{-1}: q/h cycles of period h*m
  a_odd_m_odd_q,        // one period-m cycle, (q-1)/2 cycles of period 2m
  a_odd_m_even_q_half,  // 2x = w^A solvable: two period-m, (q-2)/2 of period 2m
  a_odd_m_even_q_none,  // 2x = w^A unsolvable: q/2 cycles of period 2m
  a_even_m,             // q/h cycles of period h*m, h = order of w^A
};

const char* to_string(LiftRelation r);
const char* to_string(LiftCase c);

struct LiftCycle {
  RingSequence ring;       // rotation starting at first_start
  Symbol first_start = 0;  // smallest t_0 whose preimage lies on this cycle
  std::uint32_t shifts = 0;  // number of t_0 values landing on this cycle
  std::size_t predicted_period = 0;
  // verdicts at order n + 1
  bool n_window = false;
  bool orientable = false;
  bool negative_orientable = false;
};

struct LiftResult {
  std::size_t order = 0;  // n + 1
  std::uint32_t order_h = 0;  // additive order of w_q (D) or w^A_q (A)
  LiftRelation relation = LiftRelation::translates;
  LiftCase classification = LiftCase::d_lift;
  /// The q preimages, index t_0, each read from position 0 with first symbol t_0.
  std::vector<RingSequence> preimages;
  /// Distinct cycles up to rotation, ordered by first_start.
  std::vector<LiftCycle> cycles;
  bool pairwise_disjoint = true;
  bool pairwise_o_disjoint = true;
  bool pairwise_no_disjoint = true;
};

/// All preimages of s under D_beta, grouped into cycles. n is the order of s;
/// verdicts are computed at order n + 1. Throws std::invalid_argument for a
/// non-unit beta and VerificationError if an observed period disagrees with
/// the predicted h*m.
LiftResult lift_D(const RingSequence& s, Symbol beta, std::size_t n);

/// All preimages of s under A, classified by the parity of m and q and the
/// alternating-sign weight. Throws VerificationError on a period/count mismatch.
LiftResult lift_A(const RingSequence& s, std::size_t n);

/// (a, a + lambda, ..., a + (n-1)lambda). Throws std::invalid_argument if lambda = 0 mod q.
ZqTuple alternating_string(Symbol lambda, std::size_t n, Symbol a, std::uint32_t q);

struct AlternatingCycle {
  /// theta + i*lambda for i = 0..q-1; consecutive entries are de Bruijn edges.
  std::vector<ZqTuple> vertices;
  std::uint32_t period = 0;  // q / gcd(lambda, q)
};

AlternatingCycle alternating_cycle(Symbol lambda, std::size_t n, std::uint32_t q);

}  // namespace orient
