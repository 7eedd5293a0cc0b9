#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orient/analysis.hpp"
#include "orient/ring.hpp"

namespace orient {

/// Order-2 orientable sequence of period p(p-1)/2 over Z_p, built in blocks
/// i = 0..(p-3)/2 of length p with symbol (i+1)*j at position ip + j.
/// Throws std::invalid_argument unless p is an odd prime; VerificationError
/// if the result is not orientable or misses the period bound.
RingSequence prime_order2(std::uint32_t p);

/// Window i of S and window j of T agree except in their first symbol.
struct ConjugatePair {
  std::size_t s_index = 0;
  std::size_t t_index = 0;
};

/// First conjugate pair in (i, j) scan order, if any.
std::optional<ConjugatePair> find_conjugate_pair(const RingSequence& s, const RingSequence& t,
                                                 std::size_t n);

/// Splices T into S at a conjugate pair:
/// [s_0..s_{i+n-1}, t_{j+n}, ..., t_{j+n-1}, s_{i+n}..s_{l-1}].
/// Throws PreconditionError when S and T are not disjoint n-window sequences
/// or no conjugate pair exists.
RingSequence join_conjugate(const RingSequence& s, const RingSequence& t, std::size_t n,
                            std::optional<ConjugatePair> pair = std::nullopt);

struct StitchResult {
  RingSequence ring;  // least rotation
  std::size_t order = 0;  // n + 1
  /// Positions in `ring` of windows whose outgoing edge was rewired.
  std::vector<std::size_t> join_points;
  bool input_special_except_uniform = false;
  bool orientable = false;
  bool negative_orientable = false;
};

/// Lifts S (weight 0 mod q) by D_beta into q cycles and joins them along the
/// alternating cycle of step beta^-1 * gamma at order n + 1. When S is special
/// apart from uniform windows the result must be orientable (VerificationError
/// otherwise). Throws PreconditionError on w_q(S) != 0, non-unit beta or
/// gamma, missing gamma^n, or an S that is not an n-window sequence.
StitchResult stitch_alternating(const RingSequence& s, Symbol beta, Symbol gamma, std::size_t n);

struct AlterationReport {
  bool n_window = false;
  bool orientable = false;
  bool negative_orientable = false;
  bool special_except_uniform = false;
  Symbol weight_mod_q = 0;
  bool contains_uniform_run = false;  // gamma^order occurs
  /// n_window, special_except_uniform, zero weight and the uniform run.
  bool valid = false;
};

AlterationReport check_alteration(const RingSequence& s, std::size_t order, Symbol gamma);

struct AlterationOptions {
  std::size_t max_edits = 2;
  std::size_t radius = 2;
};

struct AlterationSearch {
  std::optional<RingSequence> found;
  std::size_t candidates = 0;
};

/// Experimental: tries every combination of up to max_edits single-symbol
/// insertions or deletions within `radius` of a join point and returns the
/// first candidate accepted by check_alteration.
AlterationSearch search_alteration(const StitchResult& stitched, Symbol gamma,
                                   AlterationOptions options = {});

struct Extension {
  RingSequence ring;
  Symbol residue = 0;  // the inserted a
  std::optional<std::size_t> position;  // insertion index in the input; empty if unchanged
  std::size_t run_length = 0;  // t, length of the run that was extended
  Symbol weight_mod_q = 0;
  Symbol alt_weight_mod_q = 0;
};

/// E_a for a = 1 - w_q(S): lengthens the first longest run of a by one.
/// Returns S unchanged when w_q(S) = 1. Throws PreconditionError if S is
/// neither orientable nor negative orientable, contains a^{n-1}, has no run
/// of a, or is a single wrapping run; VerificationError if the result loses
/// a kind S had, or misses period m + 1 or weight 1.
Extension extend_D(const RingSequence& s, std::size_t n);

/// Inserts (a, -a) at the first longest signed run of a, where a is the least
/// solution of 2a = 1 - w_q(S). Throws PreconditionError if S is not
/// orientable, w_q(S) = 1, no a exists, a^{n-1} occurs, or the run is missing
/// or wraps; VerificationError if the result is not orientable of period m + 2.
Extension extend_A(const RingSequence& s, std::size_t n);

/// Every run of 0 has length <= n - 2. A ring made only of zeros is never good.
bool is_good(const RingSequence& s, std::size_t n);

enum class OrientKind { orientable, negative_orientable };

const char* to_string(OrientKind k);

struct TraceStep {
  std::size_t order = 0;
  std::size_t period = 0;
  Symbol weight_mod_q = 0;
  OrientKind kind = OrientKind::orientable;
  std::optional<Symbol> residue;  // extension residue; empty for the starter
};

struct RecursionTrace {
  std::vector<TraceStep> steps;  // starter first, then one entry per iteration
  RingSequence final;
};

/// Applies k rounds of lift_D (least rotation of the single cycle) followed by
/// extend_D. Every stage is checked for goodness, the alternating kind, weight
/// 1 and m' = q*m + 1; a failure throws with the offending step.
RecursionTrace recursive_generate(const RingSequence& s, std::size_t n0, std::size_t steps);

}  // namespace orient
