#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "orient/ring.hpp"

namespace orient {

// Window predicates. All of them read windows cyclically over one period and
// accept any period m >= 1; n is the window length (order).

bool is_n_window(const RingSequence& s, std::size_t n);
/// n-window and no window equals the reverse of any window (itself included).
bool is_orientable(const RingSequence& s, std::size_t n);
/// n-window and no window equals the negated reverse of any window.
bool is_negative_orientable(const RingSequence& s, std::size_t n);
/// Orientable and negative orientable.
bool is_special(const RingSequence& s, std::size_t n);

// Pairwise relations. Both rings must share q (std::invalid_argument otherwise).
bool are_disjoint(const RingSequence& s, const RingSequence& t, std::size_t n);
/// Disjoint, and no window of s is the reverse of a window of t.
bool are_o_disjoint(const RingSequence& s, const RingSequence& t, std::size_t n);
/// Disjoint, and no window of s is the negated reverse of a window of t.
bool are_no_disjoint(const RingSequence& s, const RingSequence& t, std::size_t n);

/// s shares no n-window with any of its non-zero translates.
bool is_primitive(const RingSequence& s, std::size_t n);

enum class SequenceKind { orientable, negative_orientable, special };

const char* to_string(SequenceKind k);
/// Dispatches to is_orientable / is_negative_orientable / is_special.
bool has_kind(const RingSequence& s, std::size_t n, SequenceKind kind);

enum class ConflictType { repeat, reverse, negated_reverse };

const char* to_string(ConflictType t);

/// Window i equals window j (repeat, i < j), the reverse of window j, or the
/// negated reverse of window j (i <= j for both).
struct WindowConflict {
  ConflictType type;
  std::size_t i;
  std::size_t j;
};

/// Every conflict among the n-windows of s, up to `limit` entries, sorted by (i, j, type).
std::vector<WindowConflict> window_conflicts(
    const RingSequence& s, std::size_t n,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Orientable and negative orientable apart from conflicts in which one of the
/// two windows is uniform; repeated windows are never excused.
bool is_special_except_uniform(const RingSequence& s, std::size_t n);

/// A run a^t, or a signed run (a, -a, a, ...) when `signed_run` is set, that
/// cannot be extended at either end. `wraps` marks the degenerate case where
/// the whole ring is one run; then start = 0 and length = period.
struct RunLocation {
  std::size_t start = 0;
  std::size_t length = 0;
  Symbol symbol = 0;
  bool signed_run = false;
  bool wraps = false;

  friend bool operator==(const RunLocation&, const RunLocation&) = default;
};

/// All runs of `a` in order of start index.
std::vector<RunLocation> find_runs(const RingSequence& s, Symbol a, bool signed_run);
/// The longest run of `a`; ties go to the smallest start index. Empty when a
/// does not start any run.
std::optional<RunLocation> max_run(const RingSequence& s, Symbol a, bool signed_run);

/// Length of the longest cyclic run of `a` (period() for a constant ring of a).
std::size_t longest_run_length(const RingSequence& s, Symbol a);

}  // namespace orient
