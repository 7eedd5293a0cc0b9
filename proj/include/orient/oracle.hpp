#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "orient/analysis.hpp"
#include "orient/ring.hpp"

namespace orient {

// Literal all-pairs checks, O(m^2 n). Used to cross-check the fast verifiers.
bool naive_is_n_window(const RingSequence& s, std::size_t n);
bool naive_is_orientable(const RingSequence& s, std::size_t n);
bool naive_is_negative_orientable(const RingSequence& s, std::size_t n);

struct SearchOptions {
  SequenceKind kind = SequenceKind::orientable;
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0;       // 0 = unlimited
  /// Fix one start vertex per orbit under rotation, reversal and translation
  /// (orientable) or reversal and negation (other kinds).
  bool symmetry = true;
  std::uint64_t vertex_cap = std::uint64_t{1} << 22;  // q^n limit
  /// Written when the search stops on a budget, and every checkpoint_every nodes if nonzero.
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_every = 0;
};

struct SearchOutcome {
  std::uint32_t q = 0;
  std::size_t n = 0;
  SequenceKind kind = SequenceKind::orientable;
  std::size_t max_period_found = 0;
  std::optional<RingSequence> witness;  // least rotation
  /// No sequence of larger period exists. Also set when the incumbent reached
  /// the period bound (stopped_at_bound).
  bool exhaustive = false;
  bool stopped_at_bound = false;
  std::uint64_t nodes_explored = 0;
  bool node_limit_hit = false;
  bool wall_limit_hit = false;
  bool symmetry_reduced = true;
  bool resumed = false;
};

/// Longest cycle in the de Bruijn digraph B_n(q) whose vertices form an
/// orientable (or negative orientable, or special) sequence. Throws
/// std::invalid_argument for q < 2, n < 1 or q^n above the cap.
SearchOutcome max_orientable_period(std::uint32_t q, std::size_t n, const SearchOptions& options = {});

/// Continues a search from a checkpoint file; budgets in `options` apply to
/// the remaining work. Throws ParseError on a malformed file.
SearchOutcome resume_search(const std::filesystem::path& checkpoint, SearchOptions options = {});

struct StarterQuery {
  SequenceKind kind = SequenceKind::orientable;
  std::optional<Symbol> weight_mod_q = Symbol{1};
  bool good = true;
  std::size_t limit = 0;  // 0 = all
  std::uint64_t max_nodes = 50'000'000;
};

struct StarterSearch {
  std::vector<RingSequence> rings;  // least rotations, longest first, then lexicographic
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
};

/// Every ring of the requested kind at order n that meets the weight and
/// goodness filters.
StarterSearch find_starters(std::uint32_t q, std::size_t n, const StarterQuery& query = {});

}  // namespace orient
