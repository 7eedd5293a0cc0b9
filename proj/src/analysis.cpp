#include "orient/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace orient {
namespace {

enum class Transform { identity, reverse, neg_reverse };

// Keys for the m cyclic windows of a ring, optionally reversed/negated.
// When n * bits(q) <= 64 the key is the packed window itself (exact);
// otherwise it is a 64-bit hash and equal keys are confirmed symbol by symbol.
class WindowKeys {
 public:
  WindowKeys(const RingSequence& s, std::size_t n, Transform t) : s_(s), n_(n), t_(t) {
    if (n == 0) throw std::invalid_argument("window length must be >= 1");
    const auto m = s.period();
    bits_ = static_cast<unsigned>(std::bit_width(s.q() - 1u));
    exact_ = bits_ * n <= 64;
    keys_.resize(m);
    if (exact_) {
      fill_packed();
    } else {
      for (std::size_t i = 0; i < m; ++i) keys_[i] = hash_window(i);
    }
  }

  std::size_t size() const { return keys_.size(); }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }

  Symbol symbol(std::size_t i, std::size_t k) const {
    const auto m = s_.period();
    switch (t_) {
      case Transform::identity: return s_[(i + k) % m];
      case Transform::reverse: return s_[(i + n_ - 1 - k) % m];
      case Transform::neg_reverse: return s_.alphabet().neg(s_[(i + n_ - 1 - k) % m]);
    }
    return 0;
  }

  bool same(std::size_t i, const WindowKeys& other, std::size_t j) const {
    if (keys_[i] != other.keys_[j]) return false;
    if (exact_) return true;
    for (std::size_t k = 0; k < n_; ++k) {
      if (symbol(i, k) != other.symbol(j, k)) return false;
    }
    return true;
  }

 private:
  Symbol sym(std::size_t idx) const {
    const auto v = s_.at(idx);
    return t_ == Transform::neg_reverse ? s_.alphabet().neg(v) : v;
  }

  void fill_packed() {
    const auto m = s_.period();
    const std::uint64_t mask = bits_ * n_ == 64 ? ~0ull : ((1ull << (bits_ * n_)) - 1);
    std::uint64_t key = 0;
    if (t_ == Transform::identity) {
      // symbol k of the window sits at bit offset bits*k
      for (std::size_t k = 0; k < n_; ++k) key |= std::uint64_t{sym(k)} << (bits_ * k);
      for (std::size_t i = 0; i < m; ++i) {
        keys_[i] = key;
        key = (key >> bits_) | (std::uint64_t{sym(i + n_)} << (bits_ * (n_ - 1)));
      }
    } else {
      // reversed: symbol s_{i+j} sits at bit offset bits*(n-1-j)
      for (std::size_t j = 0; j < n_; ++j) key = (key << bits_) | sym(j);
      key &= mask;
      for (std::size_t i = 0; i < m; ++i) {
        keys_[i] = key;
        key = ((key << bits_) | sym(i + n_)) & mask;
      }
    }
  }

  std::uint64_t hash_window(std::size_t i) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t k = 0; k < n_; ++k) {
      h ^= symbol(i, k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0x100000001b3ull;
    }
    return h;
  }

  const RingSequence& s_;
  std::size_t n_;
  Transform t_;
  unsigned bits_ = 0;
  bool exact_ = true;
  std::vector<std::uint64_t> keys_;
};

using KeyIndex = std::unordered_multimap<std::uint64_t, std::size_t>;

KeyIndex index_of(const WindowKeys& w) {
  KeyIndex idx;
  idx.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) idx.emplace(w.key(i), i);
  return idx;
}

bool has_duplicate(const WindowKeys& w) {
  KeyIndex idx;
  idx.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto [lo, hi] = idx.equal_range(w.key(i));
    for (auto it = lo; it != hi; ++it) {
      if (w.same(it->second, w, i)) return true;
    }
    idx.emplace(w.key(i), i);
  }
  return false;
}

// True iff some window of `a` equals some window of `b`.
bool intersects(const WindowKeys& a, const KeyIndex& a_index, const WindowKeys& b) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    const auto [lo, hi] = a_index.equal_range(b.key(j));
    for (auto it = lo; it != hi; ++it) {
      if (a.same(it->second, b, j)) return true;
    }
  }
  return false;
}

void require_same_alphabet(const RingSequence& s, const RingSequence& t) {
  if (s.q() != t.q()) throw std::invalid_argument("sequences are over different alphabets");
}

// Collects (i, j) with window i of `a` equal to window j of `b`.
void matches(const WindowKeys& a, const KeyIndex& a_index, const WindowKeys& b, ConflictType type,
             std::vector<WindowConflict>& out) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    const auto [lo, hi] = a_index.equal_range(b.key(j));
    for (auto it = lo; it != hi; ++it) {
      const auto i = it->second;
      if (!a.same(i, b, j)) continue;
      if (type == ConflictType::repeat && i >= j) continue;
      if (type != ConflictType::repeat && i > j) continue;
      out.push_back({type, i, j});
    }
  }
}

bool is_uniform_window(const RingSequence& s, std::size_t i, std::size_t n) {
  for (std::size_t k = 1; k < n; ++k) {
    if (s.at(i + k) != s.at(i)) return false;
  }
  return true;
}

}  // namespace

const char* to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::orientable: return "orientable";
    case SequenceKind::negative_orientable: return "negative_orientable";
    case SequenceKind::special: return "special";
  }
  return "?";
}

bool has_kind(const RingSequence& s, std::size_t n, SequenceKind kind) {
  switch (kind) {
    case SequenceKind::orientable: return is_orientable(s, n);
    case SequenceKind::negative_orientable: return is_negative_orientable(s, n);
    case SequenceKind::special: return is_special(s, n);
  }
  return false;
}

const char* to_string(ConflictType t) {
  switch (t) {
    case ConflictType::repeat: return "repeat";
    case ConflictType::reverse: return "reverse";
    case ConflictType::negated_reverse: return "negated_reverse";
  }
  return "?";
}

std::vector<WindowConflict> window_conflicts(const RingSequence& s, std::size_t n,
                                             std::size_t limit) {
  const WindowKeys fwd(s, n, Transform::identity);
  const auto idx = index_of(fwd);
  std::vector<WindowConflict> out;
  matches(fwd, idx, fwd, ConflictType::repeat, out);
  matches(fwd, idx, WindowKeys(s, n, Transform::reverse), ConflictType::reverse, out);
  matches(fwd, idx, WindowKeys(s, n, Transform::neg_reverse), ConflictType::negated_reverse, out);
  std::sort(out.begin(), out.end(), [](const WindowConflict& a, const WindowConflict& b) {
    return std::tie(a.i, a.j, a.type) < std::tie(b.i, b.j, b.type);
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

bool is_special_except_uniform(const RingSequence& s, std::size_t n) {
  for (const auto& c : window_conflicts(s, n)) {
    if (c.type == ConflictType::repeat) return false;
    if (!is_uniform_window(s, c.i, n) && !is_uniform_window(s, c.j, n)) return false;
  }
  return true;
}

bool is_n_window(const RingSequence& s, std::size_t n) {
  return !has_duplicate(WindowKeys(s, n, Transform::identity));
}

bool is_orientable(const RingSequence& s, std::size_t n) {
  const WindowKeys fwd(s, n, Transform::identity);
  if (has_duplicate(fwd)) return false;
  return !intersects(fwd, index_of(fwd), WindowKeys(s, n, Transform::reverse));
}

bool is_negative_orientable(const RingSequence& s, std::size_t n) {
  const WindowKeys fwd(s, n, Transform::identity);
  if (has_duplicate(fwd)) return false;
  return !intersects(fwd, index_of(fwd), WindowKeys(s, n, Transform::neg_reverse));
}

bool is_special(const RingSequence& s, std::size_t n) {
  const WindowKeys fwd(s, n, Transform::identity);
  if (has_duplicate(fwd)) return false;
  const auto idx = index_of(fwd);
  return !intersects(fwd, idx, WindowKeys(s, n, Transform::reverse)) &&
         !intersects(fwd, idx, WindowKeys(s, n, Transform::neg_reverse));
}

bool are_disjoint(const RingSequence& s, const RingSequence& t, std::size_t n) {
  require_same_alphabet(s, t);
  const WindowKeys a(s, n, Transform::identity);
  return !intersects(a, index_of(a), WindowKeys(t, n, Transform::identity));
}

bool are_o_disjoint(const RingSequence& s, const RingSequence& t, std::size_t n) {
  require_same_alphabet(s, t);
  const WindowKeys a(s, n, Transform::identity);
  const auto idx = index_of(a);
  return !intersects(a, idx, WindowKeys(t, n, Transform::identity)) &&
         !intersects(a, idx, WindowKeys(t, n, Transform::reverse));
}

bool are_no_disjoint(const RingSequence& s, const RingSequence& t, std::size_t n) {
  require_same_alphabet(s, t);
  const WindowKeys a(s, n, Transform::identity);
  const auto idx = index_of(a);
  return !intersects(a, idx, WindowKeys(t, n, Transform::identity)) &&
         !intersects(a, idx, WindowKeys(t, n, Transform::neg_reverse));
}

bool is_primitive(const RingSequence& s, std::size_t n) {
  const WindowKeys a(s, n, Transform::identity);
  const auto idx = index_of(a);
  for (Symbol lambda = 1; lambda < s.q(); ++lambda) {
    const auto shifted = translate(s, lambda);
    if (intersects(a, idx, WindowKeys(shifted, n, Transform::identity))) return false;
  }
  return true;
}

std::vector<RunLocation> find_runs(const RingSequence& s, Symbol a, bool signed_run) {
  const auto& z = s.alphabet();
  const auto m = s.period();
  const auto minus_a = z.neg(a);
  // expected symbol at offset k within a run starting at a
  const auto expected = [&](std::size_t k) { return signed_run && k % 2 == 1 ? minus_a : a; };
  const auto before = signed_run ? minus_a : a;

  std::vector<RunLocation> runs;
  for (std::size_t r = 0; r < m; ++r) {
    if (s[r] != a || s[(r + m - 1) % m] == before) continue;
    std::size_t t = 0;
    while (t < m && s[(r + t) % m] == expected(t)) ++t;
    runs.push_back({r, t, a, signed_run, false});
  }
  if (runs.empty()) {
    // either a never starts a run, or the whole ring is one run with no start
    bool whole = true;
    for (std::size_t i = 0; i < m && whole; ++i) {
      whole = signed_run ? s[(i + 1) % m] == z.neg(s[i]) : s[i] == a;
    }
    if (whole && (s[0] == a || s[0] == minus_a)) runs.push_back({0, m, a, signed_run, true});
  }
  return runs;
}

std::optional<RunLocation> max_run(const RingSequence& s, Symbol a, bool signed_run) {
  std::optional<RunLocation> best;
  for (const auto& r : find_runs(s, a, signed_run)) {
    if (!best || r.length > best->length) best = r;
  }
  return best;
}

std::size_t longest_run_length(const RingSequence& s, Symbol a) {
  const auto r = max_run(s, a, false);
  return r ? r->length : 0;
}

}  // namespace orient
