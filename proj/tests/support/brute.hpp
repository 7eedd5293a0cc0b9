#pragma once

// Slow, literal reference implementations over plain vectors. Nothing here
// calls into the library, so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace brute {

using Word = std::vector<int>;

inline int mod(long long v, int q) { return static_cast<int>(((v % q) + q) % q); }

inline Word window(const Word& s, std::size_t i, std::size_t n) {
  Word w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = s[(i + k) % s.size()];
  return w;
}

inline Word rev(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word neg(Word w, int q) {
  for (auto& x : w) x = mod(-x, q);
  return w;
}

inline std::size_t min_period(const Word& s) {
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (s.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < s.size() && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return p;
  }
  return s.size();
}

inline Word reduce(const Word& s) { return Word(s.begin(), s.begin() + min_period(s)); }

inline Word least_rotation(const Word& s) {
  Word best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    Word r(s.begin() + k, s.end());
    r.insert(r.end(), s.begin(), s.begin() + k);
    best = std::min(best, r);
  }
  return best;
}

inline bool n_window(const Word& s, std::size_t n) {
  std::set<Word> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!seen.insert(window(s, i, n)).second) return false;
  }
  return true;
}

inline bool orientable(const Word& s, std::size_t n) {
  if (!n_window(s, n)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (window(s, i, n) == rev(window(s, j, n))) return false;
    }
  }
  return true;
}

inline bool negative_orientable(const Word& s, std::size_t n, int q) {
  if (!n_window(s, n)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (window(s, i, n) == neg(rev(window(s, j, n)), q)) return false;
    }
  }
  return true;
}

inline long long weight(const Word& s) { return std::accumulate(s.begin(), s.end(), 0LL); }

inline std::size_t longest_run(const Word& s, int a) {
  if (std::all_of(s.begin(), s.end(), [&](int x) { return x == a; })) return s.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t t = 0;
    while (t < s.size() && s[(i + t) % s.size()] == a) ++t;
    best = std::max(best, t);
  }
  return best;
}

// All preimage rings (least rotation, with multiplicity per t0) using the
// closed forms t_i = t_0 + b * sum_{j<i} s_j and
// t_i = (-1)^i t_0 + sum_{j<i} (-1)^{i-1-j} s_j, unrolled over 2q periods.
inline std::vector<Word> lift_D(const Word& s, int q, int beta_inverse) {
  std::vector<Word> out;
  const auto m = s.size();
  for (int t0 = 0; t0 < q; ++t0) {
    Word t(2 * q * m);
    long long acc = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = mod(t0 + static_cast<long long>(beta_inverse) * acc, q);
      acc += s[i % m];
    }
    out.push_back(least_rotation(reduce(t)));
  }
  return out;
}

inline std::vector<Word> lift_A(const Word& s, int q) {
  std::vector<Word> out;
  const auto m = s.size();
  for (int t0 = 0; t0 < q; ++t0) {
    Word t(2 * q * m);
    for (std::size_t i = 0; i < t.size(); ++i) {
      long long v = (i % 2 ? -1 : 1) * static_cast<long long>(t0);
      for (std::size_t j = 0; j < i; ++j) v += ((i - 1 - j) % 2 ? -1 : 1) * s[j % m];
      t[i] = mod(v, q);
    }
    out.push_back(least_rotation(reduce(t)));
  }
  return out;
}

inline Word apply_D(const Word& t, int q, int beta) {
  Word s(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) s[i] = mod(beta * (t[(i + 1) % t.size()] - t[i]), q);
  return s;
}

// Longest orientable cycle by plain DFS over tuples: no symmetry reduction,
// start vertex is the least vertex of the cycle, no bound pruning.
inline std::size_t max_orientable_period(int q, std::size_t n) {
  std::vector<Word> vertices;
  Word w(n, 0);
  while (true) {
    if (w != rev(w)) vertices.push_back(w);
    std::size_t k = n;
    while (k > 0 && ++w[k - 1] == q) w[--k] = 0;
    if (k == 0) break;
  }
  std::size_t best = 0;
  std::set<Word> used;
  std::vector<Word> path;
  auto dfs = [&](auto&& self, const Word& start) -> void {
    const Word last = path.back();
    for (int c = 0; c < q; ++c) {
      Word next(last.begin() + 1, last.end());
      next.push_back(c);
      if (next == start) {
        best = std::max(best, path.size());
        continue;
      }
      if (next < start || next == rev(next) || used.count(next) || used.count(rev(next))) continue;
      used.insert(next);
      path.push_back(next);
      self(self, start);
      path.pop_back();
      used.erase(next);
    }
  };
  for (const auto& v : vertices) {
    used = {v};
    path = {v};
    dfs(dfs, v);
  }
  return best;
}

inline Word random_word(std::mt19937_64& rng, int q, std::size_t m) {
  std::uniform_int_distribution<int> d(0, q - 1);
  Word w(m);
  for (auto& x : w) x = d(rng);
  return w;
}

}  // namespace brute
