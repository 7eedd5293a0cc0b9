#include "orient/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "orient/bounds.hpp"
#include "orient/errors.hpp"
#include "orient/morphisms.hpp"

namespace orient {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<Symbol> window_symbols(const RingSequence& s, std::size_t i, std::size_t n) {
  std::vector<Symbol> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = s.at(i + k);
  return w;
}

bool suffixes_match(const RingSequence& s, std::size_t i, const RingSequence& t, std::size_t j,
                    std::size_t n) {
  for (std::size_t k = 1; k < n; ++k) {
    if (s.at(i + k) != t.at(j + k)) return false;
  }
  return true;
}

std::string describe(const RingSequence& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string describe_conflicts(const RingSequence& s, std::size_t n) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& c : window_conflicts(s, n, 8)) {
    os << (shown++ ? "; " : "") << to_string(c.type) << " " << window(s, c.i, n) << "@" << c.i
       << " vs " << window(s, c.j, n) << "@" << c.j;
  }
  return os.str();
}

std::vector<Symbol> insert_at(std::span<const Symbol> src, std::size_t pos,
                              std::initializer_list<Symbol> values) {
  std::vector<Symbol> out(src.begin(), src.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), values);
  return out;
}

}  // namespace

RingSequence prime_order2(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("prime_order2 requires an odd prime, got " + std::to_string(p));
  }
  const Alphabet z(p);
  std::vector<Symbol> out;
  out.reserve(std::size_t{p} * (p - 1) / 2);
  for (std::uint32_t i = 0; i <= (p - 3) / 2; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) out.push_back(z.mul(i + 1, j));
  }
  RingSequence s(std::move(out), z);
  if (!is_orientable(s, 2) || BigInt(s.period()) != period_bound(p, 2).table_bound) {
    throw VerificationError("prime_order2(" + std::to_string(p) + ") produced " + describe(s) +
                            ", which is not a maximal orientable sequence of order 2");
  }
  return s;
}

std::optional<ConjugatePair> find_conjugate_pair(const RingSequence& s, const RingSequence& t,
                                                 std::size_t n) {
  for (std::size_t i = 0; i < s.period(); ++i) {
    for (std::size_t j = 0; j < t.period(); ++j) {
      if (s.at(i) != t.at(j) && suffixes_match(s, i, t, j, n)) return ConjugatePair{i, j};
    }
  }
  return std::nullopt;
}

RingSequence join_conjugate(const RingSequence& s, const RingSequence& t, std::size_t n,
                            std::optional<ConjugatePair> pair) {
  if (s.q() != t.q()) throw PreconditionError("join_conjugate: alphabets differ");
  if (n < 1) throw std::invalid_argument("join_conjugate: order must be >= 1");
  if (!is_n_window(s, n) || !is_n_window(t, n)) {
    throw PreconditionError("join_conjugate: inputs must be " + std::to_string(n) +
                            "-window sequences");
  }
  if (!are_disjoint(s, t, n)) throw PreconditionError("join_conjugate: sequences not disjoint");
  if (!pair) pair = find_conjugate_pair(s, t, n);
  if (!pair) throw PreconditionError("join_conjugate: no conjugate pair");
  auto [i, j] = *pair;
  if (s.at(i) == t.at(j) || !suffixes_match(s, i, t, j, n)) {
    throw PreconditionError("join_conjugate: supplied windows are not conjugate");
  }

  auto base = s;
  i %= s.period();
  if (i + n > s.period()) {
    base = rotate(s, i);
    i = 0;
  }
  const auto l = base.period();
  const auto m = t.period();
  std::vector<Symbol> out;
  out.reserve(l + m);
  for (std::size_t k = 0; k < i + n; ++k) out.push_back(base[k]);
  for (std::size_t k = 0; k < m; ++k) out.push_back(t.at(j + n + k));
  for (std::size_t k = i + n; k < l; ++k) out.push_back(base[k]);

  RingSequence joined(std::move(out), s.alphabet());
  if (joined.period() != l + m || !is_n_window(joined, n)) {
    throw VerificationError("join_conjugate produced " + describe(joined) + ", not a " +
                            std::to_string(n) + "-window sequence of period " +
                            std::to_string(l + m));
  }
  return joined;
}

StitchResult stitch_alternating(const RingSequence& s, Symbol beta, Symbol gamma, std::size_t n) {
  const auto& z = s.alphabet();
  const auto q = z.q();
  if (n < 1) throw std::invalid_argument("stitch_alternating: order must be >= 1");
  if (!z.contains(beta) || !z.is_unit(beta)) {
    throw PreconditionError("stitch_alternating: beta must be a unit");
  }
  if (!z.contains(gamma) || !z.is_unit(gamma)) {
    throw PreconditionError("stitch_alternating: gamma must be a unit");
  }
  if (weight_mod_q(s) != 0) {
    throw PreconditionError("stitch_alternating: weight " + std::to_string(weight_mod_q(s)) +
                            " mod " + std::to_string(q) + " is not 0");
  }
  if (longest_run_length(s, gamma) < n) {
    throw PreconditionError("stitch_alternating: no run " + std::to_string(gamma) + "^" +
                            std::to_string(n));
  }
  if (!is_n_window(s, n)) {
    throw PreconditionError("stitch_alternating: input is not a " + std::to_string(n) +
                            "-window sequence");
  }

  const auto lift = lift_D(s, beta, n);
  const auto order = n + 1;
  const auto m = s.period();
  const auto& cycles = lift.cycles;

  // node id = c * m + position of the window within cycle c
  std::map<std::vector<Symbol>, std::size_t> node_of;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t p = 0; p < m; ++p) node_of.emplace(window_symbols(cycles[c].ring, p, order), c * m + p);
  }
  const auto total = cycles.size() * m;
  std::vector<std::size_t> succ(total), pred(total);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t p = 0; p < m; ++p) {
      succ[c * m + p] = c * m + (p + 1) % m;
      pred[c * m + (p + 1) % m] = c * m + p;
    }
  }

  const auto lambda = z.mul(z.inverse(beta), gamma);
  const auto alt = alternating_cycle(lambda, order, q);
  std::vector<std::size_t> vertex;
  std::set<std::size_t> used_cycles;
  for (const auto& x : alt.vertices) {
    const auto it = node_of.find(std::vector<Symbol>(x.symbols().begin(), x.symbols().end()));
    if (it == node_of.end()) {
      std::ostringstream msg;
      msg << "stitch_alternating: alternating vertex " << x << " lies on no lifted cycle";
      throw VerificationError(msg.str());
    }
    if (!used_cycles.insert(it->second / m).second) {
      throw VerificationError("stitch_alternating: two alternating vertices share a cycle");
    }
    vertex.push_back(it->second);
  }

  std::vector<std::size_t> rewired;
  for (std::size_t i = 0; i + 1 < vertex.size(); ++i) {
    const auto x = vertex[i];
    const auto y = vertex[i + 1];
    const auto p = pred[y];
    const auto old = succ[x];
    succ[x] = y;
    pred[y] = x;
    succ[p] = old;
    pred[old] = p;
    rewired.push_back(x);
    rewired.push_back(p);
  }

  std::vector<Symbol> out;
  std::vector<std::size_t> position(total, total);
  out.reserve(total);
  auto node = vertex.front();
  for (std::size_t k = 0; k < total; ++k) {
    if (position[node] != total) {
      throw VerificationError("stitch_alternating: rewired successor graph is not one cycle");
    }
    position[node] = k;
    out.push_back(cycles[node / m].ring[node % m]);
    node = succ[node];
  }
  if (node != vertex.front()) {
    throw VerificationError("stitch_alternating: rewired successor graph is not one cycle");
  }

  const auto offset = least_rotation_offset(out);
  StitchResult r{canonical_rotation(RingSequence(std::move(out), z)), order, {}};
  for (const auto v : rewired) r.join_points.push_back((position[v] + total - offset) % total);
  std::sort(r.join_points.begin(), r.join_points.end());
  r.join_points.erase(std::unique(r.join_points.begin(), r.join_points.end()), r.join_points.end());

  r.input_special_except_uniform = is_special_except_uniform(s, n);
  r.orientable = is_orientable(r.ring, order);
  r.negative_orientable = is_negative_orientable(r.ring, order);
  if (r.ring.period() != total || !is_n_window(r.ring, order)) {
    throw VerificationError("stitch_alternating: result " + describe(r.ring) + " is not a " +
                            std::to_string(order) + "-window sequence of period " +
                            std::to_string(total));
  }
  if (r.input_special_except_uniform && !r.orientable) {
    throw VerificationError("stitch_alternating: result is not orientable: " +
                            describe_conflicts(r.ring, order));
  }
  return r;
}

AlterationReport check_alteration(const RingSequence& s, std::size_t order, Symbol gamma) {
  AlterationReport r;
  r.n_window = is_n_window(s, order);
  r.orientable = is_orientable(s, order);
  r.negative_orientable = is_negative_orientable(s, order);
  r.special_except_uniform = is_special_except_uniform(s, order);
  r.weight_mod_q = weight_mod_q(s);
  r.contains_uniform_run = longest_run_length(s, gamma % s.q()) >= order;
  r.valid = r.n_window && r.special_except_uniform && r.weight_mod_q == 0 && r.contains_uniform_run;
  return r;
}

AlterationSearch search_alteration(const StitchResult& stitched, Symbol gamma,
                                   AlterationOptions options) {
  AlterationSearch result;
  const auto q = stitched.ring.q();
  const auto order = stitched.order;

  std::function<void(const std::vector<Symbol>&, std::vector<std::size_t>, std::size_t)> visit;
  visit = [&](const std::vector<Symbol>& seq, std::vector<std::size_t> sites, std::size_t edits) {
    if (result.found || edits == options.max_edits) return;
    std::set<std::size_t> positions;
    for (const auto jp : sites) {
      for (std::size_t d = 0; d <= 2 * options.radius + 1; ++d) {
        const auto slots = seq.size() + 1;
        positions.insert((jp + d + slots - options.radius % slots) % slots);
      }
    }
    for (const auto pos : positions) {
      std::vector<std::vector<Symbol>> variants;
      if (pos < seq.size() && seq.size() > 1) {
        auto del = seq;
        del.erase(del.begin() + static_cast<std::ptrdiff_t>(pos));
        variants.push_back(std::move(del));
      }
      for (Symbol c = 0; c < q; ++c) variants.push_back(insert_at(seq, pos, {c}));
      for (auto& v : variants) {
        ++result.candidates;
        RingSequence candidate(v, stitched.ring.alphabet());
        if (check_alteration(candidate, order, gamma).valid) {
          result.found = canonical_rotation(candidate);
          return;
        }
        auto next_sites = sites;
        for (auto& jp : next_sites) {
          if (jp > pos) jp = v.size() > seq.size() ? jp + 1 : jp - 1;
        }
        visit(v, std::move(next_sites), edits + 1);
        if (result.found) return;
      }
    }
  };
  const auto symbols = stitched.ring.symbols();
  visit(std::vector<Symbol>(symbols.begin(), symbols.end()), stitched.join_points, 0);
  return result;
}

Extension extend_D(const RingSequence& s, std::size_t n) {
  const auto& z = s.alphabet();
  const bool os = is_orientable(s, n);
  const bool nos = is_negative_orientable(s, n);
  if (!os && !nos) {
    throw PreconditionError("extend_D: input is neither orientable nor negative orientable");
  }
  const auto a = z.sub(1, weight_mod_q(s));
  Extension e{s, a, std::nullopt};
  e.weight_mod_q = weight_mod_q(s);
  e.alt_weight_mod_q = alt_weight_mod_q(s);
  if (a == 0) return e;

  if (n >= 1 && longest_run_length(s, a) >= n - 1) {
    throw PreconditionError("extend_D: input contains " + std::to_string(a) + "^" +
                            std::to_string(n - 1));
  }
  const auto run = max_run(s, a, false);
  if (!run) throw PreconditionError("extend_D: no run of " + std::to_string(a));
  if (run->wraps) throw PreconditionError("extend_D: run of " + std::to_string(a) + " wraps");

  e.ring = RingSequence(insert_at(s.symbols(), run->start, {a}), z);
  e.position = run->start;
  e.run_length = run->length;
  e.weight_mod_q = weight_mod_q(e.ring);
  e.alt_weight_mod_q = alt_weight_mod_q(e.ring);
  if (e.ring.period() != s.period() + 1 || e.weight_mod_q != 1 ||
      (os && !is_orientable(e.ring, n)) || (nos && !is_negative_orientable(e.ring, n))) {
    throw VerificationError("extend_D: E_" + std::to_string(a) + " gave " + describe(e.ring) +
                            "; conflicts: " + describe_conflicts(e.ring, n));
  }
  return e;
}

Extension extend_A(const RingSequence& s, std::size_t n) {
  const auto& z = s.alphabet();
  if (!is_orientable(s, n)) throw PreconditionError("extend_A: input is not orientable");
  const auto w = weight_mod_q(s);
  if (w == 1) throw PreconditionError("extend_A: weight is already 1");
  const auto halves = z.halves(z.sub(1, w));
  if (halves.empty()) {
    throw PreconditionError("extend_A: no solution for 2a = " + std::to_string(z.sub(1, w)));
  }
  const auto a = halves.front();
  if (n >= 1 && longest_run_length(s, a) >= n - 1) {
    throw PreconditionError("extend_A: input contains " + std::to_string(a) + "^" +
                            std::to_string(n - 1));
  }
  const auto run = max_run(s, a, true);
  if (!run) throw PreconditionError("extend_A: no signed run of " + std::to_string(a));
  if (run->wraps) throw PreconditionError("extend_A: signed run of " + std::to_string(a) + " wraps");

  Extension e{RingSequence(insert_at(s.symbols(), run->start, {a, z.neg(a)}), z), a, std::nullopt};
  e.position = run->start;
  e.run_length = run->length;
  e.weight_mod_q = weight_mod_q(e.ring);
  e.alt_weight_mod_q = alt_weight_mod_q(e.ring);
  if (e.ring.period() != s.period() + 2 || !is_orientable(e.ring, n)) {
    throw VerificationError("extend_A: inserting (" + std::to_string(a) + "," +
                            std::to_string(z.neg(a)) + ") gave " + describe(e.ring) +
                            "; conflicts: " + describe_conflicts(e.ring, n));
  }
  return e;
}

bool is_good(const RingSequence& s, std::size_t n) {
  const auto run = max_run(s, 0, false);
  if (!run) return true;
  if (run->wraps) return false;
  return run->length + 2 <= n;
}

const char* to_string(OrientKind k) {
  switch (k) {
    case OrientKind::orientable: return "orientable";
    case OrientKind::negative_orientable: return "negative_orientable";
  }
  return "?";
}

RecursionTrace recursive_generate(const RingSequence& s, std::size_t n0, std::size_t steps) {
  const auto q = s.q();
  OrientKind kind;
  if (is_orientable(s, n0)) {
    kind = OrientKind::orientable;
  } else if (is_negative_orientable(s, n0)) {
    kind = OrientKind::negative_orientable;
  } else {
    throw PreconditionError("recursive_generate: starter is neither orientable nor negative orientable");
  }
  if (weight_mod_q(s) != 1) {
    throw PreconditionError("recursive_generate: starter weight is " +
                            std::to_string(weight_mod_q(s)) + ", expected 1");
  }
  if (!is_good(s, n0)) throw PreconditionError("recursive_generate: starter is not good");

  RecursionTrace trace{{TraceStep{n0, s.period(), weight_mod_q(s), kind, std::nullopt}}, s};
  for (std::size_t k = 1; k <= steps; ++k) {
    const auto& cur = trace.final;
    const auto n = n0 + k - 1;
    const auto fail = [&](const std::string& what) {
      return VerificationError("recursive_generate step " + std::to_string(k) + " (order " +
                               std::to_string(n + 1) + "): " + what);
    };
    const auto lift = lift_D(cur, 1, n);
    if (lift.cycles.size() != 1) throw fail("lift is not a single cycle");
    const auto t = canonical_rotation(lift.cycles.front().ring);
    if (weight_mod_q(t) == 1) throw fail("lifted weight is 1, so E_a would add nothing");
    const auto next_kind =
        kind == OrientKind::orientable ? OrientKind::negative_orientable : OrientKind::orientable;

    Extension e = [&] {
      try {
        return extend_D(t, n + 1);
      } catch (const std::exception& ex) {
        throw fail(ex.what());
      }
    }();
    const auto& r = e.ring;
    if (r.period() != std::size_t{q} * cur.period() + 1) throw fail("period recurrence broken");
    if (weight_mod_q(r) != 1) throw fail("weight is not 1");
    if (!is_good(r, n + 1)) throw fail("result is not good");
    const bool ok = next_kind == OrientKind::orientable ? is_orientable(r, n + 1)
                                                        : is_negative_orientable(r, n + 1);
    if (!ok) throw fail(std::string("result is not ") + to_string(next_kind));
    trace.steps.push_back(TraceStep{n + 1, r.period(), weight_mod_q(r), next_kind, e.residue});
    trace.final = r;
    kind = next_kind;
  }
  return trace;
}

}  // namespace orient
