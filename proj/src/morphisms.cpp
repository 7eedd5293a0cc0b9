#include "orient/morphisms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "orient/analysis.hpp"
#include "orient/errors.hpp"

namespace orient {
namespace {

void require_unit(const Alphabet& z, Symbol beta) {
  if (!z.is_unit(beta)) {
    throw std::invalid_argument("beta=" + std::to_string(beta) + " is not a unit modulo " +
                                std::to_string(z.q()));
  }
}

// Runs the preimage recursion from t0 block by block (one block = one period
// of s) until the state returns to t0.
template <class Step>
std::vector<Symbol> unroll(const RingSequence& s, Symbol t0, Step step, std::size_t max_blocks) {
  std::vector<Symbol> out;
  Symbol t = t0;
  for (std::size_t block = 0; block < max_blocks; ++block) {
    for (std::size_t i = 0; i < s.period(); ++i) {
      out.push_back(t);
      t = step(i, t);
    }
    if (t == t0) return out;
  }
  throw VerificationError("preimage starting at " + std::to_string(t0) + " did not close after " +
                          std::to_string(max_blocks) + " periods");
}

void group_cycles(LiftResult& r, const std::vector<std::size_t>& predicted) {
  std::map<RingSequence, std::size_t> by_canonical;
  for (Symbol t0 = 0; t0 < r.preimages.size(); ++t0) {
    const auto& ring = r.preimages[t0];
    if (ring.period() != predicted[t0]) {
      std::ostringstream msg;
      msg << "preimage from t0=" << t0 << " has period " << ring.period() << ", expected "
          << predicted[t0];
      throw VerificationError(msg.str());
    }
    const auto [it, inserted] = by_canonical.try_emplace(canonical_rotation(ring), r.cycles.size());
    if (inserted) {
      LiftCycle c{ring, t0, 0, predicted[t0]};
      c.n_window = is_n_window(ring, r.order);
      c.orientable = is_orientable(ring, r.order);
      c.negative_orientable = is_negative_orientable(ring, r.order);
      r.cycles.push_back(std::move(c));
    }
    ++r.cycles[it->second].shifts;
  }
  for (std::size_t i = 0; i < r.cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < r.cycles.size(); ++j) {
      const auto& a = r.cycles[i].ring;
      const auto& b = r.cycles[j].ring;
      r.pairwise_disjoint = r.pairwise_disjoint && are_disjoint(a, b, r.order);
      r.pairwise_o_disjoint = r.pairwise_o_disjoint && are_o_disjoint(a, b, r.order);
      r.pairwise_no_disjoint = r.pairwise_no_disjoint && are_no_disjoint(a, b, r.order);
    }
  }
}

void expect_shape(const LiftResult& r, std::size_t cycles_m, std::size_t cycles_long,
                  std::size_t m, std::size_t long_period, std::uint32_t long_shifts) {
  std::size_t seen_m = 0, seen_long = 0;
  for (const auto& c : r.cycles) {
    if (c.ring.period() == m && c.shifts == 1 && long_period != m) {
      ++seen_m;
    } else if (c.ring.period() == long_period && c.shifts == long_shifts) {
      ++seen_long;
    } else {
      std::ostringstream msg;
      msg << "lift cycle " << c.ring << " has period " << c.ring.period() << " and " << c.shifts
          << " shifts, outside the " << to_string(r.classification) << " shape";
      throw VerificationError(msg.str());
    }
  }
  if (seen_m != cycles_m || seen_long != cycles_long) {
    std::ostringstream msg;
    msg << to_string(r.classification) << ": expected " << cycles_m << " period-" << m << " and "
        << cycles_long << " period-" << long_period << " cycles, found " << seen_m << " and "
        << seen_long;
    throw VerificationError(msg.str());
  }
}

}  // namespace

const char* to_string(LiftRelation r) {
  switch (r) {
    case LiftRelation::translates: return "translates";
    case LiftRelation::alternating_sign_translates: return "alternating_sign_translates";
  }
  return "?";
}

const char* to_string(LiftCase c) {
  switch (c) {
    case LiftCase::d_lift: return "d_lift";
    case LiftCase::a_odd_m_odd_q: return "a_odd_m_odd_q";
    case LiftCase::a_odd_m_even_q_half: return "a_odd_m_even_q_half";
    case LiftCase::a_odd_m_even_q_none: return "a_odd_m_even_q_none";
    case LiftCase::a_even_m: return "a_even_m";
  }
  return "?";
}

RingSequence apply_D(const RingSequence& s, Symbol beta) {
  const auto& z = s.alphabet();
  require_unit(z, beta);
  std::vector<Symbol> out(s.period());
  for (std::size_t j = 0; j < s.period(); ++j) out[j] = z.mul(beta, z.sub(s.at(j + 1), s[j]));
  return RingSequence(std::move(out), z);
}

RingSequence apply_A(const RingSequence& s) {
  const auto& z = s.alphabet();
  std::vector<Symbol> out(s.period());
  for (std::size_t j = 0; j < s.period(); ++j) out[j] = z.add(s[j], s.at(j + 1));
  return RingSequence(std::move(out), z);
}

ZqTuple apply_D(const ZqTuple& u, Symbol beta) {
  const auto& z = u.alphabet();
  require_unit(z, beta);
  if (u.size() < 2) throw std::invalid_argument("D maps n-tuples with n >= 2");
  std::vector<Symbol> out(u.size() - 1);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) out[i] = z.mul(beta, z.sub(u[i + 1], u[i]));
  return ZqTuple(std::move(out), z);
}

ZqTuple apply_A(const ZqTuple& u) {
  const auto& z = u.alphabet();
  if (u.size() < 2) throw std::invalid_argument("A maps n-tuples with n >= 2");
  std::vector<Symbol> out(u.size() - 1);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) out[i] = z.add(u[i], u[i + 1]);
  return ZqTuple(std::move(out), z);
}

LiftResult lift_D(const RingSequence& s, Symbol beta, std::size_t n) {
  const auto& z = s.alphabet();
  require_unit(z, beta);
  const auto beta_inv = z.inverse(beta);
  const auto m = s.period();

  LiftResult r;
  r.order = n + 1;
  r.order_h = z.additive_order(weight_mod_q(s));
  r.relation = LiftRelation::translates;
  r.classification = LiftCase::d_lift;

  const auto step = [&](std::size_t i, Symbol t) { return z.add(t, z.mul(beta_inv, s[i])); };
  for (Symbol t0 = 0; t0 < z.q(); ++t0) {
    r.preimages.emplace_back(unroll(s, t0, step, z.q()), z);
  }
  const std::vector<std::size_t> predicted(z.q(), std::size_t{r.order_h} * m);
  group_cycles(r, predicted);
  expect_shape(r, 0, z.q() / r.order_h, m, std::size_t{r.order_h} * m, r.order_h);
  return r;
}

LiftResult lift_A(const RingSequence& s, std::size_t n) {
  const auto& z = s.alphabet();
  const auto q = z.q();
  const auto m = s.period();
  const auto wa = alt_weight_mod_q(s);

  LiftResult r;
  r.order = n + 1;
  r.order_h = z.additive_order(wa);
  r.relation = LiftRelation::alternating_sign_translates;

  const auto step = [&](std::size_t i, Symbol t) { return z.sub(s[i], t); };
  for (Symbol t0 = 0; t0 < q; ++t0) {
    r.preimages.emplace_back(unroll(s, t0, step, 2 * std::size_t{q}), z);
  }

  std::vector<std::size_t> predicted(q);
  if (m % 2 == 0) {
    r.classification = LiftCase::a_even_m;
    std::fill(predicted.begin(), predicted.end(), std::size_t{r.order_h} * m);
    group_cycles(r, predicted);
    expect_shape(r, 0, q / r.order_h, m, std::size_t{r.order_h} * m, r.order_h);
    return r;
  }

  // odd m: t_m = -t_0 + w^A, so the period is m exactly when 2 t_0 = w^A
  const auto fixed = z.halves(wa);
  for (Symbol t0 = 0; t0 < q; ++t0) predicted[t0] = 2 * m;
  for (const auto x : fixed) predicted[x] = m;
  if (q % 2 == 1) {
    r.classification = LiftCase::a_odd_m_odd_q;
  } else if (!fixed.empty()) {
    r.classification = LiftCase::a_odd_m_even_q_half;
  } else {
    r.classification = LiftCase::a_odd_m_even_q_none;
  }
  group_cycles(r, predicted);
  expect_shape(r, fixed.size(), (q - fixed.size()) / 2, m, 2 * m, 2);
  return r;
}

ZqTuple alternating_string(Symbol lambda, std::size_t n, Symbol a, std::uint32_t q) {
  const Alphabet z(q);
  if (lambda % q == 0) throw std::invalid_argument("alternating string needs a non-zero step");
  if (n == 0) throw std::invalid_argument("alternating string needs length >= 1");
  std::vector<Symbol> out(n);
  Symbol v = a % q;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v;
    v = z.add(v, lambda % q);
  }
  return ZqTuple(std::move(out), z);
}

AlternatingCycle alternating_cycle(Symbol lambda, std::size_t n, std::uint32_t q) {
  const Alphabet z(q);
  if (lambda % q == 0) throw std::invalid_argument("alternating cycle needs a non-zero step");
  AlternatingCycle c;
  c.period = z.additive_order(lambda % q);
  for (std::uint32_t i = 0; i < q; ++i) {
    c.vertices.push_back(alternating_string(lambda, n, z.mul(i, lambda % q), q));
  }
  return c;
}

}  // namespace orient
