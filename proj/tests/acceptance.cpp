// Acceptance run: one [PASS]/[FAIL] line per criterion.
//   acceptance            all criteria
//   acceptance --only 5   a single criterion

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orient/analysis.hpp"
#include "orient/bounds.hpp"
#include "orient/constructions.hpp"
#include "orient/morphisms.hpp"
#include "orient/oracle.hpp"
#include "orient/sequence_io.hpp"
#include "properties.hpp"

using namespace orient;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    notes.push_back(std::string(cond ? "  ok   " : "  FAIL ") + what);
    ok = ok && cond;
  }
};

RingSequence ring(const char* digits, std::uint32_t q) { return parse_ring(digits, q); }

Check table_reproduction() {
  Check c;
  const std::vector<std::vector<long long>> published{
      {0, 1, 5, 11, 27, 55},
      {3, 9, 33, 105, 336, 1032},
      {4, 22, 118, 478, 2014, 8062},
      {10, 50, 290, 1490, 7680, 38640},
  };
  const std::vector<std::uint32_t> qs{2, 3, 4, 5};
  const std::vector<std::uint32_t> ns{2, 3, 4, 5, 6, 7};
  const auto t = bounds_table(qs, ns);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = 0; j < ns.size(); ++j) {
      if (t[i][j] == published[i][j]) {
        ++matched;
      } else {
        c.expect(false, "q=" + std::to_string(qs[i]) + " n=" + std::to_string(ns[j]) + " got " + t[i][j].str());
      }
    }
  }
  c.expect(matched == 24, std::to_string(matched) + "/24 entries match");
  return c;
}

Check worked_examples() {
  Check c;
  const std::vector<std::tuple<const char*, std::uint32_t, std::size_t>> cases{
      {"012", 3, 2}, {"0123402413", 5, 2}, {"0123", 4, 2}, {"001201122", 3, 3}, {"0013023120112233", 4, 3}};
  for (const auto& [digits, q, n] : cases) {
    const auto s = ring(digits, q);
    c.expect(is_orientable(s, n) && s.period() == std::strlen(digits),
             std::string("[") + digits + "] OS_" + std::to_string(q) + "(" + std::to_string(n) + ") period " +
                 std::to_string(s.period()));
  }
  return c;
}

Check prime_construction() {
  Check c;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto s = prime_order2(p);
    c.expect(is_orientable(s, 2) && s.period() == p * (p - 1) / 2 &&
                 BigInt(s.period()) == period_bound(p, 2).table_bound,
             "p=" + std::to_string(p) + " period " + std::to_string(s.period()));
  }
  c.expect(rotation_equal(prime_order2(3), ring("012", 3)), "p=3 rotation-equal to [012]");
  c.expect(rotation_equal(prime_order2(5), ring("0123402413", 5)), "p=5 rotation-equal to [0123402413]");
  return c;
}

bool same_cycles(const LiftResult& r, std::vector<RingSequence> want) {
  std::vector<RingSequence> got;
  for (const auto& cy : r.cycles) got.push_back(canonical_rotation(cy.ring));
  for (auto& w : want) w = canonical_rotation(w);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

Check a_lift() {
  Check c;
  const auto odd = lift_A(ring("012", 3), 2);
  c.expect(same_cycles(odd, {ring("210", 3), ring("001122", 3)}), "lift_A([012]) = {[210], [001122]}");
  bool periods = odd.cycles.size() == 2;
  for (const auto& cy : odd.cycles) {
    periods = periods && (rotation_equal(cy.ring, ring("210", 3)) ? cy.ring.period() == 3 : cy.ring.period() == 6);
  }
  c.expect(periods, "periods 3 and 6");

  const auto even = lift_A(ring("0123", 4), 2);
  c.expect(same_cycles(even, {ring("00112233", 4), ring("13203102", 4)}),
           "lift_A([0123]) = {[00112233], [13203102]}");
  bool ok = even.cycles.size() == 2;
  for (const auto& cy : even.cycles) ok = ok && cy.ring.period() == 8 && is_orientable(cy.ring, 3);
  c.expect(ok, "both cycles orientable of order 3, period 8");
  c.expect(even.cycles.size() == 2 && are_o_disjoint(even.cycles[0].ring, even.cycles[1].ring, 3),
           "cycles o-disjoint");
  return c;
}

Check d_lift() {
  Check c;
  const auto s = ring("001112", 5);
  const auto lift = lift_D(s, 1, 3);
  bool shape = lift.cycles.size() == 5;
  bool has = false;
  for (const auto& cy : lift.cycles) {
    shape = shape && cy.ring.period() == 6;
    has = has || rotation_equal(cy.ring, ring("000123", 5));
  }
  c.expect(shape && lift.relation == LiftRelation::translates, "5 translate cycles of period 6");
  c.expect(has, "cycles contain [000123]");

  const auto st = stitch_alternating(s, 1, 1, 3);
  c.expect(st.ring.period() == 30 && rotation_equal(st.ring, ring("001234012444013334022234111230", 5)),
           "stitched ring rotation-equal to the published 30-symbol ring");
  c.expect(is_orientable(st.ring, 4) && !is_negative_orientable(st.ring, 4),
           "stitched ring orientable, not negative orientable, order 4");

  const auto alt = ring("002341244401333402223411110", 5);
  const auto rep = check_alteration(alt, 4, 1);
  c.expect(rep.orientable, "published 27-symbol alteration orientable of order 4");
  c.expect(rep.weight_mod_q == 0, "alteration weight 0 mod 5");
  c.expect(rep.contains_uniform_run, "alteration contains 1111");
  if (!rep.n_window) {
    std::ostringstream os;
    os << "  note: alteration repeats windows:";
    std::size_t shown = 0;
    for (const auto& w : window_conflicts(alt, 4)) {
      if (shown == 4) break;
      ++shown;
      os << " " << to_string(w.type) << "(" << w.i << "," << w.j << ")=" << window(alt, w.i, 4);
    }
    c.notes.push_back(os.str());
  }
  return c;
}

Check recursion_law() {
  Check c;
  const auto starters = find_starters(3, 3);
  c.expect(!starters.rings.empty(), "oracle found a good weight-1 OS_3(3) starter");
  if (starters.rings.empty()) return c;
  const auto& s = starters.rings.front();
  c.notes.push_back("  starter [" + format_ring(s) + "]");
  const auto tr = recursive_generate(s, 3, 3);
  c.expect(tr.steps.size() == 4, "three iterations");
  const std::size_t m0 = s.period();
  std::size_t qj = 1;
  for (std::size_t j = 0; j < tr.steps.size(); ++j) {
    const auto& st = tr.steps[j];
    const auto closed = qj * m0 + (qj - 1) / 2;
    const bool rec = j == 0 || st.period == 3 * tr.steps[j - 1].period + 1;
    const auto kind = j % 2 == 0 ? tr.steps[0].kind
                                 : (tr.steps[0].kind == OrientKind::orientable ? OrientKind::negative_orientable
                                                                               : OrientKind::orientable);
    c.expect(rec && st.period == closed && st.kind == kind && st.weight_mod_q == 1,
             "order " + std::to_string(st.order) + ": period " + std::to_string(st.period) + ", " +
                 to_string(st.kind));
    qj *= 3;
  }
  const auto& last = tr.steps.back();
  c.expect(last.kind == OrientKind::orientable ? is_orientable(tr.final, last.order)
                                               : is_negative_orientable(tr.final, last.order),
           "final ring verified by analysis");
  return c;
}

Check property_suites() {
  Check c;
  for (const auto& r : {props::symmetry_exhaustion(4, 7), props::random_lifts(500, 20240611),
                        props::lift_runs(100, 7), props::verifier_agreement(1000, 99)}) {
    c.expect(r.ok(), r.name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.violations) +
                         " violations");
    for (const auto& f : r.failures) c.notes.push_back("    " + f);
  }
  return c;
}

Check oracle_tightness() {
  Check c;
  const std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> cases{
      {2, 2, 0}, {3, 2, 3}, {4, 2, 4}, {5, 2, 10}, {3, 3, 9}};
  for (const auto& [q, n, want] : cases) {
    const auto r = max_orientable_period(q, n);
    const auto bound = period_bound(q, static_cast<std::uint32_t>(n)).table_bound;
    c.expect(r.exhaustive && r.max_period_found == want && BigInt(want) == bound,
             "(" + std::to_string(q) + "," + std::to_string(n) + ") max " + std::to_string(r.max_period_found) +
                 (r.exhaustive ? " exhaustive" : " not exhaustive") + ", bound " + bound.str());
  }
  return c;
}

Check open_probe() {
  Check c;
  SearchOptions o;
  o.max_nodes = 100'000'000;
  const auto r = max_orientable_period(4, 3, o);
  c.expect(r.max_period_found >= 16, "OS_4(3) best found " + std::to_string(r.max_period_found));
  c.expect(r.nodes_explored <= o.max_nodes, "within budget: " + std::to_string(r.nodes_explored) + " nodes");
  c.expect(r.witness && is_orientable(*r.witness, 3) && r.witness->period() == r.max_period_found,
           "witness verified" + (r.witness ? " [" + format_ring(*r.witness) + "]" : std::string()));
  c.expect(BigInt(r.max_period_found) <= period_bound(4, 3).table_bound, "best found within the period bound");
  c.notes.push_back(std::string("  status: ") + (r.exhaustive ? "exhaustive (maximum)" : "best found, not exhaustive"));
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "bounds table reproduction", 1, table_reproduction},
      {2, "worked-example corpus", 1, worked_examples},
      {3, "prime construction", 1, prime_construction},
      {4, "A-lift conformance", 1, a_lift},
      {5, "D-lift conformance and stitching", 1, d_lift},
      {6, "recursion law", 30, recursion_law},
      {7, "property suites", 120, property_suites},
      {8, "oracle tightness", 300, oracle_tightness},
      {9, "OS_4(3) probe", 600, open_probe},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Check result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = result.ok && in_time;
    all = all && ok;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << t.str() << " s, limit "
              << c.limit_seconds << " s)" << (in_time ? "" : " over time limit") << "\n";
    for (const auto& n : result.notes) std::cout << n << "\n";
  }
  return all ? 0 : 1;
}
