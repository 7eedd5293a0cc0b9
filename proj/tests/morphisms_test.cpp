#include <gtest/gtest.h>

#include <algorithm>

#include "orient/analysis.hpp"
#include "orient/errors.hpp"
#include "orient/morphisms.hpp"

using namespace orient;

namespace {

std::vector<RingSequence> canonical_cycles(const LiftResult& r) {
  std::vector<RingSequence> out;
  for (const auto& c : r.cycles) out.push_back(canonical_rotation(c.ring));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Morphisms, ApplyOnRings) {
  EXPECT_EQ(apply_D(RingSequence({0, 0, 1, 2, 3}, 5)), RingSequence({0, 1, 1, 1, 2}, 5));
  EXPECT_EQ(apply_D(RingSequence({0, 1}, 3), 2), RingSequence({2, 1}, 3));
  EXPECT_THROW(apply_D(RingSequence({0, 1}, 4), 2), std::invalid_argument);
  EXPECT_EQ(apply_A(RingSequence({0, 0, 1, 1, 2, 2}, 3)), RingSequence({0, 1, 2}, 3));
}

TEST(Morphisms, ApplyOnTuples) {
  EXPECT_EQ(apply_D(ZqTuple({0, 1, 3}, 5)), ZqTuple({1, 2}, 5));
  EXPECT_EQ(apply_A(ZqTuple({0, 1, 3}, 5)), ZqTuple({1, 4}, 5));
  EXPECT_THROW(apply_A(ZqTuple({1}, 5)), std::invalid_argument);
}

TEST(Morphisms, LiftDTranslates) {
  const auto r = lift_D(RingSequence({0, 0, 1, 1, 1, 2}, 5), 1, 3);
  EXPECT_EQ(r.order, 4u);
  EXPECT_EQ(r.order_h, 1u);
  EXPECT_EQ(r.relation, LiftRelation::translates);
  ASSERT_EQ(r.cycles.size(), 5u);
  for (const auto& c : r.cycles) EXPECT_EQ(c.ring.period(), 6u);
  EXPECT_TRUE(rotation_equal(r.cycles[0].ring, RingSequence({0, 0, 0, 1, 2, 3}, 5)));
  EXPECT_TRUE(r.pairwise_o_disjoint);
}

TEST(Morphisms, LiftDConstantRing) {
  const auto r = lift_D(RingSequence({0}, 4), 1, 1);
  ASSERT_EQ(r.cycles.size(), 4u);
  for (const auto& c : r.cycles) EXPECT_EQ(c.ring.period(), 1u);
  EXPECT_EQ(r.preimages.size(), 4u);
}

TEST(Morphisms, LiftDUnitWeightIsOneCycle) {
  const auto r = lift_D(RingSequence({0, 1, 1, 2}, 3), 2, 3);
  EXPECT_EQ(r.order_h, 3u);
  ASSERT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.cycles[0].ring.period(), 12u);
  EXPECT_EQ(r.cycles[0].shifts, 3u);
}

TEST(Morphisms, LiftAOddPeriod) {
  const auto r = lift_A(RingSequence({0, 1, 2}, 3), 2);
  EXPECT_EQ(r.classification, LiftCase::a_odd_m_odd_q);
  EXPECT_EQ(r.relation, LiftRelation::alternating_sign_translates);
  EXPECT_EQ(canonical_cycles(r),
            (std::vector<RingSequence>{RingSequence({0, 0, 1, 1, 2, 2}, 3), RingSequence({0, 2, 1}, 3)}));
}

TEST(Morphisms, LiftAEvenPeriod) {
  const auto r = lift_A(RingSequence({0, 1, 2, 3}, 4), 2);
  EXPECT_EQ(r.classification, LiftCase::a_even_m);
  EXPECT_EQ(r.order_h, 2u);
  ASSERT_EQ(r.cycles.size(), 2u);
  for (const auto& c : r.cycles) {
    EXPECT_EQ(c.ring.period(), 8u);
    EXPECT_TRUE(c.orientable);
  }
  EXPECT_TRUE(r.pairwise_o_disjoint);
  EXPECT_EQ(canonical_cycles(r),
            (std::vector<RingSequence>{canonical_rotation(RingSequence({0, 0, 1, 1, 2, 2, 3, 3}, 4)),
                                       canonical_rotation(RingSequence({1, 3, 2, 0, 3, 1, 0, 2}, 4))}));
}

TEST(Morphisms, LiftAEvenAlphabetCases) {
  const auto half = lift_A(RingSequence({0}, 2), 1);
  EXPECT_EQ(half.classification, LiftCase::a_odd_m_even_q_half);
  ASSERT_EQ(half.cycles.size(), 2u);
  for (const auto& c : half.cycles) EXPECT_EQ(c.ring.period(), 1u);

  const auto none = lift_A(RingSequence({1}, 4), 1);
  EXPECT_EQ(none.classification, LiftCase::a_odd_m_even_q_none);
  ASSERT_EQ(none.cycles.size(), 2u);
  for (const auto& c : none.cycles) EXPECT_EQ(c.ring.period(), 2u);
}

TEST(Morphisms, PreimagesMapBack) {
  const RingSequence s({0, 1, 2, 3, 4, 0, 2, 4, 1, 3}, 5);
  for (Symbol beta = 1; beta < 5; ++beta) {
    const auto r = lift_D(s, beta, 2);
    ASSERT_EQ(r.preimages.size(), 5u);
    for (Symbol t0 = 0; t0 < 5; ++t0) {
      EXPECT_EQ(r.preimages[t0][0], t0);
      EXPECT_EQ(apply_D(r.preimages[t0], beta), s);
    }
  }
  const auto a = lift_A(s, 2);
  for (const auto& t : a.preimages) EXPECT_EQ(apply_A(t), s);
}

TEST(Morphisms, AlternatingStrings) {
  EXPECT_EQ(alternating_string(2, 4, 1, 5), ZqTuple({1, 3, 0, 2}, 5));
  EXPECT_THROW(alternating_string(0, 3, 0, 5), std::invalid_argument);
  const auto c = alternating_cycle(1, 4, 5);
  EXPECT_EQ(c.period, 5u);
  ASSERT_EQ(c.vertices.size(), 5u);
  EXPECT_EQ(c.vertices[1], ZqTuple({1, 2, 3, 4}, 5));
  EXPECT_EQ(alternating_cycle(2, 3, 4).period, 2u);
}

TEST(Morphisms, NegativeOrientableLiftsAreODisjoint) {
  const RingSequence s({0, 1, 1, 2}, 4);
  ASSERT_TRUE(is_negative_orientable(s, 2));
  ASSERT_FALSE(is_orientable(s, 2));
  const auto r = lift_D(s, 1, 2);
  ASSERT_EQ(r.cycles.size(), 4u);
  for (const auto& c : r.cycles) EXPECT_TRUE(c.orientable);
  EXPECT_TRUE(r.pairwise_o_disjoint);
  EXPECT_FALSE(r.pairwise_no_disjoint);
}
