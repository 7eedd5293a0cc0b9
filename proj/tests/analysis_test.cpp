#include <gtest/gtest.h>

#include "orient/analysis.hpp"
#include "orient/oracle.hpp"

using namespace orient;

TEST(Analysis, WorkedExamples) {
  const RingSequence os5({0, 1, 2, 3, 4, 0, 2, 4, 1, 3}, 5);
  EXPECT_TRUE(is_n_window(os5, 2));
  EXPECT_TRUE(is_orientable(os5, 2));
  EXPECT_TRUE(is_orientable(RingSequence({0, 1, 2}, 3), 2));
  EXPECT_TRUE(is_orientable(RingSequence({0, 1, 2, 3}, 4), 2));
  EXPECT_TRUE(is_orientable(RingSequence({0, 0, 1, 2, 0, 1, 1, 2, 2}, 3), 3));
  EXPECT_TRUE(is_orientable(RingSequence({0, 0, 1, 3, 0, 2, 3, 1, 2, 0, 1, 1, 2, 2, 3, 3}, 4), 3));
  EXPECT_FALSE(is_orientable(RingSequence({0, 1}, 2), 2));
  EXPECT_FALSE(is_orientable(RingSequence({0, 0, 1}, 2), 2));
}

TEST(Analysis, NegativeOrientable) {
  // 0 and -0 coincide, so a window starting and ending in 0 clashes with its own negated reverse
  EXPECT_FALSE(is_negative_orientable(RingSequence({0, 1, 2}, 3), 2));
  EXPECT_TRUE(is_negative_orientable(RingSequence({0, 0, 1, 1}, 3), 2) ==
              naive_is_negative_orientable(RingSequence({0, 0, 1, 1}, 3), 2));
  const RingSequence s({1, 1, 2, 1, 2, 2}, 5);
  EXPECT_EQ(is_negative_orientable(s, 2), naive_is_negative_orientable(s, 2));
  EXPECT_EQ(is_special(s, 2), is_orientable(s, 2) && is_negative_orientable(s, 2));
}

TEST(Analysis, Disjointness) {
  const RingSequence a({0, 0, 1, 2, 3}, 5);
  const RingSequence b({1, 1, 2, 3, 4}, 5);
  EXPECT_TRUE(are_disjoint(a, b, 4));
  EXPECT_TRUE(are_o_disjoint(a, b, 4));
  EXPECT_FALSE(are_disjoint(a, a, 4));
  EXPECT_FALSE(are_o_disjoint(a, reversed(a), 4));
  EXPECT_FALSE(are_no_disjoint(a, negated(reversed(a)), 4));
}

TEST(Analysis, Primitive) {
  EXPECT_TRUE(is_primitive(RingSequence({0, 0, 1}, 3), 2));
  EXPECT_FALSE(is_primitive(RingSequence({0, 1, 2}, 3), 2));
}

TEST(Analysis, Kinds) {
  const RingSequence os5({0, 1, 2, 3, 4, 0, 2, 4, 1, 3}, 5);
  EXPECT_TRUE(has_kind(os5, 2, SequenceKind::orientable));
  EXPECT_EQ(has_kind(os5, 2, SequenceKind::special), is_special(os5, 2));
  EXPECT_STREQ(to_string(SequenceKind::negative_orientable), "negative_orientable");
}

TEST(Analysis, WindowConflicts) {
  const RingSequence s({0, 1}, 2);
  const auto c = window_conflicts(s, 2);
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c.front().type, ConflictType::reverse);
  EXPECT_TRUE(window_conflicts(RingSequence({0, 1, 2}, 3), 2, 0).empty());
  const RingSequence rep({0, 0, 1, 0, 0, 2}, 3);
  bool repeat = false;
  for (const auto& x : window_conflicts(rep, 2)) repeat = repeat || x.type == ConflictType::repeat;
  EXPECT_TRUE(repeat);
}

TEST(Analysis, SpecialExceptUniform) {
  const RingSequence s({0, 0, 1, 1, 1, 2}, 5);
  EXPECT_FALSE(is_orientable(s, 3));
  EXPECT_TRUE(is_special_except_uniform(s, 3));
  EXPECT_FALSE(is_special_except_uniform(RingSequence({0, 1, 2}, 3), 2));
}

TEST(Analysis, Runs) {
  const RingSequence s({0, 0, 1, 1, 1, 2}, 3);
  const auto r = max_run(s, 1, false);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->start, 2u);
  EXPECT_EQ(r->length, 3u);
  EXPECT_FALSE(r->wraps);
  EXPECT_FALSE(max_run(s, 2, false)->wraps);
  EXPECT_EQ(longest_run_length(s, 0), 2u);

  const RingSequence wrap({0, 1, 0}, 2);
  const auto w = max_run(wrap, 0, false);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->start, 2u);
  EXPECT_EQ(w->length, 2u);

  const auto all = max_run(RingSequence({3}, 5), 3, false);
  ASSERT_TRUE(all);
  EXPECT_TRUE(all->wraps);

  const RingSequence signed_s({1, 4, 1, 2}, 5);
  const auto sr = max_run(signed_s, 1, true);
  ASSERT_TRUE(sr);
  EXPECT_EQ(sr->start, 0u);
  EXPECT_EQ(sr->length, 3u);
  EXPECT_FALSE(max_run(signed_s, 3, false));
  EXPECT_EQ(find_runs(s, 1, false).size(), 1u);
}
