#include <gtest/gtest.h>

#include <random>

#include "afrokhlin/classifier.hpp"
#include "afrokhlin/ktheory.hpp"
#include "afrokhlin/spec_io.hpp"
#include "oracles.hpp"

using namespace afrokhlin;

TEST(Classifier, Car1) {
  auto r = classify(builtin_fixture("car1"));
  EXPECT_TRUE(r.strict_rokhlin.yes());
  EXPECT_TRUE(r.tracial_rokhlin.yes());
  EXPECT_TRUE(r.outer.yes());
  EXPECT_TRUE(r.crossed_product_uhf.yes());
  ASSERT_TRUE(r.crossed_product_supernatural.has_value());
  EXPECT_EQ(r.crossed_product_supernatural->to_string(), "{2:inf}");
  EXPECT_EQ(r.extreme_trace_count, 1);
}

TEST(Classifier, Car2) {
  auto r = classify(builtin_fixture("car2"));
  EXPECT_TRUE(r.strict_rokhlin.no());
  EXPECT_TRUE(r.tracial_rokhlin.yes());
  EXPECT_TRUE(r.outer.yes());
  EXPECT_TRUE(r.crossed_product_simple.yes());
  EXPECT_TRUE(r.crossed_product_uhf.no());
  EXPECT_EQ(r.extreme_trace_count, 1);
}

TEST(Classifier, Car3) {
  auto r = classify(builtin_fixture("car3"), 40);
  EXPECT_TRUE(r.strict_rokhlin.no());
  EXPECT_TRUE(r.tracial_rokhlin.no());
  EXPECT_EQ(r.tracial_rokhlin.witness.index, 1u);
  ASSERT_TRUE(r.tracial_rokhlin.witness.interval.has_value());
  EXPECT_GT(r.tracial_rokhlin.witness.interval->lo, Rational(1, 4));
  EXPECT_TRUE(r.outer.yes());
  EXPECT_TRUE(r.crossed_product_uhf.no());
  EXPECT_EQ(r.extreme_trace_count, 2);
}

TEST(Classifier, Notcar) {
  auto r = classify(builtin_fixture("notcar"));
  EXPECT_TRUE(r.tracial_rokhlin.yes());
  ASSERT_TRUE(r.tracial_rokhlin.witness.interval.has_value());
  EXPECT_EQ(r.tracial_rokhlin.witness.interval->hi, Rational(1, 3));
  EXPECT_TRUE(r.strict_rokhlin.no());
}

TEST(Classifier, TrivialTailIsNotOuter) {
  ActionSpec s("inner", {{2, 1}}, PeriodicTail{{{3, 0}}});
  auto r = classify(s);
  EXPECT_TRUE(r.outer.no());
  EXPECT_TRUE(r.crossed_product_simple.no());
  EXPECT_TRUE(r.tracial_rokhlin.no());
  EXPECT_TRUE(r.strict_rokhlin.no());
  EXPECT_EQ(r.extreme_trace_count, 2);
}

TEST(Classifier, FiniteTailRejected) {
  ActionSpec s("finite", {{1, 1}}, NoTail{});
  EXPECT_THROW(classify(s), InputError);
}

TEST(Classifier, UnknownCarriesCutoff) {
  AffinePowerTail t{3, 1, 1, -1, 0, 1};  // p = 3^j - 1, q = 1, never symmetric
  ActionSpec s("slow", {}, t);
  auto r = classify(s, 1);
  EXPECT_EQ(r.tracial_rokhlin.decision, Decision::Unknown);
  EXPECT_EQ(r.tracial_rokhlin.cutoff, 1u);
  EXPECT_FALSE(r.extreme_trace_count.has_value());
  EXPECT_TRUE(has_unknown(r));
  EXPECT_FALSE(has_unknown(classify(s, 64)));
}

TEST(Classifier, EveryVerdictIsCited) {
  for (const auto &name : fixture_names()) {
    auto r = classify(builtin_fixture(name));
    for (const Verdict *v : {&r.strict_rokhlin, &r.tracial_rokhlin, &r.outer,
                             &r.crossed_product_simple, &r.crossed_product_uhf})
      EXPECT_FALSE(v->citations.empty()) << name;
  }
}

// Tail conditions ignore the prefix; condensing a block keeps every verdict.
TEST(Classifier, StableUnderPrefixChangesAndCondensation) {
  std::mt19937_64 rng(23);
  auto decisions = [](const ActionSpec &s) {
    auto r = classify(s);
    return std::vector<Decision>{r.strict_rokhlin.decision, r.tracial_rokhlin.decision,
                                 r.outer.decision};
  };
  for (int i = 0; i < 300; ++i) {
    ActionSpec s = oracle::random_spec(rng);
    auto base = decisions(s);
    std::vector<RankPair> longer{oracle::random_pair(rng, 9)};
    for (const auto &rp : s.prefix())
      longer.push_back(rp);
    ActionSpec s2("longer", longer, s.tail());
    EXPECT_EQ(decisions(s2), base);
    if (s.prefix().size() >= 2 && !std::holds_alternative<AffinePowerTail>(s.tail())) {
      std::vector<RankPair> cond{condense(s, 0, 2)};
      for (std::size_t j = 2; j < s.prefix().size(); ++j)
        cond.push_back(s.prefix()[j]);
      ActionSpec s3("condensed", cond, s.tail());
      EXPECT_EQ(decisions(s3), base);
    }
  }
}

TEST(Classifier, ImplicationLattice) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    ActionSpec s = oracle::random_spec(rng);
    auto r = classify(s);
    if (r.strict_rokhlin.yes())
      EXPECT_TRUE(r.tracial_rokhlin.yes());
    if (r.tracial_rokhlin.yes())
      EXPECT_TRUE(r.outer.yes());
    EXPECT_EQ(r.outer.decision, r.crossed_product_simple.decision);
    EXPECT_EQ(r.strict_rokhlin.decision, r.crossed_product_uhf.decision);
    EXPECT_EQ(r.strict_rokhlin.decision, is_totally_ordered(s).decision);
    if (r.extreme_trace_count && r.tracial_rokhlin.decision != Decision::Unknown)
      EXPECT_EQ(*r.extreme_trace_count == 1, r.tracial_rokhlin.yes());
  }
}
