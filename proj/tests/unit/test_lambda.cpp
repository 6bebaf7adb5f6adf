#include <gtest/gtest.h>

#include <random>

#include "afrokhlin/lambda_engine.hpp"
#include "afrokhlin/spec_io.hpp"
#include "oracles.hpp"

using namespace afrokhlin;

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda(builtin_fixture("car2"), 2), Rational(1, 2));
  EXPECT_EQ(lambda(builtin_fixture("car3"), 3), Rational(3, 4));
  EXPECT_EQ(lambda(RankPair{4, 4}), 0);
  EXPECT_EQ(lambda(RankPair{5, 0}), 1);
}

TEST(BigLambda, Examples) {
  EXPECT_EQ(big_lambda(builtin_fixture("car2"), 1, 3), Rational(1, 8));
  EXPECT_EQ(big_lambda(builtin_fixture("car3"), 1, 3), Rational(3, 8));
  for (std::uint64_t m = 0; m < 5; ++m)
    EXPECT_EQ(big_lambda(builtin_fixture("car3"), m, m), 1);
  EXPECT_THROW(big_lambda(builtin_fixture("car3"), 3, 2), RangeError);
}

TEST(BigLambdaLimit, Car2IsZeroByDivergence) {
  auto r = big_lambda_limit(builtin_fixture("car2"), 0);
  ASSERT_TRUE(std::holds_alternative<TailZero>(r));
  auto &w = std::get<TailZero>(r).witness;
  ASSERT_TRUE(std::holds_alternative<DivergenceWitness>(w));
  EXPECT_EQ(std::get<DivergenceWitness>(w).test, "limit-below-one");
}

TEST(BigLambdaLimit, Car3) {
  auto car3 = builtin_fixture("car3");
  auto r0 = big_lambda_limit(car3, 0);
  ASSERT_TRUE(std::holds_alternative<TailZero>(r0));
  EXPECT_EQ(std::get<ZeroFactorWitness>(std::get<TailZero>(r0).witness).index, 1u);

  auto r1 = big_lambda_limit(car3, 1, 40);
  ASSERT_TRUE(std::holds_alternative<TailPositive>(r1));
  const auto &iv = std::get<TailPositive>(r1).bounds;
  // prod (1 - 2^-j) = 0.2887880950866024...
  EXPECT_LE(iv.lo, Rational(28878809508661, 100000000000000));
  EXPECT_GE(iv.hi, Rational(28878809508660, 100000000000000));
  EXPECT_LE(iv.width(), Rational(1, 1000000000));
  EXPECT_GT(iv.lo, 0);
}

TEST(BigLambdaLimit, NotcarPeriodicDivergence) {
  ActionSpec s("p", {}, PeriodicTail{{{2, 1}}});
  auto r = big_lambda_limit(s, 0);
  ASSERT_TRUE(std::holds_alternative<TailZero>(r));
  const auto &w = std::get<DivergenceWitness>(std::get<TailZero>(r).witness);
  EXPECT_EQ(w.test, "periodic-comparison");
  EXPECT_EQ(w.lambda_bound, Rational(1, 3));
}

TEST(BigLambdaLimit, AllLambdaOneIsExactPoint) {
  ActionSpec s("p", {{3, 1}, {2, 1}}, PeriodicTail{{{1, 0}, {4, 0}}});
  auto r = big_lambda_limit(s, 0);
  ASSERT_TRUE(std::holds_alternative<TailPositive>(r));
  EXPECT_TRUE(std::get<TailPositive>(r).bounds.is_point());
  EXPECT_EQ(std::get<TailPositive>(r).bounds.lo, Rational(1, 6));
}

TEST(BigLambdaLimit, SmallCutoffIsUnknown) {
  AffinePowerTail t{3, 1, 1, -1, 0, 1};  // p = 3^j - 1, q = 1
  ActionSpec s("slow", {}, t);
  auto r = big_lambda_limit(s, 0, 1);
  ASSERT_TRUE(std::holds_alternative<TailUnknown>(r));
  EXPECT_EQ(std::get<TailUnknown>(r).cutoff, 1u);
  EXPECT_EQ(std::get<TailUnknown>(r).partial.hi, 1);
  EXPECT_TRUE(std::holds_alternative<TailPositive>(big_lambda_limit(s, 0, 2)));
}

// Positive intervals must bracket every deeper finite product.
TEST(BigLambdaLimit, PositiveBracketsDeepProducts) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    ActionSpec s = oracle::random_spec(rng);
    for (std::uint64_t m = 0; m < 3; ++m) {
      auto r = big_lambda_limit(s, m, 24);
      auto *pos = std::get_if<TailPositive>(&r);
      if (!pos)
        continue;
      ++checked;
      Rational prev = 2;
      for (std::uint64_t n = pos->last_factor; n <= pos->last_factor + 30; n += 6) {
        Rational v = big_lambda(s, m, n);
        EXPECT_GE(v, pos->bounds.lo);
        EXPECT_LE(v, pos->bounds.hi);
        EXPECT_LE(v, prev);
        prev = v;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Condense, Examples) {
  std::vector<RankPair> a{{1, 1}, {3, 1}};
  EXPECT_EQ(condense(a), (RankPair{4, 4}));
  std::vector<RankPair> b{{3, 1}, {5, 3}};
  EXPECT_EQ(condense(b), (RankPair{18, 14}));
  std::vector<RankPair> c{{7, 2}};
  EXPECT_EQ(condense(c), (RankPair{7, 2}));
  EXPECT_EQ(oracle::eigen_count({{1, 1}, {3, 1}}), (std::pair<long long, long long>{4, 4}));
  EXPECT_EQ(oracle::eigen_count({{3, 1}, {5, 3}}), (std::pair<long long, long long>{18, 14}));
  EXPECT_THROW(condense(builtin_fixture("car3"), 2, 2), InputError);
}

TEST(Condense, AgreesWithEigenvalueCount) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<RankPair> fs;
    std::vector<std::pair<long, long>> raw;
    long total = 1;
    while (true) {
      RankPair rp = oracle::random_pair(rng, 6);
      long k = rp.size().get_si();
      if (total * k > (1 << 14) || fs.size() >= 6)
        break;
      total *= k;
      fs.push_back(rp);
      raw.emplace_back(rp.p.get_si(), rp.q.get_si());
    }
    if (fs.empty())
      continue;
    auto [P, Q] = oracle::eigen_count(raw);
    EXPECT_EQ(condense(fs), (RankPair{static_cast<long>(P), static_cast<long>(Q)}));
  }
}
