#include <gtest/gtest.h>

#include <random>

#include "afrokhlin/classifier.hpp"
#include "afrokhlin/spec_io.hpp"
#include "afrokhlin/traces.hpp"

using namespace afrokhlin;

TEST(TMatrix, Examples) {
  EXPECT_EQ(t_matrix(1).diagonal(), 1);
  EXPECT_EQ(t_matrix(1).off_diagonal(), 0);
  EXPECT_EQ(t_matrix(0).diagonal(), Rational(1, 2));
  EXPECT_EQ(t_matrix(0).off_diagonal(), Rational(1, 2));
  EXPECT_EQ(t_matrix(Rational(1, 2)).diagonal(), Rational(3, 4));
  EXPECT_EQ(t_matrix(Rational(1, 2)).off_diagonal(), Rational(1, 4));
  EXPECT_THROW(t_matrix(Rational(3, 2)), InputError);
  EXPECT_THROW(t_matrix(-1), InputError);
}

TEST(TMatrix, Multiplicative) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> den(1, 50);
  for (int i = 0; i < 1000; ++i) {
    long d1 = den(rng), d2 = den(rng);
    std::uniform_int_distribution<long> n1(0, d1), n2(0, d2);
    Rational x(n1(rng), d1), y(n2(rng), d2);
    x.canonicalize();
    y.canonicalize();
    TMatrix a = t_matrix(x), b = t_matrix(y), ab = t_matrix(x * y);
    // Entry-wise product of the symmetric 2x2 matrices.
    Rational d = a.diagonal() * b.diagonal() + a.off_diagonal() * b.off_diagonal();
    Rational o = a.diagonal() * b.off_diagonal() + a.off_diagonal() * b.diagonal();
    EXPECT_EQ(d, ab.diagonal());
    EXPECT_EQ(o, ab.off_diagonal());
    EXPECT_EQ(a * b, ab);
  }
}

TEST(ExtremeTraces, Car3) {
  auto car3 = builtin_fixture("car3");
  auto one = extreme_trace_vector(car3, 1, 1, 40);
  EXPECT_GE(one.r.lo, Rational(64439, 100000));
  EXPECT_LE(one.r.hi, Rational(64440, 100000));
  auto zero = extreme_trace_vector(car3, 0, 1, 40);
  EXPECT_GE(zero.s.lo, Rational(64439, 100000));
  EXPECT_LE(zero.s.hi, Rational(64440, 100000));
  EXPECT_EQ(zero.r.lo, one.s.lo);
  EXPECT_EQ(zero.r.hi, one.s.hi);
  // Stage 0: Lambda(0, inf) = 0, both extremes collapse to (1/2, 1/2).
  auto base = extreme_trace_vector(car3, 1, 0, 40);
  EXPECT_TRUE(base.r.is_point());
  EXPECT_EQ(base.r.lo, Rational(1, 2));
}

TEST(ExtremeTraces, AllLambdaOneIsIdentity) {
  ActionSpec s("trivial", {}, PeriodicTail{{{3, 0}}});
  auto v = extreme_trace_vector(s, 1, 4);
  EXPECT_EQ(v.r.lo, 1);
  EXPECT_EQ(v.r.hi, 1);
  EXPECT_EQ(v.s.lo, 0);
}

TEST(ExtremeTraces, RejectedForUniqueTrace) {
  EXPECT_THROW(extreme_trace_vector(builtin_fixture("car2"), 1, 3), InputError);
  EXPECT_THROW(extreme_trace_vector(builtin_fixture("car3"), 2, 3), InputError);
}

TEST(ExtremeTraces, Compatibility) {
  auto car3 = builtin_fixture("car3");
  for (std::uint64_t n = 1; n <= 20; ++n) {
    auto hi = extreme_trace_vector(car3, 1, n, 40);
    auto lo = extreme_trace_vector(car3, 1, n - 1, 40);
    auto [r, s] = TMatrix::apply(RationalInterval::point(lambda(car3, n)), hi.r, hi.s);
    EXPECT_TRUE(r.overlaps(lo.r)) << n;
    EXPECT_TRUE(s.overlaps(lo.s)) << n;
    EXPECT_LE(r.width(), Rational(1, 1000000000));
  }
}

TEST(ExtremeTraces, ConvergeToCorner) {
  auto car3 = builtin_fixture("car3");
  Rational prev = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    auto v = extreme_trace_vector(car3, 1, n, 40);
    EXPECT_GE(v.r.lo, prev);
    prev = v.r.lo;
  }
  EXPECT_GT(prev, Rational(999999, 1000000));
}

TEST(InvariantTrace, Half) {
  for (std::uint64_t n : {0, 3, 5}) {
    auto v = invariant_trace_vector(n);
    EXPECT_EQ(v.r.lo, Rational(1, 2));
    EXPECT_EQ(v.s.hi, Rational(1, 2));
    EXPECT_EQ(v.stage, n);
  }
}

TEST(TraceOfElement, Examples) {
  auto car3 = builtin_fixture("car3");
  auto tv = extreme_trace_vector(car3, 1, 1, 40);
  auto val = trace_of_element(car3, {1, 1, -1}, tv);
  EXPECT_GE(val.lo, Rational(1443, 10000));
  EXPECT_LE(val.hi, Rational(1444, 10000));

  TraceVector corner{3, RationalInterval::point(1), RationalInterval::point(0)};
  EXPECT_EQ(trace_of_element(car3, {3, car3.dimension_at(3), 0}, corner).lo, 1);
  auto inv = invariant_trace_vector(2);
  auto one = trace_of_element(car3, {2, 1, 1}, inv);
  EXPECT_EQ(one.lo, Rational(1, 8));
  EXPECT_TRUE(one.is_point());
  EXPECT_THROW(trace_of_element(car3, {1, 1, 1}, inv), InputError);
}

// A trace on K0 must not depend on the stage used to represent the class.
TEST(TraceOfElement, InvariantUnderPushForward) {
  auto car3 = builtin_fixture("car3");
  auto tv2 = invariant_trace_vector(2), tv4 = invariant_trace_vector(4);
  K0Element x{2, 5, -3};
  EXPECT_EQ(trace_of_element(car3, x, tv2).lo,
            trace_of_element(car3, push_forward(car3, x, 4), tv4).lo);
}
