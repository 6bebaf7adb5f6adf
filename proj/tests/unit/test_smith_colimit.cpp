#include <gtest/gtest.h>

#include <random>

#include "afrokhlin/colimit.hpp"
#include "afrokhlin/smith.hpp"

using namespace afrokhlin;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return {xs.begin(), xs.end()};
}

void check_smith(const IntMatrix &m) {
  SmithForm f = smith_normal_form(m);
  ASSERT_TRUE(f.S.is_diagonal());
  EXPECT_EQ(f.U * f.S * f.V, m);
  EXPECT_EQ(f.left * m * f.right, f.S);
  EXPECT_EQ(abs(f.U.determinant()), 1);
  EXPECT_EQ(abs(f.V.determinant()), 1);
  EXPECT_EQ(f.U * f.left, IntMatrix::identity(m.rows()));
  EXPECT_EQ(f.right * f.V, IntMatrix::identity(m.cols()));
  auto d = f.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size() && d[i] != 0)
      EXPECT_TRUE(d[i + 1] % d[i] == 0);
    if (i + 1 < d.size() && d[i] == 0)
      EXPECT_EQ(d[i + 1], 0);
  }
}

} // namespace

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors(), ints({1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).invariant_factors(), ints({1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0}}).invariant_factors(), ints({0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors(),
            ints({2, 6, 12}));
  check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  check_smith(IntMatrix{{0, 0, 0}, {0, 0, 5}});
  check_smith(IntMatrix(0, 3));
}

TEST(Smith, RandomMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long> ent(-9, 9);
  std::bernoulli_distribution sparse(0.3);
  for (int i = 0; i < 1000; ++i) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = sparse(rng) ? 0 : ent(rng);
    check_smith(m);
  }
}

TEST(Smith, DeterminantMatchesInvariantFactors) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> ent(-9, 9);
  for (int i = 0; i < 300; ++i) {
    IntMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        m(r, c) = ent(rng);
    Integer prod = 1;
    for (const auto &d : smith_normal_form(m).invariant_factors())
      prod *= d;
    EXPECT_EQ(prod, abs(m.determinant()));
  }
}

TEST(SubgroupInvariants, Examples) {
  // <2> in Z/8 is Z/4; <(1,1)> in Z/2 + Z/4 is Z/4.
  EXPECT_EQ(subgroup_invariants(ints({8}), IntMatrix{{2}}), ints({4}));
  EXPECT_EQ(subgroup_invariants(ints({2, 4}), IntMatrix{{1}, {1}}), ints({4}));
  EXPECT_TRUE(subgroup_invariants(ints({6}), IntMatrix{{0}}).empty());
}

TEST(FgabColimit, Examples) {
  for (unsigned m = 1; m <= 5; ++m) {
    FgAbPresentation init;
    init.free_rank = 1;
    init.localization.resize(1);
    init.torsion = {Integer(1) << m};
    EventuallyPeriodicMaps maps;
    for (long n = 1; n <= 3; ++n) {
      IntMatrix t(2, 2);
      t(0, 0) = 2 * n + 1;
      t(1, 1) = 1;
      maps.period.push_back(t);
    }
    auto out = fgab_colimit(init, maps);
    EXPECT_EQ(out.free_rank, 1u);
    EXPECT_EQ(out.torsion, std::vector<Integer>{Integer(1) << m});
    EXPECT_EQ(out.localization[0].to_string(), "{3:inf, 5:inf, 7:inf}");
  }

  FgAbPresentation z;
  z.free_rank = 1;
  z.localization.resize(1);
  auto id = fgab_colimit(z, {{}, {IntMatrix::identity(1)}});
  EXPECT_EQ(id.free_rank, 1u);
  EXPECT_TRUE(id.torsion_free());
  EXPECT_TRUE(id.localization[0].is_one());

  FgAbPresentation z2;
  z2.free_rank = 2;
  z2.localization.resize(2);
  auto half = fgab_colimit(z2, {{}, {IntMatrix{{2, 0}, {0, 0}}}});
  EXPECT_EQ(half.free_rank, 1u);
  EXPECT_EQ(half.localization[0].to_string(), "{2:inf}");
}

TEST(FgabColimit, TorsionShrinksUnderMultiplication) {
  FgAbPresentation init;
  init.torsion = {Integer(8)};
  // Doubling on Z/8 repeatedly: the stable image is 0.
  auto out = fgab_colimit(init, {{}, {IntMatrix{{2}}}});
  EXPECT_TRUE(out.torsion_free());
  // Past the prefix every map is an automorphism, so the limit is Z/8 again.
  out = fgab_colimit(init, {{IntMatrix{{2}}}, {IntMatrix{{3}}}});
  EXPECT_EQ(out.torsion, ints({8}));
  // Z/2 + Z/4 with the period (x, y) -> (0, 2x + y): only a Z/4 survives.
  FgAbPresentation two;
  two.torsion = {Integer(2), Integer(4)};
  out = fgab_colimit(two, {{}, {IntMatrix{{0, 0}, {2, 1}}}});
  EXPECT_EQ(out.torsion, ints({4}));
}

TEST(FgabColimit, RejectsCrossTerms) {
  FgAbPresentation init;
  init.free_rank = 1;
  init.localization.resize(1);
  init.torsion = {Integer(2)};
  EXPECT_THROW(fgab_colimit(init, {{}, {IntMatrix{{1, 0}, {1, 1}}}}), InputError);
  EXPECT_THROW(fgab_colimit(init, {{}, {IntMatrix{{1, 1}, {0, 1}}}}), InputError);
}

TEST(Fixtures, TorsionAndNotor) {
  for (unsigned m = 1; m <= 4; ++m) {
    auto k = torsion_fixture(m, {1, 2, 3});
    EXPECT_EQ(k.k0.torsion, std::vector<Integer>{Integer(1) << m});
    EXPECT_EQ(k.k0.free_rank, 1u);
    EXPECT_EQ(k.k1.generator_count(), 0u);
  }
  auto n = notor_fixture({1});
  EXPECT_TRUE(n.k0.torsion_free());
  EXPECT_EQ(n.k1.free_rank, 1u);
  EXPECT_TRUE(n.k1.torsion_free());
  EXPECT_THROW(torsion_fixture(0, {1}), InputError);
  EXPECT_THROW(torsion_fixture(2, {0}), InputError);
  EXPECT_THROW(torsion_fixture(2, {}), InputError);
}
