#include <random>

#include <gtest/gtest.h>

#include "grbraid/braid_sigma.hpp"
#include "grbraid/translation.hpp"

using namespace grbraid;

namespace {

PlueckerPoly P(std::initializer_list<int> idx) { return PlueckerPoly::variable(static_cast<int>(idx.size()), idx); }
KPoly Y(int n, int i, int a) { return KPoly::variable(n, {i, a}); }

ExtElement seg(int n, int a, int b, int k) { return embed(Multisegment(n, std::vector<Segment>{{a, b}}), k); }

}  // namespace

TEST(Translation, PhiTupleExamples) {
  EXPECT_EQ(phi_tuple(3, {1, 0}), MinorIndex({1, 3, 4, 5}));
  EXPECT_EQ(phi_tuple(3, {2, 3}), MinorIndex({2, 3, 5, 6}));
  EXPECT_EQ(phi_tuple(2, {1, 0}), MinorIndex({1, 3, 4}));
  EXPECT_THROW(phi_tuple(2, {1, 1}), std::invalid_argument);
}

TEST(Translation, PhiTupleTranslatesWithSpectralParameter) {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int a = i - 1 - 4 * n; a <= 4 * n; a += 2) {
        const MinorIndex base = phi_tuple(n, {i, a});
        EXPECT_FALSE(base.is_frozen());
        for (int t = -3; t <= 3; ++t) {
          std::vector<int> moved(base.entries().begin(), base.entries().end());
          for (int& x : moved) x += t;
          EXPECT_EQ(phi_tuple(n, {i, a + 2 * t}), MinorIndex(moved));
        }
      }
}

TEST(Translation, PhiExamples) {
  EXPECT_EQ(Phi(Y(2, 2, 3)), P({2, 3, 5}));
  EXPECT_EQ(Phi(Y(2, 1, 2)), P({2, 4, 5}));
  EXPECT_EQ(Phi(KPoly::constant(2, 1)), PlueckerPoly::constant(3, 1));
  EXPECT_EQ(Phi(Y(2, 2, 3) * Y(2, 1, 0) - KPoly::constant(2, 1)), P({1, 3, 4}) * P({2, 3, 5}) - PlueckerPoly::constant(3, 1));
}

TEST(Translation, PhiIntertwinesShifts) {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= n; ++i)
      for (int a = i - 1 - 2 * n; a <= 4 * n; a += 2)
        for (int k = -2; k <= 2; ++k) EXPECT_EQ(Phi(spectral_shift(Y(n, i, a), k)), shift(Phi(Y(n, i, a)), k));
}

TEST(Translation, SegmentToFundamental) {
  EXPECT_EQ(seg_to_fund(3, {1, 3}, 1), (FundIndex{1, 6}));
  EXPECT_EQ(seg_to_fund(2, {1, 1}, 0), (FundIndex{1, 0}));
  EXPECT_EQ(seg_to_fund(3, {2, 2}, 0), (FundIndex{1, 2}));
  EXPECT_THROW(seg_to_fund(2, {1, 3}, 0), std::invalid_argument);
  for (int n = 2; n <= 4; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int k = -3; k <= 3; ++k) {
          const auto [k2, s] = fund_to_seg(n, seg_to_fund(n, {a, b}, k));
          EXPECT_EQ(k2, k);
          EXPECT_EQ(s, (Segment{a, b}));
        }
}

TEST(Translation, ExtToMonomial) {
  ExtElement two = extended_f(seg(2, 1, 1, 0), 1, 1);
  EXPECT_EQ(ext_to_monomial(two), (DominantMonomial{{{2, 3}, 1}, {{1, 0}, 1}}));
  EXPECT_TRUE(ext_to_monomial(ExtElement(2)).empty());
  EXPECT_EQ(ext_to_monomial(seg(2, 1, 2, 0)), (DominantMonomial{{{2, 1}, 1}}));
  std::mt19937_64 rng(17);
  for (int s = 0; s < 200; ++s) {
    const ExtElement b = random_ext_element(3, rng);
    EXPECT_EQ(monomial_to_ext(3, ext_to_monomial(b)), b);
  }
}

TEST(Translation, KnownImages) {
  EXPECT_EQ(known_simple_image(2, {{{1, 0}, 1}}), P({1, 3, 4}));
  EXPECT_EQ(known_simple_image(2, {{{1, 2}, 1}, {{1, 0}, 1}}), P({1, 4, 5}));
  EXPECT_FALSE(known_simple_image(2, {{{1, 0}, 3}, {{2, 7}, 2}}));
}

TEST(Translation, CommuteCheckEntries) {
  const auto r = commute_check(3, 1, 1, 1);
  ASSERT_FALSE(r.entries.empty());
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(eq_mod(Phi(braid_T(1, Y(3, 2, 1))), P({2, 3, 4, 6}) * P({1, 2, 4, 5}) - P({2, 4, 5, 6})));
  EXPECT_TRUE(eq_mod(sigma(1, Phi(Y(3, 2, 1))), P({1, 2, 4, 6})));
  EXPECT_TRUE(commute_check(2, 2, 0, 0).passed());
  EXPECT_TRUE(commute_check(3, 2, 5, 4).entries.empty());
}

TEST(Translation, CommuteCheckFullWindow) {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto r = commute_check(n, i, -2 * n, 4 * n);
      EXPECT_TRUE(r.passed()) << "n=" << n << " i=" << i;
      EXPECT_EQ(r.kind, "commute");
    }
}

TEST(Translation, CrystalCommuteExamples) {
  EXPECT_TRUE(crystal_commute_check(2, {2}, {seg(2, 1, 1, 0)}).passed());
  EXPECT_TRUE(crystal_commute_check(2, {2, 2}, {seg(2, 1, 1, 0)}).passed());
  const auto r = crystal_commute_check(3, {1}, {seg(3, 3, 3, 0)});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(braid_R(seg(3, 3, 3, 0), 1), seg(3, 3, 3, 0));
  EXPECT_EQ(Phi(KPoly::variable(3, seg_to_fund(3, {3, 3}, 0))), P({3, 5, 6, 7}));
  const ExtElement big = extended_f(extended_f(extended_f(seg(2, 1, 2, 0), 1, 3), 2, 3), 1, 2);
  EXPECT_THROW(crystal_commute_check(2, {1}, {big}), std::invalid_argument);
}

TEST(Translation, WorkedExampleReport) {
  const auto r = example63_report();
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.entries.size(), 8u);
  const PlueckerPoly one = PlueckerPoly::constant(3, 1);
  EXPECT_TRUE(eq_mod(P({1, 4, 5}) * P({2, 3, 6}) - one, example63_expansion()));
}
