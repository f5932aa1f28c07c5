#include <random>

#include <gtest/gtest.h>

#include "grassmann.hpp"
#include "grbraid/config.hpp"
#include "grbraid/pluecker.hpp"

using namespace grbraid;

namespace {

PlueckerPoly P(std::initializer_list<int> idx) { return PlueckerPoly::variable(static_cast<int>(idx.size()), idx); }

}  // namespace

TEST(Pluecker, NormalizeSignAndZero) {
  const std::vector<int> a{2, 1, 4, 5}, b{1, 3, 3}, c{3, 6, 5, 7}, d{3, 1, 2};
  auto na = normalize_minor(a, 4);
  ASSERT_TRUE(na);
  EXPECT_EQ(na->sign, -1);
  EXPECT_EQ(na->index, MinorIndex({1, 2, 4, 5}));
  EXPECT_FALSE(normalize_minor(b, 3));
  EXPECT_EQ(normalize_minor(c, 4)->sign, -1);
  EXPECT_EQ(normalize_minor(d, 3)->sign, 1);
  EXPECT_THROW(normalize_minor(d, 4), std::invalid_argument);
}

TEST(Pluecker, NormalizeParityUnderPermutation) {
  std::vector<int> raw{2, 5, 7, 11, 13};
  std::mt19937_64 rng(1);
  for (int s = 0; s < 50; ++s) {
    std::shuffle(raw.begin(), raw.end(), rng);
    const auto base = *normalize_minor(raw, 5);
    std::swap(raw[0], raw[3]);
    EXPECT_EQ(normalize_minor(raw, 5)->sign, -base.sign);
  }
}

TEST(Pluecker, MinorIndexValidation) {
  EXPECT_THROW(MinorIndex({3, 2, 4}), std::invalid_argument);
  EXPECT_THROW(MinorIndex({1}), std::invalid_argument);
  EXPECT_TRUE(MinorIndex({4, 5, 6}).is_frozen());
  EXPECT_FALSE(MinorIndex({1, 3, 4}).is_frozen());
  EXPECT_EQ(to_string(MinorIndex({1, 3, 4})), "P_{1,3,4}");
}

TEST(Pluecker, ArithmeticInTheQuotient) {
  const PlueckerPoly one = PlueckerPoly::constant(3, 1);
  const PlueckerPoly p = P({1, 3, 4}) * P({2, 4, 5}) - P({1, 2, 4});
  EXPECT_EQ(p * one, p);
  EXPECT_EQ(P({1, 2, 3}) * P({1, 3, 4}), P({1, 3, 4}));
  EXPECT_TRUE((P({1, 3, 4}) - P({1, 3, 4})).is_zero());
  EXPECT_EQ(PlueckerPoly::variable(3, {4, 3, 1}), -P({1, 3, 4}));
  EXPECT_TRUE(PlueckerPoly::variable(3, {1, 1, 4}).is_zero());
  EXPECT_EQ(P({1, 3, 4}).pow(3), P({1, 3, 4}) * P({1, 3, 4}) * P({1, 3, 4}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(to_string(p), "-P_{1,2,4} + P_{1,3,4}*P_{2,4,5}");
  EXPECT_THROW(P({1, 3, 4}) + P({1, 2, 4, 6}), std::invalid_argument);
}

TEST(Pluecker, BigCoefficients) {
  PlueckerPoly p = P({1, 3, 4}).scaled(BigInt(1) << 100);
  p = p * p;
  EXPECT_EQ(p.terms().begin()->second, BigInt(1) << 200);
  EXPECT_EQ(parse_bigint("-123456789012345678901234567890"), -BigInt("123456789012345678901234567890"));
  EXPECT_THROW(parse_bigint("12a"), std::invalid_argument);
}

TEST(Pluecker, Shift) {
  EXPECT_EQ(shift(P({1, 3, 4}), 3), P({4, 6, 7}));
  const PlueckerPoly p = P({1, 3, 4}) * P({2, 4, 5}) - P({1, 2, 4});
  EXPECT_EQ(shift(p, 0), p);
  EXPECT_EQ(shift(shift(p, 5), -5), p);
  EXPECT_EQ(shift(p * p, 2), shift(p, 2) * shift(p, 2));
}

TEST(Pluecker, GeneratorGivesWorkedRelation) {
  const std::vector<int> i{4, 5}, j{1, 2, 3, 4};
  const PlueckerPoly g = plucker_generator(i, j);
  // P_{1,4,5} = P_{1,3,4}P_{2,4,5} - P_{1,2,4} up to sign and the frozen P_{2,3,4}, P_{3,4,5}.
  const PlueckerPoly rel = P({1, 4, 5}) - P({1, 3, 4}) * P({2, 4, 5}) + P({1, 2, 4});
  EXPECT_TRUE(g == rel || g == -rel) << to_string(g);
}

TEST(Pluecker, GeneratorsVanishOnConfigs) {
  const PrimeField field;
  const std::vector<int> i{5, 6}, j{1, 2, 3, 4};
  const PlueckerPoly g = plucker_generator(i, j);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_normalized_config(field, 3, -2, 9, 77, static_cast<std::uint64_t>(t));
    EXPECT_TRUE(field.is_zero(evaluate(g, c)));
  }
  const std::vector<int> i2{1, 2}, j2{1, 2, 3, 4};
  EXPECT_TRUE(plucker_generator(i2, j2).is_zero());
}

TEST(Pluecker, ConfigsAreNormalizedAndDeterministic) {
  const PrimeField field;
  for (int m = 2; m <= 5; ++m) {
    const auto c = random_normalized_config(field, m, -3, 20, 9, 1);
    for (int lo = -3; lo + m - 1 <= 20; ++lo) {
      std::vector<int> window;
      for (int s = 0; s < m; ++s) window.push_back(lo + s);
      EXPECT_EQ(c.det(window), field.one());
    }
    const auto again = random_normalized_config(field, m, -3, 20, 9, 1);
    EXPECT_EQ(c.columns(), again.columns());
  }
}

TEST(Pluecker, GaussianAgainstLeibniz) {
  const PrimeField field;
  const auto c = random_normalized_config(field, 4, 1, 40, 3, 0);
  const auto cols = oracle::columns_of(c);
  std::mt19937_64 rng(2);
  for (int s = 0; s < 500; ++s) {
    std::vector<int> pool(40);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(4);
    std::sort(pool.begin(), pool.end());
    EXPECT_EQ(c.minor(MinorIndex(pool)), oracle::minor_of(field, cols, pool));
  }
}

TEST(Pluecker, AllMinorsOfLargeRangeEvaluate) {
  const PrimeField field;
  const auto c = random_normalized_config(field, 4, 1, 40, 5, 0);
  std::size_t count = 0;
  for (int a = 1; a <= 40; ++a)
    for (int b = a + 1; b <= 40; ++b)
      for (int d = b + 1; d <= 40; ++d)
        for (int e = d + 1; e <= 40; ++e) {
          const auto v = c.minor(MinorIndex({a, b, d, e}));
          EXPECT_LT(v, kDefaultPrime);
          ++count;
        }
  EXPECT_EQ(count, 91390u);
}

TEST(Pluecker, RationalConfigs) {
  const RationalField field;
  const auto c = random_normalized_config(field, 3, 1, 9, 4, 0);
  for (int lo = 1; lo + 2 <= 9; ++lo) EXPECT_EQ(c.det(std::vector<int>{lo, lo + 1, lo + 2}), field.one());
}

TEST(Pluecker, EvaluateNeedsRange) {
  const PrimeField field;
  const auto c = random_normalized_config(field, 3, 1, 6, 4, 0);
  EXPECT_THROW(evaluate(P({1, 3, 9}), c), std::out_of_range);
  EXPECT_EQ(evaluate(PlueckerPoly::constant(3, 1), c), field.one());
}

TEST(Pluecker, EqModExamples) {
  const PlueckerPoly lhs = P({1, 4, 5});
  const PlueckerPoly rhs = P({1, 3, 4}) * P({2, 4, 5}) - P({1, 2, 4});
  EXPECT_TRUE(eq_mod(lhs, lhs));
  EXPECT_TRUE(eq_mod(lhs, rhs));
  EXPECT_TRUE(eq_mod(rhs, lhs));
  const auto r = eq_mod(lhs, P({1, 4, 6}));
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->field.rfind("F_", 0), 0u);
  EqModOptions q;
  q.field = FieldKind::rational;
  q.trials = 3;
  EXPECT_TRUE(eq_mod(lhs, rhs, q));
  EXPECT_FALSE(eq_mod(lhs, P({1, 4, 6}), q));
}

TEST(Pluecker, EqModRespectsRingOperations) {
  const PlueckerPoly a = P({1, 4, 5});
  const PlueckerPoly b = P({1, 3, 4}) * P({2, 4, 5}) - P({1, 2, 4});
  const PlueckerPoly c = P({2, 3, 6}) + PlueckerPoly::constant(3, 2);
  EXPECT_TRUE(eq_mod(a * c, b * c));
  EXPECT_TRUE(eq_mod(a + c, b + c));
  EXPECT_TRUE(eq_mod(shift(a, 4), shift(b, 4)));
}

TEST(Pluecker, WitnessReproducesFailure) {
  EqModOptions o;
  o.seed = 31;
  const PlueckerPoly x = P({1, 4, 5}), y = P({1, 4, 6});
  const auto r = eq_mod(x, y, o);
  ASSERT_FALSE(r.equal);
  const PrimeField field(o.prime);
  const auto c = random_normalized_config(field, 3, r.witness->lo, r.witness->hi, r.witness->seed,
                                          static_cast<std::uint64_t>(r.witness->trial));
  EXPECT_NE(evaluate(x, c), evaluate(y, c));
}

TEST(Pluecker, PrimeFieldChecksModulus) {
  EXPECT_THROW(PrimeField(1000), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(1000003));
  EqModOptions o;
  o.prime = 1000003;
  EXPECT_TRUE(eq_mod(P({1, 4, 5}), P({1, 3, 4}) * P({2, 4, 5}) - P({1, 2, 4}), o));
}
