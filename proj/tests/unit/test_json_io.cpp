#include <random>

#include <gtest/gtest.h>

#include "grbraid/json_io.hpp"

using namespace grbraid;

namespace {

PlueckerPoly P(std::initializer_list<int> idx) { return PlueckerPoly::variable(static_cast<int>(idx.size()), idx); }

}  // namespace

TEST(JsonIo, MultisegmentRoundTrip) {
  const Multisegment m(3, std::vector<Segment>{{1, 3}, {2, 2}, {1, 3}});
  const Json j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"rank":3,"segments":[[1,3],[1,3],[2,2]]})");
  EXPECT_EQ(multisegment_from_json(j), m);
  EXPECT_EQ(multisegment_from_json(parse_json(R"({"rank":2,"segments":[]})")), Multisegment(2));
}

TEST(JsonIo, ExtElementRoundTrip) {
  std::mt19937_64 rng(2);
  for (int s = 0; s < 100; ++s) {
    const ExtElement b = random_ext_element(3, rng);
    EXPECT_EQ(ext_element_from_json(parse_json(to_json(b).dump())), b);
  }
}

TEST(JsonIo, PlueckerRoundTrip) {
  const PlueckerPoly p = (P({1, 3, 4}) * P({2, 4, 5}) - P({1, 2, 4})).scaled(BigInt(1) << 90);
  EXPECT_EQ(pluecker_from_json(parse_json(to_json(p).dump())), p);
  EXPECT_EQ(pluecker_from_json(to_json(PlueckerPoly::constant(4, 0))), PlueckerPoly::constant(4, 0));
}

TEST(JsonIo, KRingRoundTrip) {
  const KPoly p = KPoly::variable(3, {2, 1}) * KPoly::variable(3, {1, 4}) - KPoly::constant(3, 2);
  EXPECT_EQ(kpoly_from_json(to_json(p), 3), p);
  const KMonomial mono{{{1, 0}, 2}, {{2, 3}, 1}};
  EXPECT_EQ(kmonomial_from_json(to_json(mono), 2), mono);
}

TEST(JsonIo, SeedRoundTrip) {
  const Seed s = initial_seed(3, 6);
  const std::string text = to_json(s).dump(2);
  EXPECT_EQ(to_json(seed_from_json(parse_json(text))).dump(2), text);
  EXPECT_EQ(seed_from_json(parse_json(text)), s);
  const Seed t = mutate(s, {1, 1});
  EXPECT_EQ(seed_from_json(to_json(t)), t);
}

TEST(JsonIo, FormalQuotientRoundTrip) {
  const RationalFn f(P({1, 3, 4}) + PlueckerPoly::constant(3, 1), P({2, 4, 5}));
  EXPECT_EQ(rational_from_json(to_json(f)), f);
  const Seed s = initial_seed(3, 6).with_var({1, 1}, f);
  EXPECT_EQ(seed_from_json(to_json(s)), s);
}

TEST(JsonIo, ReportShape) {
  const Json j = to_json(commute_check(2, 1, 0, 2));
  EXPECT_EQ(j.at("kind"), "commute");
  EXPECT_EQ(j.at("failures"), 0);
  EXPECT_TRUE(j.at("window").is_array());
  for (const auto& e : j.at("entries")) {
    EXPECT_TRUE(e.contains("case"));
    EXPECT_TRUE(e.at("equal").get<bool>());
    EXPECT_FALSE(e.contains("witness"));
  }
}

TEST(JsonIo, WitnessFields) {
  EqModOptions o;
  o.seed = 3;
  const auto r = eq_mod(P({1, 4, 5}), P({1, 4, 6}), o);
  ASSERT_TRUE(r.witness);
  const Json w = to_json(*r.witness);
  for (const char* key : {"seed", "trial", "lo", "hi", "field", "lhs_value", "rhs_value"}) EXPECT_TRUE(w.contains(key));
  EXPECT_EQ(w.at("seed"), 3);
}

TEST(JsonIo, MalformedInputs) {
  EXPECT_THROW(parse_json("{"), JsonFormatError);
  EXPECT_THROW(multisegment_from_json(parse_json(R"({"rank":2,"segments":[[2,1]]})")), JsonFormatError);
  EXPECT_THROW(multisegment_from_json(parse_json(R"({"segments":[]})")), JsonFormatError);
  EXPECT_THROW(multisegment_from_json(parse_json(R"({"rank":"two","segments":[]})")), JsonFormatError);
  EXPECT_THROW(ext_element_from_json(parse_json(
                   R"({"rank":2,"entries":[{"k":0,"segments":[[1,1]]},{"k":0,"segments":[[2,2]]}]})")),
               JsonFormatError);
  EXPECT_THROW(pluecker_from_json(parse_json(R"({"m":3,"terms":[{"coeff":"x1","vars":[[1,3,4]]}]})")),
               JsonFormatError);
  EXPECT_THROW(pluecker_from_json(parse_json(R"({"m":3,"terms":[{"coeff":"+1","vars":[[1,3]]}]})")),
               JsonFormatError);
  EXPECT_THROW(kmonomial_from_json(parse_json(R"([{"i":1,"a":1,"exp":1}])"), 2), JsonFormatError);
  EXPECT_THROW(seed_from_json(parse_json(R"({"m":3,"N":6})")), JsonFormatError);
}
