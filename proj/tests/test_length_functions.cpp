#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace grm;
using namespace grm::testing;

TEST(Validate, IyamaLambda0IsValid) {
  auto f = iyama_lambda0();
  EXPECT_TRUE(validate_length_function(f.poset(), f.values()).ok());
}

TEST(Validate, EqualValuesOnAChainViolateL1) {
  auto p = Poset::from_relations({"x", "y"}, std::vector<std::pair<ElementId, ElementId>>{{"x", "y"}});
  auto r = validate_length_function(p, {ChainValue::scalar(1), ChainValue::scalar(1)});
  ASSERT_EQ(r.count("L1"), 1u);
  EXPECT_EQ(r.violations.front().witness, (std::vector<ElementId>{"x", "y"}));
  try {
    LengthFunction::make(p, {ChainValue::scalar(1), ChainValue::scalar(1)});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.report().count("L1"), 1u);
  }
}

TEST(Validate, IncomparableValuesViolateL2) {
  auto anti = Poset::from_relations({"u", "v"}, {});
  auto r = validate_length_function(anti, [](std::size_t x, std::size_t y) {
    return x == y ? CompareResult::Equal : CompareResult::Incomparable;
  });
  EXPECT_EQ(r.count("L2"), 1u);
  EXPECT_EQ(r.count("L1"), 0u);
}

TEST(Validate, MixedDepthThrows) {
  auto anti = Poset::from_relations({"u", "v"}, {});
  try {
    validate_length_function(anti, {ChainValue::scalar(1), ChainValue::chain({ChainValue::scalar(2)})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthMismatch);
  }
}

TEST(Lambda0, Examples) {
  auto m = Poset::from_relations({"m"}, {});
  EXPECT_EQ(lambda0(LengthFunction::make(m, {ChainValue::scalar(5)}), "m"), 1u);
  EXPECT_EQ(lambda0(iyama_lambda0(), "a"), 3u);
  // Repeated values below an element collapse.
  auto vee = Poset::from_relations({"u", "v", "w"}, std::vector<std::pair<ElementId, ElementId>>{{"u", "w"}, {"v", "w"}});
  EXPECT_EQ(lambda0(int_labels(vee, {{"u", 1}, {"v", 1}, {"w", 2}}), "w"), 2u);
  EXPECT_THROW(lambda0(iyama_lambda0(), "zz"), Error);
}

TEST(Lambda0, MatchesBruteForceCount) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    auto p = random_poset(rng, 7, 0.3);
    auto f = random_length_function(rng, p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      std::set<std::string> seen;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(y, x)) seen.insert(f.value(y).to_string());
      EXPECT_EQ(lambda0(f, x), seen.size());
    }
  }
}

TEST(Equivalence, IyamaLabellings) {
  auto p = iyama_poset();
  auto l1 = int_labels(p, {{"a", 3}, {"b", 6}, {"c", 5}, {"d", 1}, {"e", 2}, {"f", 4}});
  auto l2 = int_labels(p, {{"a", 6}, {"b", 4}, {"c", 2}, {"d", 5}, {"e", 3}, {"f", 1}});
  auto l3 = int_labels(p, {{"a", 3}, {"b", 5}, {"c", 6}, {"d", 1}, {"e", 2}, {"f", 4}});
  EXPECT_TRUE(are_equivalent(l1, l1));
  EXPECT_TRUE(are_equivalent(l2, l2));
  EXPECT_FALSE(are_equivalent(l1, l3));
  auto w = equivalence_witness(l1, l3);
  ASSERT_TRUE(w);
  EXPECT_EQ(p.id(w->first), "b");
  EXPECT_EQ(p.id(w->second), "c");
}

TEST(Equivalence, PosetMismatchThrows) {
  try {
    are_equivalent(iyama_lambda0(), height_function(total_order(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PosetMismatch);
  }
}

TEST(Equivalence, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(23);
  auto p = random_poset(rng, 5, 0.3);
  std::vector<LengthFunction> fs;
  for (int i = 0; i < 12; ++i) fs.push_back(random_length_function(rng, p));
  for (const auto& a : fs) {
    EXPECT_TRUE(are_equivalent(a, a));
    for (const auto& b : fs) {
      EXPECT_EQ(are_equivalent(a, b), are_equivalent(b, a));
      for (const auto& c : fs)
        if (are_equivalent(a, b) && are_equivalent(b, c)) EXPECT_TRUE(are_equivalent(a, c));
    }
  }
}

TEST(RankFunction, Examples) {
  auto chain = total_order(3);
  EXPECT_TRUE(is_rank_function(int_labels(chain, {{"1", 0}, {"2", 1}, {"3", 2}})));
  EXPECT_FALSE(is_rank_function(iyama_lambda0()));
  auto diamond = Poset::from_relations(
      {"bot", "l", "r", "top"},
      std::vector<std::pair<ElementId, ElementId>>{{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
  EXPECT_TRUE(is_rank_function(int_labels(diamond, {{"bot", 0}, {"l", 1}, {"r", 1}, {"top", 2}})));
  auto half = LengthFunction::make(Poset::from_relations({"m"}, {}), {ChainValue::scalar(Rational(1, 2))});
  try {
    is_rank_function(half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegerValues);
  }
}

TEST(HeightFunction, CountsLongestChain) {
  auto h = height_function(iyama_poset());
  EXPECT_EQ(h.value("a"), ChainValue::scalar(2));
  EXPECT_EQ(h.value("f"), ChainValue::scalar(1));
  EXPECT_EQ(height_function(total_order(4)).value("4"), ChainValue::scalar(4));
}
