#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "translatif/hfset.hpp"
#include "translatif/schedule.hpp"

using namespace translatif;

TEST(HfSet, FromIndexSmallCases) {
  EXPECT_TRUE(from_index(0).empty());
  const HfSet six = from_index(6);
  ASSERT_EQ(six.size(), 2u);
  EXPECT_EQ(six.elements()[0], from_index(1));
  EXPECT_EQ(six.elements()[1], from_index(2));
  EXPECT_EQ(from_index(1), HfSet::of({HfSet{}}));
  EXPECT_EQ(from_index(2), HfSet::of({HfSet::of({HfSet{}})}));
  EXPECT_EQ(from_index(3), HfSet::of({HfSet{}, HfSet::of({HfSet{}})}));
  EXPECT_EQ(to_index(from_index(3)), 3);
}

TEST(HfSet, ToIndex) {
  EXPECT_EQ(to_index(HfSet{}), 0);
  EXPECT_EQ(to_index(HfSet::of({HfSet{}, from_index(1)})), 3);
  EXPECT_EQ(to_index(p_level(4)), 65535);
}

TEST(HfSet, BijectionBelow65536) {
  for (std::uint64_t n = 0; n < 65536; ++n) ASSERT_EQ(to_index(from_index(n)), n) << n;
}

TEST(HfSet, LargeIndexRoundTrip) {
  AckIndex big = AckIndex(1) << 100;
  big += 6;
  const HfSet s = from_index(big);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(to_index(s), big);
  EXPECT_EQ(*s.index_bit_length(), 101u);
}

TEST(HfSet, IndexOverflowPastCap) {
  EXPECT_THROW(to_index(p_level(5), 1000), IndexOverflow);
  EXPECT_EQ(to_index(p_level(5)), (AckIndex(1) << 65536) - 1);
  EXPECT_FALSE(index_materializable(p_level(5), 65535));
}

TEST(HfSet, MemberMatchesBitOracle) {
  for (std::uint64_t k = 0; k < 64; ++k) {
    for (std::uint64_t n = 0; n < 64; ++n) {
      ASSERT_EQ(member(from_index(k), from_index(n)), oracle::bit(n, static_cast<unsigned>(k))) << k << " " << n;
    }
  }
  EXPECT_FALSE(member(HfSet{}, from_index(6)));
  EXPECT_TRUE(member(from_index(1), from_index(6)));
}

TEST(HfSet, CompareAgreesWithIndexOrder) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200000; ++i) {
    const std::uint64_t a = rng() % 65536;
    const std::uint64_t b = rng() % 65536;
    ASSERT_EQ(hf_compare(from_index(a), from_index(b)), a <=> b) << a << " " << b;
  }
  EXPECT_EQ(hf_compare(HfSet{}, from_index(1)), std::strong_ordering::less);
  EXPECT_EQ(hf_compare(from_index(6), from_index(3)), std::strong_ordering::greater);
  EXPECT_EQ(hf_compare(from_index(9), from_index(9)), std::strong_ordering::equal);
}

TEST(HfSet, CompareBeyondMaterializedIndices) {
  const HfSet p5 = p_level(5);
  const HfSet bigger = set_union(p5, HfSet::of({p5}));
  EXPECT_EQ(hf_compare(p5, bigger), std::strong_ordering::less);
  EXPECT_EQ(hf_compare(from_index(65535), p5), std::strong_ordering::less);
}

TEST(HfSet, AlgebraMatchesBitwiseOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = rng() % 65536;
    const std::uint64_t b = rng() % 65536;
    const HfSet x = from_index(a), y = from_index(b);
    ASSERT_EQ(to_index(set_union(x, y)), a | b);
    ASSERT_EQ(to_index(set_intersection(x, y)), a & b);
    ASSERT_EQ(to_index(set_difference(x, y)), a & ~b);
    ASSERT_EQ(is_subset(x, y), (a & ~b) == 0);
    // Absorption and distributivity.
    const HfSet z = from_index(rng() % 65536);
    ASSERT_EQ(set_union(x, set_intersection(x, y)), x);
    ASSERT_EQ(set_intersection(x, set_union(y, z)), set_union(set_intersection(x, y), set_intersection(x, z)));
  }
  EXPECT_EQ(set_intersection(from_index(6), from_index(3)), from_index(2));
}

TEST(HfSet, IntersectionWithLargeSet) {
  const HfSet p5 = p_level(5);
  const HfSet s = HfSet::of({from_index(7), from_index(65535), p5});
  EXPECT_EQ(set_intersection(s, p5), HfSet::of({from_index(7), from_index(65535)}));
  EXPECT_EQ(set_intersection(p5, s), set_intersection(s, p5));
}

TEST(HfSet, Successor) {
  EXPECT_EQ(successor(HfSet{}), from_index(1));
  EXPECT_EQ(successor(from_index(1)), from_index(3));
}

TEST(HfSet, PowersetMatchesOracle) {
  for (std::uint64_t n : {0ull, 1ull, 3ull, 6ull, 15ull, 37ull}) {
    std::vector<HfSet> expected;
    for (std::uint64_t idx : oracle::powerset_indices(oracle::elements(n))) expected.push_back(from_index(idx));
    EXPECT_EQ(powerset(from_index(n)), HfSet::of(expected)) << n;
  }
}

TEST(HfSet, PLadder) {
  const std::uint64_t expected[] = {0, 1, 3, 15, 65535};
  for (unsigned n = 0; n <= 4; ++n) {
    EXPECT_EQ(oracle::p_level_index(n), expected[n]);
    EXPECT_EQ(to_index(p_level(n)), expected[n]);
    EXPECT_TRUE(is_subset(p_level(n), p_level(n + 1)));
  }
  EXPECT_EQ(p_level(5).size(), 65536u);
  for (unsigned n = 0; n <= 5; ++n) EXPECT_TRUE(is_transitive(p_level(n))) << n;
  EXPECT_THROW(p_level(6), CapExceeded);
}

TEST(HfSet, PowersetCap) {
  EXPECT_THROW(powerset(p_level(5)), CapExceeded);
}

// Sub-transitivity by the definition: pairwise A∩X = B∩X only when A = B.
bool subtransitive_pairwise(const HfSet& x) {
  for (const HfSet& a : x.elements()) {
    for (const HfSet& b : x.elements()) {
      if (!(a == b) && set_intersection(a, x) == set_intersection(b, x)) return false;
    }
  }
  return true;
}

TEST(HfSet, TransitivityPredicates) {
  EXPECT_TRUE(is_transitive(HfSet{}));
  EXPECT_TRUE(is_subtransitive(HfSet{}));
  const HfSet just_one = HfSet::of({from_index(1)});
  EXPECT_FALSE(is_transitive(just_one));
  EXPECT_TRUE(is_subtransitive(just_one));
  for (unsigned n = 0; n <= 4; ++n) {
    EXPECT_TRUE(subtransitive_pairwise(p_level(n)));
    EXPECT_TRUE(is_subtransitive(p_level(n)));
  }
  const HfSet x = HfSet::of({from_index(1), from_index(4)});
  EXPECT_EQ(is_subtransitive(x), subtransitive_pairwise(x));
}

TEST(HfSet, SubtransitivityAgreesWithPairwiseAndTransitivityImpliesIt) {
  for (std::uint64_t n = 0; n < 4096; ++n) {
    const HfSet x = from_index(n);
    ASSERT_EQ(is_subtransitive(x), subtransitive_pairwise(x)) << n;
    if (is_transitive(x)) ASSERT_TRUE(is_subtransitive(x)) << n;
  }
}

TEST(HfSet, NotSubtransitive) {
  // X = {∅, {{∅}}}: ∅∩X = ∅ and {{∅}}∩X = ∅.
  const HfSet x = HfSet::of({HfSet{}, from_index(2)});
  EXPECT_FALSE(is_subtransitive(x));
}

TEST(HfSet, InterningGivesIdentity) {
  EXPECT_EQ(HfSet::of({from_index(2), from_index(1), from_index(2)}), from_index(6));
  EXPECT_THROW(HfSet::from_sorted({from_index(2), from_index(1)}), PreconditionViolation);
}

TEST(HfSet, DictifText) {
  EXPECT_EQ(format_dictif(from_index(6)), "D#6");
  EXPECT_EQ(format_elements(from_index(6)), "{D#1,D#2}");
  EXPECT_EQ(parse_dictif("D#6"), from_index(6));
  EXPECT_EQ(parse_dictif("{{D#0}, D#2}"), from_index(6));
  EXPECT_EQ(parse_dictif("{D#1, {D#0}}"), from_index(2));
  EXPECT_EQ(parse_dictif("{}"), HfSet{});
  const HfSet big = set_union(p_level(5), HfSet::of({p_level(5)}));
  const std::string text = format_dictif(big, 64);
  EXPECT_EQ(text.front(), '{');
  EXPECT_EQ(parse_dictif(text, 64), big);
  EXPECT_THROW(parse_dictif("{D#1,"), DictifSyntaxError);
  EXPECT_THROW(parse_dictif("D#x"), DictifSyntaxError);
}

TEST(Schedule, PLadderInvariants) {
  const auto s = ContainerSchedule::p_ladder();
  EXPECT_TRUE(s.validate().empty());
  EXPECT_EQ(s.container(1), p_level(1));
  EXPECT_EQ(s.mu(3), 4u);
  EXPECT_EQ(s.index_at_level(2, 2), 4u);
  EXPECT_THROW(s.container(6), CapExceeded);
  EXPECT_THROW(s.container(0), CapExceeded);
}

TEST(Schedule, ValidateReportsBrokenLists) {
  const auto bad = ContainerSchedule::from_list("bad", {from_index(2), from_index(1)});
  const auto problems = bad.validate();
  ASSERT_EQ(problems.size(), 2u);
  EXPECT_NE(problems[0].find("empty dictif"), std::string::npos);
  EXPECT_NE(problems[1].find("not contained"), std::string::npos);
}
