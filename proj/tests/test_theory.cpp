#include <gtest/gtest.h>

#include "oracles.hpp"
#include "translatif/syntax.hpp"
#include "translatif/theory.hpp"

using namespace translatif;

namespace {
const ContainerSchedule kP = ContainerSchedule::p_ladder();
}

TEST(IsTheorem, PerTheory) {
  EXPECT_TRUE(is_theorem(TheoryConfig::of(TheoryKind::A), theta()).is_theorem());
  EXPECT_TRUE(is_theorem(TheoryConfig::of(TheoryKind::A), Enonce::psi()).is_non_theorem());
  EXPECT_THROW(is_theorem(TheoryConfig::of(TheoryKind::A), parse("imp psi theta")), LanguageError);
  EXPECT_TRUE(is_theorem(TheoryConfig::of(TheoryKind::B), parse("imp psi psi")).is_theorem());
  EXPECT_TRUE(is_theorem(TheoryConfig::of(TheoryKind::C), parse("| v@1 ~ v@1")).is_theorem());
  EXPECT_TRUE(is_theorem(TheoryConfig::of(TheoryKind::D), parse("in D#2 D#6")).is_theorem());
  EXPECT_TRUE(is_theorem(TheoryConfig::f(1), parse("all in x@1 x@1")).is_non_theorem());
  EXPECT_THROW(is_theorem(TheoryConfig::of(TheoryKind::D), parse("all in x@1 x@1")), LanguageError);
  EXPECT_THROW(is_theorem(TheoryConfig::of(TheoryKind::B), parse("v@1")), LanguageError);
  EXPECT_THROW(is_theorem(TheoryConfig::of(TheoryKind::M), theta()), NotDecidable);
  EXPECT_THROW(is_theorem(TheoryConfig::of(TheoryKind::Asymptotic), theta()), NotDecidable);
  EXPECT_THROW(is_theorem(TheoryConfig::f(9), theta()), CapExceeded);
}

TEST(IsTheorem, FRoutesAgreeAndLimitsGiveUnknown) {
  TheoryConfig streaming = TheoryConfig::f(2);
  TheoryConfig materialized = TheoryConfig::f(2);
  materialized.route = FRoute::Materialized;
  FormulaGenerator gen(5);
  for (int i = 0; i < 300; ++i) {
    const Enonce e = gen.closed_f({5, 2, 0, {from_index(0), from_index(1), from_index(3)}});
    ASSERT_EQ(is_theorem(streaming, e), is_theorem(materialized, e)) << print_canonical(e);
  }
  materialized.limits.max_size = 20;
  EXPECT_EQ(is_theorem(materialized, parse("all all in x@1 x@2")), Verdict::unknown("size-limit"));
  streaming.limits.work = 1;
  EXPECT_EQ(is_theorem(streaming, parse("all all imp in x@1 x@2 in x@1 x@2")), Verdict::unknown("work-limit"));
}

TEST(IsTheorem, ConfigValidation) {
  TheoryConfig c = TheoryConfig::f(0);
  EXPECT_THROW(is_theorem(c, theta()), PreconditionViolation);
  c = TheoryConfig::f(1);
  c.limits.max_size = 0;
  EXPECT_THROW(is_theorem(c, theta()), PreconditionViolation);
}

TEST(InferenceClosure, B) {
  FormulaGenerator gen(7);
  std::vector<std::pair<Enonce, Enonce>> pairs;
  for (int i = 0; i < 1000; ++i) pairs.emplace_back(gen.b({5, 0, 0, {}}), gen.b({5, 0, 0, {}}));
  const InferenceReport r = check_inference_closure(TheoryConfig::of(TheoryKind::B), pairs);
  EXPECT_EQ(r.checked, 1000u);
  EXPECT_GT(r.premises_held, 0u);
  EXPECT_TRUE(r.clean());
}

TEST(InferenceClosure, FRank2) {
  FormulaGenerator gen(8);
  std::vector<std::pair<Enonce, Enonce>> pairs;
  GenOptions o{4, 2, 0, {from_index(0), from_index(1), from_index(2), from_index(3)}};
  for (int i = 0; i < 200; ++i) {
    const Enonce e = gen.closed_f(o);
    pairs.emplace_back(e, gen.closed_f(o));
    const Enonce parts[] = {e};
    pairs.emplace_back(schema_instance(1, parts), e);
  }
  const InferenceReport r = check_inference_closure(TheoryConfig::f(2), pairs);
  EXPECT_GT(r.premises_held, 0u);
  EXPECT_TRUE(r.clean());
}

TEST(InferenceClosure, EmptySampleIsVacuous) {
  const InferenceReport r = check_inference_closure(TheoryConfig::of(TheoryKind::B), {});
  EXPECT_EQ(r.checked, 0u);
  EXPECT_TRUE(r.clean());
}

TEST(EqualitySchema, Examples) {
  const auto templates = predicate_templates(kP.container(2));
  ASSERT_EQ(templates.size(), 5u);
  const PredicateTemplate& self = templates[0];
  EXPECT_TRUE(check_equality_schema(2, kP, self, HfSet{}, HfSet{}).is_theorem());
  EXPECT_TRUE(check_equality_schema(2, kP, self, HfSet{}, from_index(1)).is_theorem());
}

TEST(EqualitySchema, InstanceShape) {
  const auto templates = predicate_templates(kP.container(2));
  EXPECT_EQ(templates[2].fill(from_index(0)), parse("in D#0 D#1"));
  EXPECT_EQ(templates[3].fill(from_index(1)), parse("all imp in x@1 D#1 in x@1 D#1"));
  EXPECT_EQ(equality_instance(templates[0], HfSet{}, from_index(1)),
            parse("imp all <=> in x@1 D#0 in x@1 D#1 <=> in D#0 D#0 in D#1 D#1"));
}

TEST(EqualitySchema, ExhaustiveRank2AgainstMaterializedRoute) {
  for (const auto& p : predicate_templates(kP.container(2))) {
    for (const HfSet& a : kP.container(2).elements()) {
      for (const HfSet& b : kP.container(2).elements()) {
        ASSERT_TRUE(check_equality_schema(2, kP, p, a, b).is_theorem()) << p.name;
        TheoryConfig m = TheoryConfig::f(2);
        m.route = FRoute::Materialized;
        ASSERT_TRUE(is_theorem(m, equality_instance(p, a, b)).is_theorem()) << p.name;
      }
    }
  }
}

TEST(EqualitySchema, Rank3) {
  for (const auto& p : predicate_templates(kP.container(3))) {
    for (const HfSet& a : kP.container(3).elements()) {
      for (const HfSet& b : kP.container(3).elements()) {
        ASSERT_TRUE(check_equality_schema(3, kP, p, a, b).is_theorem()) << p.name;
      }
    }
  }
}

TEST(EqualitySchema, Preconditions) {
  const auto templates = predicate_templates(kP.container(2));
  EXPECT_THROW(check_equality_schema(2, kP, templates[0], from_index(2), HfSet{}), PreconditionViolation);
  // X = {∅, {{∅}}} is not sub-transitive: ∅∩X = {{∅}}∩X = ∅.
  const HfSet bad = HfSet::of({HfSet{}, from_index(2)});
  const auto sched = ContainerSchedule::from_list("bad", {bad, set_union(bad, from_index(3))});
  EXPECT_THROW(check_equality_schema(1, sched, templates[0], HfSet{}, from_index(2)), PreconditionViolation);
}

TEST(EqualitySchema, FailsWithoutSubtransitivity) {
  // On a non-sub-transitive domain the bounded reading identifies ∅ and {{∅}}.
  const HfSet bad = HfSet::of({HfSet{}, from_index(2)});
  const auto sched = ContainerSchedule::from_list("bad", {bad, bad, bad});
  const PredicateTemplate p{"has-one", parse("in D#1 x@1")};
  const Enonce inst = equality_instance(p, HfSet{}, from_index(2));
  EXPECT_TRUE(is_theorem(TheoryConfig::f(1, sched), inst).is_non_theorem());
}

TEST(Foundation, SentenceNesting) {
  const Enonce d = maxi_denect(foundation_sentence());
  EXPECT_EQ(block_depth(d), 3u);
  EXPECT_TRUE(is_strictly_closed(foundation_sentence()));
}

TEST(Foundation, RanksOneToThreeAgreeWithDirectSemantics) {
  for (unsigned k = 1; k <= 3; ++k) {
    const bool expected = oracle::foundation_holds(kP.container(k), kP.container(k + 1), kP.container(k + 2));
    EXPECT_TRUE(expected) << k;
    EXPECT_EQ(check_foundation(k, kP).is_theorem(), expected) << k;
  }
}

TEST(Foundation, MaterializedAgreesAtRankOne) {
  TheoryConfig m = TheoryConfig::f(1);
  m.route = FRoute::Materialized;
  EXPECT_TRUE(is_theorem(m, foundation_sentence()).is_theorem());
}

TEST(Foundation, RankBeyondCapIsRejected) { EXPECT_THROW(check_foundation(6, kP), CapExceeded); }

TEST(Asymptotic, StableTheorem) {
  const StabilizationReport r = asymptotic_probe(f_family(), parse("all all imp in x@1 D#0 in x@1 x@2"), 1, 4);
  ASSERT_EQ(r.ranks.size(), 4u);
  for (const RankVerdict& rv : r.ranks) EXPECT_TRUE(rv.verdict.is_theorem());
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.first_stable_rank, 1u);
}

TEST(Asymptotic, StableNonTheorem) {
  const StabilizationReport r = asymptotic_probe(f_family(), parse("all in x@1 x@1"), 1, 4);
  for (const RankVerdict& rv : r.ranks) EXPECT_TRUE(rv.verdict.is_non_theorem());
  EXPECT_TRUE(r.stabilized);
}

TEST(Asymptotic, CapGivesUnknown) {
  const StabilizationReport r = asymptotic_probe(f_family(), parse("all in x@1 x@1"), 4, 3);
  EXPECT_TRUE(r.ranks[2].verdict.is_unknown());
  EXPECT_EQ(r.ranks[2].verdict.reason(), "rank-cap");
  EXPECT_FALSE(r.stabilized);
  EXPECT_THROW(asymptotic_probe(f_family(), theta(), 1, 0), PreconditionViolation);
}

TEST(Asymptotic, LateStabilization) {
  // ∃x (∅ ∈ x) fails over C_1 = {∅} and holds from C_2 on.
  const StabilizationReport r = asymptotic_probe(f_family(), parse("E! in D#0 x@1"), 1, 4);
  EXPECT_TRUE(r.ranks[0].verdict.is_non_theorem());
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.first_stable_rank, 2u);
}

TEST(Coherence, DExhaustive) {
  CoherenceOptions o;
  o.size_bound = 9;
  o.dictif_bound = 8;
  const CoherenceReport r = coherence_scan(TheoryConfig::of(TheoryKind::D), o);
  EXPECT_GT(r.exhaustive, 10000u);
  EXPECT_TRUE(r.clean());
}

TEST(Coherence, BExhaustive) {
  CoherenceOptions o;
  o.size_bound = 11;
  const CoherenceReport r = coherence_scan(TheoryConfig::of(TheoryKind::B), o);
  EXPECT_EQ(r.exhaustive, 1u + 1u + 2u + 5u + 14u + 42u);
  EXPECT_TRUE(r.clean());
}

TEST(Coherence, FSamplesAndSmallExhaustive) {
  CoherenceOptions o;
  o.size_bound = 5;
  o.samples = 500;
  const CoherenceReport r = coherence_scan(TheoryConfig::f(1), o);
  EXPECT_EQ(r.sampled, 500u);
  EXPECT_GT(r.exhaustive, 0u);
  EXPECT_TRUE(r.clean());
}

TEST(Coherence, RejectsTheoriesWithoutClosedNegations) {
  EXPECT_THROW(coherence_scan(TheoryConfig::of(TheoryKind::C), {}), PreconditionViolation);
}

TEST(Reports, RankLine) {
  EXPECT_EQ(format_rank_line(2, Verdict::theorem()), "rank=2 verdict=T reason=-");
  EXPECT_EQ(format_rank_line(6, Verdict::unknown("rank-cap")), "rank=6 verdict=U reason=rank-cap");
}
