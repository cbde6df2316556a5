#pragma once

// Uniform theoremhood over theories A, B, C, D and the translative F-theories,
// plus the scans and schema checkers built on it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "translatif/enonce.hpp"
#include "translatif/errors.hpp"
#include "translatif/generate.hpp"
#include "translatif/hfset.hpp"
#include "translatif/propositional.hpp"
#include "translatif/schedule.hpp"
#include "translatif/syntax.hpp"
#include "translatif/translation.hpp"
#include "translatif/verdict.hpp"

namespace translatif {

// M and Asymptotic are named for completeness; neither is decided.
enum class TheoryKind { A, B, C, D, F, M, Asymptotic };

inline const char* to_string(TheoryKind k) {
  switch (k) {
    case TheoryKind::A: return "A";
    case TheoryKind::B: return "B";
    case TheoryKind::C: return "C";
    case TheoryKind::D: return "D";
    case TheoryKind::F: return "F";
    case TheoryKind::M: return "M";
    case TheoryKind::Asymptotic: return "Asymptotic";
  }
  return "?";
}

inline std::optional<TheoryKind> parse_theory_kind(std::string_view s) {
  for (TheoryKind k : {TheoryKind::A, TheoryKind::B, TheoryKind::C, TheoryKind::D, TheoryKind::F, TheoryKind::M,
                       TheoryKind::Asymptotic}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

struct TheoryLimits {
  std::uint64_t max_size = TranslationLimits{}.max_size;
  unsigned tt_vars = kDefaultTruthTableVarCap;
  std::uint64_t work = kDefaultWorkLimit;
};

// How an F decision is computed. Both give the same verdict within limits.
enum class FRoute { Streaming, Materialized };

struct TheoryConfig {
  TheoryKind kind = TheoryKind::B;
  unsigned rank = 1;
  ContainerSchedule schedule = ContainerSchedule::p_ladder();
  TheoryLimits limits;
  FRoute route = FRoute::Streaming;

  static TheoryConfig of(TheoryKind k) {
    TheoryConfig c;
    c.kind = k;
    return c;
  }

  static TheoryConfig f(unsigned rank, ContainerSchedule sched = ContainerSchedule::p_ladder()) {
    TheoryConfig c;
    c.kind = TheoryKind::F;
    c.rank = rank;
    c.schedule = std::move(sched);
    return c;
  }

  void validate() const {
    if (rank < 1) throw PreconditionViolation("theory config: rank must be >= 1");
    if (limits.max_size == 0 || limits.tt_vars == 0 || limits.work == 0) {
      throw PreconditionViolation("theory config: limits must be positive");
    }
  }
};

namespace detail {

inline Verdict decide_f(const TheoryConfig& cfg, const Enonce& e) {
  require_language(e, Language::F, "is_theorem(F)");
  try {
    if (cfg.route == FRoute::Materialized) {
      const TranslationLimits limits{cfg.limits.max_size};
      const Enonce d = pipeline_udK(e, cfg.rank, cfg.schedule, limits).result;
      return Verdict::from_bool(eval_bool(translate_D_to_B(d)));
    }
    require_rank(cfg.rank, cfg.schedule);
    const Enonce d = maxi_denect(universal_closure(e));
    return Verdict::from_bool(decide_bracketK(d, cfg.rank, cfg.schedule, cfg.limits.work));
  } catch (const ResourceLimit& limit) {
    return Verdict::unknown(limit.limit);
  }
}

}  // namespace detail

// A: Θ ↦ Theorem, Ψ ↦ NonTheorem. B: evaluation. C: truth table.
// D: binary translation then evaluation. F: ^ud[K then the D decision.
inline Verdict is_theorem(const TheoryConfig& cfg, const Enonce& e) {
  cfg.validate();
  switch (cfg.kind) {
    case TheoryKind::A:
      if (e.is(Kind::Psi)) return Verdict::non_theorem();
      if (e == theta()) return Verdict::theorem();
      throw LanguageError("is_theorem(A): theory A has only the énoncés psi and theta");
    case TheoryKind::B: return Verdict::from_bool(eval_bool(e));
    case TheoryKind::C: return is_theorem_C(e, cfg.limits.tt_vars);
    case TheoryKind::D: return Verdict::from_bool(eval_bool(translate_D_to_B(e)));
    case TheoryKind::F: return detail::decide_f(cfg, e);
    case TheoryKind::M: throw NotDecidable("theory M is not decidable here");
    case TheoryKind::Asymptotic: throw NotDecidable("asymptotic theories are probed, not decided");
  }
  throw NotDecidable("unknown theory kind");
}

inline bool is_decidable(TheoryKind k) { return k != TheoryKind::M && k != TheoryKind::Asymptotic; }

// ---------------------------------------------------------------------------
// Report lines

inline std::string format_rank_line(unsigned rank, const Verdict& v) {
  return "rank=" + std::to_string(rank) + " verdict=" + v.letter() + " reason=" +
         (v.is_unknown() ? v.reason() : std::string("-"));
}

// ---------------------------------------------------------------------------
// Inference closure

struct InferenceReport {
  std::uint64_t checked = 0;
  std::uint64_t premises_held = 0;
  std::uint64_t unknowns = 0;
  std::vector<std::size_t> counterexamples;  // indices into the sample list

  bool clean() const { return counterexamples.empty() && unknowns == 0; }
};

// For each (E, F): Theorem E and Theorem E ⟹ F must give Theorem F.
inline InferenceReport check_inference_closure(const TheoryConfig& cfg,
                                               std::span<const std::pair<Enonce, Enonce>> samples) {
  InferenceReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [e, f] = samples[i];
    ++report.checked;
    const Verdict ve = is_theorem(cfg, e);
    const Verdict vi = is_theorem(cfg, Enonce::implies(e, f));
    if (ve.is_unknown() || vi.is_unknown()) {
      ++report.unknowns;
      continue;
    }
    if (!ve.is_theorem() || !vi.is_theorem()) continue;
    ++report.premises_held;
    const Verdict vf = is_theorem(cfg, f);
    if (vf.is_unknown()) {
      ++report.unknowns;
    } else if (!vf.is_theorem()) {
      report.counterexamples.push_back(i);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Equality schema

// One-hole predicate: the hole is the free littème of level 1.
struct PredicateTemplate {
  std::string name;
  Enonce body;

  Enonce fill(const HfSet& value) const {
    const HfSet v[] = {value};
    return instantiate(body, v);
  }
};

// hole∈hole, ∅∈hole, hole∈c, ∀y(y∈hole ⟹ y∈hole), ∀y(y∈hole ⟹ ∀z(z∈y ⟹ z∈hole)).
inline std::vector<PredicateTemplate> predicate_templates(const HfSet& container) {
  if (container.empty()) throw PreconditionViolation("predicate_templates: empty container");
  const HfSet c = container.elements().back();
  return {
      {"self-member", parse("in x@1 x@1")},
      {"empty-member", parse("in D#0 x@1")},
      {"member-of-c", Enonce::in(Term::litteme(1), Term::dictif(c))},
      {"self-subset", parse("all imp in x@1 x@2 in x@1 x@2")},
      {"nested", parse("all imp in x@1 x@2 all imp in x@1 x@2 in x@1 x@3")},
  };
}

// (∀x (x∈a ⟺ x∈b)) ⟹ (P(a) ⟺ P(b))
inline Enonce equality_instance(const PredicateTemplate& p, const HfSet& a, const HfSet& b) {
  const Enonce ext = Enonce::forall(
      equivalence(Enonce::in(Term::litteme(1), Term::dictif(a)), Enonce::in(Term::litteme(1), Term::dictif(b))));
  return Enonce::implies(ext, equivalence(p.fill(a), p.fill(b)));
}

inline bool container_subtransitive(const HfSet& c) { return is_transitive(c) || is_subtransitive(c); }

inline Verdict check_equality_schema(unsigned k, const ContainerSchedule& sched, const PredicateTemplate& p,
                                     const HfSet& a, const HfSet& b, const TheoryLimits& limits = {}) {
  require_rank(k, sched);
  const HfSet ck = sched.container(k);
  if (!member(a, ck) || !member(b, ck)) {
    throw PreconditionViolation("check_equality_schema: a and b must be elements of C_" + std::to_string(k));
  }
  const Enonce instance = equality_instance(p, a, b);
  const std::uint32_t levels = block_depth(maxi_denect(universal_closure(instance)));
  for (std::uint32_t level = 0; level < levels; ++level) {
    const unsigned idx = sched.index_at_level(k, level);
    if (!sched.within_cap(idx)) break;
    if (!container_subtransitive(sched.container(idx))) {
      throw PreconditionViolation("check_equality_schema: container C_" + std::to_string(idx) +
                                  " is not sub-transitive");
    }
  }
  TheoryConfig cfg = TheoryConfig::f(k, sched);
  cfg.limits = limits;
  try {
    return is_theorem(cfg, instance);
  } catch (const CapExceeded&) {
    return Verdict::unknown("rank-cap");
  }
}

// ---------------------------------------------------------------------------
// Foundation

// ∀a(¬∀z(z∈a ⟺ z∈∅) ⟹ ∃x(x∈a ∧ ¬∃y(y∈x ∧ y∈a))), emptiness by extensionality.
inline Enonce foundation_sentence() {
  static const Enonce af =
      parse("all imp ~ all <=> in x@1 x@2 in x@1 D#0 E! & in x@1 x@2 ~ E! & in x@1 x@2 in x@1 x@3");
  return af;
}

inline Verdict check_foundation(unsigned k, const ContainerSchedule& sched, const TheoryLimits& limits = {}) {
  require_rank(k, sched);
  TheoryConfig cfg = TheoryConfig::f(k, sched);
  cfg.limits = limits;
  return is_theorem(cfg, foundation_sentence());
}

// ---------------------------------------------------------------------------
// Asymptotic probing

struct RankVerdict {
  unsigned rank;
  Verdict verdict;
};

// Evidence for L*-theoremhood, never a proof of it.
struct StabilizationReport {
  std::vector<RankVerdict> ranks;
  bool stabilized = false;
  std::optional<unsigned> first_stable_rank;  // start of the longest equal-verdict suffix
};

// Stabilized when the last verdict is not Unknown and at least two trailing
// ranks agree (one suffices for a window of one).
inline StabilizationReport asymptotic_probe(const std::function<TheoryConfig(unsigned)>& family, const Enonce& e,
                                            unsigned start, unsigned window) {
  if (window < 1) throw PreconditionViolation("asymptotic_probe: window must be >= 1");
  if (start < 1) throw PreconditionViolation("asymptotic_probe: start rank must be >= 1");
  StabilizationReport report;
  for (unsigned r = start; r < start + window; ++r) {
    Verdict v = Verdict::unknown("rank-cap");
    try {
      v = is_theorem(family(r), e);
    } catch (const CapExceeded&) {
    }
    report.ranks.push_back({r, v});
  }
  std::size_t suffix = 1;
  while (suffix < report.ranks.size() &&
         report.ranks[report.ranks.size() - 1 - suffix].verdict == report.ranks.back().verdict) {
    ++suffix;
  }
  const RankVerdict& last = report.ranks.back();
  report.first_stable_rank = report.ranks[report.ranks.size() - suffix].rank;
  report.stabilized = !last.verdict.is_unknown() && (suffix >= 2 || window == 1);
  return report;
}

inline std::function<TheoryConfig(unsigned)> f_family(ContainerSchedule sched = ContainerSchedule::p_ladder(),
                                                     TheoryLimits limits = {}) {
  return [sched = std::move(sched), limits](unsigned r) {
    TheoryConfig c = TheoryConfig::f(r, sched);
    c.limits = limits;
    return c;
  };
}

// ---------------------------------------------------------------------------
// Coherence

struct CoherenceReport {
  std::uint64_t checked = 0;
  std::uint64_t exhaustive = 0;
  std::uint64_t sampled = 0;
  std::uint64_t unknowns = 0;
  std::vector<Enonce> violations;

  bool clean() const { return violations.empty() && unknowns == 0; }
};

// Exactly one of E and ¬E is a theorem.
inline void check_coherent(const TheoryConfig& cfg, const Enonce& e, CoherenceReport& report) {
  ++report.checked;
  const Verdict pos = is_theorem(cfg, e);
  const Verdict neg = is_theorem(cfg, negation(e));
  if (pos.is_unknown() || neg.is_unknown()) {
    ++report.unknowns;
  } else if (pos.is_theorem() == neg.is_theorem()) {
    report.violations.push_back(e);
  }
}

struct CoherenceOptions {
  unsigned size_bound = 9;       // exhaustive part, in signs
  unsigned dictif_bound = 8;     // D: dictif indices below this
  std::uint64_t samples = 0;     // random part
  std::uint64_t seed = 1;
  GenOptions gen = {3, 3, 3, {from_index(0), from_index(1), from_index(2), from_index(3)}};
};

// Closed énoncés of B, D or F: exhaustive up to the size bound, then random.
inline CoherenceReport coherence_scan(const TheoryConfig& cfg, const CoherenceOptions& opts) {
  CoherenceReport report;
  std::vector<Enonce> exhaustive;
  switch (cfg.kind) {
    case TheoryKind::B: exhaustive = enumerate_b(opts.size_bound); break;
    case TheoryKind::D: exhaustive = enumerate_d(opts.size_bound, opts.dictif_bound); break;
    case TheoryKind::F: exhaustive = enumerate_closed_f(opts.size_bound, opts.gen.dictifs); break;
    default: throw PreconditionViolation(std::string("coherence_scan: theory ") + to_string(cfg.kind) +
                                         " has no closed-énoncé negation pairs to scan");
  }
  for (const Enonce& e : exhaustive) check_coherent(cfg, e, report);
  report.exhaustive = exhaustive.size();
  FormulaGenerator gen(opts.seed);
  for (std::uint64_t i = 0; i < opts.samples; ++i) {
    switch (cfg.kind) {
      case TheoryKind::B: check_coherent(cfg, gen.b(opts.gen), report); break;
      case TheoryKind::D: check_coherent(cfg, gen.d(opts.gen), report); break;
      default: check_coherent(cfg, gen.closed_f(opts.gen), report); break;
    }
  }
  report.sampled = opts.samples;
  return report;
}

}  // namespace translatif
