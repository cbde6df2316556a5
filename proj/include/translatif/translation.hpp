#pragma once

// Translations between the languages:
//
//   D → B        binary translation of memberships
//   ^Z           expansion of a universal block over a dictif Z
//   ^d           maxi-dénexion (miniscoping) F^C → F^D
//   ^u           universal closure F → F^C
//   ^•H          one step: expand every outermost block over C_H
//   ^[K          steps K, μK, μμK, ... until a D-énoncé remains
//   ^ud[K        the composition u, d, [K

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "translatif/binding.hpp"
#include "translatif/enonce.hpp"
#include "translatif/errors.hpp"
#include "translatif/hfset.hpp"
#include "translatif/propositional.hpp"
#include "translatif/schedule.hpp"

namespace translatif {

struct TranslationLimits {
  // Largest materialized énoncé, in signs.
  std::uint64_t max_size = std::uint64_t{1} << 20;
};

// ---------------------------------------------------------------------------
// D → B

// ∈ D_K D_N ↦ Θ when bit K of N is set, Ψ otherwise; homomorphic on Ψ and ⟹.
inline Enonce translate_D_to_B(const Enonce& e) {
  require_language(e, Language::D, "translate_D_to_B");
  switch (e.kind()) {
    case Kind::In: return member(e.left().value(), e.right().value()) ? theta() : Enonce::psi();
    case Kind::Implies: {
      if (!(e.features() & feature::kIn)) return e;
      return Enonce::implies(translate_D_to_B(e.antecedent()), translate_D_to_B(e.consequent()));
    }
    default: return e;
  }
}

// ---------------------------------------------------------------------------
// Universal blocks

struct Block {
  std::uint32_t arity = 0;
  const Enonce* matrix = nullptr;  // first non-∀ node under the block
};

inline Block block_of(const Enonce& e) {
  Block b{0, &e};
  while (b.matrix->is(Kind::ForAll)) {
    ++b.arity;
    b.matrix = &b.matrix->body();
  }
  return b;
}

// Number of ^•H steps needed: nesting depth of maximal ∀ blocks.
inline std::uint32_t block_depth(const Enonce& e) {
  if (!(e.features() & feature::kForAll)) return 0;
  switch (e.kind()) {
    case Kind::ForAll: return 1 + block_depth(*block_of(e).matrix);
    case Kind::Implies: return std::max(block_depth(e.antecedent()), block_depth(e.consequent()));
    default: return 0;
  }
}

namespace detail {

using Wide = unsigned __int128;

inline Wide saturating_mul(Wide a, Wide b) {
  constexpr Wide kMax = ~Wide{0};
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

inline Wide tuple_count(std::size_t container_size, std::uint32_t arity) {
  Wide m = 1;
  for (std::uint32_t i = 0; i < arity; ++i) m = saturating_mul(m, container_size);
  return m;
}

inline Wide expansion_size(Wide tuples, std::uint64_t matrix_size) {
  if (tuples == 0) return 3;
  return saturating_mul(tuples, matrix_size + 5) - 5;
}

// Visits every tuple of `container`^arity in lexicographic order, first
// coordinate most significant.
template <class F>
void for_each_tuple(const HfSet& container, std::uint32_t arity, F&& fn) {
  auto elems = container.elements();
  if (elems.empty() && arity > 0) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<HfSet> tuple(arity, elems.empty() ? HfSet{} : elems[0]);
  while (true) {
    if (!fn(std::span<const HfSet>(tuple))) return;
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < elems.size()) {
        tuple[pos] = elems[idx[pos]];
        break;
      }
      idx[pos] = 0;
      tuple[pos] = elems[0];
      if (pos == 0) return;
    }
    if (arity == 0) return;
  }
}

}  // namespace detail

// A^Z: ET of R(T_1..T_N) over all tuples of elements of Z for the maximal
// outer block ∀t_1..t_N R. A membership is returned unchanged.
inline Enonce expand_over(const Enonce& e, const HfSet& z, const TranslationLimits& limits = {}) {
  if (e.is(Kind::In)) return e;
  if (!e.is(Kind::ForAll)) throw PreconditionViolation("expand_over: input not universalized");
  const Block block = block_of(e);
  const auto tuples = detail::tuple_count(z.size(), block.arity);
  if (detail::expansion_size(tuples, block.matrix->size()) > limits.max_size) {
    throw ResourceLimit("size-limit", "expansion over a container of " + std::to_string(z.size()) +
                                          " elements exceeds the size limit of " +
                                          std::to_string(limits.max_size) + " signs");
  }
  std::vector<Enonce> instances;
  instances.reserve(static_cast<std::size_t>(tuples));
  detail::for_each_tuple(z, block.arity, [&](std::span<const HfSet> t) {
    instances.push_back(instantiate(*block.matrix, t));
    return true;
  });
  return big_et(instances);
}

// ---------------------------------------------------------------------------
// ^d

namespace detail {

// `body` is already a fixpoint; returns the fixpoint for ∀ body.
inline Enonce rewrite_forall(const Enonce& body) {
  if (!references(body, 1)) return drop_binder(body);
  if (body.is(Kind::Implies)) {
    const Enonce& b = body.antecedent();
    const Enonce& c = body.consequent();
    if (!references(b, 1)) return Enonce::implies(drop_binder(b), rewrite_forall(c));
    // With c = Ψ the rewrite reproduces ∀x(B ⟹ Ψ) and would not terminate.
    if (!references(c, 1) && !c.is(Kind::Psi)) {
      return Enonce::implies(negation(Enonce::forall(negation(b))), drop_binder(c));
    }
  }
  return Enonce::forall(body);
}

inline Enonce miniscope(const Enonce& e) {
  if (!(e.features() & feature::kForAll)) return e;
  switch (e.kind()) {
    case Kind::ForAll: return rewrite_forall(miniscope(e.body()));
    case Kind::Implies: {
      Enonce a = miniscope(e.antecedent());
      Enonce b = miniscope(e.consequent());
      if (a.same_node(e.antecedent()) && b.same_node(e.consequent())) return e;
      return Enonce::implies(std::move(a), std::move(b));
    }
    default: return e;
  }
}

}  // namespace detail

// Innermost-first fixpoint of
//   ∀x C          ↦ C                when x does not occur in C
//   ∀x (B ⟹ C)   ↦ B ⟹ ∀x C         when x does not occur in B
//   ∀x (B ⟹ C)   ↦ (¬∀x¬B) ⟹ C      when x does not occur in C and C ≠ Ψ
inline Enonce maxi_denect(const Enonce& e) {
  if (!is_strictly_closed(e)) throw PreconditionViolation("maxi_denect: énoncé is not strictly closed");
  require_language(e, Language::F, "maxi_denect");
  return detail::miniscope(e);
}

inline bool is_maxi_denected(const Enonce& e) { return detail::miniscope(e) == e; }

// ---------------------------------------------------------------------------
// ^u

// Distinct free-literal levels, ascending.
inline std::set<std::int64_t> free_levels(const Enonce& e) {
  std::set<std::int64_t> levels;
  map_littemes(e, [&](std::uint32_t h, std::uint32_t local) {
    if (h > local) levels.insert(std::int64_t{h} - local);
    return Term::litteme(h);
  });
  return levels;
}

// One ∀ per distinct free level, the highest level bound outermost.
inline Enonce universal_closure(const Enonce& e) {
  const std::set<std::int64_t> levels = free_levels(e);
  if (levels.empty()) return e;
  const std::vector<std::int64_t> ordered(levels.begin(), levels.end());
  Enonce body = map_littemes(e, [&](std::uint32_t h, std::uint32_t local) {
    if (h <= local) return Term::litteme(h);
    const auto rank = std::lower_bound(ordered.begin(), ordered.end(), std::int64_t{h} - local) - ordered.begin();
    return Term::litteme(local + static_cast<std::uint32_t>(rank) + 1);
  });
  for (std::size_t i = 0; i < ordered.size(); ++i) body = Enonce::forall(std::move(body));
  return body;
}

// ---------------------------------------------------------------------------
// ^•H and ^[K

namespace detail {

inline Wide predicted_step_size(const Enonce& e, std::size_t container_size) {
  if (!(e.features() & feature::kForAll)) return e.size();
  switch (e.kind()) {
    case Kind::ForAll: {
      const Block b = block_of(e);
      return expansion_size(tuple_count(container_size, b.arity), b.matrix->size());
    }
    case Kind::Implies:
      return 1 + predicted_step_size(e.antecedent(), container_size) +
             predicted_step_size(e.consequent(), container_size);
    default: return e.size();
  }
}

inline Enonce expand_outermost(const Enonce& e, const HfSet& container, const TranslationLimits& limits) {
  if (!(e.features() & feature::kForAll)) return e;
  switch (e.kind()) {
    case Kind::ForAll: return expand_over(e, container, limits);
    case Kind::Implies:
      return Enonce::implies(expand_outermost(e.antecedent(), container, limits),
                             expand_outermost(e.consequent(), container, limits));
    default: return e;
  }
}

}  // namespace detail

// Replaces every outermost maximal universal block by its expansion over C_H.
// D-énoncés come back unchanged.
inline Enonce step(const Enonce& e, unsigned h, const ContainerSchedule& sched, const TranslationLimits& limits = {}) {
  const HfSet container = sched.container(h);
  if (detail::predicted_step_size(e, container.size()) > limits.max_size) {
    throw ResourceLimit("size-limit", "step " + std::to_string(h) + " would exceed the size limit of " +
                                          std::to_string(limits.max_size) + " signs");
  }
  return detail::expand_outermost(e, container, limits);
}

struct TraceEntry {
  std::string stage;
  std::uint64_t size = 0;
  std::uint32_t qdepth = 0;
};

using PipelineTrace = std::vector<TraceEntry>;

inline std::string format_trace_line(const TraceEntry& t) {
  return "stage=" + t.stage + " size=" + std::to_string(t.size) + " qdepth=" + std::to_string(t.qdepth);
}

inline void require_fd(const Enonce& e, const char* op) {
  require_language(e, Language::F, op);
  if (!is_strictly_closed(e)) throw PreconditionViolation(std::string(op) + ": énoncé is not strictly closed");
  if (!is_maxi_denected(e)) throw PreconditionViolation(std::string(op) + ": énoncé is not maxi-dénecté");
}

inline void require_rank(unsigned k, const ContainerSchedule& sched) {
  if (!sched.within_cap(k)) {
    throw CapExceeded("rank " + std::to_string(k) + " is outside the schedule " + sched.name() + " cap 1.." +
                      std::to_string(sched.cap()));
  }
}

// Steps with indices K, μK, μμK, ... until no ∀ remains.
inline Enonce translate_bracketK(const Enonce& e, unsigned k, const ContainerSchedule& sched,
                                 const TranslationLimits& limits = {}, PipelineTrace* trace = nullptr) {
  require_fd(e, "translate_bracketK");
  require_rank(k, sched);
  Enonce cur = e;
  unsigned h = k;
  while (cur.features() & feature::kForAll) {
    try {
      cur = step(cur, h, sched, limits);
    } catch (const ResourceLimit& limit) {
      throw ResourceLimit(limit.limit, "step:" + std::to_string(h) + ": " + limit.what());
    }
    if (trace) trace->push_back({"step:" + std::to_string(h), cur.size(), cur.qdepth()});
    h = sched.mu(h);
  }
  return cur;
}

enum class Stage { U, D, Steps };

struct PipelineResult {
  Enonce result = Enonce::psi();
  PipelineTrace trace;
};

// ^ud[K. `stop_after` returns the intermediate énoncé of that stage.
inline PipelineResult pipeline_udK(const Enonce& e, unsigned k, const ContainerSchedule& sched,
                                   const TranslationLimits& limits = {}, Stage stop_after = Stage::Steps) {
  require_language(e, Language::F, "pipeline_udK");
  require_rank(k, sched);
  PipelineTrace trace;
  Enonce closed = universal_closure(e);
  trace.push_back({"u", closed.size(), closed.qdepth()});
  if (stop_after == Stage::U) return {closed, trace};
  Enonce denected = maxi_denect(closed);
  trace.push_back({"d", denected.size(), denected.qdepth()});
  if (stop_after == Stage::D) return {denected, trace};
  Enonce out = translate_bracketK(denected, k, sched, limits, &trace);
  trace.push_back({"bracket:" + std::to_string(k), out.size(), out.qdepth()});
  return {out, trace};
}

// ---------------------------------------------------------------------------
// Streaming decision

namespace detail {

class BracketEvaluator {
 public:
  BracketEvaluator(std::vector<HfSet> containers, std::uint64_t work_limit)
      : containers_(std::move(containers)), work_limit_(work_limit) {}

  bool eval(const Enonce& e, std::uint32_t level) {
    switch (e.kind()) {
      case Kind::Psi: return false;
      case Kind::Implies: return !eval(e.antecedent(), level) || eval(e.consequent(), level);
      case Kind::In: return member(resolve(e.left()), resolve(e.right()));
      case Kind::ForAll: {
        const Block b = block_of(e);
        const HfSet& container = containers_.at(level);
        bool all = true;
        for_each_tuple(container, b.arity, [&](std::span<const HfSet> t) {
          if (++work_ > work_limit_) {
            throw ResourceLimit("work-limit", "streaming evaluation exceeded " + std::to_string(work_limit_) +
                                                  " instances");
          }
          env_.insert(env_.end(), t.begin(), t.end());
          all = eval(*b.matrix, level + 1);
          env_.resize(env_.size() - t.size());
          return all;
        });
        return all;
      }
      case Kind::Var: break;
    }
    throw LanguageError("streaming evaluation: C-variable in an F-énoncé");
  }

  std::uint64_t work() const noexcept { return work_; }

 private:
  const HfSet& resolve(const Term& t) const {
    if (t.is_dictif()) return t.value();
    return env_.at(env_.size() - t.height());
  }

  std::vector<HfSet> containers_;
  std::vector<HfSet> env_;
  std::uint64_t work_limit_;
  std::uint64_t work_ = 0;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultWorkLimit = std::uint64_t{1} << 32;

// eval_bool(translate_D_to_B(translate_bracketK(e, k))) without building the
// expansion: blocks at nesting level i range over C_{μ^i K} and the ET of
// their instances is evaluated as a short-circuit conjunction.
inline bool decide_bracketK(const Enonce& e, unsigned k, const ContainerSchedule& sched,
                            std::uint64_t work_limit = kDefaultWorkLimit) {
  require_fd(e, "decide_bracketK");
  require_rank(k, sched);
  const std::uint32_t depth = block_depth(e);
  std::vector<HfSet> containers;
  for (std::uint32_t level = 0; level < depth; ++level) {
    containers.push_back(sched.container(sched.index_at_level(k, level)));
  }
  detail::BracketEvaluator ev(std::move(containers), work_limit);
  return ev.eval(e, 0);
}

}  // namespace translatif
