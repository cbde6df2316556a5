#pragma once

// Theories B and C: evaluation, truth tables, the three axiom schemas and the
// global conjunction ET.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "translatif/enonce.hpp"
#include "translatif/errors.hpp"
#include "translatif/verdict.hpp"

namespace translatif {

// Variable index n of λ^n Ψ to its truth value.
using TruthAssignment = std::map<std::uint32_t, bool>;

inline constexpr unsigned kDefaultTruthTableVarCap = 20;

// Evaluates Ψ/⟹ structure, delegating every other node to `leaf`. Runs on an
// explicit stack: the consequent is a tail position, the antecedent is not
// evaluated twice, and a false antecedent skips the consequent.
template <class Leaf>
bool evaluate_with(const Enonce& e, Leaf&& leaf) {
  struct Frame {
    const Enonce* node;
    bool antecedent_done;
  };
  std::vector<Frame> stack{{&e, false}};
  bool value = false;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Enonce* n = top.node;
    if (!n->is(Kind::Implies)) {
      value = n->is(Kind::Psi) ? false : leaf(*n);
      stack.pop_back();
      continue;
    }
    if (!top.antecedent_done) {
      top.antecedent_done = true;
      stack.push_back({&n->antecedent(), false});
      continue;
    }
    if (!value) {
      value = true;
      stack.pop_back();
      continue;
    }
    top = Frame{&n->consequent(), false};
  }
  return value;
}

// Ψ ↦ false; A ⟹ B ↦ ¬A ∨ B.
inline bool eval_bool(const Enonce& e) {
  require_language(e, Language::B, "eval_bool");
  return evaluate_with(e, [](const Enonce&) -> bool { throw LanguageError("eval_bool: unexpected node"); });
}

inline bool eval_under(const Enonce& e, const TruthAssignment& assignment) {
  require_language(e, Language::C, "eval_under");
  return evaluate_with(e, [&](const Enonce& n) {
    auto it = assignment.find(n.var_index());
    if (it == assignment.end()) {
      throw PreconditionViolation("truth assignment misses v@" + std::to_string(n.var_index()));
    }
    return it->second;
  });
}

inline std::set<std::uint32_t> variables_of(const Enonce& e) {
  std::set<std::uint32_t> vars;
  if (!(e.features() & feature::kVar)) return vars;
  std::vector<const Enonce*> todo{&e};
  while (!todo.empty()) {
    const Enonce* n = todo.back();
    todo.pop_back();
    if (n->is(Kind::Var)) vars.insert(n->var_index());
    if (n->is(Kind::Implies)) {
      todo.push_back(&n->antecedent());
      todo.push_back(&n->consequent());
    }
  }
  return vars;
}

inline bool is_theorem_B(const Enonce& e) { return eval_bool(e); }

// Truth-table decision: Theorem iff true under every assignment.
inline Verdict is_theorem_C(const Enonce& e, unsigned var_cap = kDefaultTruthTableVarCap) {
  require_language(e, Language::C, "is_theorem_C");
  const std::set<std::uint32_t> vars = variables_of(e);
  if (vars.size() > var_cap) {
    return Verdict::unknown("tt-var-cap");
  }
  const std::vector<std::uint32_t> order(vars.begin(), vars.end());
  TruthAssignment assignment;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << order.size()); ++row) {
    for (std::size_t i = 0; i < order.size(); ++i) assignment[order[i]] = (row >> i) & 1U;
    if (!eval_under(e, assignment)) return Verdict::non_theorem();
  }
  return Verdict::theorem();
}

// 1: ¬¬F ⟹ F
// 2: D ⟹ (E ⟹ D)
// 3: (A ⟹ (B ⟹ C)) ⟹ ((A ⟹ B) ⟹ (A ⟹ C))
inline Enonce schema_instance(int id, std::span<const Enonce> parts) {
  static constexpr std::size_t kArity[] = {0, 1, 2, 3};
  if (id < 1 || id > 3) throw PreconditionViolation("schema id must be 1, 2 or 3");
  if (parts.size() != kArity[id]) {
    throw PreconditionViolation("schema " + std::to_string(id) + " takes " + std::to_string(kArity[id]) +
                                " parts, got " + std::to_string(parts.size()));
  }
  using E = Enonce;
  switch (id) {
    case 1: return E::implies(negation(negation(parts[0])), parts[0]);
    case 2: return E::implies(parts[0], E::implies(parts[1], parts[0]));
    default: {
      const Enonce &a = parts[0], &b = parts[1], &c = parts[2];
      return E::implies(E::implies(a, E::implies(b, c)), E::implies(E::implies(a, b), E::implies(a, c)));
    }
  }
}

// Right fold of ∧ in the given order; the empty conjunction is Θ.
inline Enonce big_et(std::span<const Enonce> conjuncts) {
  if (conjuncts.empty()) return theta();
  Enonce acc = conjuncts.back();
  for (std::size_t i = conjuncts.size() - 1; i-- > 0;) acc = conjunction(conjuncts[i], std::move(acc));
  return acc;
}

// Size in signs of big_et over `count` conjuncts of `each` signs.
inline std::uint64_t big_et_size(std::uint64_t count, std::uint64_t each) {
  if (count == 0) return 3;
  return count * each + 5 * (count - 1);
}

}  // namespace translatif
