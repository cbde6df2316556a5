#pragma once

// Profondeur / hauteur / niveau analysis and substitution on nameless littèmes.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "translatif/enonce.hpp"
#include "translatif/errors.hpp"

namespace translatif {

enum class SignKind : std::uint8_t { ForAll, Implies, In, Psi, Var, Litteme, Dictif };

struct Sign {
  SignKind kind;
  std::uint32_t height = 0;  // littèmes only
};

// Signs in written (prefix) order.
inline std::vector<Sign> signs_of(const Enonce& e) {
  std::vector<Sign> out;
  out.reserve(e.size());
  std::vector<const Enonce*> todo{&e};
  while (!todo.empty()) {
    const Enonce* n = todo.back();
    todo.pop_back();
    switch (n->kind()) {
      case Kind::Psi: out.push_back({SignKind::Psi}); break;
      case Kind::Var: out.push_back({SignKind::Var}); break;
      case Kind::ForAll:
        out.push_back({SignKind::ForAll});
        todo.push_back(&n->body());
        break;
      case Kind::Implies:
        out.push_back({SignKind::Implies});
        todo.push_back(&n->consequent());
        todo.push_back(&n->antecedent());
        break;
      case Kind::In:
        out.push_back({SignKind::In});
        for (const Term* t : {&n->left(), &n->right()}) {
          out.push_back(t->is_litteme() ? Sign{SignKind::Litteme, t->height()} : Sign{SignKind::Dictif});
        }
        break;
    }
  }
  return out;
}

// Left-to-right rule: the first sign has depth 0, depth grows by 1 after each
// ∀ and drops after each saturator by the number of universalized
// sub-énoncés that saturator completes.
inline std::vector<std::uint32_t> scan_depths(std::span<const Sign> signs) {
  struct Pending {
    unsigned slots;
    bool universal;
  };
  std::vector<std::uint32_t> depths;
  depths.reserve(signs.size());
  std::vector<Pending> stack;
  std::uint32_t depth = 0;
  for (const Sign& s : signs) {
    depths.push_back(depth);
    switch (s.kind) {
      case SignKind::ForAll:
        stack.push_back({1, true});
        ++depth;
        break;
      case SignKind::Implies:
      case SignKind::In:
        stack.push_back({2, false});
        break;
      default: {
        std::uint32_t completed = 0;
        while (!stack.empty()) {
          if (--stack.back().slots != 0) break;
          if (stack.back().universal) ++completed;
          stack.pop_back();
        }
        depth -= completed;
      }
    }
  }
  return depths;
}

// Depth of each sign as its count of ∀ ancestors.
inline std::vector<std::uint32_t> ancestor_depths(const Enonce& e) {
  std::vector<std::uint32_t> out;
  out.reserve(e.size());
  std::vector<std::pair<const Enonce*, std::uint32_t>> todo{{&e, 0}};
  while (!todo.empty()) {
    auto [n, d] = todo.back();
    todo.pop_back();
    out.push_back(d);
    switch (n->kind()) {
      case Kind::ForAll: todo.emplace_back(&n->body(), d + 1); break;
      case Kind::Implies:
        todo.emplace_back(&n->consequent(), d);
        todo.emplace_back(&n->antecedent(), d);
        break;
      case Kind::In:
        out.push_back(d);
        out.push_back(d);
        break;
      default: break;
    }
  }
  return out;
}

struct Occurrence {
  std::size_t sign = 0;  // index into signs_of()
  std::uint32_t height = 0;
  std::uint32_t depth = 0;
  std::int64_t level = 0;  // height - depth
  bool bound = false;
  std::size_t binder_sign = 0;  // bound only
  std::uint32_t binder_depth = 0;  // bound only
};

struct BindingReport {
  std::vector<Occurrence> occurrences;
  std::vector<std::size_t> binders;  // sign index of every ∀
  std::vector<std::size_t> vacuous_binders;

  std::size_t free_count() const {
    std::size_t n = 0;
    for (const auto& o : occurrences) n += o.bound ? 0 : 1;
    return n;
  }
  std::size_t bound_count() const { return occurrences.size() - free_count(); }
};

inline BindingReport binding_report(const Enonce& e) {
  BindingReport report;
  const std::vector<Sign> signs = signs_of(e);
  const std::vector<std::uint32_t> depths = scan_depths(signs);
  // ∀ ancestors of the current sign, outermost first.
  std::vector<std::size_t> open;
  std::vector<std::uint32_t> uses;
  std::vector<std::size_t> use_slot;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const std::uint32_t d = depths[i];
    open.resize(d);
    if (signs[i].kind == SignKind::ForAll) {
      open.push_back(i);
      report.binders.push_back(i);
      uses.push_back(0);
      use_slot.push_back(i);
      continue;
    }
    if (signs[i].kind != SignKind::Litteme) continue;
    Occurrence occ;
    occ.sign = i;
    occ.height = signs[i].height;
    occ.depth = d;
    occ.level = std::int64_t{occ.height} - std::int64_t{d};
    if (occ.level <= 0) {
      occ.bound = true;
      occ.binder_depth = static_cast<std::uint32_t>(-occ.level);
      occ.binder_sign = open[occ.binder_depth];
      const auto slot = std::lower_bound(use_slot.begin(), use_slot.end(), occ.binder_sign) - use_slot.begin();
      ++uses[static_cast<std::size_t>(slot)];
    }
    report.occurrences.push_back(occ);
  }
  for (std::size_t k = 0; k < uses.size(); ++k) {
    if (uses[k] == 0) report.vacuous_binders.push_back(use_slot[k]);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rewriting littèmes. `local` counts the ∀ crossed from the root of the
// rewrite, so an occurrence of height H refers to the binder k levels above
// the root when H == local + k.

template <class F>
Enonce map_littemes(const Enonce& e, F&& fn, std::uint32_t local = 0) {
  if (!(e.features() & feature::kLitteme)) return e;
  switch (e.kind()) {
    case Kind::ForAll: {
      Enonce body = map_littemes(e.body(), fn, local + 1);
      return body.same_node(e.body()) ? e : Enonce::forall(std::move(body));
    }
    case Kind::Implies: {
      Enonce a = map_littemes(e.antecedent(), fn, local);
      Enonce b = map_littemes(e.consequent(), fn, local);
      if (a.same_node(e.antecedent()) && b.same_node(e.consequent())) return e;
      return Enonce::implies(std::move(a), std::move(b));
    }
    case Kind::In: {
      auto rewrite = [&](const Term& t) { return t.is_litteme() ? fn(t.height(), local) : t; };
      return Enonce::in(rewrite(e.left()), rewrite(e.right()));
    }
    default: return e;
  }
}

// Some occurrence refers to the binder k levels above e's root.
inline bool references(const Enonce& e, std::uint32_t k, std::uint32_t local = 0) {
  if (!(e.features() & feature::kLitteme)) return false;
  if (e.free_excess() < std::int64_t{k}) return false;
  switch (e.kind()) {
    case Kind::ForAll: return references(e.body(), k, local + 1);
    case Kind::Implies: return references(e.antecedent(), k, local) || references(e.consequent(), k, local);
    case Kind::In:
      for (const Term* t : {&e.left(), &e.right()}) {
        if (t->is_litteme() && t->height() == local + k) return true;
      }
      return false;
    default: return false;
  }
}

// Replaces the n binders directly above `body` by dictifs. values[0] is the
// outermost of those binders; references past them drop by n.
inline Enonce instantiate(const Enonce& body, std::span<const HfSet> values) {
  const auto n = static_cast<std::uint32_t>(values.size());
  return map_littemes(body, [&](std::uint32_t h, std::uint32_t local) {
    if (h <= local) return Term::litteme(h);
    if (h <= local + n) return Term::dictif(values[n - (h - local)]);
    return Term::litteme(h - n);
  });
}

// Removes one binder directly above `body`, which must not be referenced.
inline Enonce drop_binder(const Enonce& body) {
  return map_littemes(body, [](std::uint32_t h, std::uint32_t local) {
    if (h == local + 1) throw PreconditionViolation("drop_binder: binder is referenced");
    return Term::litteme(h > local ? h - 1 : h);
  });
}

// Path from the root: 0 = antecedent or ∀ body, 1 = consequent.
using NodePath = std::vector<std::uint8_t>;

// Removes the ∀ at `target`; littèmes bound to it become `value`, those bound
// further out or free lose one height, those bound inside are untouched.
inline Enonce substitute(const Enonce& e, std::span<const std::uint8_t> target, const HfSet& value) {
  if (target.empty()) {
    if (!e.is(Kind::ForAll)) throw PreconditionViolation("substitute: target is not a universalized énoncé");
    const HfSet v[] = {value};
    return instantiate(e.body(), v);
  }
  const std::uint8_t slot = target.front();
  auto rest = target.subspan(1);
  switch (e.kind()) {
    case Kind::ForAll:
      if (slot != 0) break;
      return Enonce::forall(substitute(e.body(), rest, value));
    case Kind::Implies:
      if (slot == 0) return Enonce::implies(substitute(e.antecedent(), rest, value), e.consequent());
      if (slot == 1) return Enonce::implies(e.antecedent(), substitute(e.consequent(), rest, value));
      break;
    default: break;
  }
  throw PreconditionViolation("substitute: malformed target reference");
}

}  // namespace translatif
