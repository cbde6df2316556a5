#pragma once

// Énoncés over Ψ, ⟹, ∀, ∈ with nameless littèmes.
//
// A littème is stored by its height H only. At an occurrence of profondeur P
// (number of ∀ ancestors) its niveau is N = H - P: N >= 1 is a free literal of
// level N, otherwise the occurrence is bound to the ∀ ancestor of depth -N.
// In other words H is a 1-based de Bruijn index.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "translatif/errors.hpp"
#include "translatif/hfset.hpp"

namespace translatif {

// Substantif: a littème λ^H ς (H >= 1) or a dictif.
class Term {
 public:
  static Term litteme(std::uint32_t height) {
    if (height < 1) throw PreconditionViolation("litteme height must be >= 1");
    Term t;
    t.height_ = height;
    return t;
  }
  static Term dictif(HfSet value) {
    Term t;
    t.value_ = value;
    return t;
  }

  bool is_litteme() const noexcept { return height_ != 0; }
  bool is_dictif() const noexcept { return height_ == 0; }
  std::uint32_t height() const noexcept { return height_; }
  const HfSet& value() const noexcept { return value_; }

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.height_ == b.height_ && a.value_ == b.value_;
  }

 private:
  Term() = default;
  std::uint32_t height_ = 0;  // 0 marks a dictif
  HfSet value_;
};

enum class Kind : std::uint8_t { Psi, Var, Implies, ForAll, In };

namespace feature {
inline constexpr std::uint8_t kForAll = 1;
inline constexpr std::uint8_t kLitteme = 2;
inline constexpr std::uint8_t kDictif = 4;
inline constexpr std::uint8_t kVar = 8;
inline constexpr std::uint8_t kIn = 16;
inline constexpr std::uint8_t kImplies = 32;
}  // namespace feature

// Marks "no littème occurrence" in free_excess().
inline constexpr std::int64_t kNoLitteme = std::numeric_limits<std::int64_t>::min() / 2;

namespace detail {
struct EnNode;
}

class Enonce {
 public:
  static Enonce psi();
  // C-language variable λ^n Ψ, n >= 1.
  static Enonce var(std::uint32_t n);
  static Enonce implies(Enonce antecedent, Enonce consequent);
  static Enonce forall(Enonce body);
  static Enonce in(Term left, Term right);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  const Enonce& antecedent() const;
  const Enonce& consequent() const;
  const Enonce& body() const;
  const Term& left() const;
  const Term& right() const;
  std::uint32_t var_index() const;

  // Number of signs: ∀, ⟹, ∈, Ψ, variables, and one per substantif.
  std::uint64_t size() const noexcept;
  // Longest chain of nested ∀.
  std::uint32_t qdepth() const noexcept;
  // max(H - P) over littème occurrences, P counted from this node; kNoLitteme if none.
  std::int64_t free_excess() const noexcept;
  std::uint8_t features() const noexcept;

  bool same_node(const Enonce& o) const noexcept { return node_ == o.node_; }

  friend bool operator==(const Enonce& a, const Enonce& b);

 private:
  explicit Enonce(std::shared_ptr<detail::EnNode> n) : node_(std::move(n)) {}
  friend struct detail::EnNode;

  std::shared_ptr<detail::EnNode> node_;
};

namespace detail {

struct EnNode {
  Kind kind = Kind::Psi;
  std::uint8_t features = 0;
  std::uint32_t aux = 0;  // variable index
  std::uint32_t qdepth = 0;
  std::uint64_t size = 1;
  std::int64_t free_excess = kNoLitteme;
  Term left = Term::dictif(HfSet{});
  Term right = Term::dictif(HfSet{});
  Enonce a{nullptr};
  Enonce b{nullptr};

  EnNode() = default;
  EnNode(const EnNode&) = delete;
  EnNode& operator=(const EnNode&) = delete;

  // Release uniquely owned descendants iteratively; right-folded conjunctions
  // can be hundreds of thousands of nodes deep.
  ~EnNode() {
    std::vector<std::shared_ptr<EnNode>> pending;
    auto take = [&pending](Enonce& e) {
      if (e.node_ && e.node_.use_count() == 1) pending.push_back(std::move(e.node_));
      e.node_.reset();
    };
    take(a);
    take(b);
    while (!pending.empty()) {
      std::shared_ptr<EnNode> n = std::move(pending.back());
      pending.pop_back();
      take(n->a);
      take(n->b);
    }
  }
};

inline std::int64_t excess_of(const Term& t) { return t.is_litteme() ? std::int64_t{t.height()} : kNoLitteme; }

}  // namespace detail

inline Enonce Enonce::psi() {
  static const Enonce instance{std::make_shared<detail::EnNode>()};
  return instance;
}

inline Enonce Enonce::var(std::uint32_t n) {
  if (n < 1) throw PreconditionViolation("variable index must be >= 1");
  auto node = std::make_shared<detail::EnNode>();
  node->kind = Kind::Var;
  node->aux = n;
  node->features = feature::kVar;
  return Enonce(std::move(node));
}

inline Enonce Enonce::implies(Enonce antecedent, Enonce consequent) {
  auto node = std::make_shared<detail::EnNode>();
  node->kind = Kind::Implies;
  node->features = feature::kImplies | antecedent.features() | consequent.features();
  node->size = 1 + antecedent.size() + consequent.size();
  node->qdepth = std::max(antecedent.qdepth(), consequent.qdepth());
  node->free_excess = std::max(antecedent.free_excess(), consequent.free_excess());
  node->a = std::move(antecedent);
  node->b = std::move(consequent);
  return Enonce(std::move(node));
}

inline Enonce Enonce::forall(Enonce body) {
  auto node = std::make_shared<detail::EnNode>();
  node->kind = Kind::ForAll;
  node->features = feature::kForAll | body.features();
  node->size = 1 + body.size();
  node->qdepth = 1 + body.qdepth();
  node->free_excess = body.free_excess() == kNoLitteme ? kNoLitteme : body.free_excess() - 1;
  node->a = std::move(body);
  return Enonce(std::move(node));
}

inline Enonce Enonce::in(Term left, Term right) {
  auto node = std::make_shared<detail::EnNode>();
  node->kind = Kind::In;
  node->size = 3;
  node->features = feature::kIn;
  for (const Term* t : {&left, &right}) {
    node->features |= t->is_litteme() ? feature::kLitteme : feature::kDictif;
  }
  node->free_excess = std::max(detail::excess_of(left), detail::excess_of(right));
  node->left = std::move(left);
  node->right = std::move(right);
  return Enonce(std::move(node));
}

inline Kind Enonce::kind() const noexcept { return node_->kind; }
inline std::uint64_t Enonce::size() const noexcept { return node_->size; }
inline std::uint32_t Enonce::qdepth() const noexcept { return node_->qdepth; }
inline std::int64_t Enonce::free_excess() const noexcept { return node_->free_excess; }
inline std::uint8_t Enonce::features() const noexcept { return node_->features; }

inline const Enonce& Enonce::antecedent() const {
  if (kind() != Kind::Implies) throw PreconditionViolation("antecedent() on a non-implication");
  return node_->a;
}
inline const Enonce& Enonce::consequent() const {
  if (kind() != Kind::Implies) throw PreconditionViolation("consequent() on a non-implication");
  return node_->b;
}
inline const Enonce& Enonce::body() const {
  if (kind() != Kind::ForAll) throw PreconditionViolation("body() on a non-universalized énoncé");
  return node_->a;
}
inline const Term& Enonce::left() const {
  if (kind() != Kind::In) throw PreconditionViolation("left() on a non-membership");
  return node_->left;
}
inline const Term& Enonce::right() const {
  if (kind() != Kind::In) throw PreconditionViolation("right() on a non-membership");
  return node_->right;
}
inline std::uint32_t Enonce::var_index() const {
  if (kind() != Kind::Var) throw PreconditionViolation("var_index() on a non-variable");
  return node_->aux;
}

inline bool operator==(const Enonce& a, const Enonce& b) {
  std::vector<std::pair<const Enonce*, const Enonce*>> todo{{&a, &b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->kind() != y->kind() || x->size() != y->size()) return false;
    switch (x->kind()) {
      case Kind::Psi:
        break;
      case Kind::Var:
        if (x->var_index() != y->var_index()) return false;
        break;
      case Kind::In:
        if (!(x->left() == y->left()) || !(x->right() == y->right())) return false;
        break;
      case Kind::ForAll:
        todo.emplace_back(&x->body(), &y->body());
        break;
      case Kind::Implies:
        todo.emplace_back(&x->consequent(), &y->consequent());
        todo.emplace_back(&x->antecedent(), &y->antecedent());
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Connectives encoded with ⟹ and Ψ.

// Θ of theory A, the canonical "true" énoncé.
inline Enonce theta() { return Enonce::implies(Enonce::psi(), Enonce::psi()); }

inline Enonce negation(Enonce e) { return Enonce::implies(std::move(e), Enonce::psi()); }

// ¬(E ⟹ ¬F)
inline Enonce conjunction(Enonce e, Enonce f) {
  return negation(Enonce::implies(std::move(e), negation(std::move(f))));
}

// ¬E ⟹ F
inline Enonce disjunction(Enonce e, Enonce f) { return Enonce::implies(negation(std::move(e)), std::move(f)); }

// (E ⟹ F) ∧ (F ⟹ E)
inline Enonce equivalence(const Enonce& e, const Enonce& f) {
  return conjunction(Enonce::implies(e, f), Enonce::implies(f, e));
}

// ¬∀¬body
inline Enonce exists(Enonce body) { return negation(Enonce::forall(negation(std::move(body)))); }

// ---------------------------------------------------------------------------
// Languages

enum class Language : std::uint8_t { A, B, C, D, E, F };

inline const char* to_string(Language l) {
  switch (l) {
    case Language::A: return "A";
    case Language::B: return "B";
    case Language::C: return "C";
    case Language::D: return "D";
    case Language::E: return "E";
    case Language::F: return "F";
  }
  return "?";
}

// Sublanguage order: A < B < C, B < D < F, B < E < F.
inline bool admits(Language outer, Language inner) {
  if (outer == inner) return true;
  switch (inner) {
    case Language::A: return true;
    case Language::B: return outer != Language::A;
    case Language::D:
    case Language::E: return outer == Language::F;
    case Language::C:
    case Language::F: return false;
  }
  return false;
}

// Smallest language admitting e. Throws LanguageError for a C-variable mixed
// with ∀, ∈ or substantifs, which no language admits.
inline Language language_of(const Enonce& e) {
  const std::uint8_t f = e.features();
  const bool quantified = (f & (feature::kForAll | feature::kLitteme)) != 0;
  if ((f & feature::kVar) && (quantified || (f & feature::kIn))) {
    throw LanguageError("énoncé mixes C-variables with memberships or quantifiers");
  }
  if (quantified) return (f & feature::kDictif) ? Language::F : Language::E;
  if (f & feature::kIn) return Language::D;
  if (f & feature::kVar) return Language::C;
  if (f & feature::kImplies) return Language::B;
  return Language::A;
}

inline void require_language(const Enonce& e, Language allowed, const char* operation) {
  const Language l = language_of(e);
  if (!admits(allowed, l)) {
    throw LanguageError(std::string(operation) + ": expected an énoncé of language " + to_string(allowed) +
                        ", got language " + to_string(l));
  }
}

// No littème occurrence has a positive niveau.
inline bool is_strictly_closed(const Enonce& e) { return e.free_excess() <= 0; }

}  // namespace translatif
