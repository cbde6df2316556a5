#pragma once

// Deterministic random and exhaustive énoncé sources for scans and tests.
// Draws use mt19937_64 with plain modulo so a seed gives the same sequence on
// every standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "translatif/enonce.hpp"
#include "translatif/hfset.hpp"
#include "translatif/translation.hpp"

namespace translatif {

struct GenOptions {
  unsigned max_depth = 4;   // ⟹ / ∀ nesting
  unsigned max_qdepth = 2;  // ∀ nesting
  unsigned vars = 3;        // C-variables v@1..v@vars
  std::vector<HfSet> dictifs = {from_index(0), from_index(1), from_index(2), from_index(3)};
};

class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  bool coin() { return below(2) == 1; }

  Enonce b(const GenOptions& o) { return b_rec(o.max_depth); }

  Enonce c(const GenOptions& o) { return c_rec(o, o.max_depth); }

  // Closed D-énoncé over the dictif pool.
  Enonce d(const GenOptions& o) { return f_rec(o, o.max_depth, 0, 0); }

  // Strictly closed F-énoncé; every littème is bound.
  Enonce closed_f(const GenOptions& o) { return f_rec(o, o.max_depth, 0, o.max_qdepth); }

  // Maxi-dénecté, strictly closed F-énoncé.
  Enonce fd(const GenOptions& o) { return maxi_denect(closed_f(o)); }

 private:
  Enonce b_rec(unsigned depth) {
    if (depth == 0 || below(3) == 0) return Enonce::psi();
    return Enonce::implies(b_rec(depth - 1), b_rec(depth - 1));
  }

  Enonce c_rec(const GenOptions& o, unsigned depth) {
    if (depth == 0 || below(3) == 0) {
      const auto pick = below(o.vars + 1);
      return pick == 0 ? Enonce::psi() : Enonce::var(static_cast<std::uint32_t>(pick));
    }
    return Enonce::implies(c_rec(o, depth - 1), c_rec(o, depth - 1));
  }

  Term term(const GenOptions& o, unsigned bound) {
    const std::uint64_t choices = o.dictifs.size() + bound;
    const std::uint64_t pick = below(choices);
    if (pick < bound) return Term::litteme(static_cast<std::uint32_t>(pick + 1));
    return Term::dictif(o.dictifs[pick - bound]);
  }

  Enonce f_rec(const GenOptions& o, unsigned depth, unsigned bound, unsigned quantifiers_left) {
    if (depth == 0) return leaf(o, bound);
    switch (below(quantifiers_left > 0 ? 4 : 3)) {
      case 0: return leaf(o, bound);
      case 1:
      case 2: return Enonce::implies(f_rec(o, depth - 1, bound, quantifiers_left), f_rec(o, depth - 1, bound, quantifiers_left));
      default: return Enonce::forall(f_rec(o, depth - 1, bound + 1, quantifiers_left - 1));
    }
  }

  Enonce leaf(const GenOptions& o, unsigned bound) {
    if (below(5) == 0) return Enonce::psi();
    Term l = term(o, bound);
    Term r = term(o, bound);
    return Enonce::in(std::move(l), std::move(r));
  }

  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration by size in signs.

// Every B-énoncé of size ≤ max_size.
inline std::vector<Enonce> enumerate_b(unsigned max_size) {
  std::vector<std::vector<Enonce>> by_size(max_size + 1);
  for (unsigned s = 1; s <= max_size; ++s) {
    if (s == 1) by_size[1].push_back(Enonce::psi());
    for (unsigned l = 1; l + 2 <= s; ++l) {
      for (const Enonce& a : by_size[l]) {
        for (const Enonce& b : by_size[s - 1 - l]) by_size[s].push_back(Enonce::implies(a, b));
      }
    }
  }
  std::vector<Enonce> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Every D-énoncé of size ≤ max_size whose dictifs have index < dictif_bound.
inline std::vector<Enonce> enumerate_d(unsigned max_size, unsigned dictif_bound) {
  std::vector<std::vector<Enonce>> by_size(max_size + 1);
  for (unsigned s = 1; s <= max_size; ++s) {
    if (s == 1) by_size[1].push_back(Enonce::psi());
    if (s == 3) {
      for (unsigned k = 0; k < dictif_bound; ++k) {
        for (unsigned n = 0; n < dictif_bound; ++n) {
          by_size[3].push_back(Enonce::in(Term::dictif(from_index(k)), Term::dictif(from_index(n))));
        }
      }
    }
    for (unsigned l = 1; l + 2 <= s; ++l) {
      for (const Enonce& a : by_size[l]) {
        for (const Enonce& b : by_size[s - 1 - l]) by_size[s].push_back(Enonce::implies(a, b));
      }
    }
  }
  std::vector<Enonce> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Every strictly closed F-énoncé of size ≤ max_size over the dictif pool.
inline std::vector<Enonce> enumerate_closed_f(unsigned max_size, const std::vector<HfSet>& dictifs) {
  // table[b][s]: énoncés of size s whose littèmes have height ≤ b + depth.
  const unsigned max_bound = max_size / 4 + 1;
  std::vector<std::vector<std::vector<Enonce>>> table(max_bound + 1, std::vector<std::vector<Enonce>>(max_size + 1));
  for (unsigned s = 1; s <= max_size; ++s) {
    for (unsigned b = max_bound + 1; b-- > 0;) {
      auto& cell = table[b][s];
      if (s == 1) cell.push_back(Enonce::psi());
      if (s == 3) {
        std::vector<Term> terms;
        for (unsigned h = 1; h <= b; ++h) terms.push_back(Term::litteme(h));
        for (const HfSet& d : dictifs) terms.push_back(Term::dictif(d));
        for (const Term& l : terms) {
          for (const Term& r : terms) cell.push_back(Enonce::in(l, r));
        }
      }
      if (s >= 2 && b + 1 <= max_bound) {
        for (const Enonce& body : table[b + 1][s - 1]) cell.push_back(Enonce::forall(body));
      }
      for (unsigned l = 1; l + 2 <= s; ++l) {
        for (const Enonce& x : table[b][l]) {
          for (const Enonce& y : table[b][s - 1 - l]) cell.push_back(Enonce::implies(x, y));
        }
      }
    }
  }
  std::vector<Enonce> out;
  for (auto& v : table[0]) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace translatif
