#pragma once

// Dictifs as hereditarily finite sets.
//
// An HfSet is a pointer to an interned node whose elements are kept strictly
// increasing under hf_compare. Interning makes extensional equality a pointer
// comparison. The Ackermann index (sum of 2^index(e) over the elements e) is a
// derived view that is only materialized while it fits under a bit cap; every
// structural operation works without it.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "translatif/errors.hpp"

namespace translatif {

using AckIndex = boost::multiprecision::cpp_int;

// Indices must fit in this many bits to be materialized.
inline constexpr std::uint64_t kDefaultIndexBitCap = std::uint64_t{1} << 20;

// Largest powerset the engine will build, in elements of the argument.
inline constexpr std::size_t kMaxPowersetArity = 24;

// P_5 has 65536 elements; P_6 would have 2^65536.
inline constexpr unsigned kMaxPLevel = 5;

class HfSet;

namespace detail {

struct HfNode;
const HfNode* intern_sorted(std::vector<HfSet>&& elements);
const HfNode* empty_node();

}  // namespace detail

class HfSet {
 public:
  // The empty set ς.
  HfSet() : node_(detail::empty_node()) {}

  // Elements in any order; duplicates are dropped.
  static HfSet of(std::vector<HfSet> elements);

  // Elements must already be strictly increasing under hf_compare.
  static HfSet from_sorted(std::vector<HfSet> elements);

  std::span<const HfSet> elements() const noexcept;
  std::size_t size() const noexcept { return elements().size(); }
  bool empty() const noexcept { return elements().empty(); }

  // Ackermann index when it is below 2^64.
  std::optional<std::uint64_t> small_index() const noexcept;

  // Bit length of the Ackermann index, when the largest element has a small index.
  std::optional<std::uint64_t> index_bit_length() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const HfSet& a, const HfSet& b) noexcept { return a.node_ == b.node_; }

 private:
  explicit HfSet(const detail::HfNode* node) : node_(node) {}
  friend HfSet make_hfset_unchecked(std::vector<HfSet>&& sorted);

  const detail::HfNode* node_;
};

namespace detail {

struct HfNode {
  std::vector<HfSet> elements;
  std::size_t hash = 0;
  std::optional<std::uint64_t> small_index;
  std::optional<std::uint64_t> bit_length;
};

class Interner {
 public:
  const HfNode* intern(std::vector<HfSet>&& elements) {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ elements.size();
    for (const HfSet& e : elements) {
      h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [lo, hi] = table_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (it->second->elements == elements) return it->second;
    }
    HfNode& node = storage_.emplace_back();
    node.hash = h;
    if (elements.empty()) {
      node.small_index = 0;
      node.bit_length = 0;
    } else if (auto top = elements.back().small_index(); top && *top < UINT64_MAX) {
      node.bit_length = *top + 1;
      if (*top < 64) {
        std::uint64_t idx = 0;
        for (const HfSet& e : elements) idx |= std::uint64_t{1} << *e.small_index();
        node.small_index = idx;
      }
    }
    node.elements = std::move(elements);
    table_.emplace(h, &node);
    return &node;
  }

 private:
  std::mutex mu_;
  std::unordered_multimap<std::size_t, const HfNode*> table_;
  std::deque<HfNode> storage_;
};

// Never destroyed: HfSet values may outlive every other static.
inline Interner& interner() {
  static Interner* instance = new Interner;
  return *instance;
}

inline const HfNode* intern_sorted(std::vector<HfSet>&& elements) { return interner().intern(std::move(elements)); }

inline const HfNode* empty_node() {
  static const HfNode* node = interner().intern({});
  return node;
}

}  // namespace detail

inline std::span<const HfSet> HfSet::elements() const noexcept { return node_->elements; }
inline std::optional<std::uint64_t> HfSet::small_index() const noexcept { return node_->small_index; }
inline std::optional<std::uint64_t> HfSet::index_bit_length() const noexcept { return node_->bit_length; }
inline std::size_t HfSet::hash() const noexcept { return node_->hash; }

inline HfSet make_hfset_unchecked(std::vector<HfSet>&& sorted) { return HfSet(detail::intern_sorted(std::move(sorted))); }

// Total order agreeing with Ackermann-index order: a < b iff the greatest
// element of the symmetric difference lies in b.
inline std::strong_ordering hf_compare(const HfSet& a, const HfSet& b) {
  if (a == b) return std::strong_ordering::equal;
  auto ia = a.small_index();
  auto ib = b.small_index();
  if (ia && ib) return *ia <=> *ib;
  auto la = a.index_bit_length();
  auto lb = b.index_bit_length();
  if (la && lb && *la != *lb) return *la <=> *lb;
  auto ea = a.elements();
  auto eb = b.elements();
  std::size_t i = ea.size();
  std::size_t j = eb.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    if (ea[i] == eb[j]) continue;
    return hf_compare(ea[i], eb[j]);
  }
  return i > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

struct HfLess {
  bool operator()(const HfSet& a, const HfSet& b) const { return hf_compare(a, b) < 0; }
};

struct HfHash {
  std::size_t operator()(const HfSet& s) const noexcept { return s.hash(); }
};

inline HfSet HfSet::of(std::vector<HfSet> elements) {
  std::sort(elements.begin(), elements.end(), HfLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return make_hfset_unchecked(std::move(elements));
}

inline HfSet HfSet::from_sorted(std::vector<HfSet> elements) {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (hf_compare(elements[i - 1], elements[i]) >= 0) {
      throw PreconditionViolation("HfSet::from_sorted: elements not strictly increasing");
    }
  }
  return make_hfset_unchecked(std::move(elements));
}

// ---------------------------------------------------------------------------
// Ackermann interpretation

namespace detail {

inline HfSet build_small(std::uint64_t n);

// D_0 .. D_63, the only sets that can be elements of a set with a 64-bit index.
inline const std::array<HfSet, 64>& low_sets() {
  static const std::array<HfSet, 64> table = [] {
    std::array<HfSet, 64> t{};
    for (std::uint64_t k = 0; k < 64; ++k) {
      std::vector<HfSet> elems;
      for (std::uint64_t j = 0; j < 6; ++j) {
        if (k & (std::uint64_t{1} << j)) elems.push_back(t[j]);
      }
      t[k] = make_hfset_unchecked(std::move(elems));
    }
    return t;
  }();
  return table;
}

inline HfSet build_small(std::uint64_t n) {
  if (n < 64) return low_sets()[n];
  std::vector<HfSet> elems;
  for (std::uint64_t j = 0; j < 64; ++j) {
    if (n & (std::uint64_t{1} << j)) elems.push_back(low_sets()[j]);
  }
  return make_hfset_unchecked(std::move(elems));
}

}  // namespace detail

inline HfSet from_index(std::uint64_t n) { return detail::build_small(n); }

// Bit K of N (a_K, least significant first) set iff D_K is an element of D_N.
inline HfSet from_index(const AckIndex& n) {
  if (n < 0) throw PreconditionViolation("from_index: negative index");
  if (n <= std::numeric_limits<std::uint64_t>::max()) return detail::build_small(n.convert_to<std::uint64_t>());
  const std::uint64_t top = boost::multiprecision::msb(n);
  std::vector<HfSet> elems;
  for (std::uint64_t k = 0; k <= top; ++k) {
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(k))) elems.push_back(detail::build_small(k));
  }
  return make_hfset_unchecked(std::move(elems));
}

inline bool index_materializable(const HfSet& s, std::uint64_t cap_bits = kDefaultIndexBitCap) {
  auto bits = s.index_bit_length();
  return bits && *bits <= cap_bits;
}

inline AckIndex to_index(const HfSet& s, std::uint64_t cap_bits = kDefaultIndexBitCap) {
  if (auto small = s.small_index()) return AckIndex(*small);
  if (!index_materializable(s, cap_bits)) {
    throw IndexOverflow("to_index: Ackermann index exceeds " + std::to_string(cap_bits) + " bits");
  }
  AckIndex n = 0;
  for (const HfSet& e : s.elements()) boost::multiprecision::bit_set(n, static_cast<unsigned>(*e.small_index()));
  return n;
}

// ---------------------------------------------------------------------------
// Set algebra

inline bool member(const HfSet& x, const HfSet& z) {
  auto elems = z.elements();
  return std::binary_search(elems.begin(), elems.end(), x, HfLess{});
}

inline HfSet set_union(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                 std::back_inserter(out), HfLess{});
  return make_hfset_unchecked(std::move(out));
}

inline HfSet set_intersection(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  const HfSet& small = a.size() <= b.size() ? a : b;
  const HfSet& large = a.size() <= b.size() ? b : a;
  if (small.size() * 16 < large.size()) {
    for (const HfSet& e : small.elements()) {
      if (member(e, large)) out.push_back(e);
    }
    return make_hfset_unchecked(std::move(out));
  }
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out), HfLess{});
  return make_hfset_unchecked(std::move(out));
}

inline HfSet set_difference(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  std::set_difference(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                      std::back_inserter(out), HfLess{});
  return make_hfset_unchecked(std::move(out));
}

inline bool is_subset(const HfSet& a, const HfSet& b) {
  return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(), a.elements().end(),
                       HfLess{});
}

// x ∪ {x}
inline HfSet successor(const HfSet& x) { return set_union(x, make_hfset_unchecked({x})); }

// Subsets enumerated by bitmask over the sorted elements come out already
// sorted: the highest differing mask bit is the greatest element of the
// symmetric difference.
inline HfSet powerset(const HfSet& s) {
  const std::size_t n = s.size();
  if (n > kMaxPowersetArity) {
    throw CapExceeded("powerset: argument has " + std::to_string(n) + " elements (cap " +
                      std::to_string(kMaxPowersetArity) + ")");
  }
  auto elems = s.elements();
  std::vector<HfSet> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<HfSet> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(elems[i]);
    }
    subsets.push_back(make_hfset_unchecked(std::move(sub)));
  }
  return make_hfset_unchecked(std::move(subsets));
}

// P_0 = ς, P_{N+1} = powerset(P_N).
inline HfSet p_level(unsigned n) {
  if (n > kMaxPLevel) {
    throw CapExceeded("p_level: P_" + std::to_string(n) + " is not materializable (cap P_" +
                      std::to_string(kMaxPLevel) + ")");
  }
  static const std::array<HfSet, kMaxPLevel + 1> ladder = [] {
    std::array<HfSet, kMaxPLevel + 1> l{};
    for (unsigned k = 1; k <= kMaxPLevel; ++k) l[k] = powerset(l[k - 1]);
    return l;
  }();
  return ladder[n];
}

inline bool is_transitive(const HfSet& x) {
  for (const HfSet& e : x.elements()) {
    if (!is_subset(e, x)) return false;
  }
  return true;
}

// A ↦ A∩X is injective on the elements of X.
inline bool is_subtransitive(const HfSet& x) {
  std::unordered_set<HfSet, HfHash> seen;
  seen.reserve(x.size());
  for (const HfSet& e : x.elements()) {
    if (!seen.insert(set_intersection(e, x)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text form: `D#N` when the index materializes, `{e1,e2,...}` otherwise.

inline std::string format_dictif(const HfSet& s, std::uint64_t cap_bits = kDefaultIndexBitCap) {
  if (index_materializable(s, cap_bits)) return "D#" + to_index(s, cap_bits).str();
  std::string out = "{";
  bool first = true;
  for (const HfSet& e : s.elements()) {
    if (!first) out += ',';
    first = false;
    out += format_dictif(e, cap_bits);
  }
  out += '}';
  return out;
}

// Explicit element listing, e.g. `{D#1,D#2}` for D#6.
inline std::string format_elements(const HfSet& s, std::uint64_t cap_bits = kDefaultIndexBitCap) {
  std::string out = "{";
  bool first = true;
  for (const HfSet& e : s.elements()) {
    if (!first) out += ',';
    first = false;
    out += format_dictif(e, cap_bits);
  }
  return out + '}';
}

// Reports the byte offset of a malformed literal.
struct DictifSyntaxError : Error {
  DictifSyntaxError(std::size_t off, const std::string& msg) : Error(msg), offset(off) {}
  std::size_t offset;
};

namespace detail {

inline void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
    ++pos;
  }
}

}  // namespace detail

// Parses `D#N` or a brace literal starting at pos; advances pos past it.
inline HfSet parse_dictif(std::string_view text, std::size_t& pos, std::uint64_t cap_bits = kDefaultIndexBitCap) {
  if (text.substr(pos, 2) == "D#") {
    const std::size_t start = pos;
    pos += 2;
    const std::size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits) throw DictifSyntaxError(start, "expected decimal index after D#");
    AckIndex n(std::string(text.substr(digits, pos - digits)));
    if (n != 0 && boost::multiprecision::msb(n) + 1 > cap_bits) {
      throw IndexOverflow("dictif index D#... has more than " + std::to_string(cap_bits) + " bits");
    }
    return from_index(n);
  }
  if (pos < text.size() && text[pos] == '{') {
    ++pos;
    std::vector<HfSet> elems;
    detail::skip_space(text, pos);
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return HfSet{};
    }
    while (true) {
      detail::skip_space(text, pos);
      elems.push_back(parse_dictif(text, pos, cap_bits));
      detail::skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      throw DictifSyntaxError(pos, "expected ',' or '}' in set literal");
    }
    return HfSet::of(std::move(elems));
  }
  throw DictifSyntaxError(pos, "expected D#N or '{'");
}

inline HfSet parse_dictif(std::string_view text, std::uint64_t cap_bits = kDefaultIndexBitCap) {
  std::size_t pos = 0;
  detail::skip_space(text, pos);
  HfSet s = parse_dictif(text, pos, cap_bits);
  detail::skip_space(text, pos);
  if (pos != text.size()) throw DictifSyntaxError(pos, "trailing characters after dictif");
  return s;
}

}  // namespace translatif

template <>
struct std::hash<translatif::HfSet> {
  std::size_t operator()(const translatif::HfSet& s) const noexcept { return s.hash(); }
};
