#pragma once

// Concrete syntax: prefix keywords separated by whitespace.
//
//   énoncé  := psi | theta | v@N | lam^N psi
//            | imp É É | all É | in S S
//            | ~ É | & É É | '|' É É | <=> É É | E! É        (sugar)
//   substantif := x@H | lam^H sig | D#N | del^N sig | sig | {S,...}
//
// Unicode aliases Ψ Θ ⟹ ∀ ∈ λ ς δ ¬ ∧ ∨ ⟺ ∃ are accepted on input and need no
// surrounding whitespace. A `#` at the start of a token begins a comment.
// Output is always ASCII without sugar other than x@H, v@N and D#N.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "translatif/enonce.hpp"
#include "translatif/errors.hpp"
#include "translatif/hfset.hpp"

namespace translatif {

// Énoncé with the abbreviating connectives still present.
struct Sugared {
  enum class Kind : std::uint8_t { Psi, Var, Implies, ForAll, In, Not, And, Or, Iff, Exists };

  Kind kind = Kind::Psi;
  std::vector<Sugared> children;
  Term left = Term::dictif(HfSet{});
  Term right = Term::dictif(HfSet{});
  std::uint32_t index = 0;

  static Sugared psi() { return {}; }
  static Sugared var(std::uint32_t n) {
    Sugared s;
    s.kind = Kind::Var;
    s.index = n;
    return s;
  }
  static Sugared in(Term l, Term r) {
    Sugared s;
    s.kind = Kind::In;
    s.left = std::move(l);
    s.right = std::move(r);
    return s;
  }
  static Sugared unary(Kind k, Sugared a) {
    Sugared s;
    s.kind = k;
    s.children.push_back(std::move(a));
    return s;
  }
  static Sugared binary(Kind k, Sugared a, Sugared b) {
    Sugared s;
    s.kind = k;
    s.children.push_back(std::move(a));
    s.children.push_back(std::move(b));
    return s;
  }
};

// ¬E ↦ E⟹Ψ, E∧F ↦ ¬(E⟹¬F), E∨F ↦ ¬E⟹F, E⟺F ↦ (E⟹F)∧(F⟹E), ∃E ↦ ¬∀¬E.
inline Enonce desugar(const Sugared& s) {
  using K = Sugared::Kind;
  auto child = [&](std::size_t i) { return desugar(s.children.at(i)); };
  switch (s.kind) {
    case K::Psi: return Enonce::psi();
    case K::Var: return Enonce::var(s.index);
    case K::In: return Enonce::in(s.left, s.right);
    case K::Implies: return Enonce::implies(child(0), child(1));
    case K::ForAll: return Enonce::forall(child(0));
    case K::Not: return negation(child(0));
    case K::And: return conjunction(child(0), child(1));
    case K::Or: return disjunction(child(0), child(1));
    case K::Iff: return equivalence(child(0), child(1));
    case K::Exists: return exists(child(0));
  }
  throw PreconditionViolation("desugar: unknown node");
}

struct ParseOptions {
  std::uint64_t index_bit_cap = kDefaultIndexBitCap;
};

namespace detail {

enum class Tok : std::uint8_t {
  Psi, Theta, Imp, All, In, Lam, Sig, Del, Not, And, Or, Iff, Exists, VarSugar, LitSugar, Dictif
};

struct Token {
  Tok kind;
  std::size_t line;
  std::size_t column;
  std::string text;
  std::uint32_t number = 0;
  HfSet value;
};

struct Alias {
  std::string_view text;
  Tok kind;
};

inline constexpr Alias kUnicodeAliases[] = {
    {"Ψ", Tok::Psi}, {"Θ", Tok::Theta}, {"⟹", Tok::Imp}, {"∀", Tok::All},  {"∈", Tok::In},
    {"λ", Tok::Lam}, {"ς", Tok::Sig},   {"δ", Tok::Del}, {"¬", Tok::Not},  {"∧", Tok::And},
    {"∨", Tok::Or},  {"⟺", Tok::Iff},   {"∃", Tok::Exists},
};

inline constexpr Alias kKeywords[] = {
    {"psi", Tok::Psi}, {"theta", Tok::Theta}, {"imp", Tok::Imp}, {"all", Tok::All}, {"in", Tok::In},
    {"lam", Tok::Lam}, {"sig", Tok::Sig},     {"del", Tok::Del}, {"~", Tok::Not},   {"&", Tok::And},
    {"|", Tok::Or},    {"<=>", Tok::Iff},     {"E!", Tok::Exists},
};

class Lexer {
 public:
  Lexer(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
        continue;
      }
      if (auto alias = unicode_at(pos_)) {
        out.push_back(make(alias->kind, std::string(alias->text)));
        advance(alias->text.size());
        continue;
      }
      if (text_[pos_] == '{') {
        out.push_back(dictif_literal());
        continue;
      }
      out.push_back(word());
    }
    return out;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  std::optional<Alias> unicode_at(std::size_t p) const {
    for (const Alias& a : kUnicodeAliases) {
      if (text_.substr(p, a.text.size()) == a.text) return a;
    }
    return std::nullopt;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance(1);
  }

  Token make(Tok k, std::string text) const {
    Token t{k, line_, pos_ - line_start_ + 1, std::move(text), 0, HfSet{}};
    return t;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    std::size_t line = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        start = i + 1;
      }
    }
    throw ParseError(line, at - start + 1, msg);
  }

  HfSet read_dictif() {
    const std::size_t start = pos_;
    try {
      std::size_t p = pos_;
      HfSet v = parse_dictif(text_, p, opts_.index_bit_cap);
      advance(p - pos_);
      return v;
    } catch (const DictifSyntaxError& err) {
      fail(err.offset, std::string("lexical error: ") + err.what());
    } catch (const IndexOverflow& err) {
      fail(start, std::string("dictif-index overflow: ") + err.what());
    }
  }

  Token dictif_literal() {
    Token t = make(Tok::Dictif, "{");
    t.value = read_dictif();
    return t;
  }

  static std::uint32_t parse_count(std::string_view digits, bool& ok) {
    ok = !digits.empty() && digits.size() <= 9;
    std::uint32_t n = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') ok = false;
      n = n * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return n;
  }

  Token word() {
    std::size_t end = pos_;
    while (end < text_.size() && !is_space(text_[end]) && text_[end] != '{' && !unicode_at(end)) ++end;
    const std::string_view w = text_.substr(pos_, end - pos_);
    for (const Alias& k : kKeywords) {
      if (w == k.text) {
        Token t = make(k.kind, std::string(w));
        advance(w.size());
        return t;
      }
    }
    if (w.starts_with("D#")) {
      Token t = make(Tok::Dictif, std::string(w));
      t.value = read_dictif();
      if (pos_ != end) fail(pos_, "lexical error: unknown token '" + std::string(w) + "'");
      return t;
    }
    if (w.starts_with("x@") || w.starts_with("v@")) {
      bool ok = false;
      const std::uint32_t n = parse_count(w.substr(2), ok);
      if (!ok || n == 0) fail(pos_, "lexical error: bad index in '" + std::string(w) + "' (expected >= 1)");
      Token t = make(w[0] == 'x' ? Tok::LitSugar : Tok::VarSugar, std::string(w));
      t.number = n;
      advance(w.size());
      return t;
    }
    fail(pos_, "lexical error: unknown token '" + std::string(w) + "'");
  }

  std::string_view text_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Sugared run() {
    if (toks_.empty()) throw ParseError(1, 1, "arity error: empty input, expected an énoncé");
    Sugared s = enonce(nullptr);
    if (pos_ < toks_.size()) {
      const Token& t = toks_[pos_];
      throw ParseError(t.line, t.column, "unexpected token '" + t.text + "' after a complete énoncé");
    }
    return s;
  }

 private:
  [[noreturn]] void missing(const Token* parent, const char* what) const {
    if (parent == nullptr) throw ParseError(1, 1, std::string("arity error: expected ") + what);
    throw ParseError(parent->line, parent->column,
                     "arity error: '" + parent->text + "' lacks an operand (expected " + what + ")");
  }

  const Token& next(const Token* parent, const char* what) {
    if (pos_ >= toks_.size()) missing(parent, what);
    return toks_[pos_++];
  }

  // Counts a run of `kind` tokens starting with the one already consumed.
  std::uint32_t run_of(Tok kind) {
    std::uint32_t n = 1;
    while (pos_ < toks_.size() && toks_[pos_].kind == kind) {
      ++n;
      ++pos_;
    }
    return n;
  }

  Term term(const Token* parent) {
    const Token& t = next(parent, "a substantif");
    switch (t.kind) {
      case Tok::LitSugar: return Term::litteme(t.number);
      case Tok::Dictif: return Term::dictif(t.value);
      case Tok::Sig: return Term::dictif(HfSet{});
      case Tok::Lam: {
        const std::uint32_t h = run_of(Tok::Lam);
        expect_sig(t);
        return Term::litteme(h);
      }
      case Tok::Del: {
        const std::uint32_t k = run_of(Tok::Del);
        expect_sig(t);
        return Term::dictif(from_index(std::uint64_t{k}));
      }
      default:
        throw ParseError(t.line, t.column, "expected a substantif, got '" + t.text + "'");
    }
  }

  void expect_sig(const Token& first) {
    if (pos_ >= toks_.size() || toks_[pos_].kind != Tok::Sig) {
      throw ParseError(first.line, first.column, "substantif must end with 'sig'");
    }
    ++pos_;
  }

  Sugared enonce(const Token* parent) {
    using K = Sugared::Kind;
    const Token& t = next(parent, "an énoncé");
    switch (t.kind) {
      case Tok::Psi: return Sugared::psi();
      case Tok::Theta: return Sugared::binary(K::Implies, Sugared::psi(), Sugared::psi());
      case Tok::VarSugar: return Sugared::var(t.number);
      case Tok::Lam: {
        const std::uint32_t n = run_of(Tok::Lam);
        if (pos_ >= toks_.size() || toks_[pos_].kind != Tok::Psi) {
          throw ParseError(t.line, t.column, "variable must end with 'psi'");
        }
        ++pos_;
        return Sugared::var(n);
      }
      case Tok::Imp: return binary(K::Implies, t);
      case Tok::And: return binary(K::And, t);
      case Tok::Or: return binary(K::Or, t);
      case Tok::Iff: return binary(K::Iff, t);
      case Tok::All: return Sugared::unary(K::ForAll, enonce(&t));
      case Tok::Exists: return Sugared::unary(K::Exists, enonce(&t));
      case Tok::Not: return Sugared::unary(K::Not, enonce(&t));
      case Tok::In: {
        Term l = term(&t);
        Term r = term(&t);
        return Sugared::in(std::move(l), std::move(r));
      }
      default:
        throw ParseError(t.line, t.column, "expected an énoncé, got '" + t.text + "'");
    }
  }

  Sugared binary(Sugared::Kind k, const Token& op) {
    Sugared a = enonce(&op);
    Sugared b = enonce(&op);
    return Sugared::binary(k, std::move(a), std::move(b));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Sugared parse_sugared(std::string_view text, const ParseOptions& opts = {}) {
  return detail::Parser(detail::Lexer(text, opts).run()).run();
}

// Throws ParseError for lexical, arity and overflow problems and
// LanguageError when no language admits the result.
inline Enonce parse(std::string_view text, const ParseOptions& opts = {}) {
  Enonce e = desugar(parse_sugared(text, opts));
  (void)language_of(e);
  return e;
}

namespace detail {

inline void print_term(const Term& t, std::string& out, std::uint64_t cap) {
  if (t.is_litteme()) {
    out += "x@";
    out += std::to_string(t.height());
  } else {
    out += format_dictif(t.value(), cap);
  }
}

inline void print_into(const Enonce& e, std::string& out, std::uint64_t cap) {
  switch (e.kind()) {
    case Kind::Psi: out += "psi"; return;
    case Kind::Var:
      out += "v@";
      out += std::to_string(e.var_index());
      return;
    case Kind::ForAll:
      out += "all ";
      print_into(e.body(), out, cap);
      return;
    case Kind::Implies:
      out += "imp ";
      print_into(e.antecedent(), out, cap);
      out += ' ';
      print_into(e.consequent(), out, cap);
      return;
    case Kind::In:
      out += "in ";
      print_term(e.left(), out, cap);
      out += ' ';
      print_term(e.right(), out, cap);
      return;
  }
}

}  // namespace detail

inline std::string print_canonical(const Enonce& e, std::uint64_t index_bit_cap = kDefaultIndexBitCap) {
  std::string out;
  out.reserve(e.size() * 4);
  detail::print_into(e, out, index_bit_cap);
  return out;
}

}  // namespace translatif
