#pragma once

// translatif command-line front end. run_cli() is the whole program minus
// process plumbing, so tests drive it in-process.
//
// Exit codes:
//   0  success / Theorem / clean report
//   1  NonTheorem, or a check found violations
//   2  parse or language error, invalid rank or schedule for `check`
//   3  Unknown verdict, cap or resource limit hit
//   4  usage error (unknown flag, invalid flag combination)

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "translatif.hpp"

namespace translatif::cli {

enum Exit : int { kOk = 0, kNegative = 1, kInput = 2, kLimit = 3, kUsage = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  std::uint64_t max_size = TranslationLimits{}.max_size;
  unsigned tt_vars = kDefaultTruthTableVarCap;
  std::uint64_t work = kDefaultWorkLimit;
  unsigned rank_cap = kMaxPLevel;
  std::uint64_t index_bits = kDefaultIndexBitCap;
};

// "key=value" pairs separated by commas or newlines; '#' starts a comment.
inline void apply_caps_text(std::string_view text, Caps& caps, const std::string& origin) {
  std::string item;
  auto flush = [&] {
    const auto hash = item.find('#');
    if (hash != std::string::npos) item.erase(hash);
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) return;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError(origin + ": expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(value, &used);
      if (used != value.size() || n == 0) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError(origin + ": " + key + " needs a positive integer, got '" + value + "'");
    }
    if (key == "max_size") {
      caps.max_size = n;
    } else if (key == "tt_vars") {
      caps.tt_vars = static_cast<unsigned>(n);
    } else if (key == "work") {
      caps.work = n;
    } else if (key == "rank_cap") {
      if (n > kMaxPLevel) throw UsageError(origin + ": rank_cap above " + std::to_string(kMaxPLevel));
      caps.rank_cap = static_cast<unsigned>(n);
    } else if (key == "index_bits") {
      caps.index_bits = n;
    } else {
      throw UsageError(origin + ": unknown cap '" + key + "'");
    }
    item.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '\n') {
      flush();
    } else {
      item += c;
    }
  }
  flush();
}

enum class Mode { Human, Record };

struct RunConfig {
  Mode mode = Mode::Human;
  std::uint64_t seed = 1;
  Caps caps;
  std::string schedule = "P";

  std::string theory = "B";
  unsigned rank = 1;
  std::string route = "streaming";
  std::string stop_after = "steps";
  bool trace = false;
  std::string formula;
  std::string file;

  std::string check_id;
  std::uint64_t samples = 0;
  std::optional<unsigned> size_bound;
  unsigned start = 1;
  unsigned window = 4;

  std::vector<std::string> dictif_args;

  ContainerSchedule make_schedule() const { return ContainerSchedule::p_ladder(caps.rank_cap); }
  ParseOptions parse_options() const { return ParseOptions{caps.index_bits}; }
  bool record() const { return mode == Mode::Record; }
};

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

inline TheoryConfig theory_config(const RunConfig& rc, TheoryKind kind) {
  TheoryConfig cfg = TheoryConfig::of(kind);
  cfg.rank = rc.rank;
  cfg.schedule = rc.make_schedule();
  cfg.limits = TheoryLimits{rc.caps.max_size, rc.caps.tt_vars, rc.caps.work};
  cfg.route = rc.route == "materialized" ? FRoute::Materialized : FRoute::Streaming;
  return cfg;
}

// Runs `one` on the inline formula, or on every formula line of --file with
// each output line prefixed by its 1-based line number. Returns the largest
// exit code seen.
inline int for_each_input(const RunConfig& rc, std::ostream& out, std::ostream& err,
                          const std::function<int(const std::string&, std::ostream&, std::ostream&)>& one) {
  if (rc.file.empty()) return one(rc.formula, out, err);
  std::ifstream in(rc.file);
  if (!in) {
    err << "error: cannot open " << rc.file << "\n";
    return kInput;
  }
  int worst = kOk;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::ostringstream o;
    std::ostringstream e;
    worst = std::max(worst, one(line, o, e));
    const std::string prefix = rc.record() ? "line=" + std::to_string(number) + " " : std::to_string(number) + ": ";
    const std::pair<const std::ostringstream*, std::ostream*> sinks[] = {{&o, &out}, {&e, &err}};
    for (const auto& [from, to] : sinks) {
      std::istringstream lines(from->str());
      std::string l;
      while (std::getline(lines, l)) *to << prefix << l << "\n";
    }
  }
  return worst;
}

// Reports parse and language errors, returning kInput.
template <class F>
int guarded(std::ostream& err, F&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "parse error at " << e.line << ":" << e.column << ": " << e.message << "\n";
  } catch (const DictifSyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const LanguageError& e) {
    err << "language error: " << e.what() << "\n";
  } catch (const NotDecidable& e) {
    err << "not decidable: " << e.what() << "\n";
  } catch (const PreconditionViolation& e) {
    err << "precondition violated: " << e.what() << "\n";
  } catch (const IndexOverflow& e) {
    err << "index overflow: " << e.what() << "\n";
    return kLimit;
  }
  return kInput;
}

// ---------------------------------------------------------------------------
// parse

inline int cmd_parse(const RunConfig& rc, const std::string& text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Enonce e = parse(text, rc.parse_options());
    const std::string canon = print_canonical(e, rc.caps.index_bits);
    const Language lang = language_of(e);
    const BindingReport b = binding_report(e);
    if (rc.record()) {
      out << "canonical=" << quoted(canon) << " language=" << to_string(lang) << " size=" << e.size()
          << " qdepth=" << e.qdepth() << " bound=" << b.bound_count() << " free=" << b.free_count()
          << " binders=" << b.binders.size() << " vacuous=" << b.vacuous_binders.size() << "\n";
      for (const Occurrence& o : b.occurrences) {
        out << "occurrence sign=" << o.sign << " height=" << o.height << " depth=" << o.depth << " level=" << o.level
            << " binder=" << (o.bound ? std::to_string(o.binder_sign) : std::string("-")) << "\n";
      }
      return int{kOk};
    }
    out << canon << " | language=" << to_string(lang) << "\n";
    for (const Occurrence& o : b.occurrences) {
      out << "  x@" << o.height << " at sign " << o.sign << ": depth " << o.depth << ", level " << o.level;
      if (o.bound) {
        out << ", bound by the quantifier at sign " << o.binder_sign << "\n";
      } else {
        out << ", free\n";
      }
    }
    out << "  " << b.bound_count() << " bound, " << b.free_count() << " free, " << b.vacuous_binders.size()
        << " vacuous quantifier(s)\n";
    return int{kOk};
  });
}

// ---------------------------------------------------------------------------
// decide

inline int cmd_decide(const RunConfig& rc, TheoryKind kind, const std::string& text, std::ostream& out,
                       std::ostream& err) {
  return guarded(err, [&] {
    const Enonce e = parse(text, rc.parse_options());
    Verdict v = Verdict::unknown("unset");
    try {
      v = is_theorem(theory_config(rc, kind), e);
    } catch (const CapExceeded& cap) {
      err << "cap exceeded: " << cap.what() << "\n";
      v = Verdict::unknown("rank-cap");
    }
    if (rc.record()) {
      out << "theory=" << to_string(kind) << " rank=" << (kind == TheoryKind::F ? std::to_string(rc.rank) : "-")
          << " verdict=" << v.letter() << " reason=" << (v.is_unknown() ? v.reason() : "-") << "\n";
    } else {
      out << "verdict=" << v.name();
      if (v.is_unknown()) out << " reason=" << v.reason();
      out << "\n";
    }
    if (v.is_theorem()) return int{kOk};
    return v.is_non_theorem() ? int{kNegative} : int{kLimit};
  });
}

// ---------------------------------------------------------------------------
// translate

inline int cmd_translate(const RunConfig& rc, const std::string& text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Enonce e = parse(text, rc.parse_options());
    const ContainerSchedule sched = rc.make_schedule();
    const TranslationLimits limits{rc.caps.max_size};
    const Stage stop = rc.stop_after == "u" ? Stage::U : rc.stop_after == "d" ? Stage::D : Stage::Steps;
    PipelineResult r;
    try {
      r = pipeline_udK(e, rc.rank, sched, limits, stop);
    } catch (const CapExceeded& cap) {
      err << "cap exceeded at stage=bracket:" << rc.rank << ": " << cap.what() << "\n";
      return int{kLimit};
    } catch (const ResourceLimit& limit) {
      err << "limit " << limit.limit << " hit at stage=" << limit.what() << "\n";
      return int{kLimit};
    }
    if (rc.stop_after == "b") {
      r.result = translate_D_to_B(r.result);
      r.trace.push_back({"b", r.result.size(), r.result.qdepth()});
    }
    const std::string canon = print_canonical(r.result, rc.caps.index_bits);
    out << (rc.record() ? "result=" + quoted(canon) + " size=" + std::to_string(r.result.size()) : canon) << "\n";
    if (rc.trace) {
      for (const TraceEntry& t : r.trace) out << format_trace_line(t) << "\n";
    }
    return int{kOk};
  });
}

// ---------------------------------------------------------------------------
// dictif

inline HfSet read_dictif(const std::string& text, const RunConfig& rc) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return from_index(AckIndex(text));
  }
  return parse_dictif(text, rc.caps.index_bits);
}

inline void print_dictif(const std::string& label, const HfSet& s, const RunConfig& rc, std::ostream& out) {
  const std::string name = format_dictif(s, rc.caps.index_bits);
  const std::string elems = format_elements(s, rc.caps.index_bits);
  if (rc.record()) {
    out << label << "=" << name << " elements=" << elems << " cardinality=" << s.size() << "\n";
  } else {
    out << label << ": " << name << " = " << elems << " (" << s.size() << " element" << (s.size() == 1 ? "" : "s")
        << ")\n";
  }
}

inline int cmd_dictif(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto& a = rc.dictif_args;
  auto yes_no = [&](bool b) { return rc.record() ? std::string(b ? "1" : "0") : std::string(b ? "yes" : "no"); };
  auto need = [&](std::size_t n) {
    if (a.size() != n) throw UsageError("dictif " + a[0] + " takes " + std::to_string(n - 1) + " argument(s)");
  };
  return guarded(err, [&] {
    try {
      const std::string& op = a.at(0);
      if (op == "show") {
        need(2);
        const HfSet s = read_dictif(a[1], rc);
        print_dictif("dictif", s, rc, out);
        const char* sep = rc.record() ? "=" : ": ";
        out << "transitive" << sep << yes_no(is_transitive(s)) << (rc.record() ? " " : "\n") << "subtransitive"
            << sep << yes_no(is_subtransitive(s)) << "\n";
        return int{kOk};
      }
      if (op == "p") {
        need(2);
        const unsigned n = static_cast<unsigned>(std::stoul(a[1]));
        print_dictif("P_" + std::to_string(n), p_level(n), rc, out);
        return int{kOk};
      }
      static const std::map<std::string, int> arity = {{"union", 2},  {"inter", 2},    {"diff", 2}, {"subset", 2},
                                                       {"member", 2}, {"succ", 1},     {"powerset", 1}};
      const auto it = arity.find(op);
      if (it == arity.end()) throw UsageError("unknown dictif operation '" + op + "'");
      need(static_cast<std::size_t>(it->second) + 1);
      const HfSet x = read_dictif(a[1], rc);
      const HfSet y = it->second == 2 ? read_dictif(a[2], rc) : HfSet{};
      if (op == "subset" || op == "member") {
        const bool r = op == "subset" ? is_subset(x, y) : member(x, y);
        out << op << (rc.record() ? "=" : ": ") << yes_no(r) << "\n";
        return r ? int{kOk} : int{kNegative};
      }
      HfSet r;
      if (op == "union") r = set_union(x, y);
      if (op == "inter") r = set_intersection(x, y);
      if (op == "diff") r = set_difference(x, y);
      if (op == "succ") r = successor(x);
      if (op == "powerset") r = powerset(x);
      print_dictif(op, r, rc, out);
      return int{kOk};
    } catch (const CapExceeded& cap) {
      err << "cap exceeded: " << cap.what() << "\n";
      return int{kLimit};
    } catch (const std::invalid_argument&) {
      throw UsageError("dictif: expected a number");
    } catch (const std::out_of_range&) {
      throw UsageError("dictif: missing or oversized argument");
    }
  });
}

// ---------------------------------------------------------------------------
// check

struct Tally {
  std::uint64_t checked = 0, theorems = 0, non_theorems = 0, unknowns = 0, violations = 0;

  void add(const Verdict& v) {
    ++checked;
    theorems += v.is_theorem();
    non_theorems += v.is_non_theorem();
    unknowns += v.is_unknown();
  }
  std::string line() const {
    return "summary checked=" + std::to_string(checked) + " theorem=" + std::to_string(theorems) +
           " non_theorem=" + std::to_string(non_theorems) + " unknown=" + std::to_string(unknowns) +
           " violations=" + std::to_string(violations);
  }
  int exit_code() const { return violations ? int{kNegative} : unknowns ? int{kLimit} : int{kOk}; }
};

inline Enonce component(FormulaGenerator& gen, TheoryKind kind) {
  switch (kind) {
    case TheoryKind::B: return gen.b({4, 0, 3, {}});
    case TheoryKind::C: return gen.c({4, 0, 3, {}});
    case TheoryKind::D: return gen.d({3, 0, 3, {from_index(0), from_index(1), from_index(2), from_index(3)}});
    default: return gen.closed_f({3, 2, 3, {from_index(0), from_index(1), from_index(2), from_index(3)}});
  }
}

inline int check_schemas(const RunConfig& rc, TheoryKind kind, std::ostream& out) {
  const TheoryConfig cfg = theory_config(rc, kind);
  const std::uint64_t n = rc.samples ? rc.samples : 300;
  FormulaGenerator gen(rc.seed);
  std::vector<Enonce> parts;
  for (std::uint64_t i = 0; i < n + 2; ++i) parts.push_back(component(gen, kind));
  Tally tally;
  std::vector<std::pair<Enonce, Enonce>> pairs;
  for (int id = 1; id <= 3; ++id) {
    Tally per;
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::span<const Enonce> args(parts.data() + i, static_cast<std::size_t>(id));
      const Enonce inst = schema_instance(id, args);
      const Verdict v = is_theorem(cfg, inst);
      per.add(v);
      tally.add(v);
      if (v.is_non_theorem()) {
        ++per.violations;
        ++tally.violations;
        out << "violation schema=" << id << " instance=" << quoted(print_canonical(inst)) << "\n";
      }
      pairs.emplace_back(inst, parts[i]);
    }
    out << "schema=" << id << " instances=" << per.checked << " theorem=" << per.theorems
        << " unknown=" << per.unknowns << "\n";
  }
  for (std::uint64_t i = 0; i < n; ++i) pairs.emplace_back(parts[i], parts[i + 1]);
  const InferenceReport inf = check_inference_closure(cfg, pairs);
  out << "inference checked=" << inf.checked << " premises_held=" << inf.premises_held
      << " counterexamples=" << inf.counterexamples.size() << " unknown=" << inf.unknowns << "\n";
  tally.violations += inf.counterexamples.size();
  tally.unknowns += inf.unknowns;
  out << tally.line() << "\n";
  return tally.exit_code();
}

inline int check_equality(const RunConfig& rc, std::ostream& out) {
  const ContainerSchedule sched = rc.make_schedule();
  const HfSet ck = sched.container(rc.rank);
  const TheoryLimits limits{rc.caps.max_size, rc.caps.tt_vars, rc.caps.work};
  Tally tally;
  for (const PredicateTemplate& p : predicate_templates(ck)) {
    for (const HfSet& a : ck.elements()) {
      for (const HfSet& b : ck.elements()) {
        const Verdict v = check_equality_schema(rc.rank, sched, p, a, b, limits);
        tally.add(v);
        tally.violations += v.is_non_theorem();
        out << format_rank_line(rc.rank, v) << " template=" << p.name << " a=" << format_dictif(a)
            << " b=" << format_dictif(b) << "\n";
      }
    }
  }
  out << tally.line() << "\n";
  return tally.exit_code();
}

inline int check_foundation_cmd(const RunConfig& rc, std::ostream& out) {
  const Verdict v =
      check_foundation(rc.rank, rc.make_schedule(), TheoryLimits{rc.caps.max_size, rc.caps.tt_vars, rc.caps.work});
  Tally tally;
  tally.add(v);
  tally.violations += v.is_non_theorem();
  out << format_rank_line(rc.rank, v) << "\n" << tally.line() << "\n";
  if (!rc.record()) out << "foundation is " << (v.is_theorem() ? "a theorem" : "not established") << " at rank "
                        << rc.rank << "\n";
  return tally.exit_code();
}

inline int check_coherence(const RunConfig& rc, TheoryKind kind, std::ostream& out) {
  CoherenceOptions opts;
  opts.seed = rc.seed;
  opts.samples = rc.samples;
  switch (kind) {
    case TheoryKind::B: opts.size_bound = rc.size_bound.value_or(11); break;
    case TheoryKind::D: opts.size_bound = rc.size_bound.value_or(9); break;
    default: opts.size_bound = rc.size_bound.value_or(5); break;
  }
  const CoherenceReport r = coherence_scan(theory_config(rc, kind), opts);
  for (const Enonce& e : r.violations) out << "violation enonce=" << quoted(print_canonical(e)) << "\n";
  out << "theory=" << to_string(kind) << " rank=" << (kind == TheoryKind::F ? std::to_string(rc.rank) : "-")
      << " exhaustive=" << r.exhaustive << " sampled=" << r.sampled << "\n";
  out << "summary checked=" << r.checked << " unknown=" << r.unknowns << " violations=" << r.violations.size()
      << "\n";
  return r.violations.empty() ? (r.unknowns ? int{kLimit} : int{kOk}) : int{kNegative};
}

inline int check_asymptotic(const RunConfig& rc, std::ostream& out) {
  std::vector<std::pair<std::string, Enonce>> probes;
  if (rc.formula.empty()) {
    probes.emplace_back("empty-subset", parse("all all imp in x@1 D#0 in x@1 x@2"));
    probes.emplace_back("self-member", parse("all in x@1 x@1"));
  } else {
    probes.emplace_back("formula", parse(rc.formula, rc.parse_options()));
  }
  const auto family =
      f_family(ContainerSchedule::p_ladder(rc.caps.rank_cap), TheoryLimits{rc.caps.max_size, rc.caps.tt_vars, rc.caps.work});
  bool all_stable = true;
  for (const auto& [label, e] : probes) {
    const StabilizationReport r = asymptotic_probe(family, e, rc.start, rc.window);
    out << "probe=" << label << " enonce=" << quoted(print_canonical(e)) << "\n";
    for (const RankVerdict& rv : r.ranks) out << format_rank_line(rv.rank, rv.verdict) << "\n";
    out << "summary probe=" << label << " stabilized=" << (r.stabilized ? "true" : "false")
        << " first_stable_rank=" << (r.first_stable_rank ? std::to_string(*r.first_stable_rank) : "-")
        << " verdict=" << r.ranks.back().verdict.letter() << "\n";
    all_stable = all_stable && r.stabilized;
  }
  if (!rc.record()) out << "note: a stable window is evidence for the asymptotic theory, not a proof\n";
  return all_stable ? int{kOk} : int{kNegative};
}

inline int cmd_check(const RunConfig& rc, TheoryKind kind, std::ostream& out, std::ostream& err) {
  if (!rc.make_schedule().within_cap(rc.rank)) {
    err << "invalid rank " << rc.rank << ": schedule " << rc.schedule << " covers 1.." << rc.caps.rank_cap << "\n";
    return kInput;
  }
  return guarded(err, [&] {
    try {
      if (rc.check_id == "schemas") return check_schemas(rc, kind, out);
      if (rc.check_id == "equality") return check_equality(rc, out);
      if (rc.check_id == "foundation") return check_foundation_cmd(rc, out);
      if (rc.check_id == "coherence") return check_coherence(rc, kind, out);
      return check_asymptotic(rc, out);
    } catch (const CapExceeded& cap) {
      err << "cap exceeded: " << cap.what() << "\n";
      return int{kInput};
    }
  });
}

// ---------------------------------------------------------------------------
// Entry point

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   const char* env_caps = nullptr) {
  RunConfig rc;
  CLI::App app{"translatif: translative theories over hereditarily finite dictifs", "translatif"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI file of global options; flags win");
  app.add_option("--mode", rc.mode, "Output mode")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"human", Mode::Human}, {"record", Mode::Record}}))
      ->capture_default_str();
  app.add_option("--seed", rc.seed, "Seed for randomized scans")->capture_default_str();
  app.add_option("--schedule", rc.schedule, "Container schedule")->check(CLI::IsMember({"P"}))->capture_default_str();
  app.add_option("--max-size", rc.caps.max_size, "Largest materialized énoncé in signs")->check(CLI::PositiveNumber);
  app.add_option("--tt-vars", rc.caps.tt_vars, "Truth-table variable cap")->check(CLI::PositiveNumber);
  app.add_option("--work", rc.caps.work, "Instance budget of the streaming F decision")->check(CLI::PositiveNumber);
  app.add_option("--rank-cap", rc.caps.rank_cap, "Highest container index")->check(CLI::Range(1U, kMaxPLevel));
  app.add_option("--index-bits", rc.caps.index_bits, "Largest Ackermann index in bits")->check(CLI::PositiveNumber);
  app.fallthrough();

  auto add_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("formula", rc.formula, "Formula text");
    auto* file = sub->add_option("--file", rc.file, "One formula per line; '#' lines are skipped");
    f->excludes(file);
  };
  auto add_theory = [&](CLI::App* sub, const char* def) {
    rc.theory = def;
    return sub->add_option("--theory", rc.theory, "Theory")
        ->check(CLI::IsMember({"A", "B", "C", "D", "F", "M"}))
        ->capture_default_str();
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "Print canonical form, language and binding table");
  add_input(parse_cmd);

  CLI::App* decide = app.add_subcommand("decide", "Decide theoremhood");
  add_input(decide);
  add_theory(decide, "B");
  CLI::Option* decide_rank = decide->add_option("--rank", rc.rank, "Rank K for theory F")->check(CLI::PositiveNumber);
  CLI::Option* route = decide->add_option("--route", rc.route, "F decision route")
                           ->check(CLI::IsMember({"streaming", "materialized"}));

  CLI::App* translate = app.add_subcommand("translate", "Run the u, d, [K pipeline");
  add_input(translate);
  translate->add_option("--rank", rc.rank, "Rank K")->check(CLI::PositiveNumber)->capture_default_str();
  translate->add_option("--stop-after", rc.stop_after, "Last stage: u, d, steps or b")
      ->check(CLI::IsMember({"u", "d", "steps", "b"}))
      ->capture_default_str();
  translate->add_flag("--trace", rc.trace, "Print one line per stage");

  CLI::App* dictif = app.add_subcommand("dictif", "Dictif arithmetic: show X | p N | union|inter|diff|subset|member A B | succ|powerset A");
  dictif->add_option("args", rc.dictif_args, "Operation and operands")->required();

  CLI::App* check = app.add_subcommand("check", "Run a schema, foundation, coherence or asymptotic check");
  check->add_option("id", rc.check_id, "Check")
      ->required()
      ->check(CLI::IsMember({"schemas", "equality", "foundation", "coherence", "asymptotic"}));
  check->add_option("formula", rc.formula, "Formula for the asymptotic probe");
  CLI::Option* check_theory = add_theory(check, "B");
  CLI::Option* check_rank = check->add_option("--rank", rc.rank, "Rank K")->check(CLI::PositiveNumber);
  check->add_option("--samples", rc.samples, "Random samples");
  check->add_option("--size-bound", rc.size_bound, "Exhaustive size bound in signs");
  check->add_option("--start", rc.start, "First probed rank")->check(CLI::PositiveNumber)->capture_default_str();
  check->add_option("--window", rc.window, "Number of probed ranks")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    if (env_caps) apply_caps_text(env_caps, rc.caps, "TRANSLATIF_CAPS");
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const auto kind = parse_theory_kind(rc.theory).value_or(TheoryKind::B);
  try {
    const bool takes_input = parse_cmd->parsed() || decide->parsed() || translate->parsed();
    if (takes_input && rc.formula.empty() && rc.file.empty()) throw UsageError("a formula or --file is required");
    if (decide->parsed()) {
      if ((decide_rank->count() || route->count()) && kind != TheoryKind::F) {
        throw UsageError("--rank and --route apply to --theory F only");
      }
      return for_each_input(rc, out, err, [&](const std::string& t, std::ostream& o, std::ostream& e) {
        return cmd_decide(rc, kind, t, o, e);
      });
    }
    if (parse_cmd->parsed()) {
      return for_each_input(rc, out, err,
                            [&](const std::string& t, std::ostream& o, std::ostream& e) { return cmd_parse(rc, t, o, e); });
    }
    if (translate->parsed()) {
      return for_each_input(rc, out, err, [&](const std::string& t, std::ostream& o, std::ostream& e) {
        return cmd_translate(rc, t, o, e);
      });
    }
    if (dictif->parsed()) return cmd_dictif(rc, out, err);
    if (check->parsed()) {
      const bool theory_used = rc.check_id == "schemas" || rc.check_id == "coherence";
      if (check_theory->count() && !theory_used) throw UsageError("--theory applies to schemas and coherence only");
      if (rc.check_id == "coherence" && kind != TheoryKind::B && kind != TheoryKind::D && kind != TheoryKind::F) {
        throw UsageError("coherence scans need --theory B, D or F");
      }
      if (rc.check_id == "schemas" && (kind == TheoryKind::A || kind == TheoryKind::M)) {
        throw UsageError("schema checks need --theory B, C, D or F");
      }
      if (!check_rank->count()) rc.rank = rc.check_id == "equality" ? 2 : 1;
      return cmd_check(rc, kind, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace translatif::cli
