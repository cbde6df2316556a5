#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  const int code = translatif::cli::run_cli(std::move(args), out, err, env);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliParse, CanonicalAndLanguage) {
  const CliRun r = run({"parse", "in D#1 D#6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "in D#1 D#6 | language=D");
}

TEST(CliParse, BindingTable) {
  const CliRun r = run({"--mode", "record", "parse", "all in x@1 x@1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("language=E"), std::string::npos);
  EXPECT_NE(r.out.find("bound=2 free=0 binders=1 vacuous=0"), std::string::npos);
  EXPECT_NE(r.out.find("occurrence sign=2 height=1 depth=1 level=0 binder=0"), std::string::npos);
}

TEST(CliParse, ArityError) {
  const CliRun r = run({"parse", "imp"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error at 1:1"), std::string::npos);
}

TEST(CliDecide, Examples) {
  CliRun r = run({"decide", "--theory", "D", "in D#2 D#6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "verdict=Theorem\n");
  r = run({"decide", "--theory", "F", "--rank", "1", "all in x@1 x@1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "verdict=NonTheorem\n");
  r = run({"decide", "--theory", "B", "psi"});
  EXPECT_EQ(r.code, 1);
  r = run({"--mode", "record", "decide", "--theory", "F", "--rank", "2", "all all imp in x@1 D#0 in x@1 x@2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "theory=F rank=2 verdict=T reason=-\n");
}

TEST(CliDecide, LanguageMismatchAndLimits) {
  EXPECT_EQ(run({"decide", "--theory", "D", "all in x@1 x@1"}).code, 2);
  EXPECT_EQ(run({"decide", "--theory", "M", "psi"}).code, 2);
  CliRun r = run({"--work", "1", "decide", "--theory", "F", "--rank", "3", "all all imp in x@1 x@2 in x@1 x@2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "verdict=Unknown reason=work-limit\n");
  r = run({"decide", "--theory", "F", "--rank", "7", "psi"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"decide", "--theory", "C", "--tt-vars", "1", "imp v@1 v@2"}).code, 3);
}

TEST(CliDecide, MaterializedRoute) {
  const CliRun r = run({"decide", "--theory", "F", "--route", "materialized", "--rank", "2", "all in D#0 x@1"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"decide", "--bogus", "psi"}).code, 4);
  EXPECT_EQ(run({"decide", "--theory", "D", "--rank", "2", "psi"}).code, 4);
  EXPECT_EQ(run({"decide"}).code, 4);
  EXPECT_EQ(run({"translate", "--stop-after", "z", "psi"}).code, 4);
  EXPECT_EQ(run({"check", "foundation", "--theory", "D"}).code, 4);
  EXPECT_EQ(run({"--rank-cap", "9", "parse", "psi"}).code, 4);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("decide"), std::string::npos);
}

TEST(CliTranslate, Examples) {
  CliRun r = run({"translate", "--rank", "1", "all in x@1 x@1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "in D#0 D#0\n");
  r = run({"translate", "--stop-after", "d", "all imp psi in x@1 x@1"});
  EXPECT_EQ(r.out, "imp psi all in x@1 x@1\n");
  const CliRun again = run({"translate", "--stop-after", "d", "imp psi all in x@1 x@1"});
  EXPECT_EQ(again.out, r.out);
  r = run({"translate", "--rank", "9", "psi"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("stage=bracket:9"), std::string::npos);
}

TEST(CliTranslate, TraceAndBinaryStage) {
  const CliRun r = run({"translate", "--trace", "--stop-after", "b", "--rank", "1", "all in x@1 x@1"});
  EXPECT_EQ(r.out,
            "psi\n"
            "stage=u size=4 qdepth=1\n"
            "stage=d size=4 qdepth=1\n"
            "stage=step:1 size=3 qdepth=0\n"
            "stage=bracket:1 size=3 qdepth=0\n"
            "stage=b size=1 qdepth=0\n");
}

TEST(CliTranslate, SizeCapNamesTheStage) {
  const CliRun r = run({"--max-size", "100", "translate", "--rank", "3", "all all imp in x@1 x@2 in x@2 x@1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("stage=step:3"), std::string::npos);
}

TEST(CliDictif, Operations) {
  CliRun r = run({"dictif", "show", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dictif: D#6 = {D#1,D#2} (2 elements)\ntransitive: no\nsubtransitive: yes\n");
  r = run({"--mode", "record", "dictif", "p", "3"});
  EXPECT_EQ(r.out, "P_3=D#15 elements={D#0,D#1,D#2,D#3} cardinality=4\n");
  EXPECT_EQ(run({"dictif", "p", "6"}).code, 3);
  r = run({"--mode", "record", "dictif", "inter", "D#6", "3"});
  EXPECT_EQ(r.out, "inter=D#2 elements={D#1} cardinality=1\n");
  EXPECT_EQ(run({"dictif", "member", "D#0", "D#6"}).code, 1);
  EXPECT_EQ(run({"dictif", "member", "D#1", "D#6"}).code, 0);
  EXPECT_EQ(run({"dictif", "frobnicate", "1"}).code, 4);
  EXPECT_EQ(run({"dictif", "union", "1"}).code, 4);
  EXPECT_EQ(run({"dictif", "show", "{D#1,"}).code, 2);
}

TEST(CliCheck, Foundation) {
  const CliRun r = run({"--mode", "record", "check", "foundation", "--rank", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "rank=2 verdict=T reason=-\nsummary checked=1 theorem=1 non_theorem=0 unknown=0 violations=0\n");
}

TEST(CliCheck, EqualityDefaultsToRank2) {
  const CliRun r = run({"--mode", "record", "check", "equality"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summary checked=20 theorem=20"), std::string::npos);
}

TEST(CliCheck, Coherence) {
  const CliRun r = run({"check", "coherence", "--theory", "F", "--rank", "1", "--samples", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations=0"), std::string::npos);
  EXPECT_EQ(run({"check", "coherence", "--theory", "C"}).code, 4);
}

TEST(CliCheck, SchemasAndAsymptotic) {
  EXPECT_EQ(run({"check", "schemas", "--samples", "50"}).code, 0);
  EXPECT_EQ(run({"check", "schemas", "--theory", "F", "--rank", "2", "--samples", "30"}).code, 0);
  const CliRun a = run({"check", "asymptotic"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("summary probe=empty-subset stabilized=true first_stable_rank=1 verdict=T"),
            std::string::npos);
  EXPECT_NE(a.out.find("summary probe=self-member stabilized=true first_stable_rank=1 verdict=N"),
            std::string::npos);
  const CliRun capped = run({"check", "asymptotic", "--start", "4", "--window", "3", "all in x@1 x@1"});
  EXPECT_EQ(capped.code, 1);
  EXPECT_NE(capped.out.find("rank=6 verdict=U reason=rank-cap"), std::string::npos);
}

TEST(CliCheck, InvalidRank) {
  EXPECT_EQ(run({"check", "foundation", "--rank", "6"}).code, 2);
  EXPECT_EQ(run({"--rank-cap", "2", "check", "foundation", "--rank", "3"}).code, 2);
}

TEST(CliBatch, LineNumbersAndWorstExit) {
  const std::string path = temp_file("batch.txt", "# header\nin D#2 D#6\n\nin D#0 D#6\nimp\n");
  const CliRun r = run({"decide", "--theory", "D", "--file", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "2: verdict=Theorem\n4: verdict=NonTheorem\n");
  EXPECT_NE(r.err.find("5: parse error at 1:1"), std::string::npos);
  const CliRun rec = run({"--mode", "record", "decide", "--theory", "D", "--file", path});
  EXPECT_NE(rec.out.find("line=2 theory=D rank=- verdict=T reason=-"), std::string::npos);
  EXPECT_EQ(run({"decide", "--file", "/nonexistent/x"}).code, 2);
}

TEST(CliCaps, EnvironmentAndConfigFile) {
  EXPECT_EQ(run({"decide", "--theory", "F", "--rank", "3", "all all imp in x@1 x@2 in x@1 x@2"}, "work=1").code, 3);
  EXPECT_EQ(run({"--work", "1000", "decide", "--theory", "F", "--rank", "3", "all all imp in x@1 x@2 in x@1 x@2"},
                "work=1")
                .code,
            0);
  EXPECT_EQ(run({"parse", "psi"}, "bogus=1").code, 4);
  const std::string cfg = temp_file("caps.ini", "work=1\n");
  EXPECT_EQ(run({"--config", cfg, "decide", "--theory", "F", "--rank", "3", "all all imp in x@1 x@2 in x@1 x@2"}).code,
            3);
  EXPECT_EQ(run({"--config", cfg, "--work", "100", "decide", "--theory", "F", "--rank", "3",
                 "all all imp in x@1 x@2 in x@1 x@2"})
                .code,
            0);
}

TEST(CliDeterminism, SeededScansRepeat) {
  const std::vector<std::string> args = {"--mode", "record", "--seed", "99", "check", "coherence", "--theory", "F",
                                         "--samples", "50"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> other = {"--mode", "record", "--seed", "99", "check", "schemas", "--samples", "40"};
  EXPECT_EQ(run(other).out, run(other).out);
}
