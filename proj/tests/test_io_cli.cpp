#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pw/io.hpp"
#include "pw/score_analysis.hpp"
#include "testgen.hpp"

using namespace pw;

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/pw_cli_test_out.txt";
  const std::string cmd =
      std::string(PW_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

bool instances_equal(const PossibleWinnerInstance& a,
                     const PossibleWinnerInstance& b) {
  if (a.profile.candidates.labels != b.profile.candidates.labels) return false;
  if (a.target != b.target) return false;
  if (a.rule.kind != b.rule.kind) return false;
  if (a.rule.is_scoring() &&
      !(a.rule.score_vector->scores == b.rule.score_vector->scores))
    return false;
  if (a.profile.n() != b.profile.n()) return false;
  for (int i = 0; i < a.profile.n(); ++i)
    if (!(a.profile.votes[i].as_order() == b.profile.votes[i].as_order()))
      return false;
  return true;
}

}  // namespace

TEST_CASE("instance files round-trip") {
  const std::string text =
      "candidates: a, b, c\n"
      "rule: borda\n"
      "target: a\n"
      "vote: a>b, b>c\n"
      "vote:\n"
      "vote: c>a\n";
  const auto inst = parse_instance(text);
  CHECK(inst.profile.n() == 3);
  CHECK(inst.profile.votes[0].is_complete());
  CHECK(inst.profile.votes[1].undetermined_pair_count() == 3);
  const auto again = parse_instance(emit_instance(inst));
  CHECK(instances_equal(inst, again));
}

TEST_CASE("random instances round-trip through the text format") {
  testgen::Rng rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    PossibleWinnerInstance inst;
    inst.profile = testgen::random_profile(m, 1 + rng() % 5, 3, rng);
    inst.target = static_cast<int>(rng() % m);
    switch (rng() % 4) {
      case 0:
        inst.rule = RuleSpec::scoring(testgen::random_borda_like(m, rng));
        break;
      case 1:
        inst.rule = RuleSpec::copeland(1 + rng() % 2, 3);
        break;
      case 2:
        inst.rule = RuleSpec::maximin();
        break;
      default:
        inst.rule = RuleSpec::bucklin();
        break;
    }
    const auto again = parse_instance(emit_instance(inst));
    CHECK(instances_equal(inst, again));
  }
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_instance(
        "candidates: a, b\nrule: borda\ntarget: a\nvote: a>b, b>a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
  try {
    parse_instance("candidates: a, b\nrule: borda\ntarget: a\nvote: a@b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("gadget files parse back with the sidecar ignored") {
  testgen::Rng rng(93);
  const auto tdm = testgen::random_3dm_planted(2, 1, false, rng);
  const auto g = gadget_scoring_11(tdm, ScoreVector::borda(3 * tdm.m + 2));
  const auto text = emit_gadget(g);
  CHECK(text.find("# reduction: scoring-11-3dm") != std::string::npos);
  const auto parsed = parse_instance(text);
  CHECK(instances_equal(g.instance, parsed));
}

TEST_CASE("source problem files round-trip") {
  testgen::Rng rng(95);
  const auto sat = testgen::random_sat3b2(3, rng);
  const auto sat2 = parse_sat(emit_sat(sat));
  CHECK(sat2.n_vars == sat.n_vars);
  CHECK(sat2.clauses == sat.clauses);
  const auto tdm = testgen::random_3dm_planted(3, 2, false, rng);
  const auto tdm2 = parse_3dm(emit_3dm(tdm));
  CHECK(tdm2.m == tdm.m);
  CHECK(tdm2.triples == tdm.triples);
  const auto mis = testgen::mis_k22_no(rng);
  const auto mis2 = parse_mis(emit_mis(mis));
  CHECK(mis2.d == mis.d);
  CHECK(mis2.classes == mis.classes);
  CHECK(mis2.edges == mis.edges);
}

TEST_CASE("cli solve exit codes and both methods agree") {
  const auto yes_path = write_temp("pw_yes.txt",
                                   "candidates: a, b, c\n"
                                   "rule: borda\n"
                                   "target: a\n"
                                   "vote: a>b, b>c\n"
                                   "vote: b>c\n");
  auto res = run_cli("solve " + std::string(yes_path));
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("answer: YES") != std::string::npos);
  CHECK(res.out.find("witness:") != std::string::npos);

  auto brute = run_cli("solve --method brute " + std::string(yes_path));
  CHECK(brute.exit_code == 0);
  auto flow = run_cli("solve --method flow " + std::string(yes_path));
  CHECK(flow.exit_code == 0);
  CHECK(flow.out.find("method: flow-scoring-t1") != std::string::npos);

  const auto no_path = write_temp("pw_no.txt",
                                  "candidates: a, b, c\n"
                                  "rule: borda\n"
                                  "target: c\n"
                                  "vote: a>b, b>c\n"
                                  "vote: a>b, b>c\n");
  CHECK(run_cli("solve " + std::string(no_path)).exit_code == 1);
}

TEST_CASE("cli rejects invalid files with exit code 2") {
  const auto bad = write_temp("pw_bad.txt",
                              "candidates: a, b\n"
                              "rule: borda\n"
                              "target: a\n"
                              "vote: a>b, b>a\n");
  const auto res = run_cli("solve " + std::string(bad));
  CHECK(res.exit_code == 2);
  CHECK(res.out.find("line 4") != std::string::npos);
}

TEST_CASE("cli classify prints the dichotomy rows") {
  auto res = run_cli("classify borda -m 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("class: 11-contaminated") != std::string::npos);
  CHECK(res.out.find("hard-threshold: 2") != std::string::npos);

  res = run_cli("classify maximin -m 5");
  CHECK(res.out.find("hard-threshold: 2") != std::string::npos);

  res = run_cli("classify \"copeland 1/4\" -m 5");
  CHECK(res.out.find("hard-threshold: 1") != std::string::npos);

  res = run_cli("classify plurality -m 5");
  CHECK(res.out.find("hard-threshold: none") != std::string::npos);
}

TEST_CASE("cli gadget emits and verifies a 3dm reduction") {
  testgen::Rng rng(97);
  const auto tdm = testgen::random_3dm_planted(2, 1, false, rng);
  const auto src = write_temp("pw_tdm.txt", emit_3dm(tdm));
  const auto out = "/tmp/pw_gadget_out.txt";
  const auto res = run_cli("gadget " + std::string(src) +
                           " --reduction scoring-11-3dm --verify -o " + out);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("equivalent: yes") != std::string::npos);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto inst = parse_instance(ss.str());
  CHECK(inst.profile.m() == 3 * tdm.m + 2);
}

TEST_CASE("cli gadget validates source instances") {
  const auto bad = write_temp("pw_badsat.txt",
                              "sat 2\n"
                              "clause: 1 2 -1\n");
  const auto res =
      run_cli("gadget " + std::string(bad) + " --reduction scoring-2110-sat");
  CHECK(res.exit_code == 2);
}

TEST_CASE("cli build margins audits the matrix") {
  auto res = run_cli(
      "build margins --candidates a,b,c --set a,b,2 -o /tmp/pw_margins.txt");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("margin a over b: 2") != std::string::npos);
  CHECK(res.out.find("margin a over c: 0") != std::string::npos);
  res = run_cli(
      "build margins --candidates a,b,c --set a,b,2 --set b,c,1 -o /dev/null");
  CHECK(res.exit_code == 2);
}

TEST_CASE("cli build scores audits the totals") {
  const auto res = run_cli(
      "build scores --candidates a,b,c,d --vector 2,1,1,0 --named a=2,b=0,c=-1 "
      "--dummies d -o /tmp/pw_scores.txt");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("lambda:") != std::string::npos);
  std::istringstream in(res.out);
  std::string line;
  long long lambda = -1, sa = -1, sb = -1, sc = -1, sd = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, who;
    ls >> key;
    if (key == "lambda:") ls >> lambda;
    if (key == "score") {
      long long v;
      ls >> who >> v;
      if (who == "a:") sa = v;
      if (who == "b:") sb = v;
      if (who == "c:") sc = v;
      if (who == "d:") sd = v;
    }
  }
  CHECK(sa == lambda + 2);
  CHECK(sb == lambda);
  CHECK(sc == lambda - 1);
  CHECK(sd < lambda);
}
