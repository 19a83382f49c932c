#include "doctest.h"
#include "pw/profile_builder.hpp"
#include "testgen.hpp"

using namespace pw;

TEST_CASE("a mcgarvey block moves exactly one margin by two") {
  testgen::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);
    const auto cands = CandidateSet::numbered(m);
    const int x = static_cast<int>(rng() % m);
    int y = static_cast<int>(rng() % m);
    if (y == x) y = (y + 1) % m;
    const auto d = margin_matrix(mcgarvey_block(cands, x, y));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a == x && b == y)
          CHECK(d.at(a, b) == 2);
        else if (a == y && b == x)
          CHECK(d.at(a, b) == -2);
        else
          CHECK(d.at(a, b) == 0);
      }
  }
}

TEST_CASE("all-zero margin target realizes the zero matrix") {
  const auto cands = CandidateSet::numbered(3);
  MarginTarget t(3);
  t.set(0, 1, 0);
  t.set(0, 2, 0);
  t.set(1, 2, 0);
  const auto d = margin_matrix(build_margin_profile(cands, t));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(d.at(a, b) == 0);
}

TEST_CASE("single even margin with zero defaults") {
  const auto cands = CandidateSet::numbered(3);
  MarginTarget t(3);
  t.set(0, 1, 2);
  const auto profile = build_margin_profile(cands, t);
  const auto d = margin_matrix(profile);
  CHECK(d.at(0, 1) == 2);
  CHECK(d.at(0, 2) == 0);
  CHECK(d.at(1, 2) == 0);
}

TEST_CASE("odd margins use the plus-one-toward-smaller default") {
  const auto cands = CandidateSet::numbered(4);
  MarginTarget t(4);
  t.set(1, 0, 3);
  const auto d = margin_matrix(build_margin_profile(cands, t));
  CHECK(d.at(1, 0) == 3);
  CHECK(d.at(0, 2) == 1);
  CHECK(d.at(0, 3) == 1);
  CHECK(d.at(2, 3) == 1);
}

TEST_CASE("mixed parity targets are rejected") {
  const auto cands = CandidateSet::numbered(3);
  MarginTarget t(3);
  t.set(0, 1, 2);
  t.set(1, 2, 1);
  CHECK_THROWS_AS(build_margin_profile(cands, t), ParityError);
}

TEST_CASE("random margin targets realize exactly") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const auto cands = CandidateSet::numbered(m);
    const int parity = static_cast<int>(rng() % 2);
    MarginTarget t(m);
    std::vector<std::vector<long long>> want(m, std::vector<long long>(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (rng() % 3 == 0) continue;  // leave some defaulted
        long long v = static_cast<long long>(rng() % 4) * 2 - 4 + parity;
        t.set(a, b, v);
        want[a][b] = v;
        want[b][a] = -v;
      }
    const auto d = margin_matrix(build_margin_profile(cands, t));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (t.get(a, b)) CHECK(d.at(a, b) == want[a][b]);
  }
}

TEST_CASE("all-zero score offsets give a balanced profile") {
  const auto cands = CandidateSet::numbered(4);
  ScoreTarget t;
  t.named = {{0, 0}, {1, 0}, {2, 0}};
  t.dummies = {3};
  const auto built = build_score_profile(ScoreVector::borda(4), cands, t);
  const auto s = positional_scores(ScoreVector::borda(4), built.profile);
  CHECK(s[0] == built.lambda);
  CHECK(s[1] == built.lambda);
  CHECK(s[2] == built.lambda);
  CHECK(s[3] < built.lambda);
}

TEST_CASE("score targets in the style of the one-pair construction") {
  // offsets d, 1-d, 1-d-D with d=1, D=2 against a named pivot
  const int m = 6;
  const auto cands = CandidateSet::numbered(m);
  std::vector<long long> raw(m, 0);
  raw[0] = 4;
  raw[1] = 3;
  raw[2] = 1;
  raw[3] = 1;
  const auto sv = ScoreVector::normalize(raw);
  ScoreTarget t;
  t.named = {{0, 0}, {1, 1}, {2, 0}, {3, -2}, {4, 3}};
  t.dummies = {5};
  const auto built = build_score_profile(sv, cands, t);
  const auto s = positional_scores(sv, built.profile);
  for (auto [c, x] : t.named) CHECK(s[c] == built.lambda + x);
  CHECK(s[5] < built.lambda);
}

TEST_CASE("random score targets audit exactly") {
  testgen::Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);  // up to 6
    const auto cands = CandidateSet::numbered(m);
    std::vector<long long> raw(m, 0);
    for (int i = m - 2; i >= 0; --i) raw[i] = raw[i + 1] + rng() % 3;
    if (raw[0] == 0) continue;
    const auto sv = ScoreVector::normalize(raw);
    const int dummies = 1 + static_cast<int>(rng() % 2);
    ScoreTarget t;
    for (int c = 0; c + dummies < m; ++c)
      t.named.emplace_back(c, static_cast<long long>(rng() % 7) - 3);
    for (int c = m - dummies; c < m; ++c) t.dummies.push_back(c);
    t.dummy_margin = static_cast<long long>(rng() % 3);
    const auto built = build_score_profile(sv, cands, t);
    const auto s = positional_scores(sv, built.profile);
    for (auto [c, x] : t.named) CHECK(s[c] == built.lambda + x);
    for (auto c : t.dummies) CHECK(s[c] < built.lambda - t.dummy_margin);
  }
}

TEST_CASE("score builder requires a dummy and a full partition") {
  const auto cands = CandidateSet::numbered(3);
  ScoreTarget no_dummy;
  no_dummy.named = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(build_score_profile(ScoreVector::borda(3), cands, no_dummy),
                  PreconditionViolated);
  ScoreTarget missing;
  missing.named = {{0, 0}};
  missing.dummies = {2};
  CHECK_THROWS_AS(build_score_profile(ScoreVector::borda(3), cands, missing),
                  PreconditionViolated);
}
