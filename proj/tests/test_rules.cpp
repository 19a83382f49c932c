#include "doctest.h"
#include "pw/rules.hpp"
#include "testgen.hpp"

using namespace pw;

namespace {

Profile complete_profile(int m, std::vector<std::vector<int>> rankings) {
  Profile p;
  p.candidates = CandidateSet::numbered(m);
  for (auto& r : rankings) p.votes.push_back(Vote::complete(LinearOrder(r)));
  return p;
}

}  // namespace

TEST_CASE("normalize subtracts the minimum") {
  CHECK(ScoreVector::normalize({3, 2, 1}).scores == std::vector<long long>{2, 1, 0});
}

TEST_CASE("normalize divides by the gcd") {
  CHECK(ScoreVector::normalize({4, 2, 0}).scores == std::vector<long long>{2, 1, 0});
}

TEST_CASE("1-veto normalizes to ones with a trailing zero") {
  CHECK(ScoreVector::veto(3).scores == std::vector<long long>{1, 1, 0});
  CHECK(ScoreVector::normalize({0, 0, -1}).scores ==
        std::vector<long long>{1, 1, 0});
}

TEST_CASE("normalize is idempotent and rejects degenerate vectors") {
  const auto sv = ScoreVector::normalize({7, 3, 3, 1});
  CHECK(ScoreVector::normalize(sv.scores) == sv);
  CHECK_THROWS_AS(ScoreVector::normalize({2, 2, 2}), DegenerateRule);
}

TEST_CASE("positional scores, borda twice the same vote") {
  const auto p = complete_profile(3, {{0, 1, 2}, {0, 1, 2}});
  const auto s = positional_scores(ScoreVector::borda(3), p);
  CHECK(s == std::vector<long long>{4, 2, 0});
}

TEST_CASE("positional scores, plurality single vote") {
  const auto p = complete_profile(3, {{0, 1, 2}});
  const auto s = positional_scores(ScoreVector::plurality(3), p);
  CHECK(s == std::vector<long long>{1, 0, 0});
}

TEST_CASE("positional score totals equal n times the vector sum") {
  testgen::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 6);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < n; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto sv = testgen::random_borda_like(m, rng);
    const auto s = positional_scores(sv, p);
    long long total = 0;
    for (auto v : s) total += v;
    CHECK(total == static_cast<long long>(n) * sv.total());
  }
}

TEST_CASE("margins of two opposite votes cancel") {
  const auto p = complete_profile(2, {{0, 1}, {1, 0}});
  CHECK(margin_matrix(p).at(0, 1) == 0);
}

TEST_CASE("margins of a single vote") {
  const auto d = margin_matrix(complete_profile(3, {{0, 1, 2}}));
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(0, 2) == 1);
  CHECK(d.at(1, 2) == 1);
  CHECK(d.at(2, 0) == -1);
}

TEST_CASE("margin matrix invariants on random profiles") {
  testgen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 7);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < n; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto d = margin_matrix(p);
    for (int x = 0; x < m; ++x) {
      CHECK(d.at(x, x) == 0);
      for (int y = 0; y < m; ++y) {
        if (y == x) continue;
        CHECK(d.at(x, y) == -d.at(y, x));
        CHECK(std::abs(d.at(x, y)) <= n);
        CHECK(((d.at(x, y) - n) % 2 + 2) % 2 == 0);  // parity n mod 2
      }
    }
  }
}

TEST_CASE("copeland half credits a two-candidate tie") {
  const auto p = complete_profile(2, {{0, 1}, {1, 0}});
  const auto s = copeland_scores(margin_matrix(p), 1, 2);  // alpha = 1/2
  CHECK(s[0] == 1);  // q*0 wins + p*1 tie, in halves
  CHECK(s[1] == 1);
}

TEST_CASE("copeland half score sum identity m(m-1)/2") {
  testgen::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 6);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < n; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto s = copeland_scores(margin_matrix(p), 1, 2);
    long long total = 0;
    for (auto v : s) total += v;
    CHECK(total == static_cast<long long>(m) * (m - 1));  // in half units
  }
}

TEST_CASE("copeland alpha 0 and 1 bracket interior alphas") {
  testgen::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < 4; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto d = margin_matrix(p);
    const auto lo = copeland_scores(d, 0, 4);
    const auto mid = copeland_scores(d, 1, 4);
    const auto hi = copeland_scores(d, 4, 4);
    for (int c = 0; c < m; ++c) {
      CHECK(lo[c] <= mid[c]);
      CHECK(mid[c] <= hi[c]);
    }
  }
}

TEST_CASE("maximin of a condorcet winner is positive") {
  const auto p = complete_profile(3, {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}});
  const auto s = maximin_scores(margin_matrix(p));
  CHECK(s[0] > 0);
}

TEST_CASE("maximin of two opposite votes is zero") {
  const auto p = complete_profile(2, {{0, 1}, {1, 0}});
  const auto s = maximin_scores(margin_matrix(p));
  CHECK(s[0] == 0);
  CHECK(s[1] == 0);
}

TEST_CASE("weak condorcet winners have nonnegative maximin") {
  testgen::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < 5; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto d = margin_matrix(p);
    const auto s = maximin_scores(d);
    for (int x = 0; x < m; ++x) {
      bool weak_condorcet = true;
      for (int y = 0; y < m; ++y)
        if (y != x && d.at(x, y) < 0) weak_condorcet = false;
      CHECK((weak_condorcet ? s[x] >= 0 : s[x] < 0));
    }
  }
}

TEST_CASE("bucklin of a unanimous profile resolves at depth one") {
  const auto p = complete_profile(3, {{1, 0, 2}, {1, 2, 0}, {1, 0, 2}});
  const auto r = bucklin_winners(p);
  CHECK(r.depth == 1);
  CHECK(r.winners == std::vector<int>{1});
}

TEST_CASE("bucklin majority at depth one") {
  const auto p = complete_profile(3, {{0, 1, 2}, {0, 1, 2}, {1, 2, 0}});
  const auto r = bucklin_winners(p);
  CHECK(r.depth == 1);
  CHECK(r.winners == std::vector<int>{0});
}

TEST_CASE("bucklin critical depth always exists and is at most m") {
  testgen::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 6);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < n; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto r = bucklin_winners(p);
    CHECK(r.depth >= 1);
    CHECK(r.depth <= m);
    CHECK_FALSE(r.winners.empty());
  }
}

TEST_CASE("winners under borda with a unanimous top") {
  const auto p = complete_profile(3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(winners(RuleSpec::scoring(ScoreVector::borda(3)), p) ==
        std::vector<int>{0});
}

TEST_CASE("winners are invariant under rescaling the score vector") {
  testgen::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < 5; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    const auto sv = testgen::random_borda_like(m, rng);
    std::vector<long long> scaled;
    for (auto v : sv.scores) scaled.push_back(3 * v + 7);
    const auto w1 = winners(RuleSpec::scoring(sv), p);
    const auto w2 = winners(RuleSpec::scoring(ScoreVector::normalize(scaled)), p);
    CHECK(w1 == w2);
  }
}

TEST_CASE("winners match a naive recomputation on random inputs") {
  testgen::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 6);
    Profile p;
    p.candidates = CandidateSet::numbered(m);
    for (int i = 0; i < n; ++i)
      p.votes.push_back(Vote::complete(testgen::random_linear(m, rng)));
    // naive maximin: pairwise counts recomputed per pair
    auto beats = [&](int x, int y) {
      long long cnt = 0;
      for (const auto& v : p.votes)
        cnt += v.linear().prefers(x, y) ? 1 : -1;
      return cnt;
    };
    std::vector<long long> naive(m);
    for (int x = 0; x < m; ++x) {
      long long mn = 0;
      bool first = true;
      for (int y = 0; y < m; ++y) {
        if (y == x) continue;
        const long long b = beats(x, y);
        if (first || b < mn) mn = b;
        first = false;
      }
      naive[x] = mn;
    }
    long long best = naive[0];
    for (auto v : naive) best = std::max(best, v);
    std::vector<int> expect;
    for (int c = 0; c < m; ++c)
      if (naive[c] == best) expect.push_back(c);
    CHECK(winners(RuleSpec::maximin(), p) == expect);
  }
}
