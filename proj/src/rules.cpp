#include "pw/rules.hpp"

#include <algorithm>
#include <numeric>

namespace pw {

long long ScoreVector::total() const {
  long long s = 0;
  for (auto v : scores) s += v;
  return s;
}

ScoreVector ScoreVector::normalize(std::vector<long long> raw) {
  if (raw.size() < 2) throw DegenerateRule("score vector needs >= 2 entries");
  for (size_t i = 1; i < raw.size(); ++i)
    if (raw[i] > raw[i - 1]) throw Error("score vector not nonincreasing");
  if (raw.front() == raw.back())
    throw DegenerateRule("all score entries equal");
  const long long lo = raw.back();
  long long g = 0;
  for (auto& v : raw) {
    v -= lo;
    g = std::gcd(g, v);
  }
  for (auto& v : raw) v /= g;
  ScoreVector sv;
  sv.scores = std::move(raw);
  return sv;
}

ScoreVector ScoreVector::plurality(int m) { return k_approval(1, m); }
ScoreVector ScoreVector::veto(int m) { return k_veto(1, m); }

ScoreVector ScoreVector::k_approval(int k, int m) {
  if (k < 1 || k >= m) throw Error("k-approval needs 1 <= k < m");
  std::vector<long long> raw(m, 0);
  for (int i = 0; i < k; ++i) raw[i] = 1;
  return normalize(std::move(raw));
}

ScoreVector ScoreVector::k_veto(int k, int m) {
  if (k < 1 || k >= m) throw Error("k-veto needs 1 <= k < m");
  std::vector<long long> raw(m, 0);
  for (int i = m - k; i < m; ++i) raw[i] = -1;
  return normalize(std::move(raw));
}

ScoreVector ScoreVector::borda(int m) {
  std::vector<long long> raw(m);
  for (int i = 0; i < m; ++i) raw[i] = m - 1 - i;
  return normalize(std::move(raw));
}

ScoreVector ScoreVector::two_one_one_zero(int m) {
  if (m < 3) throw Error("(2,1,...,1,0) needs m >= 3");
  std::vector<long long> raw(m, 1);
  raw[0] = 2;
  raw[m - 1] = 0;
  return normalize(std::move(raw));
}

RuleSpec RuleSpec::scoring(ScoreVector sv) {
  RuleSpec r;
  r.kind = Kind::Scoring;
  r.score_vector = ScoreVector::normalize(sv.scores);
  return r;
}

RuleSpec RuleSpec::copeland(long long p, long long q) {
  if (q <= 0 || p < 0 || p > q) throw AlphaOutOfRange("alpha must be in [0,1]");
  const long long g = std::gcd(p, q);
  RuleSpec r;
  r.kind = Kind::Copeland;
  r.alpha_num = p / g;
  r.alpha_den = q / g;
  return r;
}

RuleSpec RuleSpec::maximin() {
  RuleSpec r;
  r.kind = Kind::Maximin;
  return r;
}

RuleSpec RuleSpec::bucklin() {
  RuleSpec r;
  r.kind = Kind::Bucklin;
  return r;
}

std::string RuleSpec::describe() const {
  switch (kind) {
    case Kind::Scoring: {
      std::string s = "scoring";
      for (auto v : score_vector->scores) s += " " + std::to_string(v);
      return s;
    }
    case Kind::Copeland:
      return "copeland " + std::to_string(alpha_num) + "/" +
             std::to_string(alpha_den);
    case Kind::Maximin:
      return "maximin";
    case Kind::Bucklin:
      return "bucklin";
  }
  return "?";
}

MarginMatrix margin_matrix(const Profile& profile) {
  if (!profile.complete())
    throw PreconditionViolated("margin_matrix needs a complete profile");
  const int m = profile.m();
  MarginMatrix d(m, profile.n());
  for (const auto& vote : profile.votes) {
    const auto& r = vote.linear().ranking;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        ++d.at(r[i], r[j]);
        --d.at(r[j], r[i]);
      }
  }
  return d;
}

std::vector<long long> positional_scores(const ScoreVector& sv,
                                         const Profile& profile) {
  if (!profile.complete())
    throw PreconditionViolated("positional_scores needs a complete profile");
  if (sv.m() != profile.m())
    throw PreconditionViolated("score vector length != candidate count");
  std::vector<long long> s(profile.m(), 0);
  for (const auto& vote : profile.votes) {
    const auto& r = vote.linear().ranking;
    for (int i = 0; i < profile.m(); ++i) s[r[i]] += sv.at_position(i);
  }
  return s;
}

std::vector<long long> copeland_scores(const MarginMatrix& d, long long p,
                                       long long q) {
  std::vector<long long> s(d.m, 0);
  for (int x = 0; x < d.m; ++x)
    for (int y = 0; y < d.m; ++y) {
      if (y == x) continue;
      if (d.at(x, y) > 0)
        s[x] += q;
      else if (d.at(x, y) == 0)
        s[x] += p;
    }
  return s;
}

std::vector<long long> maximin_scores(const MarginMatrix& d) {
  if (d.m < 2) throw PreconditionViolated("maximin needs m >= 2");
  std::vector<long long> s(d.m);
  for (int x = 0; x < d.m; ++x) {
    long long mn = d.at(x, x == 0 ? 1 : 0);
    for (int y = 0; y < d.m; ++y)
      if (y != x) mn = std::min(mn, d.at(x, y));
    s[x] = mn;
  }
  return s;
}

std::vector<long long> top_counts(const Profile& profile, int depth) {
  std::vector<long long> c(profile.m(), 0);
  for (const auto& vote : profile.votes) {
    const auto& r = vote.linear().ranking;
    for (int i = 0; i < depth && i < static_cast<int>(r.size()); ++i)
      ++c[r[i]];
  }
  return c;
}

BucklinResult bucklin_winners(const Profile& profile) {
  if (!profile.complete() || profile.n() < 1)
    throw PreconditionViolated("bucklin needs a complete nonempty profile");
  const int m = profile.m();
  const long long n = profile.n();
  std::vector<long long> counts(m, 0);
  for (int depth = 1; depth <= m; ++depth) {
    for (const auto& vote : profile.votes) ++counts[vote.linear().ranking[depth - 1]];
    long long best = *std::max_element(counts.begin(), counts.end());
    if (2 * best > n) {
      BucklinResult res;
      res.depth = depth;
      res.counts_at_depth = counts;
      for (int c = 0; c < m; ++c)
        if (counts[c] == best) res.winners.push_back(c);
      return res;
    }
  }
  throw Error("no bucklin depth found");  // unreachable for n >= 1
}

static std::vector<CandidateId> argmax_set(const std::vector<long long>& s) {
  long long best = *std::max_element(s.begin(), s.end());
  std::vector<CandidateId> w;
  for (int c = 0; c < static_cast<int>(s.size()); ++c)
    if (s[c] == best) w.push_back(c);
  return w;
}

std::vector<CandidateId> winners(const RuleSpec& rule, const Profile& profile) {
  if (profile.m() == 1) return {0};
  switch (rule.kind) {
    case RuleSpec::Kind::Scoring:
      return argmax_set(positional_scores(*rule.score_vector, profile));
    case RuleSpec::Kind::Copeland:
      return argmax_set(
          copeland_scores(margin_matrix(profile), rule.alpha_num, rule.alpha_den));
    case RuleSpec::Kind::Maximin:
      return argmax_set(maximin_scores(margin_matrix(profile)));
    case RuleSpec::Kind::Bucklin:
      return bucklin_winners(profile).winners;
  }
  throw Error("unknown rule kind");
}

}  // namespace pw
