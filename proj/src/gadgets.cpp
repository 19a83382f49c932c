#include "pw/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pw/score_analysis.hpp"

namespace pw {

namespace {

std::vector<CandidateId> lex_excluding(int m, const std::set<CandidateId>& ex) {
  std::vector<CandidateId> out;
  for (int c = 0; c < m; ++c)
    if (!ex.count(c)) out.push_back(c);
  return out;
}

LinearOrder concat_order(int m, const std::vector<std::vector<CandidateId>>& segs) {
  std::vector<CandidateId> rank;
  for (const auto& s : segs) rank.insert(rank.end(), s.begin(), s.end());
  if (static_cast<int>(rank.size()) != m)
    throw Error("vote segments do not cover the candidate set");
  std::vector<char> seen(m, 0);
  for (CandidateId c : rank) {
    if (c < 0 || c >= m || seen[c]) throw Error("vote repeats a candidate");
    seen[c] = 1;
  }
  return LinearOrder(std::move(rank));
}

// Closure of the full order minus `removed`; asserts exactly those pairs come
// out undetermined (a removal that transitivity re-forces is a generator bug).
Vote drop_pairs(const LinearOrder& full,
                const std::vector<std::pair<CandidateId, CandidateId>>& removed) {
  const int m = full.size();
  auto pairs = PartialOrder::from_linear(full).strict_pairs();
  std::vector<std::pair<CandidateId, CandidateId>> kept;
  for (auto pr : pairs)
    if (std::find(removed.begin(), removed.end(), pr) == removed.end())
      kept.push_back(pr);
  if (pairs.size() - kept.size() != removed.size())
    throw Error("drop_pairs: a removed pair was not present");
  auto po = PartialOrder::close_and_validate(m, kept);
  std::set<std::pair<CandidateId, CandidateId>> expect;
  for (auto [x, y] : removed) expect.insert(std::minmax(x, y));
  const auto und = po.undetermined_pairs();
  if (und.size() != expect.size())
    throw Error("drop_pairs: closure re-forced a removed pair");
  for (auto pr : und)
    if (!expect.count(pr)) throw Error("drop_pairs: unexpected undetermined pair");
  return Vote::partial(std::move(po));
}

void assert_eq(long long got, long long want, const std::string& what) {
  if (got != want)
    throw Error("gadget table mismatch: " + what + " got " +
                std::to_string(got) + " want " + std::to_string(want));
}

void assert_lt(long long got, long long bound, const std::string& what) {
  if (!(got < bound))
    throw Error("gadget table mismatch: " + what + " got " +
                std::to_string(got) + " not below " + std::to_string(bound));
}

void check_pair_bound(const Gadget& g) {
  for (const auto& v : g.instance.profile.votes)
    if (v.undetermined_pair_count() > g.max_pairs)
      throw Error("gadget vote exceeds the regime pair bound");
}

std::vector<CandidateId> lex_first_subset(const std::vector<CandidateId>& pool,
                                          int size) {
  if (size < 0 || size > static_cast<int>(pool.size()))
    throw Error("lex_first_subset: bad size");
  return {pool.begin(), pool.begin() + size};
}

}  // namespace

CandidateId Gadget::role(const std::string& r) const {
  auto it = roles.find(r);
  if (it == roles.end()) throw Error("unknown role: " + r);
  return it->second;
}

// ---------------------------------------------------------------------------
// Differentiating scoring rules, one undetermined pair per vote.

Gadget gadget_scoring_differentiating(const Sat3B2Instance& sat,
                                      const ScoreVector& raw_sv) {
  sat.validate();
  const int n = sat.n_vars, t = sat.n_clauses();
  const int m = 2 * n + t + 2;
  const ScoreVector sv = ScoreVector::normalize(raw_sv.scores);
  if (sv.m() != m)
    throw PreconditionViolated("score vector must have length 2n+t+2 = " +
                               std::to_string(m));

  // bottom-indexed alpha and boundary differences
  auto alpha = [&](int pos_from_bottom) { return sv.scores[m - pos_from_bottom]; };
  auto diff = [&](int pos) { return alpha(pos) - alpha(pos - 1); };
  int p = -1, q = -1;
  for (int pp = 2; pp <= m && p < 0; ++pp)
    for (int qq = 2; qq <= m && p < 0; ++qq)
      if (std::abs(pp - qq) > 1 && diff(pp) > diff(qq) && diff(qq) >= 1) {
        p = pp;
        q = qq;
      }
  if (p < 0)
    throw NoDifferentiatingPositions(
        "no positions p,q with |p-q|>1 and diff(p)>diff(q)>=1 at this m");
  const long long D = diff(p), d = diff(q);

  Gadget g;
  g.reduction = "scoring-differentiating-sat";
  g.regime = "np-hard(differentiating,t>=1)";
  g.max_pairs = 1;
  g.source = sat;

  CandidateSet cands;
  std::vector<CandidateId> b(n), bp(n), e(t);
  for (int i = 0; i < n; ++i) {
    b[i] = cands.labels.size();
    cands.labels.push_back("b" + std::to_string(i + 1));
    bp[i] = cands.labels.size();
    cands.labels.push_back("b" + std::to_string(i + 1) + "'");
  }
  for (int j = 0; j < t; ++j) {
    e[j] = cands.labels.size();
    cands.labels.push_back("e" + std::to_string(j + 1));
  }
  const CandidateId w = cands.labels.size();
  cands.labels.push_back("w");
  const CandidateId dummy = cands.labels.size();
  cands.labels.push_back("g");
  for (int c = 0; c < m; ++c) g.roles[cands.labels[c]] = c;

  auto lit_cand = [&](int lit) { return lit > 0 ? b[lit - 1] : bp[-lit - 1]; };

  Profile full;  // the complete originals, for score accounting
  full.candidates = cands;
  Profile part;
  part.candidates = cands;
  for (int i = 0; i < n; ++i) {
    const auto pool = lex_excluding(m, {b[i], bp[i]});
    const auto c1 = lex_first_subset(pool, m - p);
    std::set<CandidateId> used(c1.begin(), c1.end());
    used.insert(b[i]);
    used.insert(bp[i]);
    const auto order =
        concat_order(m, {c1, {b[i], bp[i]}, lex_excluding(m, used)});
    full.votes.push_back(Vote::complete(order));
    g.var_votes.push_back(part.n());
    g.vote_roles.push_back("var " + std::to_string(i + 1));
    part.votes.push_back(drop_pairs(order, {{b[i], bp[i]}}));
  }
  g.clause_votes.assign(t, {0, 0, 0});
  for (int j = 0; j < t; ++j)
    for (int k = 0; k < 3; ++k) {
      const CandidateId lc = lit_cand(sat.clauses[j][k]);
      const auto pool = lex_excluding(m, {e[j], lc});
      const auto c2 = lex_first_subset(pool, m - q);
      std::set<CandidateId> used(c2.begin(), c2.end());
      used.insert(e[j]);
      used.insert(lc);
      const auto order = concat_order(m, {c2, {e[j], lc}, lex_excluding(m, used)});
      full.votes.push_back(Vote::complete(order));
      g.clause_votes[j][k] = part.n();
      g.vote_roles.push_back("clause " + std::to_string(j + 1) + " lit " +
                             std::to_string(k + 1));
      part.votes.push_back(drop_pairs(order, {{e[j], lc}}));
    }

  const auto ps = positional_scores(sv, full);
  ScoreTarget target;
  target.named.emplace_back(w, 0);
  for (int j = 0; j < t; ++j)
    target.named.emplace_back(e[j], d - (ps[e[j]] - ps[w]));
  for (int i = 0; i < n; ++i) {
    target.named.emplace_back(b[i], 1 - d - (ps[b[i]] - ps[w]));
    target.named.emplace_back(bp[i], 1 - d - D - (ps[bp[i]] - ps[w]));
  }
  target.dummies = {dummy};
  target.dummy_margin = std::max<long long>(0, ps[dummy] - ps[w]);
  auto built = build_score_profile(sv, cands, target);

  Profile check = full;
  check.append(built.profile);
  const auto total = positional_scores(sv, check);
  for (int j = 0; j < t; ++j)
    assert_eq(total[e[j]] - total[w], d, "s+(e_j) - s+(w)");
  for (int i = 0; i < n; ++i) {
    assert_eq(total[b[i]] - total[w], 1 - d, "s+(b_i) - s+(w)");
    assert_eq(total[bp[i]] - total[w], 1 - d - D, "s+(b_i') - s+(w)");
  }
  assert_lt(total[dummy], total[w], "s+(g)");

  part.append(built.profile);
  for (int k = 0; k < built.profile.n(); ++k) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), w, RuleSpec::scoring(sv)};
  check_pair_bound(g);
  return g;
}

// ---------------------------------------------------------------------------
// <1,1>-contaminated rules, two undetermined pairs per vote (3DM).

namespace {

struct TdmCandidates {
  CandidateSet cands;
  std::vector<CandidateId> x, y, z;
  CandidateId c, d = -1;
};

TdmCandidates tdm_candidates(int msrc, bool with_d) {
  TdmCandidates out;
  out.x.resize(msrc);
  out.y.resize(msrc);
  out.z.resize(msrc);
  for (int i = 0; i < msrc; ++i) {
    out.x[i] = out.cands.labels.size();
    out.cands.labels.push_back("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < msrc; ++i) {
    out.y[i] = out.cands.labels.size();
    out.cands.labels.push_back("y" + std::to_string(i + 1));
  }
  for (int i = 0; i < msrc; ++i) {
    out.z[i] = out.cands.labels.size();
    out.cands.labels.push_back("z" + std::to_string(i + 1));
  }
  out.c = out.cands.labels.size();
  out.cands.labels.push_back("c");
  if (with_d) {
    out.d = out.cands.labels.size();
    out.cands.labels.push_back("d");
  }
  return out;
}

}  // namespace

Gadget gadget_scoring_11(const ThreeDMInstance& tdm, const ScoreVector& raw_sv) {
  tdm.validate();
  const int msrc = tdm.m;
  const int m = 3 * msrc + 2;
  const ScoreVector sv = ScoreVector::normalize(raw_sv.scores);
  if (sv.m() != m)
    throw PreconditionViolated("score vector must have length 3m+2 = " +
                               std::to_string(m));
  const auto dv = difference_vector(sv);
  int idx = -1;  // bottom position i with alpha_{i+2}-alpha_{i+1}=alpha_{i+1}-alpha_i=1
  for (int i = 0; i + 1 < dv.size(); ++i)
    if (dv.diffs[i] == 1 && dv.diffs[i + 1] == 1) {
      idx = i + 1;
      break;
    }
  if (idx < 0) throw PatternAbsent("rule is not <1,1>-contaminated at this m");

  Gadget g;
  g.reduction = "scoring-11-3dm";
  g.regime = "np-hard(11-contaminated,t>=2)";
  g.max_pairs = 2;
  g.source = tdm;
  auto tc = tdm_candidates(msrc, true);
  for (int c = 0; c < m; ++c) g.roles[tc.cands.labels[c]] = c;

  Profile full, part;
  full.candidates = tc.cands;
  part.candidates = tc.cands;
  for (int si = 0; si < tdm.t(); ++si) {
    const auto [xi, yi, zi] = tdm.triples[si];
    const CandidateId x = tc.x[xi], y = tc.y[yi], z = tc.z[zi];
    const auto pool = lex_excluding(m, {x, y, z});
    const auto cs = lex_first_subset(pool, idx - 1);  // bottom block
    std::set<CandidateId> used(cs.begin(), cs.end());
    used.insert(x);
    used.insert(y);
    used.insert(z);
    const auto order = concat_order(m, {lex_excluding(m, used), {x, y, z}, cs});
    full.votes.push_back(Vote::complete(order));
    g.triple_votes.push_back(part.n());
    g.vote_roles.push_back("triple " + std::to_string(si + 1));
    part.votes.push_back(drop_pairs(order, {{x, y}, {x, z}}));
  }

  const auto ps = positional_scores(sv, full);
  ScoreTarget target;
  target.named.emplace_back(tc.c, 0);
  for (int i = 0; i < msrc; ++i) {
    target.named.emplace_back(tc.x[i], 2 - (ps[tc.x[i]] - ps[tc.c]));
    target.named.emplace_back(tc.y[i], -1 - (ps[tc.y[i]] - ps[tc.c]));
    target.named.emplace_back(tc.z[i], -1 - (ps[tc.z[i]] - ps[tc.c]));
  }
  target.dummies = {tc.d};
  target.dummy_margin = std::max<long long>(0, ps[tc.d] - ps[tc.c]);
  auto built = build_score_profile(sv, tc.cands, target);

  Profile check = full;
  check.append(built.profile);
  const auto total = positional_scores(sv, check);
  for (int i = 0; i < msrc; ++i) {
    assert_eq(total[tc.x[i]] - total[tc.c], 2, "s(x) - s(c)");
    assert_eq(total[tc.y[i]] - total[tc.c], -1, "s(y) - s(c)");
    assert_eq(total[tc.z[i]] - total[tc.c], -1, "s(z) - s(c)");
  }
  assert_lt(total[tc.d], total[tc.c], "s(d)");

  part.append(built.profile);
  for (int k = 0; k < built.profile.n(); ++k) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), tc.c, RuleSpec::scoring(sv)};
  check_pair_bound(g);
  for (int vi : g.triple_votes)
    if (g.instance.profile.votes[vi].undetermined_pair_count() != 2)
      throw Error("triple vote must have exactly 2 undetermined pairs");
  return g;
}

// ---------------------------------------------------------------------------
// <1,0,1>-contaminated rules, three undetermined pairs per vote (3DM).

Gadget gadget_scoring_101(const ThreeDMInstance& tdm, const ScoreVector& raw_sv) {
  tdm.validate();
  const int msrc = tdm.m;
  const int m = 3 * msrc + 2;
  const ScoreVector sv = ScoreVector::normalize(raw_sv.scores);
  if (sv.m() != m)
    throw PreconditionViolated("score vector must have length 3m+2 = " +
                               std::to_string(m));
  const auto dv = difference_vector(sv);
  int idx = -1;  // bottom position i: diffs (1,0,1) starting at i
  for (int i = 0; i + 2 < dv.size(); ++i)
    if (dv.diffs[i] == 1 && dv.diffs[i + 1] == 0 && dv.diffs[i + 2] == 1) {
      idx = i + 1;
      break;
    }
  if (idx < 0) throw PatternAbsent("rule is not <1,0,1>-contaminated at this m");

  Gadget g;
  g.reduction = "scoring-101-3dm";
  g.regime = "np-hard(101-contaminated,t>=3)";
  g.max_pairs = 3;
  g.source = tdm;
  auto tc = tdm_candidates(msrc, true);
  for (int c = 0; c < m; ++c) g.roles[tc.cands.labels[c]] = c;

  Profile full, part;
  full.candidates = tc.cands;
  part.candidates = tc.cands;
  for (int si = 0; si < tdm.t(); ++si) {
    const auto [xi, yi, zi] = tdm.triples[si];
    const CandidateId x = tc.x[xi], y = tc.y[yi], z = tc.z[zi];
    const auto pool = lex_excluding(m, {x, y, z, tc.d});
    const auto cs = lex_first_subset(pool, idx - 1);
    std::set<CandidateId> used(cs.begin(), cs.end());
    for (CandidateId cc : {x, y, z, tc.d}) used.insert(cc);
    const auto order =
        concat_order(m, {lex_excluding(m, used), {x, y, tc.d, z}, cs});
    full.votes.push_back(Vote::complete(order));
    g.triple_votes.push_back(part.n());
    g.vote_roles.push_back("triple " + std::to_string(si + 1));
    part.votes.push_back(drop_pairs(order, {{x, y}, {x, tc.d}, {x, z}}));
  }

  const auto ps = positional_scores(sv, full);
  ScoreTarget target;
  target.named.emplace_back(tc.c, 0);
  for (int i = 0; i < msrc; ++i) {
    target.named.emplace_back(tc.x[i], 2 - (ps[tc.x[i]] - ps[tc.c]));
    target.named.emplace_back(tc.y[i], -1 - (ps[tc.y[i]] - ps[tc.c]));
    target.named.emplace_back(tc.z[i], -1 - (ps[tc.z[i]] - ps[tc.c]));
  }
  target.dummies = {tc.d};
  target.dummy_margin = std::max<long long>(0, ps[tc.d] - ps[tc.c]);
  auto built = build_score_profile(sv, tc.cands, target);

  Profile check = full;
  check.append(built.profile);
  const auto total = positional_scores(sv, check);
  for (int i = 0; i < msrc; ++i) {
    assert_eq(total[tc.x[i]] - total[tc.c], 2, "s(x) - s(c)");
    assert_eq(total[tc.y[i]] - total[tc.c], -1, "s(y) - s(c)");
    assert_eq(total[tc.z[i]] - total[tc.c], -1, "s(z) - s(c)");
  }
  assert_lt(total[tc.d], total[tc.c], "s(d)");

  part.append(built.profile);
  for (int k = 0; k < built.profile.n(); ++k) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), tc.c, RuleSpec::scoring(sv)};
  check_pair_bound(g);
  for (int vi : g.triple_votes)
    if (g.instance.profile.votes[vi].undetermined_pair_count() != 3)
      throw Error("triple vote must have exactly 3 undetermined pairs");
  return g;
}

// ---------------------------------------------------------------------------
// (2,1,...,1,0), up to m-1 undetermined pairs per vote.

Gadget gadget_2110(const Sat3B2Instance& sat) {
  sat.validate();
  const int n = sat.n_vars, t = sat.n_clauses();
  // four candidates per variable, one per clause, the target and a dummy
  const int m = 4 * n + t + 2;
  const ScoreVector sv = ScoreVector::two_one_one_zero(m);

  Gadget g;
  g.reduction = "scoring-2110-sat";
  g.regime = "np-hard(two-one-ones-zero,t>=m-1)";
  g.max_pairs = m - 1;
  g.source = sat;

  CandidateSet cands;
  std::vector<CandidateId> wi(n), di(n), b(n), bp(n), e(t);
  for (int i = 0; i < n; ++i) {
    wi[i] = cands.labels.size();
    cands.labels.push_back("w" + std::to_string(i + 1));
    di[i] = cands.labels.size();
    cands.labels.push_back("d" + std::to_string(i + 1));
    b[i] = cands.labels.size();
    cands.labels.push_back("b" + std::to_string(i + 1));
    bp[i] = cands.labels.size();
    cands.labels.push_back("b" + std::to_string(i + 1) + "'");
  }
  for (int j = 0; j < t; ++j) {
    e[j] = cands.labels.size();
    cands.labels.push_back("e" + std::to_string(j + 1));
  }
  const CandidateId w = cands.labels.size();
  cands.labels.push_back("w");
  const CandidateId dummy = cands.labels.size();
  cands.labels.push_back("g");
  for (int c = 0; c < m; ++c) g.roles[cands.labels[c]] = c;

  auto lit_cand = [&](int lit) { return lit > 0 ? b[lit - 1] : bp[-lit - 1]; };

  Profile full, part;
  full.candidates = cands;
  part.candidates = cands;
  auto add_var_vote = [&](CandidateId top, CandidateId low, CandidateId bottom,
                          std::vector<int>& reg, const std::string& role) {
    const auto mid = lex_excluding(m, {top, low, bottom});
    const auto order = concat_order(m, {{top}, mid, {low}, {bottom}});
    full.votes.push_back(Vote::complete(order));
    std::vector<std::pair<CandidateId, CandidateId>> removed;
    for (int cc = 0; cc < m; ++cc)
      if (cc != bottom) removed.emplace_back(cc, bottom);
    reg.push_back(part.n());
    g.vote_roles.push_back(role);
    part.votes.push_back(drop_pairs(order, removed));
  };
  for (int i = 0; i < n; ++i) {
    add_var_vote(wi[i], di[i], b[i], g.var_votes, "var " + std::to_string(i + 1));
    add_var_vote(wi[i], di[i], bp[i], g.var_votes2,
                 "nvar " + std::to_string(i + 1));
  }
  g.clause_votes.assign(t, {0, 0, 0});
  for (int j = 0; j < t; ++j)
    for (int k = 0; k < 3; ++k) {
      const CandidateId lc = lit_cand(sat.clauses[j][k]);
      const auto order =
          concat_order(m, {lex_excluding(m, {e[j], lc}), {e[j], lc}});
      full.votes.push_back(Vote::complete(order));
      g.clause_votes[j][k] = part.n();
      g.vote_roles.push_back("clause " + std::to_string(j + 1) + " lit " +
                             std::to_string(k + 1));
      part.votes.push_back(drop_pairs(order, {{e[j], lc}}));
    }

  const auto ps = positional_scores(sv, full);
  ScoreTarget target;
  target.named.emplace_back(w, 0);
  for (int i = 0; i < n; ++i) {
    target.named.emplace_back(wi[i], 1 - (ps[wi[i]] - ps[w]));
    target.named.emplace_back(b[i], -2 - (ps[b[i]] - ps[w]));
    target.named.emplace_back(bp[i], -2 - (ps[bp[i]] - ps[w]));
  }
  for (int j = 0; j < t; ++j)
    target.named.emplace_back(e[j], 1 - (ps[e[j]] - ps[w]));
  target.dummies.push_back(dummy);
  for (int i = 0; i < n; ++i) target.dummies.push_back(di[i]);
  long long margin = 0;
  for (CandidateId dd : target.dummies)
    margin = std::max(margin, ps[dd] - ps[w]);
  target.dummy_margin = std::max<long long>(0, margin);
  auto built = build_score_profile(sv, cands, target);

  Profile check = full;
  check.append(built.profile);
  const auto total = positional_scores(sv, check);
  for (int i = 0; i < n; ++i) {
    assert_eq(total[wi[i]] - total[w], 1, "s+(w_i) - s+(w)");
    assert_eq(total[b[i]] - total[w], -2, "s+(b_i) - s+(w)");
    assert_eq(total[bp[i]] - total[w], -2, "s+(b_i') - s+(w)");
    assert_lt(total[di[i]], total[w], "s+(d_i)");
  }
  for (int j = 0; j < t; ++j)
    assert_eq(total[e[j]] - total[w], 1, "s+(e_j) - s+(w)");
  assert_lt(total[dummy], total[w], "s+(g)");

  part.append(built.profile);
  for (int k = 0; k < built.profile.n(); ++k) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), w, RuleSpec::scoring(sv)};
  check_pair_bound(g);
  for (int vi : g.var_votes)
    if (g.instance.profile.votes[vi].undetermined_pair_count() != m - 1)
      throw Error("variable vote must have exactly m-1 undetermined pairs");
  return g;
}

// ---------------------------------------------------------------------------
// Copeland^alpha via 3DM (any alpha; odd margins make it irrelevant).

Gadget gadget_copeland_3dm(const ThreeDMInstance& tdm) {
  tdm.validate();
  const int msrc = tdm.m;
  const int gsize = 10 * msrc;
  const int m = 3 * msrc + 1 + gsize;

  Gadget g;
  g.reduction = "copeland-3dm";
  g.regime = "np-hard(copeland-any-alpha,t>=2)";
  g.max_pairs = 2;
  g.source = tdm;

  auto tc = tdm_candidates(msrc, false);
  std::vector<CandidateId> gg(gsize);
  for (int i = 0; i < gsize; ++i) {
    gg[i] = tc.cands.labels.size();
    tc.cands.labels.push_back("g" + std::to_string(i + 1));
  }
  for (int c = 0; c < m; ++c) g.roles[tc.cands.labels[c]] = c;

  Profile full, part;
  full.candidates = tc.cands;
  part.candidates = tc.cands;
  for (int si = 0; si < tdm.t(); ++si) {
    const auto [xi, yi, zi] = tdm.triples[si];
    const CandidateId x = tc.x[xi], y = tc.y[yi], z = tc.z[zi];
    const auto order = concat_order(m, {lex_excluding(m, {x, y, z}), {x, y, z}});
    full.votes.push_back(Vote::complete(order));
    g.triple_votes.push_back(part.n());
    g.vote_roles.push_back("triple " + std::to_string(si + 1));
    part.votes.push_back(drop_pairs(order, {{x, y}, {x, z}}));
  }

  // Total margins over P u Q, all +-1.  u_i ranges over Y u Z in order.
  MarginTarget target(m);
  for (int i = 0; i < msrc; ++i) {
    for (int j = 0; j < msrc; ++j) {
      target.set(tc.x[i], tc.y[j], 1);
      target.set(tc.x[i], tc.z[j], 1);
    }
    target.set(tc.x[i], tc.c, 1);
    target.set(tc.y[i], tc.c, 1);
    target.set(tc.z[i], tc.c, 1);
  }
  for (int i = 0; i < gsize; ++i) target.set(tc.c, gg[i], 1);
  // X internal: earlier index wins; its G wins shrink to compensate
  for (int i = 0; i < msrc; ++i)
    for (int j = i + 1; j < msrc; ++j) target.set(tc.x[i], tc.x[j], 1);
  for (int i = 0; i < msrc; ++i) {
    const int internal = msrc - 1 - i;               // wins inside X
    const int gwins = 8 * msrc + 1 - internal;       // so the row totals 10m+2
    for (int k = 0; k < gsize; ++k)
      target.set(tc.x[i], gg[k], k < gwins ? 1 : -1);
  }
  // Y u Z internal: transitive order; G wins adjusted so each row is 10m-1
  std::vector<CandidateId> u;
  for (int i = 0; i < msrc; ++i) u.push_back(tc.y[i]);
  for (int i = 0; i < msrc; ++i) u.push_back(tc.z[i]);
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j) target.set(u[i], u[j], 1);
  for (size_t i = 0; i < u.size(); ++i) {
    const int internal = static_cast<int>(u.size() - 1 - i);
    const int gwins = 10 * msrc - 2 - internal;
    for (int k = 0; k < gsize; ++k)
      target.set(u[i], gg[k], k < gwins ? 1 : -1);
  }
  // G windows: within distance (10m-1)/2 above, the higher index wins.  The
  // construction only pins the windows over the first 5m filler candidates;
  // extending the same circulant everywhere keeps every filler's win count
  // near (|G|-1)/2.
  const int window = (10 * msrc - 1) / 2;
  for (int lo = 0; lo < gsize; ++lo)
    for (int hi = lo + 1; hi < gsize; ++hi) {
      if (hi - lo <= window)
        target.set(gg[hi], gg[lo], 1);
      else
        target.set(gg[lo], gg[hi], 1);
    }

  Profile q;
  q.candidates = tc.cands;
  for (const auto& v : full.votes)
    q.votes.push_back(Vote::complete(v.linear().reversed()));
  q.append(build_margin_profile(tc.cands, target));

  Profile check = full;
  check.append(q);
  const auto sc = copeland_scores(margin_matrix(check), 0, 1);
  assert_eq(sc[tc.c], 10 * msrc, "copeland score of c");
  for (int i = 0; i < msrc; ++i) {
    assert_eq(sc[tc.x[i]], 10 * msrc + 2, "copeland score of x");
    assert_eq(sc[tc.y[i]], 10 * msrc - 1, "copeland score of y");
    assert_eq(sc[tc.z[i]], 10 * msrc - 1, "copeland score of z");
  }
  for (int i = 0; i < gsize; ++i)
    assert_lt(sc[gg[i]], 9 * msrc, "copeland score of g");

  part.append(q);
  for (int k = 0; k < q.n(); ++k) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), tc.c, RuleSpec::copeland(0, 1)};
  check_pair_bound(g);
  return g;
}

// ---------------------------------------------------------------------------
// Copeland^alpha via (3,B2)-SAT, one undetermined pair per vote.  The two
// lemma variants share the construction; the clause rows differ.

namespace {

Gadget copeland_sat_common(const Sat3B2Instance& sat, long long p, long long q,
                           bool low_half) {
  sat.validate();
  if (q <= 0) throw AlphaOutOfRange("alpha denominator must be positive");
  if (low_half) {
    if (!(p > 0 && 2 * p <= q))
      throw AlphaOutOfRange("this construction needs alpha in (0, 1/2]");
  } else {
    if (!(2 * p >= q && p < q))
      throw AlphaOutOfRange("this construction needs alpha in [1/2, 1)");
  }
  const int n = sat.n_vars, mc = sat.n_clauses();
  const long long gsize = static_cast<long long>(n) * mc;
  if ((3 * gsize) % 4 != 0)
    throw GadgetInfeasible("3mn/4 is not an integer for this instance");
  const long long q34 = 3 * gsize / 4;
  const int m = 3 * n + mc + 1 + static_cast<int>(gsize);

  struct Row {
    CandidateId who;
    long long ties, wins;
  };

  Gadget g;
  g.reduction = low_half ? "copeland-sat-low-alpha" : "copeland-sat-high-alpha";
  g.regime = "np-hard(copeland-interior-alpha,t>=1)";
  g.max_pairs = 1;
  g.source = sat;

  CandidateSet cands;
  std::vector<CandidateId> xc(n), nxc(n), dc(n), cc(mc);
  for (int i = 0; i < n; ++i) {
    xc[i] = cands.labels.size();
    cands.labels.push_back("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    nxc[i] = cands.labels.size();
    cands.labels.push_back("~x" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    dc[i] = cands.labels.size();
    cands.labels.push_back("d" + std::to_string(i + 1));
  }
  for (int j = 0; j < mc; ++j) {
    cc[j] = cands.labels.size();
    cands.labels.push_back("c" + std::to_string(j + 1));
  }
  const CandidateId c = cands.labels.size();
  cands.labels.push_back("c");
  std::vector<CandidateId> gg(gsize);
  for (int i = 0; i < gsize; ++i) {
    gg[i] = cands.labels.size();
    cands.labels.push_back("g" + std::to_string(i + 1));
  }
  for (int cd = 0; cd < m; ++cd) g.roles[cands.labels[cd]] = cd;

  auto lit_cand = [&](int lit) { return lit > 0 ? xc[lit - 1] : nxc[-lit - 1]; };

  Profile full, part;
  full.candidates = cands;
  part.candidates = cands;
  g.pos_lit_votes.assign(n, {0, 0});
  g.neg_lit_votes.assign(n, {0, 0});
  auto add_pair_vote = [&](CandidateId top, CandidateId second,
                           const std::string& role) {
    const auto order =
        concat_order(m, {{top, second}, lex_excluding(m, {top, second})});
    full.votes.push_back(Vote::complete(order));
    const int vi = part.n();
    g.vote_roles.push_back(role);
    part.votes.push_back(drop_pairs(order, {{top, second}}));
    return vi;
  };
  for (int i = 0; i < n; ++i)
    for (int copy = 0; copy < 2; ++copy)
      g.pos_lit_votes[i][copy] = add_pair_vote(
          xc[i], dc[i], "pos-lit " + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int copy = 0; copy < 2; ++copy)
      g.neg_lit_votes[i][copy] = add_pair_vote(
          nxc[i], dc[i], "neg-lit " + std::to_string(i + 1));
  g.clause_votes.assign(mc, {0, 0, 0});
  for (int j = 0; j < mc; ++j)
    for (int k = 0; k < 3; ++k)
      g.clause_votes[j][k] =
          add_pair_vote(cc[j], lit_cand(sat.clauses[j][k]),
                        "clause " + std::to_string(j + 1) + " lit " +
                            std::to_string(k + 1));

  // G budgets per named row: (ties in G, wins in G)
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i) {
    rows.push_back({xc[i], low_half ? mc : 0, q34});
    rows.push_back({nxc[i], low_half ? mc : 0, q34});
  }
  rows.push_back({c, 0, n + q34});
  for (int j = 0; j < mc; ++j)
    rows.push_back({cc[j], low_half ? 2LL * n - 1 : 1,
                    low_half ? q34 - n + 1 : n + q34});
  for (int i = 0; i < n; ++i)
    rows.push_back({dc[i], n + mc + 1, n + q34 - mc - 2});
  for (const auto& r : rows) {
    if (r.ties < 0 || r.wins < 0 || r.ties + r.wins > gsize)
      throw GadgetInfeasible(
          "G is too small for the score table at this instance size "
          "(needs roughly n >= 6 for (3,B2) inputs)");
  }

  // G internal tournament: a wrap-around circulant (each filler beats the
  // next floor((|G|-1)/2) indices cyclically, antipodal pairs tie).  A
  // one-sided window would leave the top fillers with no losses and half
  // their pairs tied, which already breaks the g < 3mn/4 bound for alpha
  // close to 1.  Then a greedy named-relation packing keeps every filler's
  // score low.
  const long long window = (gsize - 1) / 2;
  std::vector<long long> g_wins(gsize, 0), g_ties(gsize, 0);
  MarginTarget target(m);
  for (int a = 0; a < gsize; ++a)
    for (int b = a + 1; b < gsize; ++b) {
      const long long fwd = b - a;
      const long long bwd = gsize - fwd;
      if (fwd <= window) {
        target.set(gg[b], gg[a], 2);
        ++g_wins[b];
      } else if (bwd <= window) {
        target.set(gg[a], gg[b], 2);
        ++g_wins[a];
      } else {
        ++g_ties[a];  // antipodal pair, unspecified margin 0
        ++g_ties[b];
      }
    }

  auto g_load = [&](int i) { return q * g_wins[i] + p * g_ties[i]; };
  for (const auto& row : rows) {
    std::vector<int> order(gsize);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return g_load(a) < g_load(b);
    });
    const long long losses = gsize - row.ties - row.wins;
    long long assigned = 0;
    std::vector<char> used(gsize, 0);
    for (int k = 0; k < gsize && assigned < losses; ++k) {
      target.set(gg[order[k]], row.who, 2);
      ++g_wins[order[k]];
      used[order[k]] = 1;
      ++assigned;
    }
    assigned = 0;
    for (int k = 0; k < gsize && assigned < row.ties; ++k) {
      if (used[order[k]]) continue;
      target.set(row.who, gg[order[k]], 0);
      ++g_ties[order[k]];
      used[order[k]] = 1;
      ++assigned;
    }
    for (int k = 0; k < gsize; ++k)
      if (!used[order[k]]) target.set(row.who, gg[order[k]], 2);
  }

  // named-vs-named margins
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i < j) {
        target.set(xc[i], xc[j], 0);
        target.set(nxc[i], nxc[j], 0);
        target.set(dc[i], dc[j], 0);
      }
      target.set(xc[i], nxc[j], 0);
      target.set(xc[i], dc[j], 2);
      target.set(nxc[i], dc[j], 2);
    }
    target.set(xc[i], c, 0);
    target.set(nxc[i], c, 0);
    target.set(dc[i], c, 2);  // d beats c; required by the score table
    for (int j = 0; j < mc; ++j) {
      if (low_half) {
        target.set(cc[j], xc[i], 2);
        target.set(cc[j], nxc[i], 2);
      } else {
        target.set(cc[j], xc[i], 0);
        target.set(cc[j], nxc[i], 0);
      }
      target.set(dc[i], cc[j], 2);
    }
  }
  for (int j = 0; j < mc; ++j) {
    target.set(cc[j], c, 0);
    for (int k = j + 1; k < mc; ++k) target.set(cc[j], cc[k], 0);
  }

  Profile qprof;
  qprof.candidates = cands;
  for (const auto& v : full.votes)
    qprof.votes.push_back(Vote::complete(v.linear().reversed()));
  qprof.append(build_margin_profile(cands, target));

  Profile check = full;
  check.append(qprof);
  const auto sc = copeland_scores(margin_matrix(check), p, q);
  const long long s0 = (2 * n + mc) * p + (n + q34) * q;
  assert_eq(sc[c], s0, "copeland^a score of c");
  for (int i = 0; i < n; ++i) {
    assert_eq(sc[xc[i]], s0, "copeland^a score of x");
    assert_eq(sc[nxc[i]], s0, "copeland^a score of ~x");
    assert_eq(sc[dc[i]], s0 - q, "copeland^a score of d");
  }
  const long long sclause =
      low_half ? (2 * n + mc - 1) * p + (n + q34 + 1) * q
               : (2 * n + mc + 1) * p + (n + q34) * q;
  for (int j = 0; j < mc; ++j)
    assert_eq(sc[cc[j]], sclause, "copeland^a score of clause candidate");
  for (int i = 0; i < gsize; ++i)
    assert_lt(sc[gg[i]], q34 * q, "copeland^a score of g");

  part.append(qprof);
  for (int k = 0; k < qprof.n(); ++k) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), c, RuleSpec::copeland(p, q)};
  check_pair_bound(g);
  return g;
}

}  // namespace

Gadget gadget_copeland_sat_low(const Sat3B2Instance& sat, long long p,
                               long long q) {
  return copeland_sat_common(sat, p, q, true);
}

Gadget gadget_copeland_sat_high(const Sat3B2Instance& sat, long long p,
                                long long q) {
  return copeland_sat_common(sat, p, q, false);
}

// ---------------------------------------------------------------------------
// Maximin via d-Multicolored-Independent-Set, two pairs per vote.

Gadget gadget_maximin(const MulticoloredISInstance& mis, long long lambda) {
  mis.validate();
  const int k = mis.k(), d = mis.d;
  const int nv = mis.vertex_count(), ne = static_cast<int>(mis.edges.size());
  if (lambda == 0) lambda = 3 * d + 1 + (3 * d + 1) % 2;  // smallest even > 3d
  if (lambda <= 3 * d || lambda % 2 != 0)
    throw PreconditionViolated("lambda must be a positive even integer > 3d");
  const int m = nv + ne + 1 + 2 * k;

  Gadget g;
  g.reduction = "maximin-mis";
  g.regime = "np-hard(maximin,t>=2)";
  g.max_pairs = 2;
  g.source = mis;

  CandidateSet cands;
  std::vector<CandidateId> vc(nv), ec(ne), gi(k), gip(k);
  for (int v = 0; v < nv; ++v) {
    vc[v] = cands.labels.size();
    cands.labels.push_back("u" + std::to_string(v + 1));
  }
  for (int eidx = 0; eidx < ne; ++eidx) {
    ec[eidx] = cands.labels.size();
    cands.labels.push_back("e" + std::to_string(eidx + 1));
  }
  const CandidateId c = cands.labels.size();
  cands.labels.push_back("c");
  for (int i = 0; i < k; ++i) {
    gi[i] = cands.labels.size();
    cands.labels.push_back("g" + std::to_string(i + 1));
    gip[i] = cands.labels.size();
    cands.labels.push_back("g" + std::to_string(i + 1) + "'");
  }
  for (int cd = 0; cd < m; ++cd) g.roles[cands.labels[cd]] = cd;

  Profile full, part;
  full.candidates = cands;
  part.candidates = cands;
  g.vertex_votes.assign(nv, {});
  for (int v = 0; v < nv; ++v) {
    const int cls = mis.class_of(v);
    for (int copy = 0; copy < d; ++copy) {
      const auto order = concat_order(
          m, {lex_excluding(m, {vc[v], gi[cls], gip[cls]}),
              {gi[cls], gip[cls], vc[v]}});
      full.votes.push_back(Vote::complete(order));
      g.vertex_votes[v].push_back(part.n());
      g.vote_roles.push_back("vertex " + std::to_string(v + 1));
      part.votes.push_back(
          drop_pairs(order, {{gi[cls], vc[v]}, {gip[cls], vc[v]}}));
    }
  }
  g.edge_votes.assign(ne, {0, 0});
  for (int eidx = 0; eidx < ne; ++eidx) {
    const auto [a, b] = mis.edges[eidx];
    int side = 0;
    for (int endpoint : {a, b}) {
      const int cls = mis.class_of(endpoint);
      const auto order = concat_order(
          m, {lex_excluding(m, {vc[endpoint], gip[cls], ec[eidx]}),
              {ec[eidx], gip[cls], vc[endpoint]}});
      full.votes.push_back(Vote::complete(order));
      g.edge_votes[eidx][side++] = part.n();
      g.vote_roles.push_back("edge " + std::to_string(eidx + 1));
      part.votes.push_back(
          drop_pairs(order, {{ec[eidx], vc[endpoint]}, {gip[cls], vc[endpoint]}}));
    }
  }

  MarginTarget target(m);
  for (int eidx = 0; eidx < ne; ++eidx) {
    target.set(ec[eidx], c, lambda);
    for (int i = 0; i < k; ++i) target.set(ec[eidx], gip[i], lambda);
    const auto [a, b] = mis.edges[eidx];
    target.set(vc[a], ec[eidx], lambda - 2);
    target.set(vc[b], ec[eidx], lambda - 2);
  }
  for (int v = 0; v < nv; ++v) {
    const int cls = mis.class_of(v);
    target.set(vc[v], gi[cls], lambda - 2 * d);
    target.set(gip[cls], vc[v], lambda + 2 * d);
  }

  Profile qprof;
  qprof.candidates = cands;
  for (const auto& v : full.votes)
    qprof.votes.push_back(Vote::complete(v.linear().reversed()));
  qprof.append(build_margin_profile(cands, target));

  Profile check = full;
  check.append(qprof);
  const auto sc = maximin_scores(margin_matrix(check));
  assert_eq(sc[c], -lambda, "maximin score of c");
  for (int v = 0; v < nv; ++v)
    assert_eq(sc[vc[v]], -(lambda + 2 * d), "maximin score of a vertex");
  for (int eidx = 0; eidx < ne; ++eidx)
    assert_eq(sc[ec[eidx]], -(lambda - 2), "maximin score of an edge");
  for (int i = 0; i < k; ++i) {
    assert_eq(sc[gi[i]], -(lambda - 2 * d), "maximin score of g_i");
    assert_eq(sc[gip[i]], -lambda, "maximin score of g_i'");
  }

  part.append(qprof);
  for (int kk = 0; kk < qprof.n(); ++kk) g.vote_roles.push_back("filler");
  g.instance = {std::move(part), c, RuleSpec::maximin()};
  check_pair_bound(g);
  return g;
}

// ---------------------------------------------------------------------------
// Bucklin via 3DM with occurrence cap 3, two pairs per vote.  The placement
// table works out only when |S| = 3m with every element in exactly three
// triples; inputs with f_a <= 3 are padded by duplicating triples.

Gadget gadget_bucklin(const ThreeDMInstance& tdm_in) {
  tdm_in.validate(true);
  if (tdm_in.m < 3)
    throw GadgetInfeasible("the bucklin construction needs m >= 3");
  ThreeDMInstance tdm = tdm_in;
  const int msrc = tdm.m;
  while (tdm.t() < 3 * msrc) {
    bool padded = false;
    for (int si = 0; si < tdm.t() && !padded; ++si) {
      const auto tr = tdm.triples[si];
      if (tdm.occurrences(0, tr[0]) < 3 && tdm.occurrences(1, tr[1]) < 3 &&
          tdm.occurrences(2, tr[2]) < 3) {
        tdm.triples.push_back(tr);
        padded = true;
      }
    }
    if (!padded)
      throw OccurrenceCapViolated(
          "cannot pad the triple list to t = 3m under the occurrence cap");
  }
  for (int axis = 0; axis < 3; ++axis)
    for (int v = 0; v < msrc; ++v)
      if (tdm.occurrences(axis, v) != 3)
        throw OccurrenceCapViolated(
            "every element must lie in exactly 3 triples after padding");
  const int t = tdm.t();  // = 3m

  const int m = 12 * msrc + 1;
  Gadget g;
  g.reduction = "bucklin-3dm";
  g.regime = "np-hard(bucklin,t>=2)";
  g.max_pairs = 2;
  g.source = tdm;

  auto tc = tdm_candidates(msrc, false);
  std::vector<CandidateId> g1(3 * msrc), g2(3 * msrc), g3(3 * msrc);
  for (int i = 0; i < 3 * msrc; ++i) {
    g1[i] = tc.cands.labels.size();
    tc.cands.labels.push_back("f" + std::to_string(i + 1));
  }
  for (int i = 0; i < 3 * msrc; ++i) {
    g2[i] = tc.cands.labels.size();
    tc.cands.labels.push_back("g" + std::to_string(i + 1));
  }
  for (int i = 0; i < 3 * msrc; ++i) {
    g3[i] = tc.cands.labels.size();
    tc.cands.labels.push_back("h" + std::to_string(i + 1));
  }
  for (int cd = 0; cd < m; ++cd) g.roles[tc.cands.labels[cd]] = cd;

  std::vector<CandidateId> U;
  U.insert(U.end(), tc.x.begin(), tc.x.end());
  U.insert(U.end(), tc.y.begin(), tc.y.end());
  U.insert(U.end(), tc.z.begin(), tc.z.end());

  Profile part;
  part.candidates = tc.cands;
  Profile check;
  check.candidates = tc.cands;
  auto push_complete = [&](const LinearOrder& o, int copies,
                           const std::string& role) {
    for (int cp = 0; cp < copies; ++cp) {
      part.votes.push_back(Vote::complete(o));
      check.votes.push_back(Vote::complete(o));
      g.vote_roles.push_back(role);
    }
  };
  // The tail after each block must lead with filler candidates; otherwise a
  // short head would push an x into the counted positions.
  auto rest_after = [&](const std::vector<CandidateId>& head) {
    std::set<CandidateId> used(head.begin(), head.end());
    std::vector<CandidateId> fillers, named;
    for (int cd = 0; cd < m; ++cd) {
      if (used.count(cd)) continue;
      (cd > tc.c ? fillers : named).push_back(cd);
    }
    fillers.insert(fillers.end(), named.begin(), named.end());
    return fillers;
  };
  auto seg = [&](const std::vector<CandidateId>& src, int count) {
    return lex_first_subset(src, count);
  };

  for (int si = 0; si < t; ++si) {
    const auto [xi, yi, zi] = tdm.triples[si];
    const CandidateId x = tc.x[xi], y = tc.y[yi], z = tc.z[zi];
    std::vector<CandidateId> head;
    for (CandidateId uu : U)
      if (uu != x && uu != y && uu != z) head.push_back(uu);
    std::vector<CandidateId> headfull = head;
    headfull.insert(headfull.end(), {x, y, z});
    const auto order = concat_order(m, {head, {x, y, z}, rest_after(headfull)});
    check.votes.push_back(Vote::complete(order));
    g.triple_votes.push_back(part.n());
    g.vote_roles.push_back("triple " + std::to_string(si + 1));
    part.votes.push_back(drop_pairs(order, {{x, y}, {x, z}}));
  }

  // the fixed vote blocks
  for (int zi = 0; zi < msrc; ++zi) {
    const CandidateId z = tc.z[zi];
    {
      std::vector<CandidateId> head{tc.c};
      auto blk = seg(g1, 3 * msrc - 4);
      head.insert(head.end(), blk.begin(), blk.end());
      head.push_back(z);
      push_complete(concat_order(m, {head, rest_after(head)}), 2, "fill z-a");
    }
    {
      std::vector<CandidateId> head{tc.c};
      auto blk = seg(g1, 3 * msrc - 3);
      head.insert(head.end(), blk.begin(), blk.end());
      head.push_back(z);
      push_complete(concat_order(m, {head, rest_after(head)}), 1, "fill z-b");
    }
  }
  for (int yi = 0; yi < msrc; ++yi) {
    const CandidateId y = tc.y[yi];
    std::vector<CandidateId> head = seg(g1, 3 * msrc - 3);
    head.push_back(y);
    head.push_back(tc.c);
    push_complete(concat_order(m, {head, rest_after(head)}), 3, "fill y");
  }
  for (int xi = 0; xi < msrc; ++xi) {
    const CandidateId x = tc.x[xi];
    std::vector<CandidateId> head;
    for (CandidateId xx : tc.x)
      if (xx != x) head.push_back(xx);
    head.insert(head.end(), tc.y.begin(), tc.y.end());
    auto blk = seg(g2, msrc - 1);
    head.insert(head.end(), blk.begin(), blk.end());
    head.push_back(x);
    push_complete(concat_order(m, {head, rest_after(head)}), 3, "fill x");
  }
  // t - 3m copies of X > Y > G2^m would go here; padding forces t = 3m
  {
    std::vector<CandidateId> head = tc.z;
    auto blk = seg(g2, 2 * msrc);
    head.insert(head.end(), blk.begin(), blk.end());
    push_complete(concat_order(m, {head, rest_after(head)}), t - 1, "fill za");
  }
  {
    std::vector<CandidateId> head = tc.z;
    head.insert(head.end(), tc.x.begin(), tc.x.end());
    auto blk = seg(g2, msrc);
    head.insert(head.end(), blk.begin(), blk.end());
    push_complete(concat_order(m, {head, rest_after(head)}), 1, "fill zx");
  }
  {
    std::vector<CandidateId> head{tc.c};
    head.insert(head.end(), tc.x.begin(), tc.x.end());
    head.insert(head.end(), tc.y.begin(), tc.y.end());
    auto blk = seg(g2, msrc);
    head.insert(head.end(), blk.begin(), blk.end());
    push_complete(concat_order(m, {head, rest_after(head)}), t, "fill cxy");
  }
  {
    std::vector<CandidateId> head{tc.c};
    head.insert(head.end(), tc.y.begin(), tc.y.end());
    head.insert(head.end(), tc.z.begin(), tc.z.end());
    auto blk = seg(g3, msrc);
    head.insert(head.end(), blk.begin(), blk.end());
    push_complete(concat_order(m, {head, rest_after(head)}), t - 1, "fill cyz");
  }
  {
    std::vector<CandidateId> head{tc.c};
    head.insert(head.end(), tc.z.begin(), tc.z.end());
    head.insert(head.end(), tc.x.begin(), tc.x.end());
    auto blk = seg(g3, msrc);
    head.insert(head.end(), blk.begin(), blk.end());
    push_complete(concat_order(m, {head, rest_after(head)}), 3, "fill czx");
  }
  {
    std::vector<CandidateId> head = tc.z;
    head.insert(head.end(), tc.x.begin(), tc.x.end());
    auto blk = seg(g3, msrc);
    head.insert(head.end(), blk.begin(), blk.end());
    push_complete(concat_order(m, {head, rest_after(head)}), t - 1, "fill zx3");
  }

  if (part.n() != 8 * t + 1)
    throw Error("bucklin gadget must have 8t+1 votes, got " +
                std::to_string(part.n()));

  const auto hi = top_counts(check, 3 * msrc - 1);
  const auto lo = top_counts(check, 3 * msrc - 2);
  assert_eq(hi[tc.c], 4 * t + 2, "c within top 3m-1");
  assert_eq(lo[tc.c], 3 * t + 2, "c within top 3m-2");
  for (int i = 0; i < msrc; ++i) {
    assert_eq(hi[tc.x[i]], 4 * t + 3, "x within top 3m-1");
    assert_eq(lo[tc.x[i]], 4 * t, "x within top 3m-2");
    if (hi[tc.y[i]] > 4 * t + 2)
      throw Error("y exceeds 4t+2 within top 3m-1");
    assert_eq(lo[tc.y[i]], 4 * t - 1, "y within top 3m-2");
    assert_eq(hi[tc.z[i]], 4 * t + 1, "z within top 3m-1");
    assert_eq(lo[tc.z[i]], 4 * t, "z within top 3m-2");
  }
  for (CandidateId cd : g1) assert_lt(hi[cd], 4LL * t, "g1 within top 3m-1");
  for (CandidateId cd : g2) assert_lt(hi[cd], 4LL * t, "g2 within top 3m-1");
  for (CandidateId cd : g3) assert_lt(hi[cd], 4LL * t, "g3 within top 3m-1");

  g.instance = {std::move(part), tc.c, RuleSpec::bucklin()};
  check_pair_bound(g);
  return g;
}

// ---------------------------------------------------------------------------
// Forward witness completions and reverse extractions.

namespace {

LinearOrder complete_with(const PartialOrder& po,
                          const std::vector<std::pair<int, int>>& fixes) {
  auto cur = po;
  for (auto [a, b] : fixes)
    if (!cur.prefers(a, b)) cur = cur.with_pair_fixed(a, b);
  if (!cur.is_complete()) throw Error("completion left the vote incomplete");
  return cur.as_linear();
}

const PartialOrder& vote_order(const Gadget& g, int vi) {
  return g.instance.profile.votes[vi].order();
}

}  // namespace

Profile witness_completion(const Gadget& g, const SourceSolution& sol) {
  Profile out;
  out.candidates = g.instance.profile.candidates;
  out.votes = g.instance.profile.votes;

  auto set_vote = [&](int vi, const LinearOrder& o) {
    out.votes[vi] = Vote::complete(o);
  };

  if (g.reduction == "scoring-differentiating-sat" ||
      g.reduction == "scoring-2110-sat" ||
      g.reduction == "copeland-sat-low-alpha" ||
      g.reduction == "copeland-sat-high-alpha") {
    const auto& sat = std::get<Sat3B2Instance>(g.source);
    const auto* a = std::get_if<SatAssignment>(&sol);
    if (!a || static_cast<int>(a->values.size()) != sat.n_vars ||
        !sat.satisfied_by(a->values))
      throw InvalidSolution("not a satisfying assignment for this instance");
    auto lit_true = [&](int lit) {
      return lit > 0 ? a->values[lit - 1] : !a->values[-lit - 1];
    };

    if (g.reduction == "scoring-differentiating-sat") {
      for (int i = 0; i < sat.n_vars; ++i) {
        const CandidateId b = g.role("b" + std::to_string(i + 1));
        const CandidateId bp = g.role("b" + std::to_string(i + 1) + "'");
        set_vote(g.var_votes[i],
                 complete_with(vote_order(g, g.var_votes[i]),
                               a->values[i] ? std::vector<std::pair<int, int>>{
                                                  {bp, b}}
                                            : std::vector<std::pair<int, int>>{
                                                  {b, bp}}));
      }
      for (int j = 0; j < sat.n_clauses(); ++j) {
        int sat_slot = -1;
        for (int k = 0; k < 3 && sat_slot < 0; ++k)
          if (lit_true(sat.clauses[j][k])) sat_slot = k;
        const CandidateId e = g.role("e" + std::to_string(j + 1));
        for (int k = 0; k < 3; ++k) {
          const int lit = sat.clauses[j][k];
          const CandidateId lc =
              lit > 0 ? g.role("b" + std::to_string(lit))
                      : g.role("b" + std::to_string(-lit) + "'");
          set_vote(g.clause_votes[j][k],
                   complete_with(vote_order(g, g.clause_votes[j][k]),
                                 k == sat_slot
                                     ? std::vector<std::pair<int, int>>{{lc, e}}
                                     : std::vector<std::pair<int, int>>{{e, lc}}));
        }
      }
    } else if (g.reduction == "scoring-2110-sat") {
      for (int i = 0; i < sat.n_vars; ++i) {
        const CandidateId wi = g.role("w" + std::to_string(i + 1));
        const CandidateId di = g.role("d" + std::to_string(i + 1));
        const CandidateId b = g.role("b" + std::to_string(i + 1));
        const CandidateId bp = g.role("b" + std::to_string(i + 1) + "'");
        // the false literal's candidate jumps to the top of its vote
        set_vote(g.var_votes[i],
                 complete_with(vote_order(g, g.var_votes[i]),
                               a->values[i]
                                   ? std::vector<std::pair<int, int>>{{di, b}}
                                   : std::vector<std::pair<int, int>>{{b, wi}}));
        set_vote(g.var_votes2[i],
                 complete_with(vote_order(g, g.var_votes2[i]),
                               a->values[i]
                                   ? std::vector<std::pair<int, int>>{{bp, wi}}
                                   : std::vector<std::pair<int, int>>{{di, bp}}));
      }
      for (int j = 0; j < sat.n_clauses(); ++j) {
        int sat_slot = -1;
        for (int k = 0; k < 3 && sat_slot < 0; ++k)
          if (lit_true(sat.clauses[j][k])) sat_slot = k;
        const CandidateId e = g.role("e" + std::to_string(j + 1));
        for (int k = 0; k < 3; ++k) {
          const int lit = sat.clauses[j][k];
          const CandidateId lc =
              lit > 0 ? g.role("b" + std::to_string(lit))
                      : g.role("b" + std::to_string(-lit) + "'");
          set_vote(g.clause_votes[j][k],
                   complete_with(vote_order(g, g.clause_votes[j][k]),
                                 k == sat_slot
                                     ? std::vector<std::pair<int, int>>{{lc, e}}
                                     : std::vector<std::pair<int, int>>{{e, lc}}));
        }
      }
    } else {
      // copeland-sat variants
      for (int i = 0; i < sat.n_vars; ++i) {
        const CandidateId x = g.role("x" + std::to_string(i + 1));
        const CandidateId nx = g.role("~x" + std::to_string(i + 1));
        const CandidateId di = g.role("d" + std::to_string(i + 1));
        for (int copy = 0; copy < 2; ++copy) {
          set_vote(g.pos_lit_votes[i][copy],
                   complete_with(vote_order(g, g.pos_lit_votes[i][copy]),
                                 a->values[i]
                                     ? std::vector<std::pair<int, int>>{{di, x}}
                                     : std::vector<std::pair<int, int>>{{x, di}}));
          set_vote(g.neg_lit_votes[i][copy],
                   complete_with(vote_order(g, g.neg_lit_votes[i][copy]),
                                 a->values[i]
                                     ? std::vector<std::pair<int, int>>{{nx, di}}
                                     : std::vector<std::pair<int, int>>{{di, nx}}));
        }
      }
      for (int j = 0; j < sat.n_clauses(); ++j) {
        int sat_slot = -1;
        for (int k = 0; k < 3 && sat_slot < 0; ++k)
          if (lit_true(sat.clauses[j][k])) sat_slot = k;
        const CandidateId cj = g.role("c" + std::to_string(j + 1));
        for (int k = 0; k < 3; ++k) {
          const int lit = sat.clauses[j][k];
          const CandidateId lc = lit > 0 ? g.role("x" + std::to_string(lit))
                                         : g.role("~x" + std::to_string(-lit));
          set_vote(g.clause_votes[j][k],
                   complete_with(vote_order(g, g.clause_votes[j][k]),
                                 k == sat_slot
                                     ? std::vector<std::pair<int, int>>{{lc, cj}}
                                     : std::vector<std::pair<int, int>>{{cj, lc}}));
        }
      }
    }
  } else if (g.reduction == "scoring-11-3dm" ||
             g.reduction == "scoring-101-3dm" ||
             g.reduction == "copeland-3dm" || g.reduction == "bucklin-3dm") {
    const auto& tdm = std::get<ThreeDMInstance>(g.source);
    const auto* mt = std::get_if<Matching>(&sol);
    if (!mt || !tdm.is_perfect_matching(mt->triple_indices))
      throw InvalidSolution("not a perfect matching for this instance");
    std::set<int> in_matching(mt->triple_indices.begin(),
                              mt->triple_indices.end());
    for (int si = 0; si < tdm.t(); ++si) {
      const auto [xi, yi, zi] = tdm.triples[si];
      const CandidateId x = g.role("x" + std::to_string(xi + 1));
      const CandidateId y = g.role("y" + std::to_string(yi + 1));
      const CandidateId z = g.role("z" + std::to_string(zi + 1));
      const int vi = g.triple_votes[si];
      if (in_matching.count(si)) {
        // the x candidate drops to the bottom of its block
        set_vote(vi, complete_with(vote_order(g, vi), {{y, x}, {z, x}}));
      } else {
        set_vote(vi, complete_with(vote_order(g, vi), {{x, y}, {x, z}}));
      }
    }
  } else if (g.reduction == "maximin-mis") {
    const auto& mis = std::get<MulticoloredISInstance>(g.source);
    const auto* is = std::get_if<IndependentTransversal>(&sol);
    if (!is || !mis.is_solution(is->vertices))
      throw InvalidSolution("not an independent transversal");
    std::set<int> picked(is->vertices.begin(), is->vertices.end());
    for (int v = 0; v < mis.vertex_count(); ++v) {
      const int cls = mis.class_of(v);
      const CandidateId u = g.role("u" + std::to_string(v + 1));
      const CandidateId gi = g.role("g" + std::to_string(cls + 1));
      const CandidateId gip = g.role("g" + std::to_string(cls + 1) + "'");
      for (int vi : g.vertex_votes[v])
        set_vote(vi, complete_with(vote_order(g, vi),
                                   picked.count(v)
                                       ? std::vector<std::pair<int, int>>{{u, gi}}
                                       : std::vector<std::pair<int, int>>{
                                             {gip, u}}));
    }
    for (int eidx = 0; eidx < static_cast<int>(mis.edges.size()); ++eidx) {
      const auto [a, b] = mis.edges[eidx];
      // lift an endpoint outside the transversal
      const int lifted = picked.count(a) ? b : a;
      const CandidateId ecand = g.role("e" + std::to_string(eidx + 1));
      for (int side = 0; side < 2; ++side) {
        const int endpoint = side == 0 ? a : b;
        const int vi = g.edge_votes[eidx][side];
        const CandidateId u = g.role("u" + std::to_string(endpoint + 1));
        const CandidateId gip =
            g.role("g" + std::to_string(mis.class_of(endpoint) + 1) + "'");
        if (endpoint == lifted)
          set_vote(vi, complete_with(vote_order(g, vi), {{u, ecand}}));
        else
          set_vote(vi, complete_with(vote_order(g, vi), {{gip, u}, {ecand, u}}));
      }
    }
  } else {
    throw Error("unknown reduction: " + g.reduction);
  }

  // postcondition: the target co-wins
  const auto w = winners(g.instance.rule, out);
  if (std::find(w.begin(), w.end(), g.instance.target) == w.end())
    throw Error("witness completion failed to make the target a co-winner");
  return out;
}

SourceSolution extract_solution(const Gadget& g, const Profile& completion) {
  if (completion.n() != g.instance.profile.n())
    throw ExtractionFailed("completion has the wrong number of votes");
  for (int vi = 0; vi < completion.n(); ++vi)
    if (!completion.votes[vi].is_complete() ||
        !is_extension(completion.votes[vi].linear(),
                      g.instance.profile.votes[vi].as_order()))
      throw ExtractionFailed("completion does not extend the gadget votes");
  {
    const auto w = winners(g.instance.rule, completion);
    if (std::find(w.begin(), w.end(), g.instance.target) == w.end())
      throw ExtractionFailed("the target does not co-win this completion");
  }

  auto prefers = [&](int vi, CandidateId a, CandidateId b) {
    return completion.votes[vi].linear().prefers(a, b);
  };

  if (g.reduction == "scoring-differentiating-sat") {
    const auto& sat = std::get<Sat3B2Instance>(g.source);
    SatAssignment a;
    a.values.resize(sat.n_vars);
    for (int i = 0; i < sat.n_vars; ++i) {
      const CandidateId b = g.role("b" + std::to_string(i + 1));
      const CandidateId bp = g.role("b" + std::to_string(i + 1) + "'");
      a.values[i] = prefers(g.var_votes[i], bp, b);
    }
    if (!sat.satisfied_by(a.values))
      throw ExtractionFailed("extracted assignment does not satisfy");
    return a;
  }
  if (g.reduction == "scoring-2110-sat") {
    const auto& sat = std::get<Sat3B2Instance>(g.source);
    SatAssignment a;
    a.values.resize(sat.n_vars);
    for (int i = 0; i < sat.n_vars; ++i) {
      const CandidateId wi = g.role("w" + std::to_string(i + 1));
      const CandidateId b = g.role("b" + std::to_string(i + 1));
      a.values[i] = prefers(g.var_votes[i], wi, b);
    }
    if (!sat.satisfied_by(a.values))
      throw ExtractionFailed("extracted assignment does not satisfy");
    return a;
  }
  if (g.reduction == "copeland-sat-low-alpha" ||
      g.reduction == "copeland-sat-high-alpha") {
    const auto& sat = std::get<Sat3B2Instance>(g.source);
    SatAssignment a;
    a.values.resize(sat.n_vars);
    for (int i = 0; i < sat.n_vars; ++i) {
      const CandidateId x = g.role("x" + std::to_string(i + 1));
      const CandidateId di = g.role("d" + std::to_string(i + 1));
      a.values[i] = prefers(g.pos_lit_votes[i][0], di, x) &&
                    prefers(g.pos_lit_votes[i][1], di, x);
    }
    if (!sat.satisfied_by(a.values))
      throw ExtractionFailed("extracted assignment does not satisfy");
    return a;
  }
  if (g.reduction == "scoring-11-3dm" || g.reduction == "scoring-101-3dm" ||
      g.reduction == "copeland-3dm" || g.reduction == "bucklin-3dm") {
    const auto& tdm = std::get<ThreeDMInstance>(g.source);
    // one flipped triple per x; duplicated triples can flip together without
    // changing any pairwise outcome, so dedupe by the covered x value
    std::vector<int> pick(tdm.m, -1);
    for (int si = 0; si < tdm.t(); ++si) {
      const auto [xi, yi, zi] = tdm.triples[si];
      const CandidateId x = g.role("x" + std::to_string(xi + 1));
      const CandidateId z = g.role("z" + std::to_string(zi + 1));
      (void)yi;
      if (prefers(g.triple_votes[si], z, x) && pick[xi] < 0) pick[xi] = si;
    }
    Matching mt;
    for (int xi = 0; xi < tdm.m; ++xi) {
      if (pick[xi] < 0)
        throw ExtractionFailed("some x candidate kept its block top slot");
      mt.triple_indices.push_back(pick[xi]);
    }
    if (!tdm.is_perfect_matching(mt.triple_indices))
      throw ExtractionFailed("selected triples do not form a perfect matching");
    return mt;
  }
  if (g.reduction == "maximin-mis") {
    const auto& mis = std::get<MulticoloredISInstance>(g.source);
    IndependentTransversal is;
    for (int cls = 0; cls < mis.k(); ++cls) {
      int pick = -1;
      for (int v : mis.classes[cls]) {
        const CandidateId u = g.role("u" + std::to_string(v + 1));
        const CandidateId gi = g.role("g" + std::to_string(cls + 1));
        bool all_lifted = true;
        for (int vi : g.vertex_votes[v])
          all_lifted = all_lifted && prefers(vi, u, gi);
        if (all_lifted) {
          pick = v;
          break;
        }
      }
      if (pick < 0)
        throw ExtractionFailed("no fully lifted vertex in some class");
      is.vertices.push_back(pick);
    }
    if (!mis.is_solution(is.vertices))
      throw ExtractionFailed("extracted transversal is not independent");
    return is;
  }
  throw Error("unknown reduction: " + g.reduction);
}

}  // namespace pw
