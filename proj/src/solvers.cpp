#include "pw/solvers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "pw/flow.hpp"
#include "pw/score_analysis.hpp"

namespace pw {

namespace {

void check_target(const PossibleWinnerInstance& inst) {
  if (inst.target < 0 || inst.target >= inst.profile.m())
    throw PreconditionViolated("target candidate out of range");
}

Profile witness_audit(const PossibleWinnerInstance& inst, Profile witness) {
  if (witness.n() != inst.profile.n()) throw Error("witness vote count mismatch");
  for (int i = 0; i < witness.n(); ++i) {
    if (!witness.votes[i].is_complete()) throw Error("witness vote incomplete");
    if (!is_extension(witness.votes[i].linear(),
                      inst.profile.votes[i].as_order()))
      throw Error("witness vote is not an extension");
  }
  const auto w = winners(inst.rule, witness);
  if (std::find(w.begin(), w.end(), inst.target) == w.end())
    throw Error("witness does not make the target a co-winner");
  return witness;
}

// ---------------------------------------------------------------------------
// Scoring flow core.
//
// After pushing the target up, the incomparability graph of every partial
// vote splits into components occupying consecutive position blocks.  Each
// component's completions move a fixed total bonus around its members; in the
// regimes covered here that choice is always "one member of S gains 1" or
// "all but one member of S gain 1", which a unit-capacity flow expresses
// exactly.

struct ScoringComponent {
  std::vector<CandidateId> members;
  // distinct bonus vectors (aligned with members) and a representative
  // internal ranking (top to bottom) realizing each
  std::vector<std::vector<long long>> bonus_options;
  std::vector<std::vector<CandidateId>> representatives;
  int block_top = 0;  // global position (from top) of the block's first slot
  int chosen = -1;    // filled from the flow when solving
};

struct ScoringVoteInfo {
  bool was_complete = false;
  LinearOrder pushed_fixed;  // singleton positions; members filled later
  std::vector<ScoringComponent> components;
};

struct ScoringUnit {
  int vote;
  int comp;
  std::vector<CandidateId> set;  // S
  bool all_but_one;              // false: one of S gains 1; true: |S|-1 gain 1
};

SolveResult scoring_flow_core(const PossibleWinnerInstance& inst,
                              int pair_limit, const std::string& method,
                              const std::string& regime) {
  check_target(inst);
  if (!inst.rule.is_scoring())
    throw PreconditionViolated(method + " needs a positional scoring rule");
  const ScoreVector sv = ScoreVector::normalize(inst.rule.score_vector->scores);
  const int m = inst.profile.m();
  const CandidateId c = inst.target;
  if (sv.m() != m)
    throw PreconditionViolated("score vector length != candidate count");
  for (const auto& v : inst.profile.votes)
    if (v.undetermined_pair_count() > pair_limit)
      throw PreconditionViolated(method + ": a vote exceeds the pair bound");

  long long s_c = 0;
  std::vector<long long> s_min(m, 0);
  std::vector<ScoringVoteInfo> infos(inst.profile.n());
  std::vector<ScoringUnit> units;

  for (int vi = 0; vi < inst.profile.n(); ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      infos[vi].was_complete = true;
      const auto& r = vote.linear().ranking;
      for (int p = 0; p < m; ++p) {
        if (r[p] == c)
          s_c += sv.at_position(p);
        else
          s_min[r[p]] += sv.at_position(p);
      }
      continue;
    }
    const PartialOrder pushed = vote.order().pushed_up(c);
    auto& info = infos[vi];

    // union-find over undetermined pairs
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const auto pairs = pushed.undetermined_pairs();
    for (auto [x, y] : pairs) parent[find(x)] = find(y);

    std::map<int, std::vector<CandidateId>> comps;
    for (int a = 0; a < m; ++a) comps[find(a)].push_back(a);

    std::vector<int> above(m, 0);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (pushed.prefers(x, y)) ++above[y];

    info.pushed_fixed = LinearOrder(std::vector<CandidateId>(m, -1));
    for (auto& [root, mem] : comps) {
      (void)root;
      if (mem.size() == 1) {
        const CandidateId a = mem[0];
        info.pushed_fixed.ranking[above[a]] = a;
        if (a == c)
          s_c += sv.at_position(above[a]);
        else
          s_min[a] += sv.at_position(above[a]);
        continue;
      }
      ScoringComponent comp;
      comp.members = mem;
      int outside_above = 0;
      for (int w = 0; w < m; ++w) {
        if (std::find(mem.begin(), mem.end(), w) != mem.end()) continue;
        if (pushed.prefers(w, mem[0])) ++outside_above;
      }
      comp.block_top = outside_above;

      // induced suborder, local ids = index into members
      const int k = static_cast<int>(mem.size());
      std::vector<std::pair<int, int>> local_pairs;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j && pushed.prefers(mem[i], mem[j]))
            local_pairs.emplace_back(i, j);
      const auto sub = PartialOrder::close_and_validate(k, local_pairs);

      std::vector<std::vector<long long>> raw_scores;  // per extension
      std::vector<std::vector<CandidateId>> raw_ranks;
      for_each_extension(sub, [&](const LinearOrder& w) {
        std::vector<long long> sc(k);
        std::vector<CandidateId> rank(k);
        for (int p = 0; p < k; ++p) {
          sc[w.ranking[p]] = sv.at_position(comp.block_top + p);
          rank[p] = mem[w.ranking[p]];
        }
        raw_scores.push_back(std::move(sc));
        raw_ranks.push_back(std::move(rank));
        return true;
      });

      std::vector<long long> mins(k);
      for (int i = 0; i < k; ++i) {
        mins[i] = raw_scores[0][i];
        for (const auto& sc : raw_scores) mins[i] = std::min(mins[i], sc[i]);
      }
      for (int i = 0; i < k; ++i) s_min[mem[i]] += mins[i];

      for (size_t e = 0; e < raw_scores.size(); ++e) {
        std::vector<long long> bonus(k);
        for (int i = 0; i < k; ++i) bonus[i] = raw_scores[e][i] - mins[i];
        if (std::find(comp.bonus_options.begin(), comp.bonus_options.end(),
                      bonus) == comp.bonus_options.end()) {
          comp.bonus_options.push_back(std::move(bonus));
          comp.representatives.push_back(raw_ranks[e]);
        }
      }

      if (comp.bonus_options.size() == 1) {
        // no score freedom; fix the block to its first extension
        comp.chosen = 0;
        info.components.push_back(std::move(comp));
        continue;
      }

      // classify the option set
      std::vector<int> support;  // local ids with a positive bonus somewhere
      for (int i = 0; i < k; ++i)
        for (const auto& b : comp.bonus_options)
          if (b[i] > 0) {
            support.push_back(i);
            break;
          }
      const int s = static_cast<int>(support.size());
      auto is_unit_vec = [&](const std::vector<long long>& b, int who) {
        for (int i = 0; i < k; ++i)
          if (b[i] != (i == who ? 1 : 0)) return false;
        return true;
      };
      bool choose1 = static_cast<int>(comp.bonus_options.size()) == s;
      if (choose1)
        for (int si = 0; si < s && choose1; ++si) {
          bool found = false;
          for (const auto& b : comp.bonus_options)
            if (is_unit_vec(b, support[si])) found = true;
          choose1 = found;
        }
      if (choose1)
        for (const auto& b : comp.bonus_options) {
          bool any = false;
          for (int si = 0; si < s; ++si) any = any || is_unit_vec(b, support[si]);
          if (!any) choose1 = false;
        }
      auto is_all_but = [&](const std::vector<long long>& b, int who) {
        for (int i = 0; i < k; ++i) {
          const bool in_s =
              std::find(support.begin(), support.end(), i) != support.end();
          const long long want = (in_s && i != who) ? 1 : 0;
          if (b[i] != want) return false;
        }
        return true;
      };
      bool allbut = !choose1 && static_cast<int>(comp.bonus_options.size()) == s;
      if (allbut)
        for (int si = 0; si < s && allbut; ++si) {
          bool found = false;
          for (const auto& b : comp.bonus_options)
            if (is_all_but(b, support[si])) found = true;
          allbut = found;
        }
      if (allbut)
        for (const auto& b : comp.bonus_options) {
          bool any = false;
          for (int si = 0; si < s; ++si) any = any || is_all_but(b, support[si]);
          if (!any) allbut = false;
        }
      if (!choose1 && !allbut)
        throw PreconditionViolated(
            method + ": completion choices not expressible as a unit flow "
                     "(rule outside this regime)");

      ScoringUnit unit;
      unit.vote = vi;
      unit.comp = static_cast<int>(info.components.size());
      for (int si : support) unit.set.push_back(mem[si]);
      unit.all_but_one = allbut;
      units.push_back(std::move(unit));
      info.components.push_back(std::move(comp));
    }
  }

  for (int w = 0; w < m; ++w)
    if (w != c && s_min[w] > s_c)
      return {false, std::nullopt, method, regime};

  // nodes: 0 source, 1 sink, 2..2+|units|-1 units, then candidates
  FlowNetwork net(2 + static_cast<int>(units.size()) + m, 0, 1);
  const int unit_base = 2;
  const int cand_base = 2 + static_cast<int>(units.size());
  long long required = 0;
  std::vector<std::vector<int>> unit_edges(units.size());
  for (size_t u = 0; u < units.size(); ++u) {
    const long long w =
        units[u].all_but_one ? static_cast<long long>(units[u].set.size()) - 1 : 1;
    required += w;
    net.add_edge(0, unit_base + static_cast<int>(u), w);
    for (CandidateId x : units[u].set)
      unit_edges[u].push_back(
          net.add_edge(unit_base + static_cast<int>(u), cand_base + x, 1));
  }
  for (int w = 0; w < m; ++w)
    if (w != c)
      net.add_edge(cand_base + w, 1, std::min<long long>(s_c - s_min[w], required));

  if (net.max_flow() != required) return {false, std::nullopt, method, regime};

  // witness: read each unit's assignment off the integral flow
  for (size_t u = 0; u < units.size(); ++u) {
    auto& comp = infos[units[u].vote].components[units[u].comp];
    const int k = static_cast<int>(comp.members.size());
    std::vector<long long> want(k, 0);
    for (size_t ei = 0; ei < units[u].set.size(); ++ei) {
      const CandidateId x = units[u].set[ei];
      const long long f = net.flow_on(unit_edges[u][ei]);
      const int local = static_cast<int>(
          std::find(comp.members.begin(), comp.members.end(), x) -
          comp.members.begin());
      want[local] = f;
    }
    comp.chosen = -1;
    for (size_t o = 0; o < comp.bonus_options.size(); ++o)
      if (comp.bonus_options[o] == want) comp.chosen = static_cast<int>(o);
    if (comp.chosen < 0) throw Error("flow produced an unrealizable assignment");
  }

  Profile witness;
  witness.candidates = inst.profile.candidates;
  for (int vi = 0; vi < inst.profile.n(); ++vi) {
    if (infos[vi].was_complete) {
      witness.votes.push_back(inst.profile.votes[vi]);
      continue;
    }
    auto rank = infos[vi].pushed_fixed.ranking;
    for (const auto& comp : infos[vi].components) {
      const auto& rep = comp.representatives[comp.chosen];
      for (size_t p = 0; p < rep.size(); ++p)
        rank[comp.block_top + static_cast<int>(p)] = rep[p];
    }
    witness.votes.push_back(Vote::complete(LinearOrder(std::move(rank))));
  }
  return {true, witness_audit(inst, std::move(witness)), method, regime};
}

}  // namespace

SolveResult solve_scoring_t1(const PossibleWinnerInstance& inst) {
  return scoring_flow_core(inst, 1, "flow-scoring-t1", "poly(scoring,t<=1)");
}

SolveResult solve_scoring_t2(const PossibleWinnerInstance& inst) {
  if (!inst.rule.is_scoring())
    throw PreconditionViolated("flow-scoring-t2 needs a scoring rule");
  const auto cls = classify(*inst.rule.score_vector);
  if (cls.label == RuleClassLabel::Differentiating ||
      cls.label == RuleClassLabel::OneOneContaminated)
    throw PreconditionViolated(
        "flow-scoring-t2 needs a <1,1>-difference-free Borda-like rule");
  return scoring_flow_core(inst, 2, "flow-scoring-t2", "poly(11-free,t<=2)");
}

SolveResult solve_scoring_t3(const PossibleWinnerInstance& inst) {
  if (!inst.rule.is_scoring())
    throw PreconditionViolated("flow-scoring-t3 needs a scoring rule");
  const auto cls = classify(*inst.rule.score_vector);
  if (cls.label == RuleClassLabel::Differentiating ||
      cls.label == RuleClassLabel::OneOneContaminated ||
      cls.label == RuleClassLabel::OneZeroOneContaminated)
    throw PreconditionViolated(
        "flow-scoring-t3 needs a <1,1>- and <1,0,1>-difference-free rule");
  return scoring_flow_core(inst, 3, "flow-scoring-t3", "poly(11-101-free,t<=3)");
}

// ---------------------------------------------------------------------------
// (2,1,...,1,0): only the first and last position matter.  A(p) holds the
// possible firsts, B(p) the possible lasts; with at most m-2 undetermined
// pairs they are disjoint, so the first/last choices decouple into a flow.

SolveResult solve_rule_2110(const PossibleWinnerInstance& inst) {
  const std::string method = "flow-2110";
  const std::string regime = "poly(two-one-ones-zero,t<=m-2)";
  check_target(inst);
  const int m = inst.profile.m();
  const CandidateId c = inst.target;
  if (!inst.rule.is_scoring() ||
      !(ScoreVector::normalize(inst.rule.score_vector->scores) ==
        ScoreVector::two_one_one_zero(m)))
    throw PreconditionViolated("flow-2110 needs the rule (2,1,...,1,0)");
  for (const auto& v : inst.profile.votes)
    if (v.undetermined_pair_count() > m - 2)
      throw PreconditionViolated("flow-2110: a vote exceeds m-2 pairs");

  long long s_c = 0;
  std::vector<long long> base(m, 0);
  struct VoteSets {
    bool complete = true;
    PartialOrder pushed;
    std::vector<CandidateId> a_set, b_set;
  };
  std::vector<VoteSets> sets(inst.profile.n());

  for (int vi = 0; vi < inst.profile.n(); ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      const auto& r = vote.linear().ranking;
      for (int p = 0; p < m; ++p) {
        const long long sc = p == 0 ? 2 : (p == m - 1 ? 0 : 1);
        if (r[p] == c)
          s_c += sc;
        else
          base[r[p]] += sc;
      }
      continue;
    }
    auto& vs = sets[vi];
    vs.complete = false;
    vs.pushed = vote.order().pushed_up(c);
    std::vector<int> above(m, 0), below(m, 0);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (vs.pushed.prefers(x, y)) {
          ++above[y];
          ++below[x];
        }
    for (int x = 0; x < m; ++x) {
      if (above[x] == 0) vs.a_set.push_back(x);
      if (below[x] == 0) vs.b_set.push_back(x);
    }
    for (CandidateId a : vs.a_set)
      if (std::find(vs.b_set.begin(), vs.b_set.end(), a) != vs.b_set.end())
        throw PreconditionViolated("flow-2110: A and B sets intersect");
    // target's score is fixed by the push-up
    if (above[c] == 0)
      s_c += 2;
    else if (below[c] == 0)
      s_c += 0;
    else
      s_c += 1;
    // everyone else: 0 when they can land last, else 1 (a forced-first
    // candidate carries its +1 through the mandatory a-unit below)
    for (int x = 0; x < m; ++x) {
      if (x == c) continue;
      if (std::find(vs.b_set.begin(), vs.b_set.end(), x) == vs.b_set.end())
        base[x] += 1;
    }
  }

  for (int w = 0; w < m; ++w)
    if (w != c && base[w] > s_c) return {false, std::nullopt, method, regime};

  const int n = inst.profile.n();
  FlowNetwork net(2 + 2 * n + m, 0, 1);
  const int cand_base = 2 + 2 * n;
  long long required = 0;
  std::vector<std::vector<int>> a_edges(n), b_edges(n);
  std::vector<std::vector<CandidateId>> a_members(n);
  for (int vi = 0; vi < n; ++vi) {
    const auto& vs = sets[vi];
    if (vs.complete) continue;
    const bool a_is_c = vs.a_set.size() == 1 && vs.a_set[0] == c;
    if (!a_is_c) {
      net.add_edge(0, 2 + 2 * vi, 1);
      required += 1;
      for (CandidateId x : vs.a_set) {
        a_members[vi].push_back(x);
        a_edges[vi].push_back(net.add_edge(2 + 2 * vi, cand_base + x, 1));
      }
    }
    const long long bcap = static_cast<long long>(vs.b_set.size()) - 1;
    if (bcap > 0) {
      net.add_edge(0, 2 + 2 * vi + 1, bcap);
      required += bcap;
      for (CandidateId x : vs.b_set)
        b_edges[vi].push_back(net.add_edge(2 + 2 * vi + 1, cand_base + x, 1));
    }
  }
  for (int w = 0; w < m; ++w)
    if (w != c)
      net.add_edge(cand_base + w, 1, std::min<long long>(s_c - base[w], required));

  if (net.max_flow() != required) return {false, std::nullopt, method, regime};

  Profile witness;
  witness.candidates = inst.profile.candidates;
  for (int vi = 0; vi < n; ++vi) {
    const auto& vs = sets[vi];
    if (vs.complete) {
      witness.votes.push_back(inst.profile.votes[vi]);
      continue;
    }
    CandidateId first = -1, last = -1;
    if (vs.a_set.size() == 1 && vs.a_set[0] == c) {
      first = c;
    } else {
      for (size_t i = 0; i < a_edges[vi].size(); ++i)
        if (net.flow_on(a_edges[vi][i]) == 1) first = a_members[vi][i];
    }
    if (vs.b_set.size() == 1) {
      last = vs.b_set[0];
    } else {
      for (size_t i = 0; i < b_edges[vi].size(); ++i)
        if (net.flow_on(b_edges[vi][i]) == 0 && last == -1)
          last = vs.b_set[i];
    }
    if (first == -1 || last == -1 || first == last)
      throw Error("flow-2110 produced an inconsistent first/last choice");
    // lexicographic completion with first and last pinned
    std::vector<std::pair<int, int>> pins;
    for (int y = 0; y < m; ++y) {
      if (y != first && !vs.pushed.prefers(y, first)) pins.emplace_back(first, y);
      if (y != last && !vs.pushed.prefers(last, y)) pins.emplace_back(y, last);
    }
    auto pinned = vs.pushed;
    for (auto [x, y] : pins)
      if (!pinned.prefers(x, y)) {
        if (pinned.prefers(y, x)) throw Error("flow-2110 pin contradiction");
        pinned = pinned.with_pair_fixed(x, y);
      }
    witness.votes.push_back(Vote::complete(first_extension(pinned)));
  }
  return {true, witness_audit(inst, std::move(witness)), method, regime};
}

// ---------------------------------------------------------------------------
// Copeland^0 and Copeland^1, one undetermined pair per vote.

SolveResult solve_copeland_t1(const PossibleWinnerInstance& inst) {
  const std::string method = "flow-copeland-t1";
  const std::string regime = "poly(copeland-boundary-alpha,t<=1)";
  check_target(inst);
  if (inst.rule.kind != RuleSpec::Kind::Copeland)
    throw PreconditionViolated("flow-copeland-t1 needs a copeland rule");
  const bool alpha_one = inst.rule.alpha_num == inst.rule.alpha_den;
  if (!alpha_one && inst.rule.alpha_num != 0)
    throw UnsupportedAlpha("flow-copeland-t1 handles alpha in {0,1} only");
  for (const auto& v : inst.profile.votes)
    if (v.undetermined_pair_count() > 1)
      throw PreconditionViolated("flow-copeland-t1: a vote has >1 pair");

  const int m = inst.profile.m();
  const CandidateId c = inst.target;
  const int n = inst.profile.n();

  // fixed margins after push-up plus per-pair flexible vote lists
  std::vector<long long> fixed(static_cast<size_t>(m) * m, 0);
  std::map<std::pair<int, int>, std::vector<int>> flex;  // {x<y} -> vote ids
  std::vector<PartialOrder> pushed(n);
  for (int vi = 0; vi < n; ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      const auto& r = vote.linear().ranking;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          ++fixed[static_cast<size_t>(r[i]) * m + r[j]];
          --fixed[static_cast<size_t>(r[j]) * m + r[i]];
        }
      continue;
    }
    pushed[vi] = vote.order().pushed_up(c);
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        if (pushed[vi].prefers(x, y)) {
          ++fixed[static_cast<size_t>(x) * m + y];
          --fixed[static_cast<size_t>(y) * m + x];
        } else if (pushed[vi].prefers(y, x)) {
          ++fixed[static_cast<size_t>(y) * m + x];
          --fixed[static_cast<size_t>(x) * m + y];
        }
      }
    const auto up = pushed[vi].undetermined_pairs();
    if (up.size() > 1) throw Error("push-up left more than one pair");
    for (auto pr : up) flex[pr].push_back(vi);
  }

  // orientation plan per flexible pair: votes toward x (first element)
  std::map<std::pair<int, int>, long long> plan;
  std::vector<std::pair<int, int>> a_pairs;
  auto outcome = [&](long long margin) -> int {
    // 1: first wins, -1: second wins, 0: tie
    return margin > 0 ? 1 : (margin < 0 ? -1 : 0);
  };
  for (auto& [pr, votes_list] : flex) {
    auto [x, y] = pr;
    const long long f = fixed[static_cast<size_t>(x) * m + y];
    const long long k = static_cast<long long>(votes_list.size());
    const long long lo = f - k, hi = f + k;
    if (!alpha_one) {
      // alpha = 0: ties score nothing, so tie whenever achievable
      if (lo <= 0 && 0 <= hi && ((0 - lo) % 2 == 0)) {
        plan[pr] = (0 - f + k) / 2;  // votes toward x so margin becomes 0
      } else if (lo > 0) {
        plan[pr] = k;
      } else if (hi < 0) {
        plan[pr] = 0;
      } else {
        a_pairs.push_back(pr);
      }
    } else {
      // alpha = 1: a tie scores like a win for both, so avoid ties
      if (hi > 0 && lo < 0) {
        a_pairs.push_back(pr);
      } else if (hi > 0) {
        plan[pr] = k;  // x strictly wins; y escapes the point
      } else {
        plan[pr] = 0;  // hi <= 0 and not both-sided: give it to y
      }
    }
  }

  // forced win(-or-tie) counts from everything outside the A pairs
  auto pair_margin_after_plan = [&](int x, int y) -> long long {
    const auto key = std::minmax(x, y);
    const long long f = fixed[static_cast<size_t>(x) * m + y];
    auto it = flex.find({key.first, key.second});
    if (it == flex.end()) return f;
    auto pit = plan.find({key.first, key.second});
    if (pit == plan.end()) return f;  // an A pair; caller skips these
    const long long k = static_cast<long long>(it->second.size());
    const long long toward_first = pit->second;
    const long long signed_first = 2 * toward_first - k;
    return x == key.first ? f + signed_first : f - signed_first;
  };
  auto is_a_pair = [&](int x, int y) {
    const auto key = std::minmax(x, y);
    return std::find(a_pairs.begin(), a_pairs.end(),
                     std::make_pair(key.first, key.second)) != a_pairs.end();
  };

  std::vector<long long> forced(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || is_a_pair(x, y)) continue;
      const int oc = outcome(pair_margin_after_plan(x, y));
      if (oc == 1 || (alpha_one && oc == 0)) ++forced[x];
    }
  const long long s_c = forced[c];
  for (int w = 0; w < m; ++w)
    if (w != c && forced[w] > s_c) return {false, std::nullopt, method, regime};

  FlowNetwork net(2 + static_cast<int>(a_pairs.size()) + m, 0, 1);
  const int cand_base = 2 + static_cast<int>(a_pairs.size());
  std::vector<std::pair<int, int>> pair_edges(a_pairs.size());
  for (size_t i = 0; i < a_pairs.size(); ++i) {
    net.add_edge(0, 2 + static_cast<int>(i), 1);
    pair_edges[i].first =
        net.add_edge(2 + static_cast<int>(i), cand_base + a_pairs[i].first, 1);
    pair_edges[i].second =
        net.add_edge(2 + static_cast<int>(i), cand_base + a_pairs[i].second, 1);
  }
  for (int w = 0; w < m; ++w)
    if (w != c)
      net.add_edge(cand_base + w, 1,
                   std::min<long long>(s_c - forced[w],
                                       static_cast<long long>(a_pairs.size())));
  if (net.max_flow() != static_cast<long long>(a_pairs.size()))
    return {false, std::nullopt, method, regime};

  for (size_t i = 0; i < a_pairs.size(); ++i) {
    const bool first_wins = net.flow_on(pair_edges[i].first) == 1;
    plan[a_pairs[i]] =
        first_wins ? static_cast<long long>(flex[a_pairs[i]].size()) : 0;
  }

  Profile witness;
  witness.candidates = inst.profile.candidates;
  std::map<std::pair<int, int>, long long> used;
  for (int vi = 0; vi < n; ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      witness.votes.push_back(vote);
      continue;
    }
    const auto up = pushed[vi].undetermined_pairs();
    if (up.empty()) {
      witness.votes.push_back(Vote::complete(first_extension(pushed[vi])));
      continue;
    }
    const auto pr = up[0];
    const bool toward_first = used[pr]++ < plan[pr];
    const auto fixed_vote = toward_first
                                ? pushed[vi].with_pair_fixed(pr.first, pr.second)
                                : pushed[vi].with_pair_fixed(pr.second, pr.first);
    witness.votes.push_back(Vote::complete(first_extension(fixed_vote)));
  }
  return {true, witness_audit(inst, std::move(witness)), method, regime};
}

// ---------------------------------------------------------------------------
// Maximin, one undetermined pair per vote.

SolveResult solve_maximin_t1(const PossibleWinnerInstance& inst) {
  const std::string method = "flow-maximin-t1";
  const std::string regime = "poly(maximin,t<=1)";
  check_target(inst);
  if (inst.rule.kind != RuleSpec::Kind::Maximin)
    throw PreconditionViolated("flow-maximin-t1 needs the maximin rule");
  for (const auto& v : inst.profile.votes)
    if (v.undetermined_pair_count() > 1)
      throw PreconditionViolated("flow-maximin-t1: a vote has >1 pair");
  const int m = inst.profile.m();
  if (m < 2) throw PreconditionViolated("maximin needs m >= 2");
  const CandidateId c = inst.target;
  const int n = inst.profile.n();

  std::vector<long long> fixed(static_cast<size_t>(m) * m, 0);
  std::map<std::pair<int, int>, std::vector<int>> flex;
  std::vector<PartialOrder> pushed(n);
  for (int vi = 0; vi < n; ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      const auto& r = vote.linear().ranking;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          ++fixed[static_cast<size_t>(r[i]) * m + r[j]];
          --fixed[static_cast<size_t>(r[j]) * m + r[i]];
        }
      continue;
    }
    pushed[vi] = vote.order().pushed_up(c);
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        if (pushed[vi].prefers(x, y)) {
          ++fixed[static_cast<size_t>(x) * m + y];
          --fixed[static_cast<size_t>(y) * m + x];
        } else if (pushed[vi].prefers(y, x)) {
          ++fixed[static_cast<size_t>(y) * m + x];
          --fixed[static_cast<size_t>(x) * m + y];
        }
      }
    for (auto pr : pushed[vi].undetermined_pairs()) flex[pr].push_back(vi);
  }
  auto flex_count = [&](int x, int y) -> long long {
    const auto key = std::minmax(x, y);
    auto it = flex.find({key.first, key.second});
    return it == flex.end() ? 0 : static_cast<long long>(it->second.size());
  };

  long long s_c = fixed[static_cast<size_t>(c) * m + (c == 0 ? 1 : 0)];
  for (int y = 0; y < m; ++y)
    if (y != c) s_c = std::min(s_c, fixed[static_cast<size_t>(c) * m + y]);

  auto lex_completion = [&]() {
    Profile w;
    w.candidates = inst.profile.candidates;
    for (int vi = 0; vi < n; ++vi)
      w.votes.push_back(inst.profile.votes[vi].is_complete()
                            ? inst.profile.votes[vi]
                            : Vote::complete(first_extension(pushed[vi])));
    return w;
  };

  if (s_c >= 0)  // weak Condorcet winner in the pushed profile
    return {true, witness_audit(inst, lex_completion()), method, regime};

  // candidates already at or below s(c) in every extension
  std::vector<char> doomed(m, 0);
  doomed[c] = 1;
  for (int x = 0; x < m; ++x) {
    if (x == c) continue;
    for (int y = 0; y < m && !doomed[x]; ++y) {
      if (y == x) continue;
      const long long hi = fixed[static_cast<size_t>(x) * m + y] + flex_count(x, y);
      if (hi <= s_c) doomed[x] = 1;
    }
  }
  std::vector<CandidateId> need;
  for (int x = 0; x < m; ++x)
    if (!doomed[x]) need.push_back(x);

  std::vector<std::pair<int, int>> pair_list;
  for (auto& [pr, votes_list] : flex) {
    (void)votes_list;
    if (pr.first != c && pr.second != c) pair_list.push_back(pr);
  }
  FlowNetwork net(2 + static_cast<int>(pair_list.size()) + m, 0, 1);
  const int cand_base = 2 + static_cast<int>(pair_list.size());
  std::vector<std::pair<int, int>> pair_edges(pair_list.size(), {-1, -1});
  for (size_t i = 0; i < pair_list.size(); ++i) {
    auto [x, y] = pair_list[i];
    net.add_edge(0, 2 + static_cast<int>(i), 1);
    const long long k = flex_count(x, y);
    // all votes toward y drives D(x,y) to its minimum
    if (fixed[static_cast<size_t>(x) * m + y] - k <= s_c && !doomed[x])
      pair_edges[i].first = net.add_edge(2 + static_cast<int>(i), cand_base + x, 1);
    if (fixed[static_cast<size_t>(y) * m + x] - k <= s_c && !doomed[y])
      pair_edges[i].second = net.add_edge(2 + static_cast<int>(i), cand_base + y, 1);
  }
  for (CandidateId x : need) net.add_edge(cand_base + x, 1, 1);
  if (net.max_flow() != static_cast<long long>(need.size()))
    return {false, std::nullopt, method, regime};

  // orientation per pair: 1 = all toward second (hurting first), ...
  std::map<std::pair<int, int>, int> hurts;  // -1 hurt second, +1 hurt first
  for (size_t i = 0; i < pair_list.size(); ++i) {
    if (pair_edges[i].first >= 0 && net.flow_on(pair_edges[i].first) == 1)
      hurts[pair_list[i]] = 1;
    else if (pair_edges[i].second >= 0 && net.flow_on(pair_edges[i].second) == 1)
      hurts[pair_list[i]] = -1;
  }
  Profile witness;
  witness.candidates = inst.profile.candidates;
  for (int vi = 0; vi < n; ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      witness.votes.push_back(vote);
      continue;
    }
    const auto up = pushed[vi].undetermined_pairs();
    if (up.empty()) {
      witness.votes.push_back(Vote::complete(first_extension(pushed[vi])));
      continue;
    }
    const auto pr = up[0];
    auto it = hurts.find(pr);
    PartialOrder fixed_vote =
        (it != hurts.end() && it->second == 1)
            ? pushed[vi].with_pair_fixed(pr.second, pr.first)
            : pushed[vi].with_pair_fixed(pr.first, pr.second);
    witness.votes.push_back(Vote::complete(first_extension(fixed_vote)));
  }
  return {true, witness_audit(inst, std::move(witness)), method, regime};
}

// ---------------------------------------------------------------------------
// Bucklin, one undetermined pair per vote.
//
// After the push-up the target's placement counts are fixed; let k be the
// first depth where it holds a strict majority and M its count there.  The
// target co-wins iff some completion keeps every candidate below a majority
// at depth k-1 and at or below M at depth k.  A single-pair vote influences
// exactly one depth (the one its pair straddles), so each depth is an
// independent k-approval-style assignment flow.

SolveResult solve_bucklin_t1(const PossibleWinnerInstance& inst) {
  const std::string method = "flow-bucklin-t1";
  const std::string regime = "poly(bucklin,t<=1)";
  check_target(inst);
  if (inst.rule.kind != RuleSpec::Kind::Bucklin)
    throw PreconditionViolated("flow-bucklin-t1 needs the bucklin rule");
  for (const auto& v : inst.profile.votes)
    if (v.undetermined_pair_count() > 1)
      throw PreconditionViolated("flow-bucklin-t1: a vote has >1 pair");
  const int m = inst.profile.m();
  const int n = inst.profile.n();
  if (n < 1) throw PreconditionViolated("bucklin needs at least one vote");
  const CandidateId c = inst.target;

  struct TokenVote {
    int depth;  // pair straddles depths {depth, depth+1}, 1-based from top
    CandidateId x, y;
  };
  std::vector<PartialOrder> pushed(n);
  std::vector<std::optional<TokenVote>> token(n);
  // counts[w][d] = votes certainly placing w within top (d+1) positions,
  // with token votes counted for the depths they cannot influence
  std::vector<std::vector<long long>> certain(m, std::vector<long long>(m, 0));

  auto add_fixed_position = [&](CandidateId w, int pos_from_top) {
    for (int d = pos_from_top; d < m; ++d) ++certain[w][d];
  };

  for (int vi = 0; vi < n; ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      const auto& r = vote.linear().ranking;
      for (int p = 0; p < m; ++p) add_fixed_position(r[p], p);
      continue;
    }
    pushed[vi] = vote.order().pushed_up(c);
    const auto up = pushed[vi].undetermined_pairs();
    if (up.empty()) {
      const auto r = pushed[vi].as_linear().ranking;
      for (int p = 0; p < m; ++p) add_fixed_position(r[p], p);
      continue;
    }
    const auto [x, y] = up[0];
    std::vector<int> above(m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (pushed[vi].prefers(a, b)) ++above[b];
    // the pair occupies two consecutive positions
    const int hi_pos = std::min(above[x], above[y]);
    token[vi] = TokenVote{hi_pos + 1, x, y};  // 1-based depth of the high slot
    for (int a = 0; a < m; ++a) {
      if (a == x || a == y) continue;
      add_fixed_position(a, above[a]);
    }
    // x and y are certainly within top-d for d beyond the low slot
    for (int d = hi_pos + 1; d < m; ++d) {
      ++certain[x][d];
      ++certain[y][d];
    }
  }

  const long long maj = n / 2 + 1;  // strictly more than half
  int k = -1;
  for (int d = 0; d < m; ++d)
    if (certain[c][d] >= maj) {
      k = d + 1;
      break;
    }
  if (k < 0) throw Error("target never reaches a majority");
  const long long M = certain[c][k - 1];

  // per-depth caps; depth k-1 must stay below a majority, depth k at or
  // below the target's count
  auto solve_depth = [&](int depth, long long cap_value,
                         std::map<int, CandidateId>& assignment) -> bool {
    std::vector<int> token_votes;
    for (int vi = 0; vi < n; ++vi)
      if (token[vi] && token[vi]->depth == depth) token_votes.push_back(vi);
    // fixed part must respect the cap even with no tokens
    for (int w = 0; w < m; ++w) {
      if (w == c) continue;
      if (certain[w][depth - 1] > cap_value) return false;
    }
    if (token_votes.empty()) return true;
    FlowNetwork net(2 + static_cast<int>(token_votes.size()) + m, 0, 1);
    const int cand_base = 2 + static_cast<int>(token_votes.size());
    std::vector<std::pair<int, int>> edges(token_votes.size());
    for (size_t i = 0; i < token_votes.size(); ++i) {
      const auto& t = *token[token_votes[i]];
      net.add_edge(0, 2 + static_cast<int>(i), 1);
      edges[i].first = net.add_edge(2 + static_cast<int>(i), cand_base + t.x, 1);
      edges[i].second = net.add_edge(2 + static_cast<int>(i), cand_base + t.y, 1);
    }
    for (int w = 0; w < m; ++w)
      if (w != c)
        net.add_edge(cand_base + w, 1,
                     std::max<long long>(0, cap_value - certain[w][depth - 1]));
    if (net.max_flow() != static_cast<long long>(token_votes.size()))
      return false;
    for (size_t i = 0; i < token_votes.size(); ++i) {
      const auto& t = *token[token_votes[i]];
      assignment[token_votes[i]] = net.flow_on(edges[i].first) == 1 ? t.x : t.y;
    }
    return true;
  };

  std::map<int, CandidateId> high_choice;
  if (k >= 2 && !solve_depth(k - 1, maj - 1, high_choice))
    return {false, std::nullopt, method, regime};
  if (!solve_depth(k, M, high_choice))
    return {false, std::nullopt, method, regime};

  Profile witness;
  witness.candidates = inst.profile.candidates;
  for (int vi = 0; vi < n; ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) {
      witness.votes.push_back(vote);
      continue;
    }
    auto order = pushed[vi];
    if (token[vi]) {
      const auto& t = *token[vi];
      auto it = high_choice.find(vi);
      const CandidateId top = it != high_choice.end() ? it->second
                                                      : std::min(t.x, t.y);
      order = order.with_pair_fixed(top, top == t.x ? t.y : t.x);
    }
    witness.votes.push_back(Vote::complete(first_extension(order)));
  }
  return {true, witness_audit(inst, std::move(witness)), method, regime};
}

// ---------------------------------------------------------------------------
// Brute force.

namespace {

struct ChoiceGroup {
  std::vector<int> votes;  // instance vote indices
  // one entry per distinct outcome; reps aligned with `votes`
  std::vector<std::vector<LinearOrder>> reps;
};

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > ~0ULL / a) return ~0ULL;
  return a * b;
}

struct BruteContext {
  const PossibleWinnerInstance& inst;
  bool unique;
  int m;
  CandidateId c;
  std::vector<ChoiceGroup> groups;
  std::vector<int> chosen;
  bool found = false;
  Profile witness;

  explicit BruteContext(const PossibleWinnerInstance& i, bool u)
      : inst(i), unique(u), m(i.profile.m()), c(i.target) {}

  void build_witness() {
    witness.candidates = inst.profile.candidates;
    witness.votes.assign(inst.profile.n(), Vote{});
    for (int vi = 0; vi < inst.profile.n(); ++vi)
      if (inst.profile.votes[vi].is_complete())
        witness.votes[vi] = inst.profile.votes[vi];
    for (size_t g = 0; g < groups.size(); ++g)
      for (size_t j = 0; j < groups[g].votes.size(); ++j)
        witness.votes[groups[g].votes[j]] =
            Vote::complete(groups[g].reps[chosen[g]][j]);
  }
};

// -- scoring engine ---------------------------------------------------------

struct ScoringBrute : BruteContext {
  std::vector<std::vector<std::vector<long long>>> deltas;  // group x choice
  std::vector<long long> totals;
  // suffix bounds over groups: min per candidate, max for the target
  std::vector<std::vector<long long>> suf_min;
  std::vector<long long> suf_max_c;
  const ScoreVector sv;

  ScoringBrute(const PossibleWinnerInstance& i, bool u)
      : BruteContext(i, u),
        sv(ScoreVector::normalize(i.rule.score_vector->scores)) {}

  void add_vote_choices(int vi, const std::vector<LinearOrder>& exts) {
    ChoiceGroup g;
    g.votes = {vi};
    std::vector<std::vector<long long>> ds;
    for (const auto& w : exts) {
      std::vector<long long> d(m, 0);
      for (int p = 0; p < m; ++p) d[w.ranking[p]] = sv.at_position(p);
      bool dup = false;
      for (const auto& prev : ds)
        if (prev == d) {
          dup = true;
          break;
        }
      if (dup) continue;
      ds.push_back(std::move(d));
      g.reps.push_back({w});
    }
    deltas.push_back(std::move(ds));
    groups.push_back(std::move(g));
  }

  void prepare(const Profile& base_complete) {
    totals.assign(m, 0);
    for (const auto& v : base_complete.votes) {
      const auto& r = v.linear().ranking;
      for (int p = 0; p < m; ++p) totals[r[p]] += sv.at_position(p);
    }
    const int G = static_cast<int>(groups.size());
    suf_min.assign(G + 1, std::vector<long long>(m, 0));
    suf_max_c.assign(G + 1, 0);
    for (int g = G - 1; g >= 0; --g) {
      for (int w = 0; w < m; ++w) {
        long long mn = deltas[g][0][w];
        for (const auto& d : deltas[g]) mn = std::min(mn, d[w]);
        suf_min[g][w] = suf_min[g + 1][w] + mn;
      }
      long long mxc = deltas[g][0][c];
      for (const auto& d : deltas[g]) mxc = std::max(mxc, d[c]);
      suf_max_c[g] = suf_max_c[g + 1] + mxc;
    }
    chosen.assign(G, 0);
  }

  bool leaf_ok() const {
    for (int w = 0; w < m; ++w) {
      if (w == c) continue;
      if (unique ? totals[w] >= totals[c] : totals[w] > totals[c]) return false;
    }
    return true;
  }

  void dfs(int g) {
    if (found) return;
    // prune: some rival is unbeatable from here
    const long long c_best = totals[c] + suf_max_c[g];
    for (int w = 0; w < m; ++w) {
      if (w == c) continue;
      const long long w_least = totals[w] + suf_min[g][w];
      if (unique ? w_least >= c_best : w_least > c_best) return;
    }
    if (g == static_cast<int>(groups.size())) {
      if (leaf_ok()) {
        found = true;
        build_witness();
      }
      return;
    }
    for (size_t ci = 0; ci < deltas[g].size() && !found; ++ci) {
      chosen[g] = static_cast<int>(ci);
      for (int w = 0; w < m; ++w) totals[w] += deltas[g][ci][w];
      dfs(g + 1);
      for (int w = 0; w < m; ++w) totals[w] -= deltas[g][ci][w];
    }
  }
};

// -- margin engine (copeland / maximin) --------------------------------------

struct MarginBrute : BruteContext {
  // choice payload: per-pair signed margin deltas
  std::vector<std::vector<std::vector<std::tuple<int, int, long long>>>> deltas;
  std::vector<long long> margins;  // m x m
  std::vector<long long> score;   // rule-specific, scaled for copeland
  long long p = 0, q = 1;
  bool copeland = false;
  int violations = 0;  // rivals currently beating the target

  MarginBrute(const PossibleWinnerInstance& i, bool u) : BruteContext(i, u) {
    copeland = i.rule.kind == RuleSpec::Kind::Copeland;
    if (copeland) {
      p = i.rule.alpha_num;
      q = i.rule.alpha_den;
    }
  }

  long long& marg(int x, int y) { return margins[static_cast<size_t>(x) * m + y]; }

  long long cand_score(int x) const {
    if (copeland) {
      long long s = 0;
      for (int y = 0; y < m; ++y) {
        if (y == x) continue;
        const long long d = margins[static_cast<size_t>(x) * m + y];
        if (d > 0)
          s += q;
        else if (d == 0)
          s += p;
      }
      return s;
    }
    long long mn = margins[static_cast<size_t>(x) * m + (x == 0 ? 1 : 0)];
    for (int y = 0; y < m; ++y)
      if (y != x) mn = std::min(mn, margins[static_cast<size_t>(x) * m + y]);
    return mn;
  }

  bool violates(int w) const {
    return unique ? score[w] >= score[c] : score[w] > score[c];
  }

  void recompute_all() {
    score.assign(m, 0);
    for (int x = 0; x < m; ++x) score[x] = cand_score(x);
    violations = 0;
    for (int w = 0; w < m; ++w)
      if (w != c && violates(w)) ++violations;
  }

  struct Undo {
    std::vector<std::array<long long, 4>> margin_changes;  // x,y,Dxy,Dyx
    std::vector<std::pair<int, long long>> score_changes;
    std::vector<int> touched;
    int violations = 0;
    void reset() {
      margin_changes.clear();
      score_changes.clear();
      touched.clear();
    }
  };
  std::vector<Undo> undo_pool;  // one per DFS depth; capacity is reused

  void apply(const std::vector<std::tuple<int, int, long long>>& ds, Undo& undo) {
    undo.reset();
    undo.violations = violations;
    bool c_touched = false;
    for (auto [x, y, d] : ds) {
      undo.margin_changes.push_back(
          {(long long)x, (long long)y, marg(x, y), marg(y, x)});
      marg(x, y) += d;
      marg(y, x) -= d;
      for (int v : {x, y}) {
        bool dup = false;
        for (int t : undo.touched) dup = dup || t == v;
        if (!dup) undo.touched.push_back(v);
        c_touched = c_touched || v == c;
      }
    }
    for (int x : undo.touched) {
      undo.score_changes.emplace_back(x, score[x]);
      if (x != c && !c_touched && violates(x)) --violations;
      score[x] = cand_score(x);
      if (x != c && !c_touched && violates(x)) ++violations;
    }
    if (c_touched) {
      // the target's own score moved; recount rivals
      violations = 0;
      for (int w = 0; w < m; ++w)
        if (w != c && violates(w)) ++violations;
    }
  }

  void revert(const Undo& undo) {
    for (auto it = undo.score_changes.rbegin(); it != undo.score_changes.rend();
         ++it)
      score[it->first] = it->second;
    for (auto it = undo.margin_changes.rbegin();
         it != undo.margin_changes.rend(); ++it) {
      marg((int)(*it)[0], (int)(*it)[1]) = (*it)[2];
      marg((int)(*it)[1], (int)(*it)[0]) = (*it)[3];
    }
    violations = undo.violations;
  }

  void dfs(int g) {
    if (found) return;
    if (g == static_cast<int>(groups.size())) {
      if (violations == 0) {
        found = true;
        build_witness();
      }
      return;
    }
    for (size_t ci = 0; ci < deltas[g].size() && !found; ++ci) {
      chosen[g] = static_cast<int>(ci);
      Undo& u = undo_pool[g];
      apply(deltas[g][ci], u);
      dfs(g + 1);
      revert(u);
    }
  }
};

// -- bucklin engine -----------------------------------------------------------

struct BucklinBrute : BruteContext {
  std::vector<std::vector<std::vector<std::pair<int, int>>>> deltas;  // (cand,pos)
  std::vector<std::vector<long long>> cnt;  // cand x position
  long long n_votes = 0;

  BucklinBrute(const PossibleWinnerInstance& i, bool u) : BruteContext(i, u) {}

  bool leaf_ok() {
    std::vector<long long> run(m, 0);
    for (int d = 0; d < m; ++d) {
      long long best = 0;
      for (int w = 0; w < m; ++w) {
        run[w] += cnt[w][d];
        best = std::max(best, run[w]);
      }
      if (2 * best > n_votes) {
        if (run[c] != best) return false;
        if (!unique) return true;
        int cnt_best = 0;
        for (int w = 0; w < m; ++w) cnt_best += run[w] == best;
        return cnt_best == 1;
      }
    }
    return false;
  }

  void dfs(int g) {
    if (found) return;
    if (g == static_cast<int>(groups.size())) {
      if (leaf_ok()) {
        found = true;
        build_witness();
      }
      return;
    }
    for (size_t ci = 0; ci < deltas[g].size() && !found; ++ci) {
      chosen[g] = static_cast<int>(ci);
      for (auto [w, pos] : deltas[g][ci]) ++cnt[w][pos];
      dfs(g + 1);
      for (auto [w, pos] : deltas[g][ci]) --cnt[w][pos];
    }
  }
};

}  // namespace

SolveResult solve_bruteforce(const PossibleWinnerInstance& inst,
                             unsigned long long budget, bool unique) {
  check_target(inst);
  const int m = inst.profile.m();
  if (m > 64)
    throw BudgetExceeded("brute force capped at 64 candidates", ~0ULL);
  const std::string method = unique ? "brute-force-unique" : "brute-force";
  const std::string regime = "exact-enumeration";

  // enumerate per-vote extensions; the budget gate below runs on the deduped
  // per-vote completion classes, which is what the search explores
  std::vector<std::vector<LinearOrder>> exts(inst.profile.n());
  for (int vi = 0; vi < inst.profile.n(); ++vi) {
    const auto& vote = inst.profile.votes[vi];
    if (vote.is_complete()) continue;
    unsigned long long cnt = 0;
    for_each_extension(vote.order(), [&](const LinearOrder& w) {
      exts[vi].push_back(w);
      ++cnt;
      return cnt <= budget;
    });
    if (cnt > budget)
      throw BudgetExceeded("a single vote exceeds the extension budget", cnt);
  }
  auto check_group_budget = [&](const std::vector<ChoiceGroup>& groups,
                                auto&& count_of) {
    unsigned long long product = 1;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      product = saturating_mul(product, count_of(gi));
      if (product > budget)
        throw BudgetExceeded("completion-class product exceeds the budget",
                             product);
    }
  };

  Profile base;  // complete votes only, for score seeding
  base.candidates = inst.profile.candidates;
  for (const auto& v : inst.profile.votes)
    if (v.is_complete()) base.votes.push_back(v);

  auto finish = [&](BruteContext& ctx) -> SolveResult {
    if (!ctx.found) return {false, std::nullopt, method, regime};
    return {true, witness_audit(inst, std::move(ctx.witness)), method, regime};
  };

  switch (inst.rule.kind) {
    case RuleSpec::Kind::Scoring: {
      ScoringBrute b(inst, unique);
      for (int vi = 0; vi < inst.profile.n(); ++vi)
        if (!inst.profile.votes[vi].is_complete())
          b.add_vote_choices(vi, exts[vi]);
      check_group_budget(b.groups,
                         [&](size_t gi) { return b.deltas[gi].size(); });
      b.prepare(base);
      b.dfs(0);
      return finish(b);
    }
    case RuleSpec::Kind::Copeland:
    case RuleSpec::Kind::Maximin: {
      MarginBrute b(inst, unique);
      b.margins.assign(static_cast<size_t>(m) * m, 0);
      for (const auto& v : inst.profile.votes) {
        if (!v.is_complete()) continue;
        const auto& r = v.linear().ranking;
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            ++b.marg(r[i], r[j]);
            --b.marg(r[j], r[i]);
          }
      }
      // fold the determined part of partial votes into the base margins and
      // group single-pair votes over the same pair
      std::map<std::pair<int, int>, std::vector<int>> single;
      std::vector<int> multi;
      for (int vi = 0; vi < inst.profile.n(); ++vi) {
        const auto& vote = inst.profile.votes[vi];
        if (vote.is_complete()) continue;
        const auto& po = vote.order();
        for (int x = 0; x < m; ++x)
          for (int y = x + 1; y < m; ++y) {
            if (po.prefers(x, y)) {
              ++b.marg(x, y);
              --b.marg(y, x);
            } else if (po.prefers(y, x)) {
              ++b.marg(y, x);
              --b.marg(x, y);
            }
          }
        const auto up = po.undetermined_pairs();
        if (up.size() == 1)
          single[up[0]].push_back(vi);
        else
          multi.push_back(vi);
      }
      for (auto& [pr, vis] : single) {
        ChoiceGroup g;
        g.votes = vis;
        const int k = static_cast<int>(vis.size());
        std::vector<std::vector<std::tuple<int, int, long long>>> ds;
        LinearOrder toward_x, toward_y;
        {
          const auto& po = inst.profile.votes[vis[0]].order();
          toward_x = first_extension(po.with_pair_fixed(pr.first, pr.second));
          toward_y = first_extension(po.with_pair_fixed(pr.second, pr.first));
        }
        for (int j = 0; j <= k; ++j) {  // j votes toward pr.first
          ds.push_back({{pr.first, pr.second, 2LL * j - k}});
          std::vector<LinearOrder> reps;
          for (int t = 0; t < k; ++t) {
            const auto& po = inst.profile.votes[vis[t]].order();
            reps.push_back(first_extension(
                t < j ? po.with_pair_fixed(pr.first, pr.second)
                      : po.with_pair_fixed(pr.second, pr.first)));
          }
          g.reps.push_back(std::move(reps));
        }
        b.deltas.push_back(std::move(ds));
        b.groups.push_back(std::move(g));
      }
      // bucket identical multi-pair votes; their choices commute, so only
      // the multiset of per-vote outcomes matters
      std::map<std::vector<std::pair<int, int>>, std::vector<int>> buckets;
      for (int vi : multi)
        buckets[inst.profile.votes[vi].order().strict_pairs()].push_back(vi);
      for (auto& [key, vis] : buckets) {
        (void)key;
        const auto up = inst.profile.votes[vis[0]].order().undetermined_pairs();
        // per-vote distinct outcomes
        std::vector<std::vector<std::tuple<int, int, long long>>> opts;
        std::vector<LinearOrder> opt_reps;
        std::set<std::vector<int>> seen;
        for (const auto& w : exts[vis[0]]) {
          std::vector<int> sig;
          std::vector<std::tuple<int, int, long long>> d;
          for (auto [x, y] : up) {
            const bool xy = w.prefers(x, y);
            sig.push_back(xy ? 1 : 0);
            d.emplace_back(x, y, xy ? 1 : -1);
          }
          if (!seen.insert(sig).second) continue;
          opts.push_back(std::move(d));
          opt_reps.push_back(w);
        }
        ChoiceGroup g;
        g.votes = vis;
        const int k = static_cast<int>(vis.size());
        const int no = static_cast<int>(opts.size());
        std::vector<std::vector<std::tuple<int, int, long long>>> ds;
        // enumerate outcome counts (n0,...,n_{no-1}) summing to k
        std::vector<int> counts(no, 0);
        std::function<void(int, int)> enumerate = [&](int idx, int left) {
          if (idx == no - 1) {
            counts[idx] = left;
            std::map<std::pair<int, int>, long long> sum;
            for (int o = 0; o < no; ++o)
              for (auto [x, y, d] : opts[o]) sum[{x, y}] += d * counts[o];
            std::vector<std::tuple<int, int, long long>> delta;
            for (auto& [pr, v] : sum) delta.emplace_back(pr.first, pr.second, v);
            ds.push_back(std::move(delta));
            std::vector<LinearOrder> reps;
            for (int o = 0; o < no; ++o)
              for (int t = 0; t < counts[o]; ++t) reps.push_back(opt_reps[o]);
            g.reps.push_back(std::move(reps));
            return;
          }
          for (int take = 0; take <= left; ++take) {
            counts[idx] = take;
            enumerate(idx + 1, left - take);
          }
        };
        enumerate(0, k);
        b.deltas.push_back(std::move(ds));
        b.groups.push_back(std::move(g));
      }
      check_group_budget(b.groups,
                         [&](size_t gi) { return b.deltas[gi].size(); });
      b.chosen.assign(b.groups.size(), 0);
      b.undo_pool.resize(b.groups.size());
      b.recompute_all();
      b.dfs(0);
      return finish(b);
    }
    case RuleSpec::Kind::Bucklin: {
      BucklinBrute b(inst, unique);
      b.n_votes = inst.profile.n();
      if (b.n_votes < 1) throw PreconditionViolated("bucklin needs votes");
      b.cnt.assign(m, std::vector<long long>(m, 0));
      for (const auto& v : inst.profile.votes) {
        if (!v.is_complete()) continue;
        const auto& r = v.linear().ranking;
        for (int pns = 0; pns < m; ++pns) ++b.cnt[r[pns]][pns];
      }
      for (int vi = 0; vi < inst.profile.n(); ++vi) {
        if (inst.profile.votes[vi].is_complete()) continue;
        ChoiceGroup g;
        g.votes = {vi};
        std::vector<std::vector<std::pair<int, int>>> ds;
        for (const auto& w : exts[vi]) {
          std::vector<std::pair<int, int>> d;
          for (int pns = 0; pns < m; ++pns) d.emplace_back(w.ranking[pns], pns);
          ds.push_back(std::move(d));
          g.reps.push_back({w});
        }
        b.deltas.push_back(std::move(ds));
        b.groups.push_back(std::move(g));
      }
      check_group_budget(b.groups,
                         [&](size_t gi) { return b.deltas[gi].size(); });
      b.chosen.assign(b.groups.size(), 0);
      b.dfs(0);
      return finish(b);
    }
  }
  throw Error("unknown rule kind");
}

// ---------------------------------------------------------------------------
// Dispatch.

std::pair<std::string, std::string> dispatch_route(
    const PossibleWinnerInstance& inst) {
  const int t = inst.profile.max_undetermined_pairs();
  const int m = inst.profile.m();
  if (t == 0) return {"complete-check", "poly(complete-profile)"};
  switch (inst.rule.kind) {
    case RuleSpec::Kind::Scoring: {
      const auto cls = classify(*inst.rule.score_vector);
      switch (cls.label) {
        case RuleClassLabel::Differentiating:
          return {"brute-force", "np-hard(differentiating,t>=1)"};
        case RuleClassLabel::OneOneContaminated:
          if (t <= 1) return {"flow-scoring-t1", "poly(scoring,t<=1)"};
          return {"brute-force", "np-hard(11-contaminated,t>=2)"};
        case RuleClassLabel::OneZeroOneContaminated:
          if (t <= 1) return {"flow-scoring-t1", "poly(scoring,t<=1)"};
          if (t <= 2) return {"flow-scoring-t2", "poly(11-free,t<=2)"};
          return {"brute-force", "np-hard(101-contaminated,t>=3)"};
        case RuleClassLabel::ZeroOneZeroContaminated:
          if (t <= 1) return {"flow-scoring-t1", "poly(scoring,t<=1)"};
          if (t <= 2) return {"flow-scoring-t2", "poly(11-free,t<=2)"};
          if (t <= 3) return {"flow-scoring-t3", "poly(11-101-free,t<=3)"};
          return {"brute-force", "np-hard(010-contaminated,t>=4)"};
        case RuleClassLabel::TwoOneOneZero:
          if (t <= m - 2)
            return {"flow-2110", "poly(two-one-ones-zero,t<=m-2)"};
          return {"brute-force", "np-hard(two-one-ones-zero,t>=m-1)"};
        case RuleClassLabel::PluralityLike:
        case RuleClassLabel::VetoLike:
          if (t <= 1) return {"flow-scoring-t1", "poly(scoring,t<=1)"};
          if (t <= 2) return {"flow-scoring-t2", "poly(11-free,t<=2)"};
          if (t <= 3) return {"flow-scoring-t3", "poly(11-101-free,t<=3)"};
          return {"brute-force", "poly-unimplemented(plurality-veto,large-t)"};
      }
      break;
    }
    case RuleSpec::Kind::Copeland: {
      const bool boundary =
          inst.rule.alpha_num == 0 || inst.rule.alpha_num == inst.rule.alpha_den;
      if (boundary) {
        if (t <= 1)
          return {"flow-copeland-t1", "poly(copeland-boundary-alpha,t<=1)"};
        return {"brute-force", "np-hard(copeland-boundary-alpha,t>=2)"};
      }
      return {"brute-force", "np-hard(copeland-interior-alpha,t>=1)"};
    }
    case RuleSpec::Kind::Maximin:
      if (t <= 1) return {"flow-maximin-t1", "poly(maximin,t<=1)"};
      return {"brute-force", "np-hard(maximin,t>=2)"};
    case RuleSpec::Kind::Bucklin:
      if (t <= 1) return {"flow-bucklin-t1", "poly(bucklin,t<=1)"};
      return {"brute-force", "np-hard(bucklin,t>=2)"};
  }
  throw Error("unknown rule kind");
}

SolveResult dispatch(const PossibleWinnerInstance& inst,
                     unsigned long long budget) {
  check_target(inst);
  const auto [method, regime] = dispatch_route(inst);
  if (method == "complete-check") {
    Profile complete;
    complete.candidates = inst.profile.candidates;
    for (const auto& v : inst.profile.votes) complete.votes.push_back(v);
    const auto w = winners(inst.rule, complete);
    const bool yes = std::find(w.begin(), w.end(), inst.target) != w.end();
    SolveResult res{yes, std::nullopt, method, regime};
    if (yes) res.witness = complete;
    return res;
  }
  SolveResult res;
  if (method == "flow-scoring-t1")
    res = solve_scoring_t1(inst);
  else if (method == "flow-scoring-t2")
    res = solve_scoring_t2(inst);
  else if (method == "flow-scoring-t3")
    res = solve_scoring_t3(inst);
  else if (method == "flow-2110")
    res = solve_rule_2110(inst);
  else if (method == "flow-copeland-t1")
    res = solve_copeland_t1(inst);
  else if (method == "flow-maximin-t1")
    res = solve_maximin_t1(inst);
  else if (method == "flow-bucklin-t1")
    res = solve_bucklin_t1(inst);
  else
    res = solve_bruteforce(inst, budget);
  res.regime = regime;
  return res;
}

}  // namespace pw
