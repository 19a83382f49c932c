#include "pw/profile_builder.hpp"

#include <algorithm>
#include <numeric>

namespace pw {

namespace {

// Decomposes every value in `targets` as a nonnegative combination of the
// available positive differences, all shifted by one common sigma >= lo.
// Returns sigma and per-target difference multisets (as boundary indices).
struct Decomposition {
  long long sigma;
  std::vector<std::vector<int>> parts;  // boundary index per unit, per target
};

Decomposition decompose_targets(const std::vector<long long>& targets,
                                const std::vector<std::pair<int, long long>>& boundaries,
                                long long sigma_lo) {
  long long dmax = 0;
  for (auto [b, d] : boundaries) dmax = std::max(dmax, d);
  if (dmax == 0) throw InfeasibleTarget("score vector has no positive step");
  long long tmax = 0;
  for (auto t : targets) tmax = std::max(tmax, t);
  // Once the step gcd is 1 (normalized vectors guarantee it) every integer
  // beyond the Frobenius number is reachable; 2*dmax^2 safely clears it.
  const long long sigma_hi = sigma_lo + 2 * dmax * dmax + dmax + 2;
  const long long limit = tmax + sigma_hi + 1;

  std::vector<int> reach_via(static_cast<size_t>(limit) + 1, -1);
  std::vector<char> reach(static_cast<size_t>(limit) + 1, 0);
  reach[0] = 1;
  for (long long v = 1; v <= limit; ++v)
    for (size_t k = 0; k < boundaries.size(); ++k) {
      const long long d = boundaries[k].second;
      if (v >= d && reach[v - d]) {
        reach[v] = 1;
        reach_via[v] = static_cast<int>(k);
        break;
      }
    }

  for (long long sigma = std::max<long long>(sigma_lo, 1); sigma <= sigma_hi;
       ++sigma) {
    bool ok = true;
    for (auto t : targets)
      if (!reach[t + sigma]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Decomposition out;
    out.sigma = sigma;
    for (auto t : targets) {
      std::vector<int> part;
      long long v = t + sigma;
      while (v > 0) {
        const int k = reach_via[v];
        part.push_back(boundaries[k].first);
        v -= boundaries[k].second;
      }
      out.parts.push_back(std::move(part));
    }
    return out;
  }
  throw InfeasibleTarget("score offsets not expressible with this vector");
}

}  // namespace

BuiltScoreProfile build_score_profile(const ScoreVector& sv,
                                      const CandidateSet& candidates,
                                      const ScoreTarget& target) {
  const int m = candidates.size();
  if (sv.m() != m)
    throw PreconditionViolated("score vector length != candidate count");
  if (target.dummies.empty())
    throw PreconditionViolated("score target needs at least one dummy");
  std::vector<char> role(m, 0);  // 1 named, 2 dummy
  for (auto [c, x] : target.named) {
    (void)x;
    if (role[c]) throw PreconditionViolated("candidate listed twice in target");
    role[c] = 1;
  }
  for (auto c : target.dummies) {
    if (role[c]) throw PreconditionViolated("candidate listed twice in target");
    role[c] = 2;
  }
  for (int c = 0; c < m; ++c)
    if (!role[c])
      throw PreconditionViolated("every candidate must be named or dummy");

  // Positive steps of the vector, bottom boundary index b in [1, m-1]
  // between bottom-based slots b and b+1.
  std::vector<std::pair<int, long long>> boundaries;
  for (int b = 1; b < m; ++b) {
    const long long d = sv.scores[m - 1 - b] - sv.scores[m - b];
    if (d > 0) boundaries.emplace_back(b, d);
  }

  long long min_x = 0;
  for (auto [c, x] : target.named) {
    (void)c;
    min_x = std::min(min_x, x);
  }
  std::vector<long long> shifted;  // X_i - min_x, >= 0
  for (auto [c, x] : target.named) {
    (void)c;
    shifted.push_back(x - min_x);
  }

  Profile out;
  out.candidates = candidates;
  long long units = 0;

  if (!target.named.empty()) {
    const auto dec = decompose_targets(shifted, boundaries,
                                       std::max<long long>(1, target.dummy_margin + 1));
    // One unit: the m rotations of an order with (dummy, candidate) adjacent,
    // with the one rotation placing the candidate at bottom slot b swapped so
    // the candidate takes the upper side of the boundary.
    size_t dummy_rr = 0;
    for (size_t i = 0; i < target.named.size(); ++i) {
      const CandidateId u = target.named[i].first;
      for (int b : dec.parts[i]) {
        const CandidateId v = target.dummies[dummy_rr++ % target.dummies.size()];
        std::vector<CandidateId> base;
        for (int c = 0; c < m; ++c)
          if (c != u && c != v) base.push_back(c);
        base.push_back(v);
        base.push_back(u);
        // rotation r lists base[r], base[r+1], ... top to bottom
        for (int r = 0; r < m; ++r) {
          std::vector<CandidateId> rank(m);
          for (int k = 0; k < m; ++k) rank[k] = base[(r + k) % m];
          // bottom slot of u: position from top p has bottom slot m - p
          int pu = 0;
          for (int k = 0; k < m; ++k)
            if (rank[k] == u) pu = k;
          if (m - pu == b) std::swap(rank[pu], rank[pu - 1]);
          out.votes.push_back(Vote::complete(LinearOrder(std::move(rank))));
        }
        ++units;
      }
    }
    const long long lambda = sv.total() * units + dec.sigma - min_x;

    // Audit the postcondition exactly; any failure is a construction bug.
    const auto got = positional_scores(sv, out);
    for (size_t i = 0; i < target.named.size(); ++i)
      if (got[target.named[i].first] != lambda + target.named[i].second)
        throw Error("build_score_profile audit failed on named candidate");
    for (auto c : target.dummies)
      if (got[c] >= lambda - target.dummy_margin)
        throw Error("build_score_profile audit failed on dummy");
    return {std::move(out), lambda};
  }

  // No named candidates: empty profile, any positive lambda works.
  return {std::move(out), 1};
}

void MarginTarget::set(CandidateId x, CandidateId y, long long v) {
  if (x == y) throw PreconditionViolated("margin target on the diagonal");
  auto& e = entries[static_cast<size_t>(x) * m + y];
  auto& r = entries[static_cast<size_t>(y) * m + x];
  if ((e && *e != v) || (r && *r != -v))
    throw PreconditionViolated("conflicting margin target entries");
  e = v;
  r = -v;
}

Profile mcgarvey_block(const CandidateSet& candidates, CandidateId x,
                       CandidateId y) {
  const int m = candidates.size();
  std::vector<CandidateId> rest;
  for (int c = 0; c < m; ++c)
    if (c != x && c != y) rest.push_back(c);
  std::vector<CandidateId> v1{x, y};
  v1.insert(v1.end(), rest.begin(), rest.end());
  std::vector<CandidateId> v2(rest.rbegin(), rest.rend());
  v2.push_back(x);
  v2.push_back(y);
  Profile p;
  p.candidates = candidates;
  p.votes.push_back(Vote::complete(LinearOrder(std::move(v1))));
  p.votes.push_back(Vote::complete(LinearOrder(std::move(v2))));
  return p;
}

Profile build_margin_profile(const CandidateSet& candidates,
                             const MarginTarget& target) {
  const int m = candidates.size();
  if (target.m != m)
    throw PreconditionViolated("margin target size != candidate count");
  std::optional<int> parity;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const auto e = target.get(x, y);
      if (!e) continue;
      const int p = static_cast<int>(((*e % 2) + 2) % 2);
      if (parity && *parity != p)
        throw ParityError("margin targets mix odd and even entries");
      parity = p;
    }
  const int par = parity.value_or(0);

  Profile out;
  out.candidates = candidates;
  // Full target after defaults: 0 for even parity, +1 toward the smaller id
  // for odd parity.
  std::vector<long long> want(static_cast<size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const auto e = target.get(x, y);
      const long long v = e ? *e : (par == 1 ? 1 : 0);
      want[static_cast<size_t>(x) * m + y] = v;
      want[static_cast<size_t>(y) * m + x] = -v;
    }

  std::vector<long long> have(static_cast<size_t>(m) * m, 0);
  if (par == 1) {
    std::vector<CandidateId> seed(m);
    std::iota(seed.begin(), seed.end(), 0);
    out.votes.push_back(Vote::complete(LinearOrder(std::move(seed))));
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        have[static_cast<size_t>(x) * m + y] = 1;
        have[static_cast<size_t>(y) * m + x] = -1;
      }
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      long long need = want[static_cast<size_t>(x) * m + y] -
                       have[static_cast<size_t>(x) * m + y];
      if (need <= 0) continue;
      if (need % 2 != 0) throw ParityError("margin residual has wrong parity");
      for (long long k = 0; k < need / 2; ++k)
        out.append(mcgarvey_block(candidates, x, y));
    }

  const auto got = margin_matrix(out);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && got.at(x, y) != want[static_cast<size_t>(x) * m + y])
        throw Error("build_margin_profile audit failed");
  return out;
}

}  // namespace pw
