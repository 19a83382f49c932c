#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pw/rules.hpp"

namespace pw {

// Target for an exact-score profile: every named candidate i ends at
// lambda + offset_i for one common lambda, every dummy strictly below
// lambda - dummy_margin.
struct ScoreTarget {
  std::vector<std::pair<CandidateId, long long>> named;  // (candidate, X_i)
  std::vector<CandidateId> dummies;                      // nonempty
  long long dummy_margin = 0;
};

struct BuiltScoreProfile {
  Profile profile;
  long long lambda;
};

// Complete profile with positional_scores(c_i) == lambda + X_i exactly and
// every dummy strictly below lambda - margin.  Named and dummy candidates
// must partition the candidate set; |sv| must equal the candidate count.
BuiltScoreProfile build_score_profile(const ScoreVector& sv,
                                      const CandidateSet& candidates,
                                      const ScoreTarget& target);

// Antisymmetric margin target; unset entries take the default for the parity
// (0 for even targets, +1 toward the smaller candidate id for odd ones).
struct MarginTarget {
  int m = 0;
  std::vector<std::optional<long long>> entries;

  explicit MarginTarget(int m_)
      : m(m_), entries(static_cast<size_t>(m_) * m_) {}
  void set(CandidateId x, CandidateId y, long long v);
  std::optional<long long> get(CandidateId x, CandidateId y) const {
    return entries[static_cast<size_t>(x) * m + y];
  }
};

// Complete profile whose margin matrix equals the target exactly on all
// specified entries and the parity default elsewhere.  Mixed parities raise
// ParityError.
Profile build_margin_profile(const CandidateSet& candidates,
                             const MarginTarget& target);

// Two complete votes raising D(x,y) by exactly 2 and nothing else.
Profile mcgarvey_block(const CandidateSet& candidates, CandidateId x,
                       CandidateId y);

}  // namespace pw
