#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pw/rules.hpp"

namespace pw {

// Consecutive score differences stored bottom-up: diffs[i] = a_{i+2} - a_{i+1}
// in bottom-indexed score coordinates, i = 0..m-2.
struct DifferenceVector {
  std::vector<long long> diffs;
  int size() const { return static_cast<int>(diffs.size()); }
};

DifferenceVector difference_vector(const ScoreVector& sv);

long long delta_min(const ScoreVector& sv);  // smallest nonzero difference
long long delta_max(const ScoreVector& sv);  // largest difference, always > 0

bool is_differentiating_at(const ScoreVector& sv);

// True iff `t` occurs as a contiguous subvector of `dv`.
bool contains_pattern(const DifferenceVector& dv,
                      const std::vector<long long>& t);

// True iff `next` arises from `prev` by inserting one value at an admissible
// position (either endpoint, or between two equal adjacent scores).  Raw
// (pre-normalization) vectors accepted.
bool smooth_step_check(const std::vector<long long>& prev,
                       const std::vector<long long>& next);

enum class RuleClassLabel {
  PluralityLike,
  VetoLike,
  TwoOneOneZero,
  Differentiating,
  OneOneContaminated,
  OneZeroOneContaminated,
  ZeroOneZeroContaminated,
};

std::string to_string(RuleClassLabel label);

struct RuleClass {
  RuleClassLabel label;
  // Minimal t for which the problem is hard; nullopt when no hardness is
  // known for any t (plurality/veto shapes).
  std::optional<long long> hard_threshold;
  bool threshold_is_m_minus_1 = false;
};

RuleClass classify(const ScoreVector& sv);

enum class FamilyProperty {
  Differentiating,
  OneOneContaminated,
  ZeroOneZeroContaminated,
};

struct MonotoneCheckResult {
  int first_m;  // smallest m in the family range where the property holds
  bool persists;
};

// family[i] is the raw score vector for m = m0 + i; consecutive vectors must
// pass smooth_step_check (SmoothnessViolation otherwise).  Finds the first m
// with the property and verifies it holds at every larger m in the range.
MonotoneCheckResult monotone_pattern_check(
    const std::vector<std::vector<long long>>& family, int m0,
    FamilyProperty property);

}  // namespace pw
