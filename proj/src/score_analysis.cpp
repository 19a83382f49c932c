#include "pw/score_analysis.hpp"

#include <algorithm>

namespace pw {

DifferenceVector difference_vector(const ScoreVector& sv) {
  DifferenceVector dv;
  const auto& s = sv.scores;  // best first
  for (int i = static_cast<int>(s.size()) - 1; i >= 1; --i)
    dv.diffs.push_back(s[i - 1] - s[i]);
  return dv;
}

long long delta_min(const ScoreVector& sv) {
  long long mn = 0;
  for (auto d : difference_vector(sv).diffs)
    if (d > 0 && (mn == 0 || d < mn)) mn = d;
  return mn;
}

long long delta_max(const ScoreVector& sv) {
  const auto dv = difference_vector(sv);
  return *std::max_element(dv.diffs.begin(), dv.diffs.end());
}

bool is_differentiating_at(const ScoreVector& sv) {
  return delta_max(sv) != delta_min(sv);
}

bool contains_pattern(const DifferenceVector& dv,
                      const std::vector<long long>& t) {
  const int n = dv.size(), k = static_cast<int>(t.size());
  if (k > n) throw PreconditionViolated("pattern longer than difference vector");
  for (int i = 0; i + k <= n; ++i) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) ok = dv.diffs[i + j] == t[j];
    if (ok) return true;
  }
  return false;
}

bool smooth_step_check(const std::vector<long long>& prev,
                       const std::vector<long long>& next) {
  const int m = static_cast<int>(next.size());
  if (static_cast<int>(prev.size()) + 1 != m)
    throw PreconditionViolated("lengths must differ by one");
  // Try removing next[j] (vectors stored best-first); insertion position from
  // the right is i = (m-1) - j.  Admissible: i == 0, i == m-1, or prev's
  // adjacent entries around the slot are equal.
  for (int j = 0; j < m; ++j) {
    std::vector<long long> cand;
    cand.reserve(m - 1);
    for (int k = 0; k < m; ++k)
      if (k != j) cand.push_back(next[k]);
    if (cand != prev) continue;
    const int i = (m - 1) - j;
    if (i == 0 || i == m - 1) return true;
    // prev entries adjacent to the slot, bottom-indexed i and i+1:
    // prev[(m-1)-1 - (i-1)] and prev[(m-1)-1 - i] in best-first storage.
    const long long below = prev[(m - 2) - (i - 1)];
    const long long above = prev[(m - 2) - i];
    if (below == above) return true;
  }
  return false;
}

std::string to_string(RuleClassLabel label) {
  switch (label) {
    case RuleClassLabel::PluralityLike: return "plurality-like";
    case RuleClassLabel::VetoLike: return "veto-like";
    case RuleClassLabel::TwoOneOneZero: return "two-one-ones-zero";
    case RuleClassLabel::Differentiating: return "differentiating";
    case RuleClassLabel::OneOneContaminated: return "11-contaminated";
    case RuleClassLabel::OneZeroOneContaminated: return "101-contaminated";
    case RuleClassLabel::ZeroOneZeroContaminated: return "010-contaminated";
  }
  return "?";
}

RuleClass classify(const ScoreVector& sv) {
  const auto dv = difference_vector(sv);
  if (is_differentiating_at(sv))
    return {RuleClassLabel::Differentiating, 1, false};
  // Borda-like at this m: all differences are 0 or 1.
  if (contains_pattern(dv, {1, 1}))
    return {RuleClassLabel::OneOneContaminated, 2, false};
  if (dv.size() >= 3 && contains_pattern(dv, {1, 0, 1}))
    return {RuleClassLabel::OneZeroOneContaminated, 3, false};
  if (dv.size() >= 3 && contains_pattern(dv, {0, 1, 0}))
    return {RuleClassLabel::ZeroOneZeroContaminated, 4, false};
  // Remaining shapes: at most two 1s, none adjacent, none strictly interior.
  const int n = dv.size();
  int ones = 0;
  for (auto d : dv.diffs) ones += (d == 1);
  if (ones == 2) {
    // forced shape <1,0,...,0,1>, i.e. the rule (2,1,...,1,0)
    return {RuleClassLabel::TwoOneOneZero, sv.m() - 1, true};
  }
  if (dv.diffs[n - 1] == 1) return {RuleClassLabel::PluralityLike, std::nullopt, false};
  return {RuleClassLabel::VetoLike, std::nullopt, false};
}

MonotoneCheckResult monotone_pattern_check(
    const std::vector<std::vector<long long>>& family, int m0,
    FamilyProperty property) {
  if (family.empty()) throw PreconditionViolated("empty family");
  for (size_t i = 1; i < family.size(); ++i)
    if (!smooth_step_check(family[i - 1], family[i]))
      throw SmoothnessViolation("family step " + std::to_string(m0 + (int)i - 1) +
                                " -> " + std::to_string(m0 + (int)i) +
                                " is not an admissible insertion");
  auto holds = [&](const std::vector<long long>& raw) {
    const auto sv = ScoreVector::normalize(raw);
    const auto dv = difference_vector(sv);
    switch (property) {
      case FamilyProperty::Differentiating:
        return is_differentiating_at(sv);
      case FamilyProperty::OneOneContaminated:
        return dv.size() >= 2 && contains_pattern(dv, {1, 1});
      case FamilyProperty::ZeroOneZeroContaminated:
        return dv.size() >= 3 && contains_pattern(dv, {0, 1, 0});
    }
    return false;
  };
  int first = -1;
  bool persists = true;
  for (size_t i = 0; i < family.size(); ++i) {
    const bool h = holds(family[i]);
    if (h && first < 0) first = m0 + static_cast<int>(i);
    if (!h && first >= 0) persists = false;
  }
  if (first < 0)
    throw PatternAbsent("property holds at no m in the supplied range");
  return {first, persists};
}

}  // namespace pw
