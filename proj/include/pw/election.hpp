#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pw/errors.hpp"

namespace pw {

using CandidateId = int;

// Dense candidate ids 0..m-1 with unique display labels.
struct CandidateSet {
  std::vector<std::string> labels;

  CandidateSet() = default;
  explicit CandidateSet(std::vector<std::string> ls);
  static CandidateSet numbered(int m, const std::string& prefix = "c");

  int size() const { return static_cast<int>(labels.size()); }
  const std::string& label(CandidateId c) const { return labels[c]; }
  std::optional<CandidateId> find(const std::string& label) const;
};

// Complete ranking, best candidate first.
struct LinearOrder {
  std::vector<CandidateId> ranking;

  LinearOrder() = default;
  explicit LinearOrder(std::vector<CandidateId> r) : ranking(std::move(r)) {}

  int size() const { return static_cast<int>(ranking.size()); }
  // 0-based position from the top.
  int position_of(CandidateId c) const;
  bool prefers(CandidateId x, CandidateId y) const;
  LinearOrder reversed() const;

  bool operator==(const LinearOrder& o) const { return ranking == o.ranking; }
};

// Strict, transitively closed preference relation.  Reflexive pairs are never
// stored; antisymmetry and closure are established at construction and
// preserved by every operation.
class PartialOrder {
 public:
  PartialOrder() : m_(0) {}
  explicit PartialOrder(int m) : m_(m), rel_(static_cast<size_t>(m) * m, 0) {}

  // Transitive closure of `pairs`; throws CycleError when the input relation
  // contains a directed cycle (antisymmetry of the closure fails).
  static PartialOrder close_and_validate(
      int m, const std::vector<std::pair<CandidateId, CandidateId>>& pairs);
  static PartialOrder from_linear(const LinearOrder& w);

  int candidate_count() const { return m_; }
  bool prefers(CandidateId x, CandidateId y) const {
    return rel_[static_cast<size_t>(x) * m_ + y] != 0;
  }
  bool comparable(CandidateId x, CandidateId y) const {
    return prefers(x, y) || prefers(y, x);
  }

  std::vector<std::pair<CandidateId, CandidateId>> strict_pairs() const;
  // All unordered {x,y}, x<y, with neither direction present.
  std::vector<std::pair<CandidateId, CandidateId>> undetermined_pairs() const;
  int undetermined_pair_count() const;
  bool is_complete() const { return undetermined_pair_count() == 0; }

  // Requires completeness.
  LinearOrder as_linear() const;

  // Closure of this relation plus (x,y); {x,y} must be undetermined.
  PartialOrder with_pair_fixed(CandidateId x, CandidateId y) const;

  // Extension placing `c` as high as possible: a >. c only when forced, c's
  // relation to every candidate becomes determined.
  PartialOrder pushed_up(CandidateId c) const;

  bool operator==(const PartialOrder& o) const {
    return m_ == o.m_ && rel_ == o.rel_;
  }

 private:
  int m_;
  std::vector<uint8_t> rel_;  // rel_[x*m+y] = 1  iff  x is preferred to y

  void set(CandidateId x, CandidateId y) {
    rel_[static_cast<size_t>(x) * m_ + y] = 1;
  }
  friend PartialOrder closure_of(int m, std::vector<uint8_t> rel);
};

bool is_extension(const LinearOrder& w, const PartialOrder& v);

// Enumerates every linear extension in lexicographic order of the emitted
// ranking.  The callback returns false to stop early.
void for_each_extension(const PartialOrder& v,
                        const std::function<bool(const LinearOrder&)>& fn);
std::vector<LinearOrder> linear_extensions(const PartialOrder& v);
// Counts extensions, stopping at `cap` (returns cap when there are >= cap).
unsigned long long count_extensions(const PartialOrder& v,
                                    unsigned long long cap);
// Lexicographically smallest extension.
LinearOrder first_extension(const PartialOrder& v);

// A vote: complete votes keep only their ranking, partial votes the closed
// relation.  Gadget profiles carry thousands of complete votes, so the m^2
// representation is reserved for the few genuinely partial ones.
class Vote {
 public:
  static Vote complete(LinearOrder w);
  static Vote partial(PartialOrder v);

  bool is_complete() const { return partial_ == nullptr; }
  const LinearOrder& linear() const { return linear_; }  // pre: complete
  const PartialOrder& order() const;                     // pre: partial
  PartialOrder as_order() const;  // materializes for complete votes
  int candidate_count() const;
  int undetermined_pair_count() const {
    return partial_ ? partial_->undetermined_pair_count() : 0;
  }

 private:
  LinearOrder linear_;
  std::shared_ptr<const PartialOrder> partial_;
};

struct Profile {
  CandidateSet candidates;
  std::vector<Vote> votes;

  int m() const { return candidates.size(); }
  int n() const { return static_cast<int>(votes.size()); }
  bool complete() const;
  int max_undetermined_pairs() const;
  void append(const Profile& other);  // same candidate set
};

}  // namespace pw
