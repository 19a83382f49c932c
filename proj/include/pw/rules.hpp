#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pw/election.hpp"

namespace pw {

// Normalized positional score vector, best position first: last entry 0 and
// gcd of the positive entries 1.
struct ScoreVector {
  std::vector<long long> scores;

  int m() const { return static_cast<int>(scores.size()); }
  long long at_position(int pos_from_top) const { return scores[pos_from_top]; }
  long long total() const;

  // Subtract the minimum, divide by the gcd of the positive entries.
  // Accepts any nonincreasing sequence with first > last; idempotent.
  static ScoreVector normalize(std::vector<long long> raw);

  static ScoreVector plurality(int m);
  static ScoreVector veto(int m);
  static ScoreVector k_approval(int k, int m);
  static ScoreVector k_veto(int k, int m);
  static ScoreVector borda(int m);
  // (2, 1, ..., 1, 0)
  static ScoreVector two_one_one_zero(int m);

  bool operator==(const ScoreVector& o) const { return scores == o.scores; }
};

struct RuleSpec {
  enum class Kind { Scoring, Copeland, Maximin, Bucklin };
  Kind kind = Kind::Scoring;
  std::optional<ScoreVector> score_vector;  // Scoring only
  long long alpha_num = 0, alpha_den = 1;   // Copeland only, reduced, in [0,1]

  static RuleSpec scoring(ScoreVector sv);
  static RuleSpec copeland(long long p, long long q);
  static RuleSpec maximin();
  static RuleSpec bucklin();

  bool is_scoring() const { return kind == Kind::Scoring; }
  std::string describe() const;
};

// Antisymmetric pairwise-margin matrix of a complete profile.
struct MarginMatrix {
  int m = 0;
  int n = 0;  // voter count
  std::vector<long long> d;

  MarginMatrix() = default;
  MarginMatrix(int m_, int n_) : m(m_), n(n_), d(static_cast<size_t>(m_) * m_, 0) {}
  long long& at(CandidateId x, CandidateId y) {
    return d[static_cast<size_t>(x) * m + y];
  }
  long long at(CandidateId x, CandidateId y) const {
    return d[static_cast<size_t>(x) * m + y];
  }
};

MarginMatrix margin_matrix(const Profile& profile);  // pre: complete

std::vector<long long> positional_scores(const ScoreVector& sv,
                                         const Profile& profile);

// Copeland^alpha scores scaled by the denominator q: q*wins + p*ties.
std::vector<long long> copeland_scores(const MarginMatrix& d, long long p,
                                       long long q);

std::vector<long long> maximin_scores(const MarginMatrix& d);  // pre: m >= 2

struct BucklinResult {
  int depth;  // minimal l at which some candidate exceeds n/2 strictly
  std::vector<CandidateId> winners;
  std::vector<long long> counts_at_depth;  // top-l placements per candidate
};
BucklinResult bucklin_winners(const Profile& profile);  // pre: complete, n >= 1

// Per-candidate placement counts within the top `depth` positions.
std::vector<long long> top_counts(const Profile& profile, int depth);

std::vector<CandidateId> winners(const RuleSpec& rule, const Profile& profile);

struct PossibleWinnerInstance {
  Profile profile;
  CandidateId target = 0;
  RuleSpec rule;
};

}  // namespace pw
