#pragma once

#include <optional>
#include <string>

#include "pw/rules.hpp"

namespace pw {

struct SolveResult {
  bool yes = false;
  std::optional<Profile> witness;  // present iff yes
  std::string method;
  std::string regime;
};

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

// Exhaustive search over the per-vote extension product.  Exact for every
// rule; throws BudgetExceeded when the extension-count product passes the
// budget.  With `unique` the target must win alone.
SolveResult solve_bruteforce(const PossibleWinnerInstance& inst,
                             unsigned long long budget = kDefaultBudget,
                             bool unique = false);

// Polynomial max-flow algorithms, one per tractable regime.  Each throws
// PreconditionViolated when the instance is outside its regime.
SolveResult solve_scoring_t1(const PossibleWinnerInstance& inst);
SolveResult solve_scoring_t2(const PossibleWinnerInstance& inst);
SolveResult solve_scoring_t3(const PossibleWinnerInstance& inst);
SolveResult solve_rule_2110(const PossibleWinnerInstance& inst);
SolveResult solve_copeland_t1(const PossibleWinnerInstance& inst);
SolveResult solve_maximin_t1(const PossibleWinnerInstance& inst);
SolveResult solve_bucklin_t1(const PossibleWinnerInstance& inst);

// Routes to the matching polynomial solver when the rule class and the
// maximum undetermined-pair count fall in a tractable regime, otherwise to
// the brute-force oracle (labelling the hard regime).
SolveResult dispatch(const PossibleWinnerInstance& inst,
                     unsigned long long budget = kDefaultBudget);

// The regime/method label dispatch would pick, without solving.
std::pair<std::string, std::string> dispatch_route(
    const PossibleWinnerInstance& inst);

}  // namespace pw
