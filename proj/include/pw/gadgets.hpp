#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pw/profile_builder.hpp"
#include "pw/rules.hpp"
#include "pw/sources.hpp"

namespace pw {

using SourceSolution =
    std::variant<SatAssignment, Matching, IndependentTransversal>;

// A generated Possible Winner instance plus the bookkeeping linking source
// objects to candidates and votes.  Emission asserts the construction's score
// / margin / placement tables exactly and fails hard on any mismatch.
struct Gadget {
  PossibleWinnerInstance instance;
  std::string reduction;
  std::string regime;
  int max_pairs = 0;
  std::variant<Sat3B2Instance, ThreeDMInstance, MulticoloredISInstance> source;

  std::map<std::string, CandidateId> roles;  // role label -> candidate
  std::vector<std::string> vote_roles;       // per instance vote

  // vote indices by construction role
  std::vector<int> var_votes;                  // p'_i / a'_i
  std::vector<int> var_votes2;                 // b'_i (2110)
  std::vector<std::array<int, 3>> clause_votes;
  std::vector<std::array<int, 2>> pos_lit_votes, neg_lit_votes;  // copeland-sat
  std::vector<int> triple_votes;
  std::vector<std::vector<int>> vertex_votes;      // maximin, d copies per u
  std::vector<std::array<int, 2>> edge_votes;      // maximin, per edge

  CandidateId role(const std::string& r) const;
};

// Hardness reductions as instance generators.  Score vectors, when taken as
// input, must match the candidate count the construction induces.
Gadget gadget_scoring_differentiating(const Sat3B2Instance& sat,
                                      const ScoreVector& sv);
Gadget gadget_scoring_11(const ThreeDMInstance& tdm, const ScoreVector& sv);
Gadget gadget_scoring_101(const ThreeDMInstance& tdm, const ScoreVector& sv);
Gadget gadget_2110(const Sat3B2Instance& sat);
Gadget gadget_copeland_3dm(const ThreeDMInstance& tdm);
Gadget gadget_copeland_sat_low(const Sat3B2Instance& sat, long long alpha_num,
                               long long alpha_den);
Gadget gadget_copeland_sat_high(const Sat3B2Instance& sat, long long alpha_num,
                                long long alpha_den);
Gadget gadget_maximin(const MulticoloredISInstance& mis, long long lambda = 0);
Gadget gadget_bucklin(const ThreeDMInstance& tdm);

// The forward direction of the proof: completes the gadget's partial votes
// from a valid source solution; the target is asserted to co-win.
Profile witness_completion(const Gadget& g, const SourceSolution& sol);

// The reverse direction: reads a source solution off any completion where
// the target co-wins; validated against the source instance.
SourceSolution extract_solution(const Gadget& g, const Profile& completion);

}  // namespace pw
