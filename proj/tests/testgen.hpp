#pragma once

#include <random>

#include "pw/gadgets.hpp"
#include "pw/rules.hpp"
#include "pw/sources.hpp"

// Random-instance utilities shared by the unit and acceptance suites.
namespace pw::testgen {

using Rng = std::mt19937_64;

// Random linear order over m candidates.
LinearOrder random_linear(int m, Rng& rng);

// Random partial vote built by deleting `pairs` deletable pairs from a random
// linear order (a pair is deletable when transitivity cannot re-force it).
// May return fewer deletions when the process gets stuck.
PartialOrder random_partial(int m, int pairs, Rng& rng);

// Vote with a specific undetermined-pair shape over 3-4 candidates occupying
// consecutive positions of a random linear order.
enum class Shape {
  SinglePair,      // {x,y}
  TwoDisjoint,     // {x,y},{z,w}
  Path3,           // {x,y},{y,z}
  Triangle,        // {x,y},{y,z},{x,z}
  Path3PlusPair,   // path3 and a disjoint pair
  ThreeDisjoint,   // three disjoint pairs
  Star4,           // {x,a},{x,b},{x,c}
};
PartialOrder shaped_partial(int m, Shape shape, Rng& rng);

// Random profile of n votes with at most t undetermined pairs each.
Profile random_profile(int m, int n, int t, Rng& rng);

// Borda-like score vector (differences in {0,1}) of length m, nonconstant.
ScoreVector random_borda_like(int m, Rng& rng);
// Score vector whose difference vector avoids <1,1> (and optionally <1,0,1>).
ScoreVector random_11_free(int m, bool also_101_free, Rng& rng);
// (4,3,1,1,0,...,0): smooth, differentiating, with separated steps.
ScoreVector differentiating_vector(int m);
// (2,...,2,1,1,0): smooth, <1,1>-free, <1,0,1>-contaminated at every m >= 4.
ScoreVector one_zero_one_vector(int m);

// Planted-satisfiable (3,B2)-SAT over n variables (n divisible by 3).
Sat3B2Instance random_sat3b2(int n, Rng& rng);

// 3DM with a planted perfect matching plus `extra` random triples; with
// `cap3` every element lies in at most three triples.
ThreeDMInstance random_3dm_planted(int m, int extra, bool cap3, Rng& rng);
// 3DM with no perfect matching (verified), t triples.
ThreeDMInstance random_3dm_no(int m, int t, bool cap3, Rng& rng);
// 3DM where every element lies in exactly three triples (t = 3m), with or
// without a perfect matching as requested.
ThreeDMInstance random_3dm_exact3(int m, bool want_matching, Rng& rng);

// d-regular multicolored instances at desk scale.
MulticoloredISInstance mis_matching_yes(Rng& rng);  // d=1, k=2, solvable
MulticoloredISInstance mis_k22_no(Rng& rng);        // K_{2,2}, unsolvable

}  // namespace pw::testgen
