#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pw/errors.hpp"

namespace pw {

// 3-SAT restricted to formulas where each variable occurs exactly twice
// positively and twice negatively.  Literals are +-(v+1) for variable v.
struct Sat3B2Instance {
  int n_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  int n_clauses() const { return static_cast<int>(clauses.size()); }
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
  std::optional<std::vector<bool>> brute_solve() const;
};

// Three Dimensional Matching over X, Y, Z of size m each; triples hold one
// 0-based index per axis.  `triples` may repeat entries.
struct ThreeDMInstance {
  int m = 0;
  std::vector<std::array<int, 3>> triples;

  int t() const { return static_cast<int>(triples.size()); }
  void validate(bool occurrence_cap_3 = false) const;
  int occurrences(int axis, int value) const;
  bool is_perfect_matching(const std::vector<int>& triple_indices) const;
  std::optional<std::vector<int>> brute_solve() const;
};

// d-regular graph partitioned into k independent color classes; asks for an
// independent transversal.
struct MulticoloredISInstance {
  int d = 0;
  std::vector<std::vector<int>> classes;  // vertex ids, a partition of 0..V-1
  std::vector<std::pair<int, int>> edges;

  int k() const { return static_cast<int>(classes.size()); }
  int vertex_count() const;
  int class_of(int v) const;
  bool adjacent(int u, int v) const;
  void validate() const;
  bool is_solution(const std::vector<int>& picks) const;  // one vertex per class
  std::optional<std::vector<int>> brute_solve() const;
};

struct SatAssignment {
  std::vector<bool> values;
};
struct Matching {
  std::vector<int> triple_indices;
};
struct IndependentTransversal {
  std::vector<int> vertices;  // one per class, class order
};

}  // namespace pw
