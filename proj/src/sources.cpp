#include "pw/sources.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace pw {

void Sat3B2Instance::validate() const {
  if (n_vars <= 0) throw Error("sat instance needs variables");
  std::vector<int> pos(n_vars, 0), neg(n_vars, 0);
  for (const auto& cl : clauses) {
    for (int lit : cl) {
      if (lit == 0 || std::abs(lit) > n_vars)
        throw Error("literal out of range");
      if (lit > 0)
        ++pos[lit - 1];
      else
        ++neg[-lit - 1];
    }
    if (std::abs(cl[0]) == std::abs(cl[1]) || std::abs(cl[0]) == std::abs(cl[2]) ||
        std::abs(cl[1]) == std::abs(cl[2]))
      throw Error("clause repeats a variable");
  }
  for (int v = 0; v < n_vars; ++v)
    if (pos[v] != 2 || neg[v] != 2)
      throw OccurrenceCapViolated(
          "variable " + std::to_string(v + 1) +
          " must occur exactly twice positively and twice negatively");
}

bool Sat3B2Instance::satisfied_by(const std::vector<bool>& a) const {
  for (const auto& cl : clauses) {
    bool ok = false;
    for (int lit : cl)
      ok = ok || (lit > 0 ? a[lit - 1] : !a[-lit - 1]);
    if (!ok) return false;
  }
  return true;
}

std::optional<std::vector<bool>> Sat3B2Instance::brute_solve() const {
  if (n_vars > 30) throw Error("sat brute force capped at 30 variables");
  for (unsigned long long mask = 0; mask < (1ULL << n_vars); ++mask) {
    std::vector<bool> a(n_vars);
    for (int v = 0; v < n_vars; ++v) a[v] = (mask >> v) & 1;
    if (satisfied_by(a)) return a;
  }
  return std::nullopt;
}

void ThreeDMInstance::validate(bool occurrence_cap_3) const {
  if (m <= 0) throw Error("3dm instance needs m > 0");
  for (const auto& tr : triples)
    for (int axis = 0; axis < 3; ++axis)
      if (tr[axis] < 0 || tr[axis] >= m)
        throw Error("triple element out of range");
  if (occurrence_cap_3)
    for (int axis = 0; axis < 3; ++axis)
      for (int v = 0; v < m; ++v)
        if (occurrences(axis, v) > 3)
          throw OccurrenceCapViolated("element occurs in more than 3 triples");
}

int ThreeDMInstance::occurrences(int axis, int value) const {
  int c = 0;
  for (const auto& tr : triples) c += tr[axis] == value;
  return c;
}

bool ThreeDMInstance::is_perfect_matching(
    const std::vector<int>& triple_indices) const {
  if (static_cast<int>(triple_indices.size()) != m) return false;
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<char> hit(m, 0);
    for (int ti : triple_indices) {
      if (ti < 0 || ti >= t()) return false;
      if (hit[triples[ti][axis]]) return false;
      hit[triples[ti][axis]] = 1;
    }
  }
  return true;
}

std::optional<std::vector<int>> ThreeDMInstance::brute_solve() const {
  std::vector<int> chosen;
  std::vector<char> used(3 * m, 0);  // axis*m + value
  std::function<bool(int)> rec = [&](int covered_x) -> bool {
    if (covered_x == m) return true;
    // next uncovered x value, in order
    int x = 0;
    while (used[x]) ++x;
    for (int ti = 0; ti < t(); ++ti) {
      const auto& tr = triples[ti];
      if (tr[0] != x) continue;
      if (used[m + tr[1]] || used[2 * m + tr[2]]) continue;
      used[tr[0]] = used[m + tr[1]] = used[2 * m + tr[2]] = 1;
      chosen.push_back(ti);
      if (rec(covered_x + 1)) return true;
      chosen.pop_back();
      used[tr[0]] = used[m + tr[1]] = used[2 * m + tr[2]] = 0;
    }
    return false;
  };
  if (rec(0)) return chosen;
  return std::nullopt;
}

int MulticoloredISInstance::vertex_count() const {
  int n = 0;
  for (const auto& cl : classes) n += static_cast<int>(cl.size());
  return n;
}

int MulticoloredISInstance::class_of(int v) const {
  for (int i = 0; i < k(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), v) != classes[i].end())
      return i;
  throw Error("vertex not in any class");
}

bool MulticoloredISInstance::adjacent(int u, int v) const {
  for (auto [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

void MulticoloredISInstance::validate() const {
  const int n = vertex_count();
  std::vector<char> seen(n, 0);
  for (const auto& cl : classes)
    for (int v : cl) {
      if (v < 0 || v >= n || seen[v]) throw Error("classes must partition 0..V-1");
      seen[v] = 1;
    }
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw Error("bad edge");
    ++deg[a];
    ++deg[b];
  }
  for (int v = 0; v < n; ++v)
    if (deg[v] != d) throw Error("graph is not d-regular");
  for (const auto& cl : classes)
    for (size_t i = 0; i < cl.size(); ++i)
      for (size_t j = i + 1; j < cl.size(); ++j)
        if (adjacent(cl[i], cl[j]))
          throw Error("a color class is not independent");
}

bool MulticoloredISInstance::is_solution(const std::vector<int>& picks) const {
  if (static_cast<int>(picks.size()) != k()) return false;
  for (int i = 0; i < k(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), picks[i]) ==
        classes[i].end())
      return false;
  for (size_t i = 0; i < picks.size(); ++i)
    for (size_t j = i + 1; j < picks.size(); ++j)
      if (adjacent(picks[i], picks[j])) return false;
  return true;
}

std::optional<std::vector<int>> MulticoloredISInstance::brute_solve() const {
  std::vector<int> picks;
  std::function<bool(int)> rec = [&](int cls) -> bool {
    if (cls == k()) return true;
    for (int v : classes[cls]) {
      bool ok = true;
      for (int u : picks) ok = ok && !adjacent(u, v);
      if (!ok) continue;
      picks.push_back(v);
      if (rec(cls + 1)) return true;
      picks.pop_back();
    }
    return false;
  };
  if (rec(0)) return picks;
  return std::nullopt;
}

}  // namespace pw
