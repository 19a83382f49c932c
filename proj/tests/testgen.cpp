#include "testgen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pw/score_analysis.hpp"

namespace pw::testgen {

LinearOrder random_linear(int m, Rng& rng) {
  std::vector<CandidateId> r(m);
  std::iota(r.begin(), r.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  return LinearOrder(std::move(r));
}

namespace {

PartialOrder delete_pairs(const LinearOrder& base,
                          const std::vector<std::pair<int, int>>& removed) {
  auto pairs = PartialOrder::from_linear(base).strict_pairs();
  std::vector<std::pair<int, int>> kept;
  for (auto pr : pairs)
    if (std::find(removed.begin(), removed.end(), pr) == removed.end())
      kept.push_back(pr);
  return PartialOrder::close_and_validate(base.size(), kept);
}

}  // namespace

PartialOrder random_partial(int m, int pairs, Rng& rng) {
  auto cur = PartialOrder::from_linear(random_linear(m, rng));
  for (int step = 0; step < pairs; ++step) {
    // deletable pairs: (x,y) with no z strictly between them
    std::vector<std::pair<int, int>> options;
    for (auto [x, y] : cur.strict_pairs()) {
      bool between = false;
      for (int z = 0; z < m && !between; ++z)
        if (z != x && z != y && cur.prefers(x, z) && cur.prefers(z, y))
          between = true;
      if (!between) options.emplace_back(x, y);
    }
    if (options.empty()) break;
    const auto [x, y] = options[rng() % options.size()];
    std::vector<std::pair<int, int>> kept;
    for (auto pr : cur.strict_pairs())
      if (pr != std::make_pair(x, y)) kept.push_back(pr);
    cur = PartialOrder::close_and_validate(m, kept);
  }
  return cur;
}

PartialOrder shaped_partial(int m, Shape shape, Rng& rng) {
  const auto base = random_linear(m, rng);
  auto at = [&](int offset_from_bottom) {
    return base.ranking[m - 1 - offset_from_bottom];
  };
  // work on a consecutive window at a random height
  const int need = shape == Shape::SinglePair ? 2
                   : shape == Shape::Path3 || shape == Shape::Triangle ? 3
                   : shape == Shape::TwoDisjoint                       ? 4
                                                                       : 6;
  const int lift =
      need >= m ? 0 : static_cast<int>(rng() % static_cast<unsigned>(m - need + 1));
  auto w = [&](int i) { return at(lift + i); };  // i = 0 bottom of the window
  std::vector<std::pair<int, int>> removed;
  switch (shape) {
    case Shape::SinglePair:
      removed = {{w(1), w(0)}};
      break;
    case Shape::TwoDisjoint:
      removed = {{w(1), w(0)}, {w(3), w(2)}};
      break;
    case Shape::Path3:
      removed = {{w(2), w(1)}, {w(2), w(0)}};  // top floats over the two below
      break;
    case Shape::Triangle:
      removed = {{w(2), w(1)}, {w(2), w(0)}, {w(1), w(0)}};
      break;
    case Shape::Path3PlusPair:
      removed = {{w(2), w(1)}, {w(2), w(0)}, {w(4), w(3)}};
      break;
    case Shape::ThreeDisjoint:
      removed = {{w(1), w(0)}, {w(3), w(2)}, {w(5), w(4)}};
      break;
    case Shape::Star4:
      removed = {{w(3), w(2)}, {w(3), w(1)}, {w(3), w(0)}};
      break;
  }
  if (need > m) throw Error("shaped_partial: m too small for shape");
  return delete_pairs(base, removed);
}

Profile random_profile(int m, int n, int t, Rng& rng) {
  Profile p;
  p.candidates = CandidateSet::numbered(m);
  for (int i = 0; i < n; ++i) {
    const int pairs = static_cast<int>(rng() % static_cast<unsigned>(t + 1));
    p.votes.push_back(Vote::partial(random_partial(m, pairs, rng)));
  }
  return p;
}

ScoreVector random_borda_like(int m, Rng& rng) {
  while (true) {
    std::vector<long long> diffs(m - 1);
    bool any = false;
    for (auto& d : diffs) {
      d = rng() % 2;
      any = any || d == 1;
    }
    if (!any) continue;
    std::vector<long long> raw(m, 0);
    for (int i = m - 2; i >= 0; --i) raw[i] = raw[i + 1] + diffs[i];
    return ScoreVector::normalize(std::move(raw));
  }
}

ScoreVector random_11_free(int m, bool also_101_free, Rng& rng) {
  while (true) {
    const auto sv = random_borda_like(m, rng);
    const auto dv = difference_vector(sv);
    if (contains_pattern(dv, {1, 1})) continue;
    if (also_101_free && dv.size() >= 3 && contains_pattern(dv, {1, 0, 1}))
      continue;
    return sv;
  }
}

ScoreVector differentiating_vector(int m) {
  if (m < 5) throw Error("differentiating family needs m >= 5");
  std::vector<long long> raw(m, 0);
  raw[0] = 4;
  raw[1] = 3;
  raw[2] = 1;
  raw[3] = 1;
  return ScoreVector::normalize(std::move(raw));
}

ScoreVector one_zero_one_vector(int m) {
  if (m < 4) throw Error("(2,...,2,1,1,0) needs m >= 4");
  std::vector<long long> raw(m, 2);
  raw[m - 3] = 1;
  raw[m - 2] = 1;
  raw[m - 1] = 0;
  return ScoreVector::normalize(std::move(raw));
}

Sat3B2Instance random_sat3b2(int n, Rng& rng) {
  if (n % 3 != 0) throw Error("(3,B2) needs n divisible by 3");
  const int t = 4 * n / 3;
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<int> slots;
    for (int v = 1; v <= n; ++v) {
      slots.push_back(v);
      slots.push_back(v);
      slots.push_back(-v);
      slots.push_back(-v);
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    Sat3B2Instance s;
    s.n_vars = n;
    bool ok = true;
    for (int j = 0; j < t && ok; ++j) {
      std::array<int, 3> cl{slots[3 * j], slots[3 * j + 1], slots[3 * j + 2]};
      const int a = std::abs(cl[0]), b = std::abs(cl[1]), c = std::abs(cl[2]);
      if (a == b || a == c || b == c) ok = false;
      s.clauses.push_back(cl);
    }
    if (!ok) continue;
    s.validate();
    if (!s.brute_solve()) continue;  // keep planted-satisfiable semantics
    return s;
  }
  throw Error("could not sample a (3,B2) instance");
}

ThreeDMInstance random_3dm_planted(int m, int extra, bool cap3, Rng& rng) {
  for (int attempt = 0; attempt < 20000; ++attempt) {
    ThreeDMInstance t;
    t.m = m;
    std::vector<int> ys(m), zs(m);
    std::iota(ys.begin(), ys.end(), 0);
    std::iota(zs.begin(), zs.end(), 0);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::shuffle(zs.begin(), zs.end(), rng);
    for (int i = 0; i < m; ++i)
      t.triples.push_back({i, ys[i], zs[i]});
    for (int e = 0; e < extra; ++e)
      t.triples.push_back({static_cast<int>(rng() % m),
                           static_cast<int>(rng() % m),
                           static_cast<int>(rng() % m)});
    std::shuffle(t.triples.begin(), t.triples.end(), rng);
    if (cap3) {
      bool ok = true;
      for (int axis = 0; axis < 3 && ok; ++axis)
        for (int v = 0; v < m && ok; ++v)
          ok = t.occurrences(axis, v) <= 3;
      if (!ok) continue;
    }
    return t;
  }
  throw Error("could not sample a planted 3dm instance");
}

ThreeDMInstance random_3dm_no(int m, int tt, bool cap3, Rng& rng) {
  for (int attempt = 0; attempt < 50000; ++attempt) {
    ThreeDMInstance t;
    t.m = m;
    for (int e = 0; e < tt; ++e)
      t.triples.push_back({static_cast<int>(rng() % m),
                           static_cast<int>(rng() % m),
                           static_cast<int>(rng() % m)});
    if (cap3) {
      bool ok = true;
      for (int axis = 0; axis < 3 && ok; ++axis)
        for (int v = 0; v < m && ok; ++v)
          ok = t.occurrences(axis, v) <= 3;
      if (!ok) continue;
    }
    if (t.brute_solve()) continue;
    return t;
  }
  throw Error("could not sample a matchingless 3dm instance");
}

ThreeDMInstance random_3dm_exact3(int m, bool want_matching, Rng& rng) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    ThreeDMInstance t;
    t.m = m;
    std::vector<int> ys, zs;
    for (int v = 0; v < m; ++v)
      for (int r = 0; r < 3; ++r) {
        ys.push_back(v);
        zs.push_back(v);
      }
    std::shuffle(ys.begin(), ys.end(), rng);
    std::shuffle(zs.begin(), zs.end(), rng);
    for (int i = 0; i < 3 * m; ++i) t.triples.push_back({i / 3, ys[i], zs[i]});
    if (t.brute_solve().has_value() != want_matching) continue;
    return t;
  }
  throw Error("could not sample an exact-3 3dm instance");
}

MulticoloredISInstance mis_matching_yes(Rng& rng) {
  // d = 1, two classes of two vertices, a random perfect matching across
  MulticoloredISInstance g;
  g.d = 1;
  g.classes = {{0, 1}, {2, 3}};
  if (rng() % 2)
    g.edges = {{0, 2}, {1, 3}};
  else
    g.edges = {{0, 3}, {1, 2}};
  g.validate();
  return g;
}

MulticoloredISInstance mis_k22_no(Rng& rng) {
  (void)rng;
  MulticoloredISInstance g;
  g.d = 2;
  g.classes = {{0, 1}, {2, 3}};
  g.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  g.validate();
  return g;
}

}  // namespace pw::testgen
