#include "pw/election.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace pw {

CandidateSet::CandidateSet(std::vector<std::string> ls) : labels(std::move(ls)) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error("duplicate candidate label: " + l);
  }
}

CandidateSet CandidateSet::numbered(int m, const std::string& prefix) {
  std::vector<std::string> ls;
  ls.reserve(m);
  for (int i = 0; i < m; ++i) ls.push_back(prefix + std::to_string(i));
  return CandidateSet(std::move(ls));
}

std::optional<CandidateId> CandidateSet::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

int LinearOrder::position_of(CandidateId c) const {
  for (int i = 0; i < size(); ++i)
    if (ranking[i] == c) return i;
  throw Error("candidate not in ranking");
}

bool LinearOrder::prefers(CandidateId x, CandidateId y) const {
  return position_of(x) < position_of(y);
}

LinearOrder LinearOrder::reversed() const {
  auto r = ranking;
  std::reverse(r.begin(), r.end());
  return LinearOrder(std::move(r));
}

PartialOrder closure_of(int m, std::vector<uint8_t> rel) {
  // Floyd-Warshall style reachability; m stays small enough here.
  for (int k = 0; k < m; ++k) {
    const uint8_t* rk = &rel[static_cast<size_t>(k) * m];
    for (int i = 0; i < m; ++i) {
      uint8_t* ri = &rel[static_cast<size_t>(i) * m];
      if (!ri[k]) continue;
      for (int j = 0; j < m; ++j)
        if (rk[j]) ri[j] = 1;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (rel[static_cast<size_t>(i) * m + i])
      throw CycleError("relation contains a directed cycle");
    for (int j = i + 1; j < m; ++j)
      if (rel[static_cast<size_t>(i) * m + j] &&
          rel[static_cast<size_t>(j) * m + i])
        throw CycleError("relation contains a directed cycle");
  }
  PartialOrder p(m);
  p.rel_ = std::move(rel);
  return p;
}

PartialOrder PartialOrder::close_and_validate(
    int m, const std::vector<std::pair<CandidateId, CandidateId>>& pairs) {
  std::vector<uint8_t> rel(static_cast<size_t>(m) * m, 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m)
      throw Error("pair references candidate id out of range");
    if (x == y) throw CycleError("reflexive strict pair");
    rel[static_cast<size_t>(x) * m + y] = 1;
  }
  return closure_of(m, std::move(rel));
}

PartialOrder PartialOrder::from_linear(const LinearOrder& w) {
  const int m = w.size();
  PartialOrder p(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) p.set(w.ranking[i], w.ranking[j]);
  return p;
}

std::vector<std::pair<CandidateId, CandidateId>> PartialOrder::strict_pairs()
    const {
  std::vector<std::pair<CandidateId, CandidateId>> out;
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (prefers(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<CandidateId, CandidateId>>
PartialOrder::undetermined_pairs() const {
  std::vector<std::pair<CandidateId, CandidateId>> out;
  for (int x = 0; x < m_; ++x)
    for (int y = x + 1; y < m_; ++y)
      if (!comparable(x, y)) out.emplace_back(x, y);
  return out;
}

int PartialOrder::undetermined_pair_count() const {
  int c = 0;
  for (int x = 0; x < m_; ++x)
    for (int y = x + 1; y < m_; ++y)
      if (!comparable(x, y)) ++c;
  return c;
}

LinearOrder PartialOrder::as_linear() const {
  std::vector<int> above(m_, 0);
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (prefers(x, y)) ++above[y];
  std::vector<CandidateId> rank(m_, -1);
  for (int c = 0; c < m_; ++c) {
    if (rank[above[c]] != -1) throw Error("as_linear on incomplete order");
    rank[above[c]] = c;
  }
  return LinearOrder(std::move(rank));
}

PartialOrder PartialOrder::with_pair_fixed(CandidateId x, CandidateId y) const {
  if (comparable(x, y))
    throw PairDeterminedError("pair is already determined");
  auto rel = rel_;
  rel[static_cast<size_t>(x) * m_ + y] = 1;
  return closure_of(m_, std::move(rel));
}

PartialOrder PartialOrder::pushed_up(CandidateId c) const {
  auto rel = rel_;
  for (int a = 0; a < m_; ++a)
    if (a != c && !comparable(c, a)) rel[static_cast<size_t>(c) * m_ + a] = 1;
  return closure_of(m_, std::move(rel));
}

bool is_extension(const LinearOrder& w, const PartialOrder& v) {
  if (w.size() != v.candidate_count()) return false;
  const int m = w.size();
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[w.ranking[i]] = i;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (v.prefers(x, y) && pos[x] > pos[y]) return false;
  return true;
}

namespace {

struct ExtensionEnumerator {
  const PartialOrder& v;
  int m;
  std::vector<int> above_left;  // unplaced candidates preferred to this one
  std::vector<char> placed;
  std::vector<CandidateId> current;
  const std::function<bool(const LinearOrder&)>& fn;
  bool stopped = false;

  ExtensionEnumerator(const PartialOrder& v_,
                      const std::function<bool(const LinearOrder&)>& fn_)
      : v(v_), m(v_.candidate_count()), above_left(m, 0), placed(m, 0), fn(fn_) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (v.prefers(x, y)) ++above_left[y];
  }

  void run(int depth) {
    if (stopped) return;
    if (depth == m) {
      LinearOrder w(current);
      if (!fn(w)) stopped = true;
      return;
    }
    // Ascending candidate ids give lexicographic ranking order.
    for (int c = 0; c < m && !stopped; ++c) {
      if (placed[c] || above_left[c] != 0) continue;
      placed[c] = 1;
      current.push_back(c);
      for (int y = 0; y < m; ++y)
        if (v.prefers(c, y)) --above_left[y];
      run(depth + 1);
      for (int y = 0; y < m; ++y)
        if (v.prefers(c, y)) ++above_left[y];
      current.pop_back();
      placed[c] = 0;
    }
  }
};

}  // namespace

void for_each_extension(const PartialOrder& v,
                        const std::function<bool(const LinearOrder&)>& fn) {
  if (v.candidate_count() == 0) {
    fn(LinearOrder{});
    return;
  }
  ExtensionEnumerator e(v, fn);
  e.run(0);
}

std::vector<LinearOrder> linear_extensions(const PartialOrder& v) {
  std::vector<LinearOrder> out;
  for_each_extension(v, [&](const LinearOrder& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

unsigned long long count_extensions(const PartialOrder& v,
                                    unsigned long long cap) {
  unsigned long long n = 0;
  for_each_extension(v, [&](const LinearOrder&) {
    ++n;
    return n < cap;
  });
  return n;
}

LinearOrder first_extension(const PartialOrder& v) {
  LinearOrder out;
  for_each_extension(v, [&](const LinearOrder& w) {
    out = w;
    return false;
  });
  return out;
}

Vote Vote::complete(LinearOrder w) {
  Vote v;
  v.linear_ = std::move(w);
  return v;
}

Vote Vote::partial(PartialOrder p) {
  if (p.is_complete()) return complete(p.as_linear());
  Vote v;
  v.partial_ = std::make_shared<const PartialOrder>(std::move(p));
  return v;
}

const PartialOrder& Vote::order() const {
  if (!partial_) throw Error("order() on a complete vote");
  return *partial_;
}

PartialOrder Vote::as_order() const {
  return partial_ ? *partial_ : PartialOrder::from_linear(linear_);
}

int Vote::candidate_count() const {
  return partial_ ? partial_->candidate_count() : linear_.size();
}

bool Profile::complete() const {
  for (const auto& v : votes)
    if (!v.is_complete()) return false;
  return true;
}

int Profile::max_undetermined_pairs() const {
  int mx = 0;
  for (const auto& v : votes)
    mx = std::max(mx, v.undetermined_pair_count());
  return mx;
}

void Profile::append(const Profile& other) {
  if (other.m() != m()) throw Error("appending profile over different candidates");
  votes.insert(votes.end(), other.votes.begin(), other.votes.end());
}

}  // namespace pw
