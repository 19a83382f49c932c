#include "pw/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pw {

FlowNetwork::FlowNetwork(int nodes, int source, int sink)
    : source_(source), sink_(sink), adj_(nodes) {
  if (source == sink) throw Error("source == sink");
  if (source < 0 || source >= nodes || sink < 0 || sink >= nodes)
    throw Error("source/sink out of range");
}

int FlowNetwork::add_node(const std::string&) {
  adj_.emplace_back();
  return node_count() - 1;
}

int FlowNetwork::add_edge(int from, int to, long long capacity) {
  if (capacity < 0) throw Error("negative capacity");
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count())
    throw Error("edge endpoint out of range");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({from, to, capacity, 0});
  const int a = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, a + 1});
  arcs_.push_back({from, 0, a});
  adj_[from].push_back(a);
  adj_[to].push_back(a + 1);
  return id;
}

bool FlowNetwork::bfs() {
  level_.assign(node_count(), -1);
  std::deque<int> q;
  level_[source_] = 0;
  q.push_back(source_);
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int a : adj_[v]) {
      if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        q.push_back(arcs_[a].to);
      }
    }
  }
  return level_[sink_] >= 0;
}

long long FlowNetwork::dfs(int v, long long limit) {
  if (v == sink_) return limit;
  for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
    const int a = adj_[v][i];
    if (arcs_[a].cap <= 0 || level_[arcs_[a].to] != level_[v] + 1) continue;
    const long long got = dfs(arcs_[a].to, std::min(limit, arcs_[a].cap));
    if (got > 0) {
      arcs_[a].cap -= got;
      arcs_[arcs_[a].rev].cap += got;
      return got;
    }
  }
  return 0;
}

long long FlowNetwork::max_flow() {
  // reset
  for (size_t e = 0; e < edges_.size(); ++e) {
    arcs_[2 * e].cap = edges_[e].capacity;
    arcs_[2 * e + 1].cap = 0;
    edges_[e].flow = 0;
  }
  long long total = 0;
  while (bfs()) {
    iter_.assign(node_count(), 0);
    long long f;
    while ((f = dfs(source_, std::numeric_limits<long long>::max())) > 0)
      total += f;
  }
  for (size_t e = 0; e < edges_.size(); ++e)
    edges_[e].flow = edges_[e].capacity - arcs_[2 * e].cap;
  return total;
}

}  // namespace pw
