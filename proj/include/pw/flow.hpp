#pragma once

#include <string>
#include <vector>

#include "pw/errors.hpp"

namespace pw {

// Capacitated digraph for exact integral max-flow.  Node ids are dense;
// augmentation order is deterministic (edge insertion order).
class FlowNetwork {
 public:
  FlowNetwork(int nodes, int source, int sink);

  int add_node(const std::string& label = "");
  int node_count() const { return static_cast<int>(adj_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  // Returns an edge id usable with flow_on() after max_flow().
  int add_edge(int from, int to, long long capacity);

  struct Edge {
    int from, to;
    long long capacity;
    long long flow;
  };
  const Edge& edge(int id) const { return edges_[id]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  long long flow_on(int edge_id) const { return edges_[edge_id].flow; }

  // Dinic; resets any previous flow.
  long long max_flow();

 private:
  int source_, sink_;
  std::vector<Edge> edges_;            // pairs: forward at 2k, reverse at 2k+1
  std::vector<std::vector<int>> adj_;  // internal arc ids
  std::vector<int> level_, iter_;

  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<Arc> arcs_;

  bool bfs();
  long long dfs(int v, long long limit);
};

}  // namespace pw
