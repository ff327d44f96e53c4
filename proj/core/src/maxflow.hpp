#pragma once

#include <cstdint>
#include <vector>

namespace abc::detail {

// Dinic's algorithm over integer capacities.  Sized for the small assignment
// networks used here (thousands of nodes), not for general-purpose use.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  // Returns an edge id usable with flow_on().
  int add_edge(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);
  std::int64_t flow_on(int edge_id) const;

 private:
  struct Edge {
    int to;
    std::int64_t cap;
    std::int64_t original;
  };

  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t pushed);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_, iter_;
};

}  // namespace abc::detail
