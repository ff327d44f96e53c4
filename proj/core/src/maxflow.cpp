#include "maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace abc::detail {

MaxFlow::MaxFlow(int num_nodes) : adj_(num_nodes), level_(num_nodes), iter_(num_nodes) {}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  int id = static_cast<int>(edges_.size());
  adj_[from].push_back(id);
  edges_.push_back({to, capacity, capacity});
  adj_[to].push_back(id + 1);
  edges_.push_back({from, 0, 0});
  return id;
}

bool MaxFlow::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<int> queue{s};
  level_[s] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : adj_[v]) {
      const Edge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
    int id = adj_[v][i];
    Edge& e = edges_[id];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    std::int64_t got = dfs(e.to, t, std::min(pushed, e.cap));
    if (got > 0) {
      e.cap -= got;
      edges_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max()))
      total += pushed;
  }
  return total;
}

std::int64_t MaxFlow::flow_on(int edge_id) const {
  return edges_[edge_id].original - edges_[edge_id].cap;
}

}  // namespace abc::detail
