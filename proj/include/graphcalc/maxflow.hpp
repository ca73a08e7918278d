#pragma once

#include <deque>
#include <vector>

namespace graphcalc {

/// Edmonds-Karp max flow over an arbitrary ordered field (exact rationals or
/// doubles). Breadth-first search visits arcs in insertion order, so the
/// resulting flow is a deterministic function of the construction order.
template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(nodes) {}

  /// Adds a directed arc and returns its id for flow() lookups.
  int add_arc(int from, int to, Cap capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, Cap(0)});
    arcs_.push_back({from, Cap(0), Cap(0)});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  /// Augments until no s-t path remains; returns the total flow value.
  /// `eps` treats residual capacities at or below it as saturated.
  Cap solve(int s, int t, Cap eps = Cap(0)) {
    Cap total(0);
    const int n = static_cast<int>(adj_.size());
    while (true) {
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        const int x = queue.front();
        queue.pop_front();
        for (int id : adj_[x]) {
          const Arc& a = arcs_[id];
          if (!seen[a.to] && residual(id) > eps) {
            seen[a.to] = 1;
            via[a.to] = id;
            queue.push_back(a.to);
          }
        }
      }
      if (!seen[t]) return total;
      Cap push = residual(via[t]);
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        if (residual(via[x]) < push) push = residual(via[x]);
      }
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].flow += push;
        arcs_[via[x] ^ 1].flow -= push;
      }
      total += push;
    }
  }

  [[nodiscard]] Cap flow(int arc) const { return arcs_[arc].flow; }
  [[nodiscard]] Cap capacity(int arc) const { return arcs_[arc].cap; }

 private:
  struct Arc {
    int to;
    Cap cap;
    Cap flow;
  };

  [[nodiscard]] Cap residual(int id) const {
    return arcs_[id].cap - arcs_[id].flow;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace graphcalc
