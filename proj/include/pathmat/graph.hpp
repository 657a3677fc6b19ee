#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathmat {

using Edge = std::pair<int, int>;  // unordered pair, stored as (min, max)

/// Simple undirected graph on vertices 0..n-1. Immutable after construction:
/// edges are normalized to u < v, deduplicated and sorted.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    for (auto& [u, v] : edges) {
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: {" +
                                    std::to_string(u) + "," + std::to_string(v) + "}");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Component label per vertex; labels are assigned 0,1,... in order of the
/// smallest vertex of each component.
inline std::vector<int> connected_components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<int> stack;
  int next = 0;
  for (int start = 0; start < g.order(); ++start) {
    if (label[start] != -1) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

inline bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

inline bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

}  // namespace pathmat
