#pragma once

#include <algorithm>
#include <vector>

#include "pathmat/graph.hpp"

namespace pathmat {

struct BiconnectedComponent {
  std::vector<int> vertices;  // sorted ascending
  std::vector<Edge> edges;    // sorted, each (min, max)
};

struct BiconnectedDecomposition {
  std::vector<BiconnectedComponent> components;
  std::vector<int> articulation_points;  // sorted ascending
  std::vector<int> edge_component;       // component index per Graph::edges() position
};

/// Depth-first decomposition into biconnected components with an explicit
/// stack (low-link values, edge stack popped at articulation points).
/// Components partition the edge set; isolated vertices appear in none.
inline BiconnectedDecomposition biconnected_components(const Graph& g) {
  const int n = g.order();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < m; ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }

  BiconnectedDecomposition dec;
  dec.edge_component.assign(m, -1);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_articulation(n, 0);
  std::vector<int> edge_stack;
  edge_stack.reserve(m);
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    int parent_edge;
    std::size_t idx;
  };
  std::vector<Frame> stack;

  auto pop_component = [&](int until_edge) {
    BiconnectedComponent comp;
    for (;;) {
      const int e = edge_stack.back();
      edge_stack.pop_back();
      dec.edge_component[e] = static_cast<int>(dec.components.size());
      comp.edges.push_back(edges[e]);
      comp.vertices.push_back(edges[e].first);
      comp.vertices.push_back(edges[e].second);
      if (e == until_edge) break;
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()),
                        comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    dec.components.push_back(std::move(comp));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, -1, 0});
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < adj[f.v].size()) {
        const auto [w, e] = adj[f.v][f.idx++];
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          if (f.v == root) ++root_children;
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (done.parent == -1) continue;
        low[done.parent] = std::min(low[done.parent], low[done.v]);
        if (low[done.v] >= disc[done.parent]) {
          if (done.parent != root) is_articulation[done.parent] = 1;
          pop_component(done.parent_edge);
        }
      }
    }
    if (root_children >= 2) is_articulation[root] = 1;
  }

  for (int v = 0; v < n; ++v)
    if (is_articulation[v]) dec.articulation_points.push_back(v);
  return dec;
}

}  // namespace pathmat
