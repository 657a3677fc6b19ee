#pragma once

#include <stdexcept>
#include <vector>

#include "pathmat/graph.hpp"

namespace pathmat {

/// Directed unit-capacity residual network for one (s,t) pair. Arcs come in
/// residual pairs (a, a^1); `residual[a]` is the remaining capacity.
struct FlowNetwork {
  int nodes = 0;
  int source = 0;
  int sink = 0;
  std::vector<int> to;               // arc target
  std::vector<signed char> residual; // remaining capacity per arc
  std::vector<int> next;             // next arc in the per-node list, -1 ends
  std::vector<int> head;             // first arc per node, -1 if none

  FlowNetwork(int node_count, int s, int t)
      : nodes(node_count), source(s), sink(t), head(node_count, -1) {}

  void add_unit_arc(int u, int v) {
    to.push_back(v);
    residual.push_back(1);
    next.push_back(head[u]);
    head[u] = static_cast<int>(to.size()) - 1;
    to.push_back(u);
    residual.push_back(0);
    next.push_back(head[v]);
    head[v] = static_cast<int>(to.size()) - 1;
  }

  int arc_count() const { return static_cast<int>(to.size()) / 2; }
};

/// Vertex-splitting transform: every vertex except s and t becomes a pair
/// v_in -> v_out joined by a unit arc, and each original edge {u,v} becomes
/// the arcs u_out -> v_in and v_out -> u_in. s contributes only s_out
/// (node 0) and t only t_in (node 1); arcs that would enter s_out or leave
/// t_in can never carry flow and are dropped.
inline FlowNetwork split_transform(const Graph& g, int s, int t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("source and sink must differ");
  const int n = g.order();

  std::vector<int> in_id(n, -1), out_id(n, -1);
  out_id[s] = 0;
  in_id[t] = 1;
  int next_id = 2;
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    in_id[v] = next_id++;
    out_id[v] = next_id++;
  }

  FlowNetwork net(next_id, 0, 1);
  for (int v = 0; v < n; ++v)
    if (v != s && v != t) net.add_unit_arc(in_id[v], out_id[v]);
  for (const auto& [u, v] : g.edges()) {
    if (u != t && v != s) net.add_unit_arc(out_id[u], in_id[v]);
    if (v != t && u != s) net.add_unit_arc(out_id[v], in_id[u]);
  }
  return net;
}

/// Maximum s-t flow by shortest augmenting paths (breadth-first search on
/// the residual network). With unit capacities each augmentation adds one,
/// so at most min(deg s, deg t) rounds run.
inline int max_flow_unit(FlowNetwork& net) {
  std::vector<int> parent_arc(net.nodes);
  std::vector<int> queue(net.nodes);
  int flow = 0;
  for (;;) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[net.source] = -2;
    int qh = 0, qt = 0;
    queue[qt++] = net.source;
    bool reached = false;
    while (qh < qt && !reached) {
      const int v = queue[qh++];
      for (int a = net.head[v]; a != -1; a = net.next[a]) {
        const int w = net.to[a];
        if (net.residual[a] <= 0 || parent_arc[w] != -1) continue;
        parent_arc[w] = a;
        if (w == net.sink) {
          reached = true;
          break;
        }
        queue[qt++] = w;
      }
    }
    if (!reached) return flow;
    for (int v = net.sink; v != net.source;) {
      const int a = parent_arc[v];
      net.residual[a] -= 1;
      net.residual[a ^ 1] += 1;
      v = net.to[a ^ 1];
    }
    ++flow;
  }
}

/// Maximum number of internally vertex-disjoint s-t paths. Returns 0 when
/// s and t lie in different connected components.
inline int max_disjoint_paths(const Graph& g, int s, int t) {
  FlowNetwork net = split_transform(g, s, t);
  return max_flow_unit(net);
}

}  // namespace pathmat
