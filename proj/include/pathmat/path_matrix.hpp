#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

#include "pathmat/biconnected.hpp"
#include "pathmat/flow.hpp"
#include "pathmat/graph.hpp"

namespace pathmat {

/// Symmetric nonnegative-integer matrix with zero diagonal; entry (i,j) is
/// the maximum number of internally vertex-disjoint i-j paths.
class PathMatrix {
 public:
  PathMatrix() = default;
  explicit PathMatrix(int n) : n_(n), p_(static_cast<std::size_t>(n) * n, 0) {}

  int order() const { return n_; }

  int at(int i, int j) const { return p_[static_cast<std::size_t>(i) * n_ + j]; }

  void set(int i, int j, int value) {
    if (i == j) throw std::invalid_argument("diagonal entries are fixed at zero");
    p_[static_cast<std::size_t>(i) * n_ + j] = value;
    p_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

  const std::vector<int>& data() const { return p_; }

  bool operator==(const PathMatrix& other) const = default;

 private:
  int n_ = 0;
  std::vector<int> p_;  // row-major
};

struct PathMatrixOptions {
  bool biconnected_preprocess = true;
  int workers = 1;
};

namespace detail {

struct PairTask {
  const Graph* graph;
  int s, t;       // endpoints in *graph
  int gi, gj;     // entry written in the output matrix
};

inline void run_pair_tasks(const std::vector<PairTask>& tasks, std::vector<int>& results,
                           int workers) {
  results.assign(tasks.size(), 0);
  auto body = [&](std::size_t i) {
    const PairTask& t = tasks[i];
    results[i] = max_disjoint_paths(*t.graph, t.s, t.t);
  };
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) body(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  const int nthreads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), tasks.size()));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int k = 0; k < nthreads; ++k) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= tasks.size()) break;
        body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// All-pairs disjoint-path counts. With preprocessing enabled, entries can
/// exceed one only inside biconnected components of three or more vertices,
/// so flows run on each such component's induced subgraph; every other
/// connected pair is 1 and cross-component pairs are 0. The result is
/// bit-identical to the naive all-pairs flow for any worker count.
inline PathMatrix path_matrix(const Graph& g, const PathMatrixOptions& opt = {}) {
  const int n = g.order();
  PathMatrix pm(n);
  if (n <= 1) return pm;

  std::vector<detail::PairTask> tasks;
  std::vector<Graph> subgraphs;  // stable storage for component tasks

  if (!opt.biconnected_preprocess) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) tasks.push_back({&g, i, j, i, j});
  } else {
    const auto comp = connected_components(g);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (comp[i] == comp[j]) pm.set(i, j, 1);

    const auto dec = biconnected_components(g);
    std::vector<std::vector<int>> vertex_maps;
    subgraphs.reserve(dec.components.size());
    vertex_maps.reserve(dec.components.size());
    for (const auto& bc : dec.components) {
      if (bc.vertices.size() < 3) continue;
      std::vector<int> local_of(n, -1);
      for (std::size_t a = 0; a < bc.vertices.size(); ++a)
        local_of[bc.vertices[a]] = static_cast<int>(a);
      std::vector<Edge> local_edges;
      local_edges.reserve(bc.edges.size());
      for (const auto& [u, v] : bc.edges) local_edges.emplace_back(local_of[u], local_of[v]);
      subgraphs.emplace_back(static_cast<int>(bc.vertices.size()), std::move(local_edges));
      vertex_maps.push_back(bc.vertices);
    }
    for (std::size_t c = 0; c < subgraphs.size(); ++c) {
      const int cn = subgraphs[c].order();
      for (int a = 0; a < cn; ++a)
        for (int b = a + 1; b < cn; ++b)
          tasks.push_back({&subgraphs[c], a, b, vertex_maps[c][a], vertex_maps[c][b]});
    }
  }

  std::vector<int> results;
  detail::run_pair_tasks(tasks, results, opt.workers);
  for (std::size_t i = 0; i < tasks.size(); ++i)
    pm.set(tasks[i].gi, tasks[i].gj, results[i]);
  return pm;
}

/// TSV form: a line with n, then n tab-separated rows.
inline std::string to_tsv(const PathMatrix& pm) {
  std::string out = std::to_string(pm.order());
  out.push_back('\n');
  for (int i = 0; i < pm.order(); ++i) {
    for (int j = 0; j < pm.order(); ++j) {
      if (j > 0) out.push_back('\t');
      out += std::to_string(pm.at(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

/// Compact JSON form: {"n":...,"p":[row-major entries]}.
inline std::string to_json(const PathMatrix& pm) {
  std::string out = "{\"n\":" + std::to_string(pm.order()) + ",\"p\":[";
  const auto& d = pm.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(d[i]);
  }
  out += "]}";
  return out;
}

}  // namespace pathmat
