#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmat/graph.hpp"

namespace pathmat {

enum class Family { path, cycle, complete, star, unicyclic };

/// How the n-k tree vertices attach to the cycle of a unicyclic graph.
enum class AttachShape { pendant_path, pendant_star, random_tree };

struct GraphFamily {
  Family kind = Family::path;
  int n = 0;
  int k = 0;  // cycle length, unicyclic only
  AttachShape shape = AttachShape::pendant_path;
  std::uint64_t seed = 0;  // random_tree attachment only
};

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star graph needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

/// Connected graph on n vertices with exactly one cycle, of length k, on
/// vertices 0..k-1. The remaining vertices attach as a pendant path off
/// vertex 0, as pendant leaves on vertex 0, or as a seeded random tree.
inline Graph make_unicyclic(int n, int k, AttachShape shape = AttachShape::pendant_path,
                            std::uint64_t seed = 0) {
  if (k < 3 || k > n)
    throw std::invalid_argument("unicyclic graph needs 3 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  switch (shape) {
    case AttachShape::pendant_path:
      for (int v = k; v < n; ++v) edges.emplace_back(v == k ? 0 : v - 1, v);
      break;
    case AttachShape::pendant_star:
      for (int v = k; v < n; ++v) edges.emplace_back(0, v);
      break;
    case AttachShape::random_tree: {
      std::mt19937_64 rng(seed);
      for (int v = k; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
      }
      break;
    }
  }
  return Graph(n, std::move(edges));
}

inline Graph generate(const GraphFamily& family) {
  switch (family.kind) {
    case Family::path: return make_path(family.n);
    case Family::cycle: return make_cycle(family.n);
    case Family::complete: return make_complete(family.n);
    case Family::star: return make_star(family.n);
    case Family::unicyclic:
      return make_unicyclic(family.n, family.k, family.shape, family.seed);
  }
  throw std::invalid_argument("unknown graph family");
}

inline const char* to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::unicyclic: return "unicyclic";
  }
  return "?";
}

inline const char* to_string(AttachShape s) {
  switch (s) {
    case AttachShape::pendant_path: return "pendant-path";
    case AttachShape::pendant_star: return "pendant-star";
    case AttachShape::random_tree: return "random-tree";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  if (s == "complete") return Family::complete;
  if (s == "star") return Family::star;
  if (s == "unicyclic") return Family::unicyclic;
  throw std::invalid_argument("unknown graph family: " + s);
}

inline AttachShape shape_from_string(const std::string& s) {
  if (s == "pendant-path") return AttachShape::pendant_path;
  if (s == "pendant-star") return AttachShape::pendant_star;
  if (s == "random-tree") return AttachShape::random_tree;
  throw std::invalid_argument("unknown attachment shape: " + s);
}

}  // namespace pathmat
