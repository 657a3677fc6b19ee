#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pathmat/graph.hpp"
#include "pathmat/path_matrix.hpp"

namespace pathmat {

inline constexpr int kOracleMaxVertices = 10;
inline constexpr std::size_t kOraclePathCap = 1'000'000;

/// Exhaustive reference count of internally vertex-disjoint s-t paths,
/// independent of the flow reduction: enumerate every simple s-t path by
/// its interior-vertex set, then take a maximum subfamily of pairwise
/// disjoint interiors (memoized over the used-vertex set). A direct edge
/// has an empty interior and adds one.
inline int oracle_disjoint_paths(const Graph& g, int s, int t) {
  if (g.order() > kOracleMaxVertices)
    throw std::invalid_argument("oracle is limited to graphs with at most " +
                                std::to_string(kOracleMaxVertices) + " vertices");
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("endpoints must differ");

  std::vector<char> seen(static_cast<std::size_t>(1) << g.order(), 0);
  std::vector<std::uint32_t> interiors;
  std::size_t path_count = 0;
  bool direct_edge = false;

  auto enumerate = [&](auto&& self, int v, std::uint32_t visited,
                       std::uint32_t interior) -> void {
    for (int w : g.neighbors(v)) {
      if (w == t) {
        if (++path_count > kOraclePathCap)
          throw std::runtime_error("oracle path budget exceeded");
        if (interior == 0)
          direct_edge = true;
        else if (!seen[interior]) {
          seen[interior] = 1;
          interiors.push_back(interior);
        }
        continue;
      }
      if (w == s || ((visited >> w) & 1)) continue;
      self(self, w, visited | (1u << w), interior | (1u << w));
    }
  };
  enumerate(enumerate, s, 1u << s, 0);

  std::vector<int> memo(static_cast<std::size_t>(1) << g.order(), -1);
  auto pack = [&](auto&& self, std::uint32_t used) -> int {
    int& best = memo[used];
    if (best >= 0) return best;
    best = 0;
    for (std::uint32_t m : interiors)
      if ((m & used) == 0) best = std::max(best, 1 + self(self, used | m));
    return best;
  };
  return (direct_edge ? 1 : 0) + pack(pack, 0);
}

/// All-pairs oracle matrix (test-scale graphs only).
inline PathMatrix oracle_path_matrix(const Graph& g) {
  PathMatrix pm(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) pm.set(i, j, oracle_disjoint_paths(g, i, j));
  return pm;
}

}  // namespace pathmat
