#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "pathmat/biconnected.hpp"
#include "pathmat/corpus.hpp"
#include "pathmat/flow.hpp"
#include "pathmat/generate.hpp"
#include "support/test_graphs.hpp"

using pathmat::biconnected_components;
using pathmat::Graph;

TEST_CASE("bowtie splits at the shared vertex", "[biconnected]") {
  const auto dec = biconnected_components(testsupport::bowtie());
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.articulation_points == std::vector<int>{0});
  for (const auto& comp : dec.components) {
    CHECK(comp.vertices.size() == 3);
    CHECK(comp.edges.size() == 3);
  }
}

TEST_CASE("tree edges are singleton components", "[biconnected]") {
  const Graph path = pathmat::make_path(5);
  const auto dec = biconnected_components(path);
  REQUIRE(dec.components.size() == 4);
  for (const auto& comp : dec.components) CHECK(comp.edges.size() == 1);
  CHECK(dec.articulation_points == std::vector<int>{1, 2, 3});

  const Graph star = pathmat::make_star(6);
  const auto sdec = biconnected_components(star);
  CHECK(sdec.components.size() == 5);
  CHECK(sdec.articulation_points == std::vector<int>{0});
}

TEST_CASE("cycles are one component without articulation points", "[biconnected]") {
  for (int n : {3, 4, 7, 12}) {
    const auto dec = biconnected_components(pathmat::make_cycle(n));
    CHECK(dec.components.size() == 1);
    CHECK(dec.articulation_points.empty());
    CHECK(dec.components[0].edges.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("components partition the edge set", "[biconnected]") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 24)(rng);
    const Graph g = pathmat::random_gnp(n, 0.18, rng);
    const auto dec = biconnected_components(g);
    std::vector<std::size_t> count(dec.components.size(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
      const int c = dec.edge_component[e];
      REQUIRE(c >= 0);
      REQUIRE(c < static_cast<int>(dec.components.size()));
      ++count[c];
    }
    for (std::size_t c = 0; c < count.size(); ++c)
      CHECK(count[c] == dec.components[c].edges.size());
  }
}

namespace {

// Independent articulation oracle: component count among the other vertices
// rises when v is removed.
bool removal_disconnects(const Graph& g, int v) {
  std::vector<pathmat::Edge> kept;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) kept.push_back({a, b});
  const Graph h(g.order(), std::move(kept));
  const auto before = pathmat::connected_components(g);
  const auto after = pathmat::connected_components(h);
  int comp_before = 0;
  for (int w = 0; w < g.order(); ++w) comp_before = std::max(comp_before, before[w] + 1);
  std::set<int> after_labels;
  for (int w = 0; w < g.order(); ++w)
    if (w != v) after_labels.insert(after[w]);
  return static_cast<int>(after_labels.size()) > comp_before;
}

}  // namespace

TEST_CASE("articulation points match the removal oracle", "[biconnected]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const Graph g = pathmat::random_gnp(n, 0.22, rng);
    const auto dec = biconnected_components(g);
    std::set<int> articulation(dec.articulation_points.begin(),
                               dec.articulation_points.end());
    for (int v = 0; v < n; ++v) {
      INFO("trial=" << trial << " n=" << n << " v=" << v);
      REQUIRE(articulation.count(v) == (removal_disconnects(g, v) ? 1u : 0u));
    }
  }
}

TEST_CASE("shared component of three or more vertices means two disjoint paths",
          "[biconnected]") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Graph g = pathmat::random_gnp(n, 0.3, rng);
    const auto dec = biconnected_components(g);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool share_big = false;
        for (const auto& comp : dec.components) {
          if (comp.vertices.size() < 3) continue;
          const bool has_u = std::binary_search(comp.vertices.begin(), comp.vertices.end(), u);
          const bool has_v = std::binary_search(comp.vertices.begin(), comp.vertices.end(), v);
          if (has_u && has_v) share_big = true;
        }
        const int paths = pathmat::max_disjoint_paths(g, u, v);
        INFO("n=" << n << " pair (" << u << "," << v << ")");
        REQUIRE(share_big == (paths >= 2));
      }
    }
  }
}
