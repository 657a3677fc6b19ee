#include <catch2/catch_amalgamated.hpp>

#include "pathmat/generate.hpp"
#include "pathmat/graph.hpp"

using pathmat::Graph;

TEST_CASE("construction normalizes and validates edges", "[graph]") {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);  // duplicates collapse
  CHECK(g.edges() == std::vector<pathmat::Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("degree counts neighbors", "[graph]") {
  const Graph c4 = pathmat::make_cycle(4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(pathmat::make_star(5).degree(0) == 4);
  CHECK(pathmat::make_star(5).degree(3) == 1);
  CHECK_THROWS_AS(c4.degree(4), std::out_of_range);
}

TEST_CASE("connectivity", "[graph]") {
  CHECK(pathmat::is_connected(pathmat::make_complete(4)));
  CHECK(pathmat::is_connected(Graph(1)));
  CHECK_FALSE(pathmat::is_connected(Graph(2)));

  const Graph two_parts(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(pathmat::is_connected(two_parts));
  const auto label = pathmat::connected_components(two_parts);
  CHECK(label == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("tree and complete detection", "[graph]") {
  CHECK(pathmat::is_tree(pathmat::make_path(5)));
  CHECK(pathmat::is_tree(pathmat::make_star(6)));
  CHECK_FALSE(pathmat::is_tree(pathmat::make_cycle(4)));
  CHECK_FALSE(pathmat::is_tree(Graph(3, {{0, 1}})));  // disconnected
  CHECK(pathmat::is_complete(pathmat::make_complete(5)));
  CHECK_FALSE(pathmat::is_complete(pathmat::make_cycle(4)));
  CHECK(pathmat::is_complete(Graph(1)));
}
