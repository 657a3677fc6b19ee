#include <catch2/catch_amalgamated.hpp>

#include "pathmat/flow.hpp"
#include "pathmat/generate.hpp"
#include "support/test_graphs.hpp"

using pathmat::Graph;
using pathmat::max_disjoint_paths;
using pathmat::split_transform;

TEST_CASE("split transform sizes", "[flow]") {
  // C4: 2(n-2)+2 nodes; (n-2) splitter arcs + 2|E| edge arcs minus the
  // deg(s)+deg(t) arcs that would enter the source or leave the sink
  const Graph c4 = pathmat::make_cycle(4);
  const auto net = split_transform(c4, 0, 2);
  CHECK(net.nodes == 6);
  CHECK(net.arc_count() == 2 + 2 * 4 - 2 - 2);

  const Graph k2(2, {{0, 1}});
  const auto net2 = split_transform(k2, 0, 1);
  CHECK(net2.nodes == 2);
  CHECK(net2.arc_count() == 1);
  CHECK(net2.to[0] == 1);  // the single arc is source -> sink

  const Graph p3 = pathmat::make_path(3);
  const auto net3 = split_transform(p3, 0, 2);
  CHECK(net3.nodes == 4);
  CHECK(net3.arc_count() == 3);  // 0_out->1_in, 1_in->1_out, 1_out->2_in

  CHECK_THROWS_AS(split_transform(c4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(split_transform(c4, 0, 9), std::out_of_range);
}

TEST_CASE("unit max flow on split networks", "[flow]") {
  auto flow = [](const Graph& g, int s, int t) {
    auto net = split_transform(g, s, t);
    return pathmat::max_flow_unit(net);
  };
  CHECK(flow(pathmat::make_complete(4), 0, 1) == 3);
  CHECK(flow(pathmat::make_cycle(5), 0, 2) == 2);
  CHECK(flow(pathmat::make_path(3), 0, 2) == 1);
}

TEST_CASE("disjoint path counts", "[flow]") {
  const Graph k3 = pathmat::make_complete(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(max_disjoint_paths(k3, i, j) == 2);

  const Graph star = pathmat::make_star(6);
  for (int i = 1; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) CHECK(max_disjoint_paths(star, i, j) == 1);
  const Graph path = pathmat::make_path(7);
  CHECK(max_disjoint_paths(path, 0, 6) == 1);

  const Graph petersen = testsupport::petersen();
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) CHECK(max_disjoint_paths(petersen, i, j) == 3);

  const Graph split(4, {{0, 1}, {2, 3}});
  CHECK(max_disjoint_paths(split, 0, 2) == 0);
  CHECK_THROWS_AS(max_disjoint_paths(split, 2, 2), std::invalid_argument);
}
