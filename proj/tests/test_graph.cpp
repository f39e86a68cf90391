#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spx/errors.hpp"
#include "spx/graph.hpp"
#include "spx/graph_io.hpp"
#include "spx/isomorphism.hpp"
#include "support.hpp"

using namespace spx;
using spx::testing::Rng;

namespace {

std::vector<int> sizes(const std::vector<VertexSet>& comps) {
  std::vector<int> out;
  for (const auto& c : comps) out.push_back(c.size());
  return out;
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete(1).order() == 1);
  CHECK(complete(1).size() == 0);
  const Graph k4 = complete(4);
  CHECK(k4.size() == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK_THROWS_AS(complete(0), ParamError);
  CHECK_THROWS_AS(complete(65), ParamError);
  CHECK(min_degree(complete(9)) == 8);
}

TEST_CASE("union and join") {
  CHECK(sizes(components(disjoint_union(complete(2), complete(2)))) == std::vector<int>{2, 2});
  CHECK(disjoint_union(complete(1), complete(1)) == empty_graph(2));
  const Graph k3k2 = disjoint_union(complete(3), complete(2));
  CHECK(k3k2.size() == 4);
  CHECK(sizes(components(k3k2)) == std::vector<int>{3, 2});

  CHECK(join(complete(1), disjoint_union(complete(1), complete(1))) == star(2));
  CHECK(are_isomorphic(join(complete(1), empty_graph(2)), path(3)));
  CHECK(join(complete(2), complete(3)) == complete(5));
  CHECK(join(complete(2), disjoint_union(complete(4), complete(2))).size() == 20);
  CHECK_THROWS_AS(join(complete(40), complete(30)), ParamError);
}

TEST_CASE("union and join sizes on random pairs") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = testing::random_graph(rng, testing::uniform_int(rng, 1, 10), 0.4);
    const Graph b = testing::random_graph(rng, testing::uniform_int(rng, 1, 10), 0.4);
    const Graph u = disjoint_union(a, b);
    const Graph j = join(a, b);
    CHECK(u.order() == a.order() + b.order());
    CHECK(u.size() == a.size() + b.size());
    CHECK(j.size() == a.size() + b.size() + a.order() * b.order());
  }
}

TEST_CASE("edge surgery") {
  const Graph p4 = path(4);
  const Graph c4 = add_edges(p4, EdgeSet({{0, 3}}, 4));
  CHECK(c4 == cycle(4));
  CHECK(p4.size() == 3);
  CHECK_THROWS_AS(add_edges(p4, EdgeSet({{0, 1}}, 4)), ParamError);
  CHECK_THROWS_AS(remove_edges(p4, EdgeSet({{0, 2}}, 4)), ParamError);
  CHECK_THROWS_AS(add_edges(p4, EdgeSet({{0, 9}}, 4)), ParamError);
  CHECK(remove_edges(c4, EdgeSet({{0, 3}}, 4)) == p4);
  CHECK_THROWS_AS(EdgeSet({{1, 2}, {2, 1}}, 4), ParamError);
  CHECK(toggle_edge(toggle_edge(p4, 0, 2), 0, 2) == p4);
}

TEST_CASE("vertex deletion") {
  const Graph c6 = cycle(6);
  CHECK(delete_vertices(c6, VertexSet(0, 6)).graph == c6);
  const InducedSubgraph sub = delete_vertices(c6, VertexSet::of({0, 3}, 6));
  CHECK(sub.label_map == std::vector<int>{1, 2, 4, 5});
  CHECK(sizes(components(sub.graph)) == std::vector<int>{2, 2});
}

TEST_CASE("components") {
  CHECK(sizes(components(complete(5))) == std::vector<int>{5});
  const Graph g = disjoint_union(disjoint_union(complete(3), complete(2)), complete(1));
  CHECK(sizes(components(g)) == std::vector<int>{3, 2, 1});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(complete(1)));
}

TEST_CASE("components partition the vertex set") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 20), 0.12);
    Word seen = 0;
    for (const VertexSet& c : components(g)) {
      CHECK((seen & c.bits()) == 0);
      seen |= c.bits();
      CHECK(is_connected_within(g, c.bits()));
      for (int v : c.to_vector()) CHECK((g.row(v) & ~c.bits()) == 0);
    }
    CHECK(seen == g.all());
  }
}

TEST_CASE("graph6 known strings") {
  CHECK(graph6_encode(complete(3)) == "Bw");
  CHECK(graph6_encode(graph6_decode("Bw")) == "Bw");
  CHECK(graph6_encode(empty_graph(2)) == "A?");
  CHECK(graph6_encode(path(3)) == "Bg");
  CHECK(graph6_decode(">>graph6<<Bw") == complete(3));
  CHECK_THROWS_AS(graph6_decode("B"), FormatError);
  CHECK_THROWS_AS(graph6_decode("Bx"), FormatError);
  CHECK_THROWS_AS(graph6_decode("B\x01"), FormatError);
}

TEST_CASE("graph6 round trip on random graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 20), 0.5);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  for (int n : {62, 63, 64}) {
    const Graph g = testing::random_graph(rng, n, 0.3);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("edge-list JSON and DOT") {
  const Graph g = cycle(5);
  CHECK(from_edge_list_json(to_edge_list_json(g)) == g);
  CHECK(parse_graph(to_edge_list_json(g).dump()) == g);
  CHECK(parse_graph("Bw\n") == complete(3));
  CHECK_THROWS_AS(parse_graph(R"({"n": 3, "edges": [[0, 0]]})"), FormatError);
  const std::string dot = to_dot(path(3));
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("0 -- 2;") == std::string::npos);
}

TEST_CASE("isomorphism basics") {
  CHECK(are_isomorphic(cycle(4), complete_bipartite(2, 2)));
  CHECK_FALSE(are_isomorphic(path(4), star(3)));
  CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  CHECK_THROWS_AS(are_isomorphic(complete(17), complete(17)), ParamError);
}

TEST_CASE("isomorphism survives relabeling") {
  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 12), 0.4);
    const auto perm = testing::random_permutation(rng, g.order());
    const Graph h = relabel(g, perm);
    CHECK(are_isomorphic(g, g));
    CHECK(are_isomorphic(g, h));
    CHECK(are_isomorphic(h, g));
    const auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    CHECK(relabel(g, *map) == h);
  }
}

TEST_CASE("isomorphism agrees with permutation search") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform_int(rng, 1, 7);
    const Graph g = testing::random_graph(rng, n, 0.5);
    const Graph h = testing::random_graph(rng, n, 0.5);
    CHECK(are_isomorphic(g, h) == testing::brute_isomorphic(g, h));
  }
}
