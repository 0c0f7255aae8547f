#include <gtest/gtest.h>

#include "kuniv/budget.hpp"
#include "kuniv/error.hpp"
#include "kuniv/families.hpp"
#include "kuniv/graph.hpp"
#include "kuniv/graph_io.hpp"
#include "kuniv/theorem3.hpp"
#include "support.hpp"

using namespace kuniv;

TEST(Graph, Construction) {
  Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3.order(), 3u);
  EXPECT_EQ(p3.edge_count(), 2u);
  EXPECT_TRUE(p3.adjacent(1, 0));
  EXPECT_FALSE(p3.adjacent(0, 2));

  Graph single(1, {});
  EXPECT_EQ(single.edge_count(), 0u);

  EXPECT_THROW(Graph(2, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {{0, 2}}), InvalidArgument);
  EXPECT_THROW(Graph(2, std::vector<Edge>{}, {"only one"}), InvalidArgument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Graph, DegreesAndCounts) {
  EXPECT_EQ(clique_graph(4).edge_count(), 6u);
  EXPECT_EQ(empty_graph(5).edge_count(), 0u);
  EXPECT_EQ(star_graph(3).degree(0), 3u);
  EXPECT_EQ(star_graph(3).neighbors(0), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Graph, WideRows) {
  std::vector<Edge> e{{0, 130}, {64, 65}, {129, 3}};
  Graph g(131, e);
  EXPECT_TRUE(g.adjacent(130, 0));
  EXPECT_TRUE(g.adjacent(65, 64));
  EXPECT_TRUE(g.adjacent(3, 129));
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 1u);
}

TEST(VertexSet, SortsAndValidates) {
  VertexSet s(5, {3, 1, 1, 4});
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 4}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(0));
  EXPECT_THROW(VertexSet(3, {3}), InvalidArgument);
  EXPECT_EQ(VertexSet::all(3).size(), 3u);
}

TEST(InducedSubgraph, Examples) {
  auto k2 = induced_subgraph(clique_graph(3), VertexSet(3, {0, 1}));
  EXPECT_TRUE(k2.graph.same_structure(clique_graph(2)));
  EXPECT_EQ(k2.original, (std::vector<Vertex>{0, 1}));

  auto iso = induced_subgraph(path_graph(3), VertexSet(3, {0, 2}));
  EXPECT_EQ(iso.graph.order(), 2u);
  EXPECT_EQ(iso.graph.edge_count(), 0u);
  EXPECT_EQ(iso.original, (std::vector<Vertex>{0, 2}));
}

TEST(InducedSubgraph, Theorem3PartIsIndependent) {
  auto g = theorem3_graph(4);
  std::vector<Vertex> part;
  for (std::uint32_t f = 0; f < 16; ++f) part.push_back(encode_theorem3(4, {f, 1}));
  auto sub = induced_subgraph(g, VertexSet(g.order(), part));
  EXPECT_EQ(sub.graph.order(), 16u);
  EXPECT_EQ(sub.graph.edge_count(), 0u);
}

TEST(InducedSubgraph, KeepsLabels) {
  Graph g(3, std::vector<Edge>{{0, 2}}, {"a", "b", "c"});
  auto sub = induced_subgraph(g, VertexSet(3, {0, 2}));
  EXPECT_EQ(sub.graph.labels(), (std::vector<std::string>{"a", "c"}));
  EXPECT_TRUE(sub.graph.adjacent(0, 1));
}

TEST(InducedSubgraph, AllVerticesIsIdentity) {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    auto g = test::random_graph(rng, 9);
    EXPECT_TRUE(induced_subgraph(g, VertexSet::all(g.order())).graph.same_structure(g));
  }
}

TEST(FreeJoin, Compatibility) {
  Graph edge(2, {{0, 1}});
  EXPECT_TRUE(is_compatible(edge, edge, {{{1, 0}}}));
  EXPECT_FALSE(is_compatible(clique_graph(2), empty_graph(2), {{{0, 0}, {1, 1}}}));
  EXPECT_TRUE(is_compatible(clique_graph(3), clique_graph(3), {{{0, 0}, {1, 1}}}));
  EXPECT_THROW(validate_overlap(edge, edge, {{{0, 0}, {0, 1}}}), InvalidArgument);
  EXPECT_THROW(validate_overlap(edge, edge, {{{0, 5}}}), InvalidArgument);
  EXPECT_THROW(free_join(clique_graph(2), empty_graph(2), {{{0, 0}, {1, 1}}}), InvalidArgument);
}

TEST(FreeJoin, Examples) {
  Graph edge(2, {{0, 1}});
  auto path = free_join(edge, edge, {{{1, 0}}});
  EXPECT_TRUE(path.graph.same_structure(path_graph(3)));
  EXPECT_EQ(path.from_b, (std::vector<Vertex>{1, 2}));

  auto book = free_join(clique_graph(3), clique_graph(3), {{{0, 0}, {1, 1}}});
  EXPECT_EQ(book.graph.order(), 4u);
  EXPECT_EQ(book.graph.edge_count(), 5u);
  EXPECT_FALSE(book.graph.adjacent(2, 3));

  auto disjoint = free_join(clique_graph(3), path_graph(3), {});
  EXPECT_EQ(disjoint.graph.order(), 6u);
  EXPECT_EQ(disjoint.graph.edge_count(), 5u);
}

TEST(FreeJoin, EdgeCountAndCommutativity) {
  Rng rng(5);
  int joined = 0;
  for (int trial = 0; trial < 300 && joined < 60; ++trial) {
    auto a = test::random_graph(rng, 6, 2);
    auto b = test::random_graph(rng, 6, 2);
    const auto c = rng.below(std::min(a.order(), b.order()) + 1);
    auto sa = test::random_subset(rng, a.order(), c);
    auto sb = test::random_subset(rng, b.order(), c);
    std::shuffle(sb.begin(), sb.end(), std::mt19937(static_cast<unsigned>(rng.next())));
    OverlapSpec ov, flipped;
    for (std::size_t i = 0; i < c; ++i) {
      ov.pairs.emplace_back(sa[i], sb[i]);
      flipped.pairs.emplace_back(sb[i], sa[i]);
    }
    if (!is_compatible(a, b, ov)) continue;
    ++joined;
    auto j = free_join(a, b, ov);
    auto shared = induced_subgraph(a, VertexSet(a.order(), sa)).graph;
    EXPECT_EQ(j.graph.edge_count(), a.edge_count() + b.edge_count() - shared.edge_count());
    EXPECT_EQ(j.graph.order(), a.order() + b.order() - c);
    for (Vertex u = 0; u < a.order(); ++u) {
      for (Vertex v = 0; v < a.order(); ++v) EXPECT_EQ(a.adjacent(u, v), j.graph.adjacent(j.from_a[u], j.from_a[v]));
    }
    for (Vertex u = 0; u < b.order(); ++u) {
      for (Vertex v = 0; v < b.order(); ++v) EXPECT_EQ(b.adjacent(u, v), j.graph.adjacent(j.from_b[u], j.from_b[v]));
    }
    EXPECT_TRUE(test::isomorphic(j.graph, free_join(b, a, flipped).graph));
  }
  EXPECT_GE(joined, 20);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(cycle_graph(6)), ExtendedNat(3));
  EXPECT_TRUE(diameter(empty_graph(2)).is_omega());
  EXPECT_EQ(diameter(clique_graph(5)), ExtendedNat(1));
  EXPECT_EQ(diameter(empty_graph(1)), ExtendedNat(0));
  EXPECT_EQ(bfs_distances(path_graph(4), 0), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(ExtendedNat, Ordering) {
  EXPECT_LT(ExtendedNat(3), ExtendedNat(4));
  EXPECT_LT(ExtendedNat(1000000), ExtendedNat::omega());
  EXPECT_EQ(ExtendedNat::omega(), ExtendedNat::omega());
  EXPECT_EQ(ExtendedNat::omega().to_string(), "omega");
  EXPECT_EQ(ExtendedNat(7).to_string(), "7");
}

TEST(GraphIo, JsonRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto g = test::random_graph(rng, 12);
    auto back = graph_from_json(graph_to_json(g));
    EXPECT_TRUE(back.same_structure(g));
    EXPECT_FALSE(back.has_labels());
  }
  auto t3 = theorem3_graph(4);
  auto back = graph_from_json(graph_to_json(t3));
  EXPECT_TRUE(back.same_structure(t3));
  EXPECT_EQ(back.labels(), t3.labels());
  EXPECT_EQ(graph_to_json(back), graph_to_json(t3));
}

TEST(GraphIo, JsonShape) {
  Graph g(3, std::vector<Edge>{{2, 1}}, {"x", "y", "z"});
  auto text = graph_to_json(g);
  EXPECT_NE(text.find("\"n\":3"), std::string::npos);
  EXPECT_NE(text.find("[[1,2]]"), std::string::npos);
  EXPECT_NE(text.find("\"2\":\"z\""), std::string::npos);
}

TEST(GraphIo, EdgeListRoundTripDropsLabels) {
  auto t3 = theorem3_graph(4);
  auto via = graph_from_edge_list(graph_to_edge_list(t3));
  EXPECT_TRUE(via.same_structure(t3));
  EXPECT_FALSE(via.has_labels());
  EXPECT_TRUE(graph_from_json(graph_to_json(via)).same_structure(t3));
  EXPECT_EQ(graph_to_edge_list(path_graph(3)), "3 2\n0 1\n1 2\n");
}

TEST(GraphIo, MalformedInputs) {
  EXPECT_THROW(graph_from_json("{"), InvalidArgument);
  EXPECT_THROW(graph_from_json("{\"edges\": []}"), InvalidArgument);
  EXPECT_THROW(graph_from_json("{\"n\": 2, \"edges\": [[0, 2]]}"), InvalidArgument);
  EXPECT_THROW(graph_from_json("{\"n\": 2, \"edges\": [[0]]}"), InvalidArgument);
  EXPECT_THROW(graph_from_json("{\"n\": 2, \"edges\": [], \"labels\": {\"0\": \"a\"}}"), InvalidArgument);
  EXPECT_THROW(graph_from_edge_list("3"), InvalidArgument);
  EXPECT_THROW(graph_from_edge_list("3 2\n0 1\n"), InvalidArgument);
  EXPECT_THROW(graph_from_edge_list("3 1\n0 1\n1 2\n"), InvalidArgument);
  EXPECT_THROW(graph_from_edge_list("2 1\n0 0\n"), InvalidArgument);
}

TEST(GraphIo, SniffsFormat) {
  EXPECT_TRUE(read_graph("  {\"n\": 2, \"edges\": [[0, 1]]}").same_structure(clique_graph(2)));
  EXPECT_TRUE(read_graph("2 1\n0 1\n").same_structure(clique_graph(2)));
  EXPECT_EQ(format_for_path("a/b.JSON"), GraphFormat::Json);
  EXPECT_EQ(format_for_path("g.dot"), GraphFormat::Dot);
  EXPECT_EQ(format_for_path("g.txt"), GraphFormat::EdgeList);
}

TEST(GraphIo, Dot) {
  auto dot = graph_to_dot(Graph(2, std::vector<Edge>{{0, 1}}, {"a\"b", "c"}), "H");
  EXPECT_EQ(dot, "graph H {\n  0 [label=\"a\\\"b\"];\n  1 [label=\"c\"];\n  0 -- 1;\n}\n");
}

TEST(Budget, Parsing) {
  auto b = parse_budgets("sparse=20,bruteforce=12,game=1e8,materialize=100");
  EXPECT_EQ(b.sparse, 20u);
  EXPECT_EQ(b.brute_force, 12u);
  EXPECT_EQ(b.game_slots, 100'000'000u);
  EXPECT_EQ(b.materialize, 100u);
  EXPECT_EQ(parse_budgets("18").sparse, 18u);
  EXPECT_EQ(parse_budgets("").sparse, Budgets{}.sparse);
  EXPECT_THROW(parse_budgets("colour=3"), InvalidArgument);
  EXPECT_THROW(parse_budgets("sparse=x"), InvalidArgument);
}
