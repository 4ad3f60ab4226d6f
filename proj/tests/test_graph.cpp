#include <doctest.h>

#include <random>

#include "czc/cycles.hpp"
#include "czc/errors.hpp"
#include "czc/fixtures.hpp"
#include "czc/graph.hpp"
#include "czc/graph_io.hpp"
#include "czc/minors.hpp"
#include "support.hpp"

using namespace czc;

namespace {

IntPolynomial x(EdgeId e) { return IntPolynomial::variable(e); }

MultiGraph barbell() { return MultiGraph::from_edges({{1, 0, 0}, {2, 0, 1}, {3, 1, 1}}); }

MultiGraph path4() { return MultiGraph::from_edges({{1, 0, 1}, {2, 1, 2}, {3, 2, 3}}); }

bool has_edge_like(const MultiGraph& G, EdgeId id, VertexId tail, VertexId head) {
  return G.has_edge(id) && G.edge(id) == Edge{id, tail, head};
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(MultiGraph({0, 1}, {{1, 0, 0}}), DisconnectedGraph);
  CHECK_THROWS_AS(MultiGraph({0, 1}, {{1, 0, 1}, {1, 1, 0}}), PreconditionError);
  CHECK_THROWS_AS(MultiGraph({0}, {{1, 0, 2}}), PreconditionError);
  CHECK_THROWS_AS(MultiGraph({}, {}), PreconditionError);
  const MultiGraph point({5}, {});
  CHECK(genus(point) == 0);
  CHECK(fixtures::k4_graph().valence(0) == 3);
  CHECK(barbell().valence(0) == 3);
}

TEST_CASE("genus examples") {
  CHECK(genus(fixtures::k4_graph()) == 3);
  CHECK(genus(fixtures::l3_graph()) == 4);
  CHECK(genus(path4()) == 0);
  CHECK(genus(barbell()) == 2);
}

TEST_CASE("contract examples") {
  const MultiGraph K = contract_edge(fixtures::k4_graph(), 4);
  CHECK(K.vertex_count() == 3);
  CHECK(K.edge_count() == 5);
  CHECK(genus(K) == 3);

  const MultiGraph P = contract_edge(path4(), 2);
  CHECK(P.vertices() == std::set<VertexId>{0, 1, 3});
  CHECK(has_edge_like(P, 1, 0, 1));
  CHECK(has_edge_like(P, 3, 1, 3));

  const MultiGraph W = contract_edge(barbell(), 2);
  CHECK(W.vertex_count() == 1);
  CHECK(genus(W) == 2);
  CHECK_THROWS_AS(contract_edge(barbell(), 1), PreconditionError);
  CHECK_THROWS_AS(contract_edge(barbell(), 9), PreconditionError);
}

TEST_CASE("delete examples") {
  const MultiGraph banana = MultiGraph::from_edges({{1, 0, 1}, {2, 0, 1}});
  const MultiGraph D = delete_edge(banana, 1);
  CHECK(D.edge_count() == 1);
  CHECK(genus(D) == 0);
  CHECK(genus(delete_edge(barbell(), 3)) == 1);
  CHECK_THROWS_AS(delete_edge(barbell(), 2), DisconnectedGraph);
}

TEST_CASE("block examples") {
  const auto k4 = blocks(fixtures::k4_graph());
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].edge_count() == 6);

  const MultiGraph bowtie =
      MultiGraph::from_edges({{1, 0, 1}, {2, 1, 2}, {3, 2, 0}, {4, 0, 3}, {5, 3, 4}, {6, 4, 0}});
  const auto two = blocks(bowtie);
  REQUIRE(two.size() == 2);
  CHECK(two[0].edge_ids() == std::vector<EdgeId>{1, 2, 3});
  CHECK(two[1].edge_ids() == std::vector<EdgeId>{4, 5, 6});

  const auto bb = blocks(barbell());
  REQUIRE(bb.size() == 3);
  CHECK(bb[0].edge_ids() == std::vector<EdgeId>{1});
  CHECK(bb[1].edge_ids() == std::vector<EdgeId>{2});
  CHECK(bb[2].edge_ids() == std::vector<EdgeId>{3});
  CHECK(bridges(barbell()) == std::vector<EdgeId>{2});
  CHECK(blocks(MultiGraph({0}, {})).empty());
}

TEST_CASE("stabilize examples") {
  const MultiGraph K = fixtures::k4_graph();
  const Subdivision s = subdivide_edge(K, 1);
  CHECK(s.first == 1);
  CHECK(s.second == 7);
  CHECK(s.middle == 4);
  CHECK(has_edge_like(s.graph, 1, 2, 4));
  CHECK(has_edge_like(s.graph, 7, 4, 3));
  const MultiGraph back = stabilize(s.graph);
  CHECK(has_edge_like(back, 1, 2, 3));
  CHECK(back.vertices() == K.vertices());
  CHECK(isomorphic(back, K));

  std::vector<Edge> pendant = K.edges();
  pendant.push_back({7, 1, 4});
  pendant.push_back({8, 4, 5});
  const MultiGraph P = stabilize(MultiGraph::from_edges(pendant));
  CHECK(P.vertices() == K.vertices());
  CHECK(P.edge_ids() == K.edge_ids());

  CHECK(stabilize(K) == K);
  CHECK_THROWS_AS(stabilize(MultiGraph::from_edges({{1, 0, 0}})), PreconditionError);

  // Lengths add along a smoothed path.
  std::map<EdgeId, Integer> lengths{{1, 2}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 3}};
  const TropicalCurve c = stabilize(TropicalCurve(s.graph, lengths));
  CHECK(c.length(1) == 5);
  CHECK(c.graph().edge_count() == 6);
}

TEST_CASE("two-edge-connectivization contracts bridges") {
  const MultiGraph T = two_edge_connectivization(barbell());
  CHECK(T.edge_ids() == std::vector<EdgeId>{1, 3});
  CHECK(T.vertex_count() == 1);
}

TEST_CASE("tropical curve validation") {
  const MultiGraph K = fixtures::k4_graph();
  CHECK_THROWS_AS(TropicalCurve(K, {{1, 1}}), PreconditionError);
  std::map<EdgeId, Integer> bad{{1, 0}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}};
  CHECK_THROWS_AS(TropicalCurve(K, bad), PreconditionError);
  bad[1] = 1;
  bad[9] = 1;
  CHECK_THROWS_AS(TropicalCurve(K, bad), PreconditionError);
  CHECK_THROWS_AS(TropicalCurve::positional(K, {1, 1, 1}), PreconditionError);
  CHECK(TropicalCurve::positional(K, {2, 1, 1, 1, 1, 1}).length(1) == 2);
}

TEST_CASE("period matrix fixtures") {
  const auto k4 = CycleBasisContext::build(fixtures::k4_graph());
  CHECK(k4.tree_edges() == fixtures::k4_tree());
  const std::vector<std::vector<IntPolynomial>> qk4{
      {x(1) + x(5) + x(6), -x(6), -x(5)},
      {-x(6), x(2) + x(4) + x(6), -x(4)},
      {-x(5), -x(4), x(3) + x(4) + x(5)}};
  CHECK(k4.Q() == qk4);
  CHECK(k4.ordering() == std::vector<EdgeId>{1, 2, 3, 4, 5, 6});

  const auto l3 = CycleBasisContext::build(fixtures::l3_graph());
  CHECK(l3.tree_edges() == fixtures::l3_tree());
  const std::vector<std::vector<IntPolynomial>> ql3{
      {x(1) + x(6), 0, x(6), x(6)},
      {0, x(2) + x(5), x(5), x(5)},
      {x(6), x(5), x(3) + x(5) + x(6), x(5) + x(6)},
      {x(6), x(5), x(5) + x(6), x(4) + x(5) + x(6)}};
  CHECK(l3.Q() == ql3);

  const auto loop = CycleBasisContext::build(MultiGraph::from_edges({{1, 0, 0}}));
  CHECK(loop.Q() == std::vector<std::vector<IntPolynomial>>{{x(1)}});
  CHECK(specialize_Q(loop, TropicalCurve::positional(loop.graph(), {5})) == IntMatrix{{5}});
}

TEST_CASE("specialized period matrices") {
  const auto k4 = fixtures::k4_context();
  CHECK(specialize_Q(k4, TropicalCurve::unit(k4.graph())) ==
        IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
  CHECK(specialize_Q(k4, TropicalCurve::positional(k4.graph(), {2, 1, 1, 1, 1, 1})) ==
        IntMatrix{{4, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
  CHECK_THROWS_AS(specialize_Q(k4, TropicalCurve::unit(fixtures::l3_graph())), PreconditionError);
}

TEST_CASE("tree hints") {
  const MultiGraph K = fixtures::k4_graph();
  CHECK_THROWS_AS(CycleBasisContext::build(K, std::set<EdgeId>{1, 2}), PreconditionError);
  CHECK_THROWS_AS(CycleBasisContext::build(K, std::set<EdgeId>{1, 2, 3}), PreconditionError);
  const auto alt = CycleBasisContext::build(K, std::set<EdgeId>{1, 2, 4});
  CHECK(alt.basis_edges() == std::vector<EdgeId>{3, 5, 6});
  CHECK_THROWS_AS(alt.q(0, 1), PreconditionError);
  CHECK_THROWS_AS(alt.basis_edge(4), PreconditionError);
}

TEST_CASE("cycle basis invariants on random graphs") {
  std::mt19937 rng(3101);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = support::uniform(rng, 1, 5);
    const MultiGraph G = support::random_graph(rng, g, 6);
    const auto ctx = CycleBasisContext::build(G, support::random_tree(rng, G));
    REQUIRE(ctx.genus() == g);
    CHECK(genus(G) == static_cast<int>(G.edge_count()) - static_cast<int>(G.vertex_count()) + 1);
    for (int i = 1; i <= g; ++i) {
      const EdgeId ei = ctx.basis_edge(i);
      CHECK(ctx.incidence(i, ei) == 1);
      IntPolynomial diagonal;
      for (const auto& [e, s] : ctx.cycle(i)) {
        diagonal += x(e);
        if (e != ei) CHECK(ctx.is_tree_edge(e));
      }
      CHECK(ctx.q(i, i) == diagonal);
      CHECK(ctx.q(i, i).coefficient(Monomial::variable(ei)) == 1);
      for (int j = 1; j <= g; ++j) {
        CHECK(ctx.q(i, j) == ctx.q(j, i));
        CHECK(ctx.q(i, j).is_homogeneous(1));
        if (i != j) CHECK(ctx.incidence(i, ctx.basis_edge(j)) == 0);
      }
    }
    // Each cycle is closed: signed in-degree minus out-degree vanishes.
    for (int i = 1; i <= g; ++i) {
      std::map<VertexId, int> balance;
      for (const auto& [e, s] : ctx.cycle(i)) {
        balance[G.edge(e).head] += s;
        balance[G.edge(e).tail] -= s;
      }
      for (const auto& [v, b] : balance) CHECK(b == 0);
    }
  }
}

TEST_CASE("specialized period matrix is positive definite") {
  std::mt19937 rng(3102);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = support::uniform(rng, 1, 5);
    const MultiGraph G = support::random_graph(rng, g, 6);
    const auto ctx = CycleBasisContext::build(G);
    const IntMatrix Q = specialize_Q(ctx, support::random_curve(rng, G, 9));
    CHECK(Q == Q.transpose());
    for (std::size_t k = 1; k <= Q.rows(); ++k) {
      IntMatrix lead(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) lead(r, c) = Q(r, c);
      CHECK(determinant(lead) > 0);
    }
  }
}

TEST_CASE("genus under contraction, deletion and stabilization") {
  std::mt19937 rng(3103);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = support::uniform(rng, 2, 5);
    const MultiGraph G = support::random_graph(rng, g, 6);
    const auto br = bridges(G);
    for (const auto& e : G.edges()) {
      if (!e.is_loop()) CHECK(genus(contract_edge(G, e.id)) == g);
      const bool bridge = std::find(br.begin(), br.end(), e.id) != br.end();
      if (!bridge) CHECK(genus(delete_edge(G, e.id)) == g - 1);
      else CHECK_THROWS_AS(delete_edge(G, e.id), DisconnectedGraph);
    }
    const MultiGraph S = stabilize(G);
    CHECK(is_stable(S));
    CHECK(genus(S) == g);
    CHECK(stabilize(S) == S);
    CHECK(genus(two_edge_connectivization(G)) == g);
    CHECK(bridges(two_edge_connectivization(G)).empty());
    int block_genus = 0;
    std::size_t block_edges = 0;
    for (const auto& B : blocks(G)) {
      block_genus += genus(B);
      block_edges += B.edge_count();
    }
    CHECK(block_genus == g);
    CHECK(block_edges == G.edge_count());
  }
}

TEST_CASE("graph files round-trip") {
  const GraphFile k4 = load_graph_file(CZC_DATA_DIR "/k4.txt");
  CHECK(k4.graph == fixtures::k4_graph());
  CHECK(load_graph_file(CZC_DATA_DIR "/l3.txt").graph == fixtures::l3_graph());

  std::mt19937 rng(3104);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph G = support::random_graph(rng, support::uniform(rng, 0, 4), 6);
    std::map<EdgeId, Integer> lengths;
    for (const auto& e : G.edges())
      if (support::uniform(rng, 0, 1)) lengths[e.id] = support::uniform(rng, 1, 50);
    const GraphFile expected{G, lengths};
    const GraphFile text = parse_graph_text(graph_to_text(G, lengths));
    CHECK(text == expected);
    CHECK(parse_graph(graph_to_text(G, lengths)) == expected);
    CHECK(parse_graph_json(graph_to_json(G, lengths)) == expected);
    CHECK(parse_graph(graph_to_json(G, lengths).dump()) == expected);
    CHECK(graph_to_text(text.graph, text.lengths) == graph_to_text(G, lengths));
  }
}

TEST_CASE("graph file errors") {
  const GraphFile f = parse_graph_text("# comment\n\ne 1 0 1 3  # trailing\ne 2 1 0\n");
  CHECK(f.graph.edge_count() == 2);
  CHECK(f.lengths == std::map<EdgeId, Integer>{{1, 3}});
  CHECK_FALSE(f.has_all_lengths());

  auto line_of = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("e 1 0 1\nq 3\n") == 2);
  CHECK(line_of("v 0\ne 1 0\n") == 2);
  CHECK(line_of("e 1 0 1\ne 2 0 one\n") == 2);
  CHECK(line_of("e 1 0 1\n\ne 1 1 0\n") == 3);
  CHECK(line_of("e 1 0 1 1.5\n") == 1);
  CHECK_THROWS_AS(parse_graph_text("e 1 0 1\ne 2 2 3\n"), DisconnectedGraph);
  CHECK_THROWS_AS(parse_graph_text(""), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"vertices\": [0], \"edges\": [{\"id\": 1}]}"), ParseError);
  CHECK_THROWS_AS(parse_graph("{not json"), ParseError);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), PreconditionError);

  const Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(Integer(7)).is_number_integer());
}

}  // TEST_SUITE
