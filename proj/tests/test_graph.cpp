#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "letterkit/graph.hpp"
#include "oracles.hpp"

using namespace letterkit;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

std::vector<Graph> all_labelled(int n) {
  std::vector<Graph> out;
  int pairs = n * (n - 1) / 2;
  for (std::uint32_t word = 0; word < (std::uint32_t{1} << pairs); ++word) {
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++t) {
        if ((word >> t) & 1u) g.add_edge(i, j);
      }
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph p3 = parse_edge_list("3\n0 1\n1 2");
  CHECK(p3.n() == 3);
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));
  CHECK(!p3.adjacent(0, 2));

  Graph k1 = parse_edge_list("1");
  CHECK(k1.n() == 1);
  CHECK(k1.edge_count() == 0);

  Graph c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0");
  CHECK(c4.edge_count() == 4);
  CHECK(c4 == cycle(4));

  SUBCASE("comments and duplicate edges") {
    Graph g = parse_edge_list("# a triangle\n3\n0 1 # first\n0 1\n1 2\n0 2\n");
    CHECK(g == complete(3));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("99"), CapError);
  }
  SUBCASE("round trip") {
    CHECK(parse_edge_list(to_edge_list(c4)) == c4);
    CHECK(to_edge_list(parse_edge_list("2\n")) == "2\n");
  }
}

TEST_CASE("graph6 parsing") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.n() == 2);
  CHECK(k2.adjacent(0, 1));

  CHECK(parse_graph6("?").n() == 0);
  CHECK(parse_graph6(">>graph6<<A_") == k2);

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);    // missing bytes
    CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);  // extra bytes
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A\x01"), ParseError);
  }

  SUBCASE("round trip over every labelled 4-vertex graph") {
    std::set<std::string> canon;
    for (const Graph& g : all_labelled(4)) {
      std::string code = to_graph6(g);
      CHECK(parse_graph6(code) == g);
      CHECK(to_graph6(parse_graph6(code)) == code);
      canon.insert(canonical_form(g));
    }
    CHECK(canon.size() == 11);
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete(3)).edge_count() == 0);
  for (const Graph& g : all_labelled(5)) {
    CHECK(complement(complement(g)) == g);
  }
  Graph p4 = path(4);
  CHECK(canonical_form(complement(p4)) == canonical_form(p4));
}

TEST_CASE("induced subgraphs") {
  Graph c4 = cycle(4);
  Graph sub = induced_subgraph(c4, VertexSet::of({0, 1, 2}));
  CHECK(sub == path(3));
  CHECK(induced_subgraph(c4, c4.vertices()) == c4);
  Graph k4 = complete(4);
  CHECK(induced_subgraph(k4, VertexSet::of({1, 3})) == complete(2));

  SUBCASE("commutes with complement") {
    for (const Graph& g : all_labelled(4)) {
      for (std::uint32_t mask = 0; mask < 16; ++mask) {
        VertexSet s(mask);
        CHECK(induced_subgraph(complement(g), s) == complement(induced_subgraph(g, s)));
      }
    }
  }
}

TEST_CASE("twin classes") {
  Partition c4_classes = twin_classes(cycle(4));
  REQUIRE(c4_classes.size() == 2);
  CHECK(c4_classes[0] == VertexSet::of({0, 2}));
  CHECK(c4_classes[1] == VertexSet::of({1, 3}));

  Partition kn = twin_classes(complete(5));
  REQUIRE(kn.size() == 1);
  CHECK(kn[0] == VertexSet::full(5));

  CHECK(twin_classes(path(4)).size() == 4);

  SUBCASE("every class is a clique or an independent set") {
    for (const Graph& g : all_labelled(5)) {
      for (const VertexSet& cls : twin_classes(g)) {
        bool clique = true;
        bool independent = true;
        for (int x : cls) {
          VertexSet rest = cls;
          rest.remove(x);
          if ((g.neighbours(x) & cls) != rest) clique = false;
          if ((g.neighbours(x) & cls) != VertexSet{}) independent = false;
        }
        CHECK((clique || independent));
      }
    }
  }
}

TEST_CASE("twin classes relative to a prefix") {
  Graph p4 = path(4);
  SUBCASE("whole vertex set collapses to one block") {
    for (const Graph& g : all_labelled(4)) {
      Partition p = twin_classes_wrt(g, g.vertices());
      REQUIRE(p.size() == 1);
      CHECK(p[0] == g.vertices());
    }
  }
  SUBCASE("empty set gives the empty partition") {
    CHECK(twin_classes_wrt(p4, VertexSet{}).empty());
  }
  Partition two = twin_classes_wrt(p4, VertexSet::of({0, 1}));
  CHECK(two.size() == 2);

  Partition one = twin_classes_wrt(cycle(4), VertexSet::of({0, 2}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == VertexSet::of({0, 2}));
  CHECK(twin_key_wrt(cycle(4), VertexSet::of({0, 2}), 0) == VertexSet::of({1, 3}));
}

TEST_CASE("chain graphs") {
  Graph complete_bip(5);
  for (int x : {0, 1}) {
    for (int y : {2, 3, 4}) complete_bip.add_edge(x, y);
  }
  CHECK(is_chain_graph(complete_bip, VertexSet::of({0, 1}), VertexSet::of({2, 3, 4})));

  Graph edgeless(4);
  CHECK(is_chain_graph(edgeless, VertexSet::of({0, 1}), VertexSet::of({2, 3})));

  Graph matching(4);
  matching.add_edge(0, 2);
  matching.add_edge(1, 3);
  CHECK(!is_chain_graph(matching, VertexSet::of({0, 1}), VertexSet::of({2, 3})));

  CHECK_THROWS_AS(is_chain_graph(edgeless, VertexSet::of({0, 1}), VertexSet::of({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("canonical form") {
  Graph p3a = parse_edge_list("3\n0 1\n1 2");
  Graph p3b = parse_edge_list("3\n1 0\n0 2");
  CHECK(canonical_form(p3a) == canonical_form(p3b));
  CHECK(canonical_form(complete(3)) != canonical_form(p3a));

  SUBCASE("constant on isomorphism classes") {
    // Relabelling by any fixed permutation must not change the form.
    for (const Graph& g : all_labelled(4)) {
      Graph h(4);
      const int perm[4] = {2, 0, 3, 1};
      for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
      CHECK(canonical_form(g) == canonical_form(h));
    }
  }
  SUBCASE("parses back to an isomorphic graph") {
    Graph c5 = cycle(5);
    CHECK(canonical_form(parse_graph6(canonical_form(c5))) == canonical_form(c5));
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(canonical_form(Graph(11)), CapError);
  }
}
