#include <doctest.h>

#include <random>

#include "letterkit/solver.hpp"
#include "oracles.hpp"

using namespace letterkit;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
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

const Decoder kSingleArc = parse_decoder("2\n0 1");

Partition blocks_of_word(const Word& w, int k) {
  Partition blocks(k);
  for (size_t p = 0; p < w.size(); ++p) blocks[w[p]].add(static_cast<int>(p));
  return blocks;
}

}  // namespace

TEST_CASE("decode_word") {
  Graph p4 = decode_word(kSingleArc, parse_word("abab", WordFormat::kAlpha));
  CHECK(p4.n() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adjacent(0, 1));
  CHECK(p4.adjacent(0, 3));
  CHECK(p4.adjacent(2, 3));
  CHECK(canonical_form(p4) == canonical_form(path(4)));

  Decoder loop = parse_decoder("1\n0 0");
  CHECK(decode_word(loop, Word(5, 0)) == complete(5));

  Graph k2k1 = decode_word(kSingleArc, parse_word("bab", WordFormat::kAlpha));
  CHECK(k2k1.edge_count() == 1);
  CHECK(k2k1.adjacent(1, 2));

  CHECK_THROWS_AS(decode_word(kSingleArc, Word{0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(decode_word(kSingleArc, Word(30, 0)), CapError);
}

TEST_CASE("word_of and realisation round trips") {
  Realisation constant;
  constant.letter = {0, 0, 0};
  constant.position = {0, 1, 2};
  CHECK(word_of(constant) == Word{0, 0, 0});

  Realisation swapped;
  swapped.letter = {0, 1};
  swapped.position = {1, 0};
  CHECK(word_of(swapped) == Word{1, 0});

  SUBCASE("decode then natural realisation reproduces the word") {
    Word w = parse_word("abba", WordFormat::kAlpha);
    Realisation natural;
    natural.letter = w;
    natural.position = {0, 1, 2, 3};
    CHECK(word_of(natural) == w);
    CHECK(!verify_realisation(decode_word(kSingleArc, w), kSingleArc, natural).has_value());
  }
}

TEST_CASE("verify_realisation") {
  Word w = parse_word("abab", WordFormat::kAlpha);
  Realisation natural;
  natural.letter = w;
  natural.position = {0, 1, 2, 3};
  Graph p4 = decode_word(kSingleArc, w);
  CHECK(!verify_realisation(p4, kSingleArc, natural).has_value());

  SUBCASE("an arcless decoder cannot realise an edge") {
    Realisation r;
    r.letter = {0, 1};
    r.position = {0, 1};
    auto bad = verify_realisation(complete(2), Decoder(2), r);
    REQUIRE(bad.has_value());
    CHECK(*bad == std::make_pair(0, 1));
  }

  SUBCASE("no single-letter realisation of C5 exists") {
    Graph c5 = path(5);
    c5.add_edge(4, 0);
    for (const Decoder& d : enumerate_decoders(1, false)) {
      std::vector<int> order(5);
      for (int i = 0; i < 5; ++i) order[i] = i;
      do {
        Realisation r;
        r.letter.assign(5, 0);
        r.position.assign(5, 0);
        for (int p = 0; p < 5; ++p) r.position[order[p]] = p;
        CHECK(verify_realisation(c5, d, r).has_value());
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("compatibility graph") {
  SUBCASE("symmetric decoders force nothing") {
    Decoder sym = parse_decoder("2\n0 1\n1 0");
    Graph c4 = decode_word(sym, parse_word("aabb", WordFormat::kAlpha));
    auto letters = std::vector<std::uint8_t>{0, 0, 1, 1};
    CHECK(build_compatibility_graph(c4, sym, letters).arc_count() == 0);
  }

  SUBCASE("abab assignment on P4 is acyclic") {
    Word w = parse_word("abab", WordFormat::kAlpha);
    Graph p4 = decode_word(kSingleArc, w);
    CompatibilityGraph cg = build_compatibility_graph(p4, kSingleArc, w);
    CHECK(is_acyclic(cg));
    // Forced precedences reproduce some topological order.
    std::vector<int> topo = topological_order(cg);
    CHECK(topo.size() == 4);
  }

  SUBCASE("the bipartition of C4 over a single arc is realisable") {
    // C4 = K_{2,2}; with classes {0,2} and {1,3} every cross pair is an
    // edge, no circuit arises, and the word aabb realises the graph.
    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    Partition blocks{VertexSet::of({0, 2}), VertexSet::of({1, 3})};
    CompatibilityGraph cg =
        build_compatibility_graph(c4, kSingleArc, letters_of_partition(4, blocks));
    CHECK(cg.arc_count() == 4);
    CHECK(is_acyclic(cg));
    CHECK(!check_letter_partition(c4, kSingleArc, blocks).has_value());
    Realisation r = realise_from_partition(c4, kSingleArc, blocks);
    CHECK(!verify_realisation(c4, kSingleArc, r).has_value());
  }

  SUBCASE("2K2 with paired classes forces a circuit") {
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    Partition blocks{VertexSet::of({0, 2}), VertexSet::of({1, 3})};
    CompatibilityGraph cg =
        build_compatibility_graph(two_k2, kSingleArc, letters_of_partition(4, blocks));
    CHECK(!is_acyclic(cg));
    auto violation = check_letter_partition(two_k2, kSingleArc, blocks);
    REQUIRE(violation.has_value());
    CHECK(violation->condition == LetterCondition::kC4);
    CHECK(violation->witness.size() == 4);
    CHECK_THROWS_AS(topological_order(cg), std::invalid_argument);
  }
}

TEST_CASE("check_letter_partition") {
  Decoder loop = parse_decoder("1\n0 0");
  Partition single{VertexSet::full(3)};
  CHECK(!check_letter_partition(complete(3), loop, single).has_value());

  auto violation = check_letter_partition(path(3), loop, single);
  REQUIRE(violation.has_value());
  CHECK(violation->condition == LetterCondition::kC1);
  REQUIRE(violation->witness.size() == 2);
  CHECK(!path(3).adjacent(violation->witness[0], violation->witness[1]));

  SUBCASE("C2: an edge inside a loopless class") {
    auto bad = check_letter_partition(complete(2), Decoder(1), Partition{VertexSet::full(2)});
    REQUIRE(bad.has_value());
    CHECK(bad->condition == LetterCondition::kC2);
  }

  SUBCASE("C3: both arcs force completeness") {
    Decoder both = parse_decoder("2\n0 1\n1 0");
    Graph one_edge(3);
    one_edge.add_edge(0, 1);
    Partition split{VertexSet::of({0}), VertexSet::of({1, 2})};
    auto bad = check_letter_partition(one_edge, both, split);
    REQUIRE(bad.has_value());
    CHECK(bad->condition == LetterCondition::kC3);
  }

  SUBCASE("empty blocks are allowed") {
    Partition with_empty{VertexSet::full(3), VertexSet{}};
    Decoder d = parse_decoder("2\n0 0");
    CHECK(!check_letter_partition(complete(3), d, with_empty).has_value());
  }

  SUBCASE("coverage and disjointness are enforced") {
    CHECK_THROWS_AS(check_letter_partition(complete(3), loop, Partition{VertexSet::of({0, 1})}),
                    std::invalid_argument);
    Decoder d2 = Decoder(2);
    CHECK_THROWS_AS(
        check_letter_partition(complete(3), d2,
                               Partition{VertexSet::of({0, 1}), VertexSet::of({1, 2})}),
        std::invalid_argument);
  }
}

TEST_CASE("realise_from_partition") {
  SUBCASE("identity order for a single clique block") {
    Decoder loop = parse_decoder("1\n0 0");
    Realisation r = realise_from_partition(complete(4), loop, Partition{VertexSet::full(4)});
    CHECK(r.order() == std::vector<int>{0, 1, 2, 3});
    CHECK(!verify_realisation(complete(4), loop, r).has_value());
  }

  SUBCASE("defensive recheck") {
    Decoder loop = parse_decoder("1\n0 0");
    CHECK_THROWS_AS(realise_from_partition(path(3), loop, Partition{VertexSet::full(3)}),
                    std::invalid_argument);
  }

  SUBCASE("every passing assignment realises, exhaustively at n <= 5, k <= 2") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : all_labelled(n)) {
        for (int k = 1; k <= 2; ++k) {
          for (const Decoder& d : enumerate_decoders(k, true)) {
            std::vector<int> letters(n, 0);
            while (true) {
              Partition blocks(k);
              for (int v = 0; v < n; ++v) blocks[letters[v]].add(v);
              bool passes = !check_letter_partition(g, d, blocks).has_value();
              bool realisable = false;
              if (passes) {
                Realisation r = realise_from_partition(g, d, blocks);
                realisable = !verify_realisation(g, d, r).has_value();
                CHECK(realisable);
              }
              int pos = n - 1;
              while (pos >= 0 && letters[pos] == k - 1) letters[pos--] = 0;
              if (pos < 0) break;
              ++letters[pos];
            }
          }
        }
      }
    }
  }
}

TEST_CASE("state round trip over random words") {
  std::mt19937 rng(17);
  for (int k = 1; k <= 3; ++k) {
    auto decoders = enumerate_decoders(k, true);
    for (int trial = 0; trial < 60; ++trial) {
      const Decoder& d = decoders[rng() % decoders.size()];
      int len = static_cast<int>(rng() % 8 + 1);
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(rng() % k));
      Graph g = decode_word(d, w);
      Partition blocks = blocks_of_word(w, k);
      CHECK(!check_letter_partition(g, d, blocks).has_value());
      Realisation r = realise_from_partition(g, d, blocks);
      CHECK(!verify_realisation(g, d, r).has_value());

      // Structure shared by every verified realisation: letter classes
      // are cliques or independent sets and class pairs induce chain graphs.
      for (int a = 0; a < k; ++a) {
        VertexSet cls = blocks[a];
        bool clique = true;
        bool independent = true;
        for (int x : cls) {
          VertexSet inside = g.neighbours(x) & cls;
          VertexSet rest = cls;
          rest.remove(x);
          if (inside != rest) clique = false;
          if (!inside.empty()) independent = false;
        }
        CHECK((clique || independent));
        for (int b = a + 1; b < k; ++b) {
          CHECK(is_chain_graph(g, blocks[a], blocks[b]));
        }
      }
    }
  }
}

TEST_CASE("subwords decode to induced subgraphs") {
  std::mt19937 rng(23);
  Decoder d = parse_decoder("3\n0 1\n1 2\n2 2\n0 0");
  for (int trial = 0; trial < 100; ++trial) {
    int len = static_cast<int>(rng() % 9);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(rng() % 3));
    Graph g = decode_word(d, w);
    std::uint32_t keep = rng() & ((std::uint32_t{1} << len) - 1);
    Word sub;
    for (int i = 0; i < len; ++i) {
      if ((keep >> i) & 1u) sub.push_back(w[i]);
    }
    CHECK(decode_word(d, sub) == induced_subgraph(g, VertexSet(keep)));
  }
}

TEST_CASE("topological order breaks ties towards the lowest vertex") {
  CompatibilityGraph cg(4, VertexSet::full(4));
  cg.add_arc(3, 1);
  cg.add_arc(2, 1);
  CHECK(topological_order(cg) == std::vector<int>{0, 2, 3, 1});
}
