#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "letterkit/base.hpp"

namespace letterkit {

// Undirected simple graph on vertices 0..n-1 with bit-row adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbours(int v) const { return VertexSet(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

// Edge-list format: first non-comment line is n, then one "u v" per line;
// '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Standard graph6, short header only (n <= 62, further capped by storage).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);

// Induced subgraph on s, relabelled by increasing original vertex index.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);

// Maximal classes of vertices with equal neighbourhoods outside the pair
// (adjacent and non-adjacent twin pairs both qualify). Blocks ordered by
// their smallest vertex.
Partition twin_classes(const Graph& g);

// Partition of b where x, y share a block iff they have the same
// neighbourhood in V \ b. The block key is that common outside
// neighbourhood, see twin_key_wrt.
Partition twin_classes_wrt(const Graph& g, VertexSet b);
VertexSet twin_key_wrt(const Graph& g, VertexSet b, int x);

// True iff the neighbourhoods of x into y are totally ordered by inclusion.
// Only edges between x and y are considered.
bool is_chain_graph(const Graph& g, VertexSet x, VertexSet y);

// Isomorphism-invariant form: the graph6 encoding of the relabelling that
// minimizes the adjacency bit string over all n! permutations. Capped at
// n <= 10.
std::string canonical_form(const Graph& g);

}  // namespace letterkit
