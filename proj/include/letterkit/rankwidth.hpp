#pragma once

#include <span>
#include <vector>

#include "letterkit/graph.hpp"

namespace letterkit {

// The bipartite adjacency matrix across the cut (x, V \ x): one bit row per
// member of x, columns indexed by the outside vertices (in place).
std::vector<std::uint32_t> cut_matrix(const Graph& g, VertexSet x);

// GF(2) rank of the cut matrix, by bitset gaussian elimination.
int cutrank(const Graph& g, VertexSet x);

// Number of distinct rows of the cut matrix (counting an all-zero row).
int distinct_cut_rows(const Graph& g, VertexSet x);

// Max prefix cut-rank of a vertex ordering.
int order_width(const Graph& g, std::span<const int> order);

struct LinearRankWidth {
  int width = 0;
  std::vector<int> order;
};

// Exact linear rank-width with a witness order, by dynamic programming over
// vertex subsets: f(S) = max(cutrank(S), min over v in S of f(S - v)).
// Capped at n <= 16.
LinearRankWidth linear_rankwidth_exact(const Graph& g);

}  // namespace letterkit
