#include "letterkit/rankwidth.hpp"

#include <algorithm>
#include <array>

namespace letterkit {

std::vector<std::uint32_t> cut_matrix(const Graph& g, VertexSet x) {
  if (!x.subset_of(g.vertices())) throw std::invalid_argument("vertex set out of range");
  std::uint32_t outside = (g.vertices() - x).bits();
  std::vector<std::uint32_t> rows;
  rows.reserve(x.count());
  for (int v : x) rows.push_back(g.neighbours(v).bits() & outside);
  return rows;
}

int cutrank(const Graph& g, VertexSet x) {
  std::array<std::uint32_t, kMaxVertices> basis{};
  int rank = 0;
  for (std::uint32_t row : cut_matrix(g, x)) {
    while (row != 0) {
      int lead = 31 - std::countl_zero(row);
      if (basis[lead] == 0) {
        basis[lead] = row;
        ++rank;
        break;
      }
      row ^= basis[lead];
    }
  }
  return rank;
}

int distinct_cut_rows(const Graph& g, VertexSet x) {
  std::vector<std::uint32_t> rows = cut_matrix(g, x);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return static_cast<int>(rows.size());
}

int order_width(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.n()) throw std::invalid_argument("order has wrong length");
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= g.n() || seen.contains(v)) throw std::invalid_argument("order is not a bijection");
    seen.add(v);
  }
  int width = 0;
  VertexSet prefix;
  for (int i = 0; i + 1 < g.n(); ++i) {
    prefix.add(order[i]);
    width = std::max(width, cutrank(g, prefix));
  }
  return width;
}

LinearRankWidth linear_rankwidth_exact(const Graph& g) {
  int n = g.n();
  require_cap(n, 16, "linear_rankwidth_exact");
  if (n == 0) return {0, {}};

  std::uint32_t full = g.vertices().bits();
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int cut = cutrank(g, VertexSet(s));
    int best = kMaxVertices + 1;
    int pick = -1;
    for (int v : VertexSet(s)) {
      int sub = f[s & ~(std::uint32_t{1} << v)];
      if (sub < best) {
        best = sub;
        pick = v;
      }
    }
    f[s] = static_cast<std::uint8_t>(std::max(cut, best));
    last[s] = static_cast<std::int8_t>(pick);
  }

  LinearRankWidth out;
  out.width = f[full];
  out.order.assign(n, -1);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = last[s];
    out.order[i] = v;
    s &= ~(std::uint32_t{1} << v);
  }
  return out;
}

}  // namespace letterkit
