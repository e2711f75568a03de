#include "letterkit/realisation.hpp"

#include <algorithm>

namespace letterkit {

Graph decode_word(const Decoder& d, const Word& w) {
  int n = static_cast<int>(w.size());
  require_cap(n, kMaxVertices, "decode_word");
  for (auto letter : w) {
    if (letter >= d.k()) throw std::invalid_argument("decode_word: letter out of range");
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d.arc(w[i], w[j])) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<int> Realisation::order() const {
  std::vector<int> out(position.size());
  for (size_t v = 0; v < position.size(); ++v) out[position[v]] = static_cast<int>(v);
  return out;
}

Word word_of(const Realisation& r) {
  Word w(r.position.size());
  for (size_t v = 0; v < r.position.size(); ++v) w[r.position[v]] = r.letter[v];
  return w;
}

namespace {

void validate_realisation(const Graph& g, const Decoder& d, const Realisation& r) {
  int n = g.n();
  if (static_cast<int>(r.letter.size()) != n || static_cast<int>(r.position.size()) != n) {
    throw std::invalid_argument("realisation does not match the vertex set");
  }
  VertexSet seen;
  for (int v = 0; v < n; ++v) {
    if (r.letter[v] >= d.k()) throw std::invalid_argument("realisation: letter out of range");
    if (r.position[v] < 0 || r.position[v] >= n || seen.contains(r.position[v])) {
      throw std::invalid_argument("realisation: positions not bijective");
    }
    seen.add(r.position[v]);
  }
}

}  // namespace

std::optional<std::pair<int, int>> verify_realisation(const Graph& g, const Decoder& d,
                                                      const Realisation& r) {
  validate_realisation(g, d, r);
  std::vector<int> order = r.order();
  for (int p = 0; p < g.n(); ++p) {
    for (int q = p + 1; q < g.n(); ++q) {
      int x = order[p];
      int y = order[q];
      bool expected = d.arc(r.letter[x], r.letter[y]);
      if (g.adjacent(x, y) != expected) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

int CompatibilityGraph::arc_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(out_[v]);
  return total;
}

CompatibilityGraph build_compatibility_graph(const Graph& g, const Decoder& d,
                                             std::span<const std::uint8_t> letters,
                                             VertexSet universe) {
  if (static_cast<int>(letters.size()) != g.n()) {
    throw std::invalid_argument("assignment does not match the vertex set");
  }
  CompatibilityGraph cg(g.n(), universe);
  for (int x : universe) {
    int a = letters[x];
    for (int b = 0; b < d.k(); ++b) {
      if (!(d.arc(a, b) && !d.arc(b, a))) continue;
      VertexSet b_class;
      for (int y : universe) {
        if (y != x && letters[y] == b) b_class.add(y);
      }
      // Edges give x -> y, non-edges the reverse.
      for (int y : b_class & g.neighbours(x)) cg.add_arc(x, y);
      for (int y : b_class - g.neighbours(x)) cg.add_arc(y, x);
    }
  }
  return cg;
}

CompatibilityGraph build_compatibility_graph(const Graph& g, const Decoder& d,
                                             std::span<const std::uint8_t> letters) {
  return build_compatibility_graph(g, d, letters, g.vertices());
}

namespace {

// Kahn's peeling; returns the vertices never removed (empty iff acyclic).
VertexSet kahn_leftover(const CompatibilityGraph& cg, std::vector<int>* order_out) {
  std::array<int, kMaxVertices> indeg{};
  VertexSet universe = cg.universe();
  for (int x : universe) {
    for (int y : cg.out(x) & universe) ++indeg[y];
  }
  VertexSet ready;
  for (int x : universe) {
    if (indeg[x] == 0) ready.add(x);
  }
  VertexSet removed;
  while (!ready.empty()) {
    int x = ready.min();
    ready.remove(x);
    removed.add(x);
    if (order_out != nullptr) order_out->push_back(x);
    for (int y : cg.out(x) & universe) {
      if (--indeg[y] == 0) ready.add(y);
    }
  }
  return universe - removed;
}

}  // namespace

bool is_acyclic(const CompatibilityGraph& cg) { return kahn_leftover(cg, nullptr).empty(); }

std::vector<int> topological_order(const CompatibilityGraph& cg) {
  std::vector<int> order;
  order.reserve(cg.universe().count());
  if (!kahn_leftover(cg, &order).empty()) throw std::invalid_argument("compatibility graph is cyclic");
  return order;
}

std::vector<int> shortest_circuit(const CompatibilityGraph& cg) {
  VertexSet leftover = kahn_leftover(cg, nullptr);
  std::vector<int> best;
  for (int s : leftover) {
    // BFS within the leftover looking for the shortest way back to s.
    std::array<int, kMaxVertices> parent;
    parent.fill(-2);
    std::vector<int> queue{s};
    parent[s] = -1;
    std::vector<int> found;
    for (size_t head = 0; head < queue.size() && found.empty(); ++head) {
      int u = queue[head];
      for (int v : cg.out(u) & leftover) {
        if (v == s) {
          found.push_back(u);
          while (u != s) {
            found.push_back(parent[u] == -1 ? s : parent[u]);
            u = parent[u];
          }
          std::reverse(found.begin(), found.end());
          break;
        }
        if (parent[v] == -2) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (!found.empty() && (best.empty() || found.size() < best.size())) best = found;
  }
  return best;
}

const char* to_string(LetterCondition c) {
  switch (c) {
    case LetterCondition::kC1:
      return "C1";
    case LetterCondition::kC2:
      return "C2";
    case LetterCondition::kC3:
      return "C3";
    case LetterCondition::kC4:
      return "C4";
  }
  return "?";
}

namespace {

std::optional<PartitionViolation> check_blocks(const Graph& g, const Decoder& d,
                                               std::span<const VertexSet> blocks,
                                               VertexSet universe) {
  // C1/C2: blocks of size >= 2 are cliques exactly when the letter has a
  // loop, independent sets exactly when it does not.
  for (int a = 0; a < d.k(); ++a) {
    VertexSet block = blocks[a];
    if (block.count() < 2) continue;
    for (int x : block) {
      VertexSet inside = g.neighbours(x) & block;
      if (d.loop(a)) {
        VertexSet missing = (block - inside);
        missing.remove(x);
        if (!missing.empty()) {
          return PartitionViolation{LetterCondition::kC1, {x, missing.min()}};
        }
      } else if (!inside.empty()) {
        return PartitionViolation{LetterCondition::kC2, {x, inside.min()}};
      }
    }
  }
  // C3: both arcs force complete bipartite, neither forces edgeless.
  for (int a = 0; a < d.k(); ++a) {
    for (int b = a + 1; b < d.k(); ++b) {
      bool ab = d.arc(a, b);
      bool ba = d.arc(b, a);
      if (ab != ba) continue;
      for (int x : blocks[a]) {
        VertexSet hits = g.neighbours(x) & blocks[b];
        if (ab) {
          VertexSet missing = blocks[b] - hits;
          if (!missing.empty()) {
            return PartitionViolation{LetterCondition::kC3, {x, missing.min()}};
          }
        } else if (!hits.empty()) {
          return PartitionViolation{LetterCondition::kC3, {x, hits.min()}};
        }
      }
    }
  }
  // C4: the compatibility graph must be acyclic.
  auto letters = letters_of_partition(g.n(), blocks);
  CompatibilityGraph cg = build_compatibility_graph(g, d, letters, universe);
  if (!is_acyclic(cg)) {
    return PartitionViolation{LetterCondition::kC4, shortest_circuit(cg)};
  }
  return std::nullopt;
}

VertexSet union_of(std::span<const VertexSet> blocks) {
  VertexSet u;
  int total = 0;
  for (VertexSet b : blocks) {
    u = u | b;
    total += b.count();
  }
  if (total != u.count()) throw std::invalid_argument("blocks overlap");
  return u;
}

}  // namespace

std::vector<std::uint8_t> letters_of_partition(int n, std::span<const VertexSet> blocks) {
  std::vector<std::uint8_t> letters(n, 0);
  for (size_t a = 0; a < blocks.size(); ++a) {
    for (int v : blocks[a]) letters[v] = static_cast<std::uint8_t>(a);
  }
  return letters;
}

std::optional<PartitionViolation> check_letter_partition(const Graph& g, const Decoder& d,
                                                         std::span<const VertexSet> blocks) {
  if (static_cast<int>(blocks.size()) != d.k()) {
    throw std::invalid_argument("expected one block per letter");
  }
  VertexSet u = union_of(blocks);
  if (u != g.vertices()) throw std::invalid_argument("blocks do not cover the vertex set");
  return check_blocks(g, d, blocks, u);
}

std::optional<PartitionViolation> check_letter_partition_partial(const Graph& g, const Decoder& d,
                                                                 std::span<const VertexSet> blocks) {
  if (static_cast<int>(blocks.size()) != d.k()) {
    throw std::invalid_argument("expected one block per letter");
  }
  VertexSet u = union_of(blocks);
  if (!u.subset_of(g.vertices())) throw std::invalid_argument("vertex out of range");
  return check_blocks(g, d, blocks, u);
}

Realisation realise_from_partition(const Graph& g, const Decoder& d,
                                   std::span<const VertexSet> blocks) {
  if (auto violation = check_letter_partition(g, d, blocks)) {
    throw std::invalid_argument(std::string("not a letter partition: ") +
                                to_string(violation->condition) + " fails");
  }
  Realisation r;
  r.letter = letters_of_partition(g.n(), blocks);
  r.position.assign(g.n(), 0);
  CompatibilityGraph cg = build_compatibility_graph(g, d, r.letter);
  std::vector<int> order = topological_order(cg);
  for (int p = 0; p < g.n(); ++p) r.position[order[p]] = p;
  return r;
}

}  // namespace letterkit
