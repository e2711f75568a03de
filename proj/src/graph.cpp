#include "letterkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace letterkit {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) {
    throw CapError("graph: " + std::to_string(n) + " vertices exceeds storage bound " +
                   std::to_string(kMaxVertices));
  }
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  adj_[u] |= std::uint32_t{1} << v;
  adj_[v] |= std::uint32_t{1} << u;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((std::uint32_t{1} << (u + 1)) - 1))) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

// Strips a trailing '#'-comment and surrounding whitespace, splits on blanks.
std::vector<std::string> tokenize(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
  if (pos != tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_n = false;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
      int n = parse_int(toks[0], line_no);
      if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex count");
      require_cap(n, kMaxVertices, "edge list");
      g = Graph(n);
      have_n = true;
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    int u = parse_int(toks[0], line_no);
    int v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    g.add_edge(u, v);
  }
  if (!have_n) throw ParseError("empty edge list: missing vertex count");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n());
  out.push_back('\n');
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out.push_back(' ');
    out += std::to_string(v);
    out.push_back('\n');
  }
  return out;
}

namespace {
constexpr int kG6Min = 63;   // '?'
constexpr int kG6Max = 126;  // '~'
}  // namespace

Graph parse_graph6(std::string_view line) {
  // Optional format header emitted by some tools.
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line = line.substr(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line");
  unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == '~') throw ParseError("graph6: unsupported header (n >= 63)");
  if (c0 < kG6Min || c0 > kG6Max) throw ParseError("graph6: bad size byte");
  int n = c0 - kG6Min;
  if (n > 62) throw ParseError("graph6: bad size byte");
  require_cap(n, kMaxVertices, "graph6");
  int bits = n * (n - 1) / 2;
  int bytes = (bits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + bytes) {
    throw ParseError("graph6: bad length (expected " + std::to_string(1 + bytes) +
                     " chars, got " + std::to_string(line.size()) + ")");
  }
  Graph g(n);
  int t = 0;
  for (int byte = 0; byte < bytes; ++byte) {
    unsigned char c = static_cast<unsigned char>(line[1 + byte]);
    if (c < kG6Min || c > kG6Max) throw ParseError("graph6: byte out of range");
    int val = c - kG6Min;
    for (int b = 5; b >= 0; --b, ++t) {
      int bit = (val >> b) & 1;
      if (t >= bits) {
        if (bit != 0) throw ParseError("graph6: nonzero padding");
        continue;
      }
      if (bit) {
        // Bit t corresponds to pair (i, j), columns j = 1..n-1, i < j.
        int j = 1;
        int acc = t;
        while (acc >= j) acc -= j, ++j;
        g.add_edge(acc, j);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  out.push_back(static_cast<char>(kG6Min + n));
  int bits = n * (n - 1) / 2;
  int val = 0;
  int have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(kG6Min + val));
        val = 0;
        have = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    val <<= 6 - bits % 6;
    out.push_back(static_cast<char>(kG6Min + val));
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    VertexSet non = g.vertices() - g.neighbours(u);
    non.remove(u);
    for (int v : non) {
      if (v > u) h.add_edge(u, v);
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set out of range");
  std::array<int, kMaxVertices> new_id{};
  int m = 0;
  for (int v : s) new_id[v] = m++;
  Graph h(m);
  for (int u : s) {
    for (int v : g.neighbours(u) & s) {
      if (v > u) h.add_edge(new_id[u], new_id[v]);
    }
  }
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  VertexSet keep = g.vertices();
  keep.remove(v);
  return induced_subgraph(g, keep);
}

Partition twin_classes(const Graph& g) {
  Partition out;
  VertexSet seen;
  for (int x = 0; x < g.n(); ++x) {
    if (seen.contains(x)) continue;
    VertexSet cls = VertexSet::of({x});
    for (int y = x + 1; y < g.n(); ++y) {
      if (seen.contains(y)) continue;
      std::uint32_t pair = (std::uint32_t{1} << x) | (std::uint32_t{1} << y);
      if ((g.neighbours(x).bits() & ~pair) == (g.neighbours(y).bits() & ~pair)) {
        cls.add(y);
        seen.add(y);
      }
    }
    seen.add(x);
    out.push_back(cls);
  }
  return out;
}

VertexSet twin_key_wrt(const Graph& g, VertexSet b, int x) {
  return g.neighbours(x) - b;
}

Partition twin_classes_wrt(const Graph& g, VertexSet b) {
  if (!b.subset_of(g.vertices())) throw std::invalid_argument("vertex set out of range");
  Partition out;
  VertexSet seen;
  for (int x : b) {
    if (seen.contains(x)) continue;
    VertexSet key = twin_key_wrt(g, b, x);
    VertexSet cls;
    for (int y : b - seen) {
      if (twin_key_wrt(g, b, y) == key) {
        cls.add(y);
        seen.add(y);
      }
    }
    out.push_back(cls);
  }
  return out;
}

bool is_chain_graph(const Graph& g, VertexSet x, VertexSet y) {
  if (x.intersects(y)) throw std::invalid_argument("parts overlap");
  std::vector<std::uint32_t> rows;
  rows.reserve(x.count());
  for (int v : x) rows.push_back((g.neighbours(v) & y).bits());
  std::sort(rows.begin(), rows.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (size_t i = 1; i < rows.size(); ++i) {
    if ((rows[i] & ~rows[i - 1]) != 0) return false;
  }
  return true;
}

std::string canonical_form(const Graph& g) {
  int n = g.n();
  require_cap(n, 10, "canonical_form");
  if (n <= 1) return to_graph6(g);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Upper-triangle bit string in graph6 order, packed most-significant-first.
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_perm = perm;
  do {
    std::uint64_t word = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        word = (word << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
      }
    }
    if (word < best) {
      best = word;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Graph h(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(best_perm[i], best_perm[j])) h.add_edge(i, j);
    }
  }
  return to_graph6(h);
}

}  // namespace letterkit
