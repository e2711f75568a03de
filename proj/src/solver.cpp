#include "letterkit/solver.hpp"

#include "letterkit/rankwidth.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <mutex>
#include <numeric>

namespace letterkit {

std::vector<int> natural_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

Signature set_signature(const Graph& g, VertexSet b, VertexSet x) {
  if (!x.subset_of(b)) throw std::invalid_argument("set_signature: x must be a subset of b");
  VertexSet outside = g.vertices() - b;
  Signature sig;
  for (int v : x) {
    sig.with_neighbour = sig.with_neighbour | (g.neighbours(v) & outside);
    sig.with_non_neighbour = sig.with_non_neighbour | (outside - g.neighbours(v));
  }
  return sig;
}

PathsSet paths_set(const Graph& g, VertexSet b, const Decoder& d,
                   std::span<const VertexSet> blocks) {
  auto letters = letters_of_partition(g.n(), blocks);
  CompatibilityGraph cg = build_compatibility_graph(g, d, letters, b);

  // Transitive reachability, length-0 paths included.
  std::array<std::uint32_t, kMaxVertices> reach{};
  for (int x : b) {
    std::uint32_t seen = std::uint32_t{1} << x;
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int u : VertexSet(frontier)) next |= cg.out(u).bits();
      frontier = next & ~seen;
      seen |= next;
    }
    reach[x] = seen;
  }

  PathsSet out;
  for (int x : b) {
    std::uint32_t from_key = twin_key_wrt(g, b, x).bits();
    for (int y : VertexSet(reach[x]) & b) {
      out.push_back(PathsTuple{letters[x], letters[y], from_key, twin_key_wrt(g, b, y).bits()});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// State key: one packed signature word per block, then the packed paths set.
using StateKey = std::vector<std::uint64_t>;

StateKey make_key(const Graph& g, VertexSet b, const Decoder& d,
                  std::span<const VertexSet> blocks) {
  StateKey key;
  key.reserve(d.k() + 8);
  for (int a = 0; a < d.k(); ++a) {
    Signature sig = set_signature(g, b, blocks[a]);
    key.push_back((std::uint64_t{sig.with_neighbour.bits()} << 24) | sig.with_non_neighbour.bits());
  }
  for (const PathsTuple& t : paths_set(g, b, d, blocks)) {
    key.push_back((std::uint64_t{t.from_letter} << 52) | (std::uint64_t{t.to_letter} << 48) |
                  (std::uint64_t{t.from_key} << 24) | t.to_key);
  }
  return key;
}

void validate_order(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.n()) throw std::invalid_argument("order has wrong length");
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= g.n() || seen.contains(v)) throw std::invalid_argument("order is not a bijection");
    seen.add(v);
  }
}

}  // namespace

namespace {

void record_diagnostics(const Graph& g, VertexSet prefix, const std::vector<Partition>& states,
                        DpDiagnostics* diagnostics) {
  if (diagnostics == nullptr) return;
  std::set<std::uint64_t> signatures;
  for (const Partition& blocks : states) {
    for (const VertexSet& block : blocks) {
      Signature sig = set_signature(g, prefix, block);
      signatures.insert((std::uint64_t{sig.with_neighbour.bits()} << 24) |
                        sig.with_non_neighbour.bits());
    }
  }
  diagnostics->states.push_back(static_cast<int>(states.size()));
  diagnostics->distinct_block_signatures.push_back(static_cast<int>(signatures.size()));
  diagnostics->prefix_cutrank.push_back(cutrank(g, prefix));
}

}  // namespace

std::optional<Partition> dp_recognize(const Graph& g, std::span<const int> order,
                                      const Decoder& d, DpDiagnostics* diagnostics) {
  validate_order(g, order);
  int n = g.n();
  int k = d.k();
  if (n == 0) return Partition(k);

  std::vector<Partition> states;
  std::set<StateKey> seen;
  VertexSet prefix;

  // All placements of the first vertex pass the partial check trivially.
  prefix.add(order[0]);
  for (int j = 0; j < k; ++j) {
    Partition blocks(k);
    blocks[j].add(order[0]);
    StateKey key = make_key(g, prefix, d, blocks);
    if (!seen.insert(std::move(key)).second) continue;
    states.push_back(std::move(blocks));
  }
  record_diagnostics(g, prefix, states, diagnostics);

  for (int i = 1; i < n; ++i) {
    int x = order[i];
    prefix.add(x);
    std::vector<Partition> next;
    seen.clear();
    for (const Partition& blocks : states) {
      for (int j = 0; j < k; ++j) {
        Partition extended = blocks;
        extended[j].add(x);
        if (check_letter_partition_partial(g, d, extended).has_value()) continue;
        StateKey key = make_key(g, prefix, d, extended);
        if (!seen.insert(std::move(key)).second) continue;
        next.push_back(std::move(extended));
      }
    }
    states = std::move(next);
    record_diagnostics(g, prefix, states, diagnostics);
    if (states.empty()) return std::nullopt;
  }
  return states.front();
}

const std::vector<Decoder>& twin_free_decoders(int k) {
  static std::array<std::vector<Decoder>, kMaxLetters + 1> cache;
  static std::array<std::once_flag, kMaxLetters + 1> flags;
  if (k < 1 || k > kMaxLetters) throw std::invalid_argument("letter count out of range");
  std::call_once(flags[k], [k] {
    for (const Decoder& d : enumerate_decoders(k, /*up_to_iso=*/true)) {
      if (!has_twin_letters(d)) cache[k].push_back(d);
    }
  });
  return cache[k];
}

namespace {

// Depth-first letter assignment in natural vertex order with incremental
// C1-C3 pruning; C4 is checked once at the leaves. Assignments must use all
// k letters: a success on fewer letters would already have been found at a
// smaller alphabet.
class AssignmentSearch {
 public:
  AssignmentSearch(const Graph& g, const Decoder& d) : g_(g), d_(d) {}

  std::optional<Partition> run() {
    letters_.assign(g_.n(), 0);
    if (g_.n() == 0) return Partition(d_.k());
    if (d_.k() > g_.n()) return std::nullopt;
    Partition blocks(d_.k());
    if (dfs(0, 0, blocks)) return blocks;
    return std::nullopt;
  }

 private:
  bool dfs(int v, int used, Partition& blocks) {
    int n = g_.n();
    if (v == n) {
      if (used != d_.k()) return false;
      return !check_letter_partition(g_, d_, blocks).has_value();
    }
    // Letters still unused must fit in the remaining vertices.
    for (int a = 0; a < d_.k(); ++a) {
      bool is_new = blocks[a].empty();
      int next_used = used + (is_new ? 1 : 0);
      if (d_.k() - next_used > n - v - 1) continue;
      if (!compatible(v, a, blocks)) continue;
      blocks[a].add(v);
      if (dfs(v + 1, next_used, blocks)) return true;
      blocks[a].remove(v);
    }
    return false;
  }

  bool compatible(int v, int a, const Partition& blocks) {
    VertexSet nbrs = g_.neighbours(v);
    for (int b = 0; b < d_.k(); ++b) {
      VertexSet block = blocks[b];
      if (block.empty()) continue;
      if (b == a) {
        // C1/C2 pairwise: same letter forces adjacency iff the loop exists.
        if (d_.loop(a)) {
          if ((block - nbrs) != VertexSet{}) return false;
        } else if (block.intersects(nbrs)) {
          return false;
        }
      } else {
        bool ab = d_.arc(a, b);
        bool ba = d_.arc(b, a);
        if (ab != ba) continue;
        if (ab) {
          if ((block - nbrs) != VertexSet{}) return false;
        } else if (block.intersects(nbrs)) {
          return false;
        }
      }
    }
    return true;
  }

  const Graph& g_;
  const Decoder& d_;
  std::vector<std::uint8_t> letters_;
};

LettericityResult empty_graph_result() {
  LettericityResult res;
  res.k = 0;
  res.decoder = Decoder(1);
  return res;
}

}  // namespace

std::optional<LettericityResult> lettericity_brute(const Graph& g, int max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  if (g.n() == 0) return empty_graph_result();
  for (int k = 1; k <= std::min(max_k, kMaxLetters); ++k) {
    for (const Decoder& d : twin_free_decoders(k)) {
      AssignmentSearch search(g, d);
      if (auto blocks = search.run()) {
        return LettericityResult{k, d, realise_from_partition(g, d, *blocks)};
      }
    }
  }
  return std::nullopt;
}

std::optional<LettericityResult> lettericity_dp(const Graph& g, std::span<const int> order,
                                                int max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  if (g.n() == 0) return empty_graph_result();
  validate_order(g, order);
  for (int k = 1; k <= std::min(max_k, kMaxLetters); ++k) {
    for (const Decoder& d : twin_free_decoders(k)) {
      if (auto blocks = dp_recognize(g, order, d)) {
        return LettericityResult{k, d, realise_from_partition(g, d, *blocks)};
      }
    }
  }
  return std::nullopt;
}

std::optional<LettericityResult> lettericity_dp(const Graph& g, int max_k) {
  auto order = natural_order(g.n());
  return lettericity_dp(g, order, max_k);
}

namespace {

// Assigns letters position by position for a fixed vertex order, maintaining
// the adjacency each ordered letter pair has been forced to so far.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, int k) : g_(g), k_(k) {}

  bool run(std::span<const int> order, std::vector<std::uint8_t>* letters_out) {
    order_ = order;
    letters_.assign(g_.n(), 0);
    forced_.assign(static_cast<size_t>(k_) * k_, kFree);
    if (dfs(0, 0)) {
      *letters_out = letters_;
      return true;
    }
    return false;
  }

 private:
  static constexpr std::int8_t kFree = -1;

  bool dfs(int p, int used) {
    if (p == g_.n()) return used == k_;
    if (k_ - used > g_.n() - p) return false;
    int x = order_[p];
    // New letters in increasing id order; letters are interchangeable here.
    int limit = std::min(used + 1, k_);
    for (int a = 0; a < limit; ++a) {
      std::vector<std::pair<int, std::int8_t>> touched;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        int y = order_[q];
        int idx = letters_[y] * k_ + a;
        std::int8_t want = g_.adjacent(x, y) ? 1 : 0;
        if (forced_[idx] == kFree) {
          touched.emplace_back(idx, forced_[idx]);
          forced_[idx] = want;
        } else if (forced_[idx] != want) {
          ok = false;
        }
      }
      if (ok) {
        letters_[x] = static_cast<std::uint8_t>(a);
        if (dfs(p + 1, std::max(used, a + 1))) return true;
      }
      for (auto [idx, prev] : touched) forced_[idx] = prev;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::span<const int> order_;
  std::vector<std::uint8_t> letters_;
  std::vector<std::int8_t> forced_;
};

}  // namespace

std::optional<LettericityResult> lettericity_order_search(const Graph& g, int max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  int n = g.n();
  if (n == 0) return empty_graph_result();
  require_cap(n, 10, "lettericity_order_search");
  for (int k = 1; k <= std::min({max_k, n, kMaxLetters}); ++k) {
    std::vector<int> order = natural_order(n);
    OrderSearch search(g, k);
    do {
      std::vector<std::uint8_t> letters;
      if (!search.run(order, &letters)) continue;
      // The decoder is exactly the arc set forced by the edges.
      Decoder d(k);
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          if (g.adjacent(order[p], order[q])) d.add_arc(letters[order[p]], letters[order[q]]);
        }
      }
      Realisation r;
      r.letter = letters;
      r.position.assign(n, 0);
      for (int p = 0; p < n; ++p) r.position[order[p]] = p;
      return LettericityResult{k, d, std::move(r)};
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

namespace {
// Decoder enumeration explodes past four letters; the realisation-space
// search takes over there.
constexpr int kEnumerableLetters = 4;
}  // namespace

LettericityResult lettericity_certified(const Graph& g) {
  if (g.n() == 0) return empty_graph_result();
  int cap = std::min(g.n(), kEnumerableLetters);
  if (auto res = lettericity_dp(g, cap)) return *res;
  auto res = lettericity_order_search(g, g.n());
  if (!res) throw std::logic_error("every graph admits a realisation on n letters");
  return *res;
}

int lettericity_value(const Graph& g) { return lettericity_certified(g).k; }

bool is_critical(const Graph& g) {
  if (g.n() == 0) return false;
  int value = lettericity_value(g);
  for (int v = 0; v < g.n(); ++v) {
    if (lettericity_value(delete_vertex(g, v)) >= value) return false;
  }
  return true;
}

}  // namespace letterkit
