#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "letterkit/decoder.hpp"
#include "letterkit/graph.hpp"
#include "letterkit/words.hpp"

namespace letterkit {

// Graph on positions 1..|w|, position i becoming vertex i-1; earlier
// positions are adjacent to later ones exactly when the decoder has the
// corresponding arc.
Graph decode_word(const Decoder& d, const Word& w);

// A letter assignment plus a position for every vertex (positions 0-based
// and bijective).
struct Realisation {
  std::vector<std::uint8_t> letter;
  std::vector<int> position;

  // Vertices listed in position order (the inverse of position).
  std::vector<int> order() const;
};

Word word_of(const Realisation& r);

// nullopt when decoding the realisation's word reproduces exactly g;
// otherwise the first violating vertex pair in lexicographic position order.
std::optional<std::pair<int, int>> verify_realisation(const Graph& g, const Decoder& d,
                                                      const Realisation& r);

// Digraph of forced precedences between vertices under a letter assignment.
class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;
  CompatibilityGraph(int n, VertexSet universe) : n_(n), universe_(universe) {}

  int n() const { return n_; }
  VertexSet universe() const { return universe_; }
  VertexSet out(int x) const { return VertexSet(out_[x]); }
  bool arc(int x, int y) const { return (out_[x] >> y) & 1u; }
  void add_arc(int x, int y) { out_[x] |= std::uint32_t{1} << y; }
  int arc_count() const;

 private:
  int n_ = 0;
  VertexSet universe_;
  std::array<std::uint32_t, kMaxVertices> out_{};
};

// Compatibility graph of g under assignment letters, restricted to universe.
CompatibilityGraph build_compatibility_graph(const Graph& g, const Decoder& d,
                                             std::span<const std::uint8_t> letters,
                                             VertexSet universe);
CompatibilityGraph build_compatibility_graph(const Graph& g, const Decoder& d,
                                             std::span<const std::uint8_t> letters);

bool is_acyclic(const CompatibilityGraph& cg);

// Deterministic topological order: Kahn's scheme, lowest vertex id first.
// Precondition: acyclic.
std::vector<int> topological_order(const CompatibilityGraph& cg);

// Shortest circuit (fewest vertices) of a cyclic compatibility graph, with
// ties broken towards the smallest starting vertex.
std::vector<int> shortest_circuit(const CompatibilityGraph& cg);

enum class LetterCondition { kC1, kC2, kC3, kC4 };
const char* to_string(LetterCondition c);

struct PartitionViolation {
  LetterCondition condition;
  // C1..C3: an offending vertex pair; C4: a circuit.
  std::vector<int> witness;
};

// Checks whether the ordered k-tuple blocks (possibly containing empty
// blocks) is a letter partition of g over d. Blocks must be disjoint and
// cover the vertex set.
std::optional<PartitionViolation> check_letter_partition(const Graph& g, const Decoder& d,
                                                         std::span<const VertexSet> blocks);

// Same check on the induced subgraph over the union of the blocks, for
// callers that grow a partition one vertex at a time.
std::optional<PartitionViolation> check_letter_partition_partial(const Graph& g, const Decoder& d,
                                                                 std::span<const VertexSet> blocks);

// Turns a passing letter partition into a verified realisation using a
// deterministic topological order of the compatibility graph.
Realisation realise_from_partition(const Graph& g, const Decoder& d,
                                   std::span<const VertexSet> blocks);

// Letters of a partition as a per-vertex assignment (vertices outside the
// blocks get letter 0).
std::vector<std::uint8_t> letters_of_partition(int n, std::span<const VertexSet> blocks);

}  // namespace letterkit
