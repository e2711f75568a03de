#pragma once

#include <optional>
#include <span>
#include <vector>

#include "letterkit/realisation.hpp"

namespace letterkit {

// Incidence of a prefix subset towards the rest of the graph: the outside
// vertices seeing a neighbour in x, and those seeing a non-neighbour.
// Equal signatures of x and y mean x and y are interchangeable block
// contents with respect to both the graph and its complement.
struct Signature {
  VertexSet with_neighbour;
  VertexSet with_non_neighbour;

  bool operator==(const Signature&) const = default;
};

Signature set_signature(const Graph& g, VertexSet b, VertexSet x);

// Reachability abstract of the compatibility graph of a partial partition:
// (letter of x, letter of y, twin key of x, twin key of y) for every
// directed path from x to y, length-0 paths included.
struct PathsTuple {
  std::uint8_t from_letter = 0;
  std::uint8_t to_letter = 0;
  std::uint32_t from_key = 0;
  std::uint32_t to_key = 0;

  auto operator<=>(const PathsTuple&) const = default;
};

using PathsSet = std::vector<PathsTuple>;  // sorted, unique

PathsSet paths_set(const Graph& g, VertexSet b, const Decoder& d,
                   std::span<const VertexSet> blocks);

// Per-prefix table measurements, for diagnostics and tests.
struct DpDiagnostics {
  std::vector<int> states;                    // stored states after each step
  std::vector<int> distinct_block_signatures; // over the stored states
  std::vector<int> prefix_cutrank;
};

// Dynamic program over the given vertex order: grows letter partitions one
// vertex at a time, deduplicating states by (block signatures, paths set).
// Returns a full letter partition of g over d, or nullopt.
std::optional<Partition> dp_recognize(const Graph& g, std::span<const int> order,
                                      const Decoder& d, DpDiagnostics* diagnostics = nullptr);

struct LettericityResult {
  int k = 0;
  Decoder decoder;
  Realisation realisation;
};

// Smallest k <= max_k over all twin-free decoders on k letters (one per
// isomorphism class, canonical order); nullopt when every k fails.
// Brute force enumerates letter assignments with incremental pruning,
// dp decides each decoder with dp_recognize over the supplied order.
std::optional<LettericityResult> lettericity_brute(const Graph& g, int max_k);
std::optional<LettericityResult> lettericity_dp(const Graph& g, std::span<const int> order,
                                                int max_k);
std::optional<LettericityResult> lettericity_dp(const Graph& g, int max_k);

// Realisation-space search: for ascending k, tries every vertex ordering and
// letter assignment, deriving the decoder from the forced adjacencies. Slower
// per instance but independent of decoder enumeration, so it stays usable for
// k beyond enumerate_decoders' reach. Also serves as an oracle in tests.
std::optional<LettericityResult> lettericity_order_search(const Graph& g, int max_k);

// Exact lettericity: decoder-driven search for k <= 4, realisation-space
// search beyond. The empty graph has lettericity 0 by convention.
int lettericity_value(const Graph& g);

// Exact lettericity with its certificate.
LettericityResult lettericity_certified(const Graph& g);

// True iff every one-vertex deletion strictly lowers the lettericity. The
// one-vertex graph is critical by convention.
bool is_critical(const Graph& g);

// Cached canonical twin-free decoders on exactly k letters.
const std::vector<Decoder>& twin_free_decoders(int k);

std::vector<int> natural_order(int n);

}  // namespace letterkit
