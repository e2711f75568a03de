#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "letterkit/solver.hpp"

namespace letterkit {

// One graph per isomorphism class on n vertices, ordered by canonical form.
// Built-in enumeration is capped at n <= 6; larger inputs arrive as graph6
// streams.
std::vector<Graph> enumerate_graphs(int n);

// Graphs parsed from one-graph-per-line graph6 input; blank lines skipped.
std::vector<Graph> graphs_from_g6_stream(std::istream& in);

enum class SolveMethod { kBrute, kDp };

// True iff lettericity(g) > k while every one-vertex deletion stays <= k.
bool is_obstruction(const Graph& g, int k, SolveMethod method = SolveMethod::kDp);

struct DeletionCertificate {
  int vertex = 0;
  int lettericity = 0;
  Decoder decoder;
  Word word;
};

struct ObstructionReport {
  Graph graph;
  int k = 0;
  std::string canonical;
  std::vector<DeletionCertificate> deletions;
};

// All obstructions for k among the source graphs, deduplicated by canonical
// form and sorted by (vertex count, canonical form).
std::vector<ObstructionReport> find_obstructions(int k, const std::vector<Graph>& source,
                                                 SolveMethod method = SolveMethod::kDp);

struct CriticalStructureReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Necessary conditions on a critical k-letter graph and one of its verified
// k-letter realisations: every twin class has size at most 3, and every
// factor of the realisation's word on at most t distinct letters has length
// at most factor_length_bound(k, t). Throws std::invalid_argument unless g is critical
// with lettericity k and the realisation verifies.
CriticalStructureReport check_critical_structure(const Graph& g, int k, const Decoder& d,
                                                 const Realisation& r);

}  // namespace letterkit
