#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "letterkit/base.hpp"

namespace letterkit {

// Directed graph on letters 0..k-1, loops allowed. Decides adjacency of
// earlier-to-later letters when decoding words.
class Decoder {
 public:
  Decoder() = default;
  explicit Decoder(int k);

  int k() const { return k_; }
  bool arc(int a, int b) const { return (out_[a] >> b) & 1u; }
  bool loop(int a) const { return arc(a, a); }
  void add_arc(int a, int b);
  std::uint8_t out_mask(int a) const { return out_[a]; }
  std::uint8_t in_mask(int a) const;
  int arc_count() const;

  bool operator==(const Decoder&) const = default;

 private:
  int k_ = 1;
  std::array<std::uint8_t, kMaxLetters> out_{};
};

// Text format: first line k, then one "a b" arc per line (a = b is a loop).
Decoder parse_decoder(std::string_view text);
std::string to_decoder_text(const Decoder& d);

// Arc matrix read row-major as a bit string, (0,0) most significant; equal
// keys iff equal decoders, and numeric order is lexicographic matrix order.
std::uint64_t arc_matrix_key(const Decoder& d);

// Least arc-matrix key over all letter permutations.
std::uint64_t canonical_decoder_key(const Decoder& d);

// All decoders on exactly k letters in ascending arc-matrix order; with
// up_to_iso, one lexicographically-least representative per letter-permutation
// class. Enumeration cost is 2^(k*k); capped at k <= 5.
std::vector<Decoder> enumerate_decoders(int k, bool up_to_iso);

// Letters with identical in- and out-neighbour sets (loops included).
bool letters_twins(const Decoder& d, int x, int y);

struct TwinReduction {
  Decoder decoder;
  // Original letter -> surviving letter in the reduced decoder.
  std::array<std::uint8_t, kMaxLetters> letter_map{};
};

// Repeatedly deletes the larger letter of the first twin pair until the
// decoder is twin-free. The reduced decoder is equivalent to the input.
TwinReduction remove_twin_letters_mapped(const Decoder& d);
Decoder remove_twin_letters(const Decoder& d);
bool has_twin_letters(const Decoder& d);

// Arcs (a,b) with (a,b) in A and (b,a) not in A; letter pairs joined by such
// an arc are dependent, all others independent.
class AsymmetryGraph {
 public:
  AsymmetryGraph() = default;
  explicit AsymmetryGraph(int k) : k_(k) {}

  int k() const { return k_; }
  bool arc(int a, int b) const { return (out_[a] >> b) & 1u; }
  void add_arc(int a, int b) { out_[a] |= std::uint8_t{1} << b; }
  int arc_count() const;

  // Connected components of the underlying undirected graph, as letter
  // masks ordered by smallest letter.
  std::vector<std::uint8_t> components() const;

 private:
  int k_ = 0;
  std::array<std::uint8_t, kMaxLetters> out_{};
};

AsymmetryGraph asymmetry_graph(const Decoder& d);
bool letters_independent(const Decoder& d, int a, int b);

}  // namespace letterkit
