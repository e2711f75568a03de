#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "letterkit/graph.hpp"

namespace letterkit {

// A word over the letters of some decoder.
using Word = std::vector<std::uint8_t>;

enum class WordFormat {
  kAlpha,  // string over 'a'..'z', letter i = 'a' + i
  kIds,    // comma-separated decimal letter ids
};

Word parse_word(std::string_view text, WordFormat format);
std::string format_word(const Word& w, WordFormat format);

// Largest t such that (ab)^t is a subword of w; greedy alternation scan.
int inter(const Word& w, int a, int b);

// True iff abab or baba is a subword, i.e. max(inter(a,b), inter(b,a)) >= 2.
bool interlace(const Word& w, int a, int b);

struct FactorWindow {
  int length = 0;
  int start = 0;  // half-open range [start, end)
  int end = 0;
};

// Longest contiguous factor with at most t distinct letters, leftmost on ties.
FactorWindow longest_sparse_factor(const Word& w, int t);

// True iff G[a_side, b_side] is complete bipartite or edgeless.
bool check_pair_homogeneous(const Graph& g, VertexSet a_side, VertexSet b_side);

// Inclusive recursive bound on the longest t-letter factor of a word
// realising a critical k-letter graph: B(k,1) = 3 and
// B(k,t) = (2^(t-1)+1) * (k-1)^t * t * (B(k,t-1)+1) - 1.
using BigUnsigned = unsigned __int128;
BigUnsigned factor_length_bound(int k, int t);
std::string to_string(BigUnsigned v);

// If some z occurs between every two consecutive y's, the interlacing counts
// must satisfy inter(x,z) >= floor(inter(x,y)/2). Returns whether that
// hypothesis held; throws std::logic_error if it held and the inequality
// failed (impossible for a correct implementation).
bool check_interlacing_transfer(const Word& w, int x, int y, int z);

struct FactorStats {
  // longest_by_t[t-1] = longest factor length with at most t distinct letters.
  std::vector<int> longest_by_t;
  // inter_matrix[a][b] = inter(w, a, b) for a != b, 0 on the diagonal.
  std::vector<std::vector<int>> inter_matrix;
};

FactorStats word_stats(const Word& w, int alphabet);

}  // namespace letterkit
