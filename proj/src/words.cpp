#include "letterkit/words.hpp"

#include <algorithm>
#include <array>

namespace letterkit {

Word parse_word(std::string_view text, WordFormat format) {
  Word w;
  if (format == WordFormat::kAlpha) {
    for (char c : text) {
      if (c == '\n' || c == '\r') continue;
      if (c < 'a' || c > 'z') throw ParseError(std::string("word: expected 'a'..'z', got '") + c + "'");
      w.push_back(static_cast<std::uint8_t>(c - 'a'));
    }
    return w;
  }
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("word: empty letter id");
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw ParseError("word: bad letter id '" + cur + "'");
    }
    if (pos != cur.size() || v < 0 || v > 255) throw ParseError("word: bad letter id '" + cur + "'");
    w.push_back(static_cast<std::uint8_t>(v));
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == '\r') continue;
    if (c == ',') {
      flush();
    } else if (c == ' ') {
      if (!cur.empty()) flush();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) flush();
  return w;
}

std::string format_word(const Word& w, WordFormat format) {
  std::string out;
  if (format == WordFormat::kAlpha) {
    for (auto letter : w) {
      if (letter >= 26) throw std::invalid_argument("letter id too large for alpha format");
      out.push_back(static_cast<char>('a' + letter));
    }
    return out;
  }
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

int inter(const Word& w, int a, int b) {
  if (a == b) throw std::invalid_argument("inter: letters must differ");
  int count = 0;
  bool want_a = true;
  for (auto letter : w) {
    if (want_a && letter == a) {
      want_a = false;
    } else if (!want_a && letter == b) {
      want_a = true;
      ++count;
    }
  }
  return count;
}

bool interlace(const Word& w, int a, int b) {
  return std::max(inter(w, a, b), inter(w, b, a)) >= 2;
}

FactorWindow longest_sparse_factor(const Word& w, int t) {
  if (t < 1) throw std::invalid_argument("longest_sparse_factor: t must be positive");
  std::array<int, 256> count{};
  int distinct = 0;
  FactorWindow best;
  int lo = 0;
  for (int hi = 0; hi < static_cast<int>(w.size()); ++hi) {
    if (count[w[hi]]++ == 0) ++distinct;
    while (distinct > t) {
      if (--count[w[lo]] == 0) --distinct;
      ++lo;
    }
    if (hi - lo + 1 > best.length) {
      best = {hi - lo + 1, lo, hi + 1};
    }
  }
  return best;
}

bool check_pair_homogeneous(const Graph& g, VertexSet a_side, VertexSet b_side) {
  if (a_side.intersects(b_side)) throw std::invalid_argument("parts overlap");
  if (a_side.empty() || b_side.empty()) return true;
  bool all = true;
  bool none = true;
  for (int x : a_side) {
    VertexSet hits = g.neighbours(x) & b_side;
    if (hits != b_side) all = false;
    if (!hits.empty()) none = false;
  }
  return all || none;
}

namespace {

BigUnsigned checked_mul(BigUnsigned a, BigUnsigned b) {
  BigUnsigned out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("factor_length_bound overflow");
  return out;
}

}  // namespace

BigUnsigned factor_length_bound(int k, int t) {
  if (t < 1 || t > k) throw std::invalid_argument("factor_length_bound: require 1 <= t <= k");
  if (t == 1) return 3;
  BigUnsigned prev = factor_length_bound(k, t - 1);
  BigUnsigned factor = (BigUnsigned{1} << (t - 1)) + 1;
  for (int i = 0; i < t; ++i) factor = checked_mul(factor, static_cast<BigUnsigned>(k - 1));
  factor = checked_mul(factor, static_cast<BigUnsigned>(t));
  return checked_mul(factor, prev + 1) - 1;
}

std::string to_string(BigUnsigned v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool check_interlacing_transfer(const Word& w, int x, int y, int z) {
  if (x == y || y == z || x == z) throw std::invalid_argument("check_interlacing_transfer: letters must be pairwise distinct");
  // Hypothesis: a z between every two consecutive y's.
  bool seen_y_since_z = false;
  bool hypothesis = true;
  for (auto letter : w) {
    if (letter == y) {
      if (seen_y_since_z) {
        hypothesis = false;
        break;
      }
      seen_y_since_z = true;
    } else if (letter == z) {
      seen_y_since_z = false;
    }
  }
  if (hypothesis) {
    if (inter(w, x, z) < inter(w, x, y) / 2) {
      throw std::logic_error("interlacing inequality violated");
    }
  }
  return hypothesis;
}

FactorStats word_stats(const Word& w, int alphabet) {
  if (alphabet < 1) throw std::invalid_argument("word_stats: alphabet must be positive");
  for (auto letter : w) {
    if (letter >= alphabet) throw std::invalid_argument("word_stats: letter out of range");
  }
  FactorStats stats;
  stats.longest_by_t.reserve(alphabet);
  for (int t = 1; t <= alphabet; ++t) {
    stats.longest_by_t.push_back(longest_sparse_factor(w, t).length);
  }
  stats.inter_matrix.assign(alphabet, std::vector<int>(alphabet, 0));
  for (int a = 0; a < alphabet; ++a) {
    for (int b = 0; b < alphabet; ++b) {
      if (a != b) stats.inter_matrix[a][b] = inter(w, a, b);
    }
  }
  return stats;
}

}  // namespace letterkit
