#include "letterkit/decoder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace letterkit {

Decoder::Decoder(int k) : k_(k) {
  if (k < 1 || k > kMaxLetters) {
    throw std::invalid_argument("decoder letter count must be in 1.." + std::to_string(kMaxLetters));
  }
}

void Decoder::add_arc(int a, int b) {
  if (a < 0 || b < 0 || a >= k_ || b >= k_) throw std::invalid_argument("letter out of range");
  out_[a] |= std::uint8_t{1} << b;
}

std::uint8_t Decoder::in_mask(int a) const {
  std::uint8_t m = 0;
  for (int b = 0; b < k_; ++b) {
    if (arc(b, a)) m |= std::uint8_t{1} << b;
  }
  return m;
}

int Decoder::arc_count() const {
  int total = 0;
  for (int a = 0; a < k_; ++a) total += std::popcount(out_[a]);
  return total;
}

Decoder parse_decoder(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_k = false;
  Decoder d;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    auto as_int = [&](const std::string& t) {
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(t, &pos);
      } catch (const std::exception&) {
        throw ParseError("decoder line " + std::to_string(line_no) + ": expected integer");
      }
      if (pos != t.size()) throw ParseError("decoder line " + std::to_string(line_no) + ": expected integer");
      return v;
    };
    if (!have_k) {
      if (toks.size() != 1) throw ParseError("decoder line " + std::to_string(line_no) + ": expected letter count");
      int k = as_int(toks[0]);
      if (k < 1 || k > kMaxLetters) {
        throw ParseError("decoder line " + std::to_string(line_no) + ": letter count must be in 1.." +
                         std::to_string(kMaxLetters));
      }
      d = Decoder(k);
      have_k = true;
      continue;
    }
    if (toks.size() != 2) throw ParseError("decoder line " + std::to_string(line_no) + ": expected 'a b'");
    int a = as_int(toks[0]);
    int b = as_int(toks[1]);
    if (a < 0 || b < 0 || a >= d.k() || b >= d.k()) {
      throw ParseError("decoder line " + std::to_string(line_no) + ": letter out of range");
    }
    d.add_arc(a, b);
  }
  if (!have_k) throw ParseError("empty decoder: missing letter count");
  return d;
}

std::string to_decoder_text(const Decoder& d) {
  std::string out = std::to_string(d.k());
  out.push_back('\n');
  for (int a = 0; a < d.k(); ++a) {
    for (int b = 0; b < d.k(); ++b) {
      if (d.arc(a, b)) {
        out += std::to_string(a);
        out.push_back(' ');
        out += std::to_string(b);
        out.push_back('\n');
      }
    }
  }
  return out;
}

std::uint64_t arc_matrix_key(const Decoder& d) {
  std::uint64_t key = 0;
  for (int a = 0; a < d.k(); ++a) {
    for (int b = 0; b < d.k(); ++b) {
      key = (key << 1) | (d.arc(a, b) ? 1 : 0);
    }
  }
  return key;
}

namespace {

Decoder decoder_from_key(int k, std::uint64_t key) {
  Decoder d(k);
  int bits = k * k;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      int pos = bits - 1 - (a * k + b);
      if ((key >> pos) & 1u) d.add_arc(a, b);
    }
  }
  return d;
}

std::uint64_t permuted_key(const Decoder& d, const std::vector<int>& perm) {
  std::uint64_t key = 0;
  for (int a = 0; a < d.k(); ++a) {
    for (int b = 0; b < d.k(); ++b) {
      key = (key << 1) | (d.arc(perm[a], perm[b]) ? 1 : 0);
    }
  }
  return key;
}

}  // namespace

std::uint64_t canonical_decoder_key(const Decoder& d) {
  std::vector<int> perm(d.k());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = arc_matrix_key(d);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, permuted_key(d, perm));
  }
  return best;
}

std::vector<Decoder> enumerate_decoders(int k, bool up_to_iso) {
  if (k < 1 || k > kMaxLetters) throw std::invalid_argument("letter count out of range");
  if (k > 5) throw CapError("enumerate_decoders: k > 5 is not enumerable at desk scale");
  std::vector<std::vector<int>> perms;
  if (up_to_iso) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);
  }
  std::vector<Decoder> out;
  std::uint64_t total = std::uint64_t{1} << (k * k);
  for (std::uint64_t key = 0; key < total; ++key) {
    Decoder d = decoder_from_key(k, key);
    if (up_to_iso) {
      bool least = true;
      for (const auto& perm : perms) {
        if (permuted_key(d, perm) < key) {
          least = false;
          break;
        }
      }
      if (!least) continue;
    }
    out.push_back(d);
  }
  return out;
}

bool letters_twins(const Decoder& d, int x, int y) {
  return d.out_mask(x) == d.out_mask(y) && d.in_mask(x) == d.in_mask(y);
}

bool has_twin_letters(const Decoder& d) {
  for (int x = 0; x < d.k(); ++x) {
    for (int y = x + 1; y < d.k(); ++y) {
      if (letters_twins(d, x, y)) return true;
    }
  }
  return false;
}

TwinReduction remove_twin_letters_mapped(const Decoder& d) {
  // Letter list that shrinks as twins are deleted; parent[y] = x records that
  // y was deleted as a twin of x.
  std::vector<int> alive(d.k());
  std::iota(alive.begin(), alive.end(), 0);
  std::array<int, kMaxLetters> parent{};
  std::iota(parent.begin(), parent.begin() + d.k(), 0);
  auto arc_alive = [&](int i, int j) { return d.arc(alive[i], alive[j]); };

  bool changed = true;
  while (changed && alive.size() > 1) {
    changed = false;
    int m = static_cast<int>(alive.size());
    for (int i = 0; i < m && !changed; ++i) {
      for (int j = i + 1; j < m && !changed; ++j) {
        bool twins = true;
        for (int t = 0; t < m; ++t) {
          if (arc_alive(i, t) != arc_alive(j, t) || arc_alive(t, i) != arc_alive(t, j)) {
            twins = false;
            break;
          }
        }
        if (twins) {
          parent[alive[j]] = alive[i];
          alive.erase(alive.begin() + j);
          changed = true;
        }
      }
    }
  }

  TwinReduction red;
  red.decoder = Decoder(static_cast<int>(alive.size()));
  std::array<int, kMaxLetters> new_id{};
  for (size_t i = 0; i < alive.size(); ++i) new_id[alive[i]] = static_cast<int>(i);
  for (size_t i = 0; i < alive.size(); ++i) {
    for (size_t j = 0; j < alive.size(); ++j) {
      if (d.arc(alive[i], alive[j])) red.decoder.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (int a = 0; a < d.k(); ++a) {
    int root = a;
    while (parent[root] != root) root = parent[root];
    red.letter_map[a] = static_cast<std::uint8_t>(new_id[root]);
  }
  return red;
}

Decoder remove_twin_letters(const Decoder& d) { return remove_twin_letters_mapped(d).decoder; }

int AsymmetryGraph::arc_count() const {
  int total = 0;
  for (int a = 0; a < k_; ++a) total += std::popcount(out_[a]);
  return total;
}

std::vector<std::uint8_t> AsymmetryGraph::components() const {
  std::vector<std::uint8_t> out;
  std::uint8_t seen = 0;
  for (int a = 0; a < k_; ++a) {
    if ((seen >> a) & 1u) continue;
    std::uint8_t comp = std::uint8_t{1} << a;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < k_; ++x) {
        if ((comp >> x) & 1u) continue;
        for (int y = 0; y < k_; ++y) {
          if (((comp >> y) & 1u) && (arc(x, y) || arc(y, x))) {
            comp |= std::uint8_t{1} << x;
            grew = true;
            break;
          }
        }
      }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

AsymmetryGraph asymmetry_graph(const Decoder& d) {
  AsymmetryGraph ag(d.k());
  for (int a = 0; a < d.k(); ++a) {
    for (int b = 0; b < d.k(); ++b) {
      if (d.arc(a, b) && !d.arc(b, a)) ag.add_arc(a, b);
    }
  }
  return ag;
}

bool letters_independent(const Decoder& d, int a, int b) {
  if (a < 0 || b < 0 || a >= d.k() || b >= d.k()) throw std::invalid_argument("letter out of range");
  return d.arc(a, b) == d.arc(b, a);
}

}  // namespace letterkit
