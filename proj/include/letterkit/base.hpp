#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace letterkit {

// Hard storage bounds. Graph adjacency lives in single-word bit rows and
// decoder arc matrices in byte rows, so these are compile-time limits rather
// than tunables.
inline constexpr int kMaxVertices = 24;
inline constexpr int kMaxLetters = 8;

// Malformed textual input (edge lists, graph6 lines, decoder files, words).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds an operation's size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-operation caps can be overridden with the LETTERKIT_MAX_N environment
// variable (at the caller's risk); the storage bound still applies.
int effective_cap(int default_cap);
void require_cap(int n, int default_cap, const char* what);

// A subset of vertices 0..n-1 as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~0u : (std::uint32_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr VertexSet& add(int v) {
    bits_ |= std::uint32_t{1} << v;
    return *this;
  }
  constexpr VertexSet& remove(int v) {
    bits_ &= ~(std::uint32_t{1} << v);
    return *this;
  }
  // Lowest vertex in the set; set must be non-empty.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

// An ordered list of disjoint vertex sets. Blocks are non-empty for the twin
// partitions; the letter-partition checks additionally accept empty blocks.
using Partition = std::vector<VertexSet>;

}  // namespace letterkit
