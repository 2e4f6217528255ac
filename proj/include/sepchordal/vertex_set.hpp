#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace sepchordal {

using vertex_t = int;

/// Largest vertex count supported anywhere in the library (graph6 single-byte size field).
inline constexpr int max_vertices = 62;

/**
 * A set of vertex identifiers packed into one machine word.
 *
 * Members are always reported in increasing order, so two sets compare equal
 * exactly when their member lists are identical. Ordering (operator<) is the
 * lexicographic order of the sorted member lists, which is what every
 * "deterministic order" in the library refers to.
 */
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<vertex_t> members) {
    for (auto v : members) bits_ |= bit(v);
  }
  explicit VertexSet(const std::vector<vertex_t>& members) {
    for (auto v : members) bits_ |= bit(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(vertex_t v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr vertex_t front() const { return std::countr_zero(bits_); }
  /// One past the largest member (0 for the empty set).
  constexpr int bound() const { return 64 - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet with(vertex_t v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(vertex_t v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  /// Lexicographic order on sorted member lists: {0,5} < {1} and {1} < {1,2}.
  constexpr std::strong_ordering operator<=>(const VertexSet& o) const {
    std::uint64_t a = bits_, b = o.bits_;
    while (a != 0 && b != 0) {
      auto x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x <=> y;
      a &= a - 1;
      b &= b - 1;
    }
    if (a == 0 && b == 0) return std::strong_ordering::equal;
    return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::vector<vertex_t> members() const {
    std::vector<vertex_t> out;
    out.reserve(size());
    for (auto v : *this) out.push_back(v);
    return out;
  }

  class iterator {
  public:
    using value_type = vertex_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr vertex_t operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;
  private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto v : *this) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + '}';
  }

private:
  static constexpr std::uint64_t bit(vertex_t v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

}  // namespace sepchordal
