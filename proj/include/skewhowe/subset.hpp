#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace skewhowe {

/// Finite subset of {1, ..., 64}, stored as a bitmask (bit j-1 <-> element j).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }

  static constexpr Subset range(int lo, int hi) {  // {lo..hi}, empty if lo > hi
    Subset s;
    for (int j = lo; j <= hi; ++j) s.insert(j);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int j) const { return (bits_ >> (j - 1)) & 1U; }
  constexpr void insert(int j) { bits_ |= std::uint64_t{1} << (j - 1); }
  constexpr void erase(int j) { bits_ &= ~(std::uint64_t{1} << (j - 1)); }

  constexpr bool disjoint(Subset o) const { return (bits_ & o.bits_) == 0; }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  /// Complement inside {1..n}.
  constexpr Subset complement(int n) const { return range(1, n).minus(*this); }

  /// Elements in decreasing order, the order used when writing x_S.
  std::vector<int> descending() const {
    std::vector<int> out;
    for (int j = 64; j >= 1; --j)
      if (contains(j)) out.push_back(j);
    return out;
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// All k-element subsets of {1..n}, in increasing bitmask order.
std::vector<Subset> subsets_of_size(int n, int k);

}  // namespace skewhowe
