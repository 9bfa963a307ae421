#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "costab/errors.hpp"

namespace costab {

/// A set of player indices, stored as a bit-set. Players are 0-indexed
/// internally; all user-facing I/O is 1-indexed.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 64;

  Coalition() = default;

  static Coalition from_mask(std::uint64_t mask) { return Coalition(mask); }

  static Coalition single(int i) {
    check_index(i);
    return Coalition(std::uint64_t{1} << i);
  }

  static Coalition of(std::initializer_list<int> members) {
    Coalition c;
    for (int i : members) c = c.with(i);
    return c;
  }

  /// {0, ..., n-1}
  static Coalition full(int n) {
    if (n < 0 || n > kMaxPlayers) throw DomainError("player count out of range");
    if (n == 0) return Coalition();
    return Coalition(~std::uint64_t{0} >> (kMaxPlayers - n));
  }

  bool contains(int i) const { return i >= 0 && i < kMaxPlayers && (mask_ >> i) & 1; }
  bool empty() const { return mask_ == 0; }
  int count() const { return std::popcount(mask_); }
  std::uint64_t mask() const { return mask_; }

  Coalition with(int i) const {
    check_index(i);
    return Coalition(mask_ | (std::uint64_t{1} << i));
  }
  Coalition without(int i) const {
    check_index(i);
    return Coalition(mask_ & ~(std::uint64_t{1} << i));
  }

  Coalition united(const Coalition& o) const { return Coalition(mask_ | o.mask_); }
  Coalition intersected(const Coalition& o) const { return Coalition(mask_ & o.mask_); }
  Coalition minus(const Coalition& o) const { return Coalition(mask_ & ~o.mask_); }
  Coalition complement_in(int n) const { return full(n).minus(*this); }

  bool subset_of(const Coalition& o) const { return (mask_ & ~o.mask_) == 0; }
  bool intersects(const Coalition& o) const { return (mask_ & o.mask_) != 0; }

  /// True when every member is < n.
  bool within(int n) const { return subset_of(full(n)); }

  /// Smallest member; -1 when empty.
  int lowest() const { return mask_ == 0 ? -1 : std::countr_zero(mask_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Coalition& a, const Coalition& b) = default;
  /// Mask order; used for canonical tie-breaking and map keys.
  friend bool operator<(const Coalition& a, const Coalition& b) { return a.mask_ < b.mask_; }

 private:
  explicit Coalition(std::uint64_t mask) : mask_(mask) {}
  static void check_index(int i) {
    if (i < 0 || i >= kMaxPlayers) throw DomainError("player index out of range");
  }
  std::uint64_t mask_ = 0;
};

}  // namespace costab
