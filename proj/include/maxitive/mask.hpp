// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace maxitive {

/// Subset of an indexed universe of at most 64 items, stored as a bitmask.
/// The tag keeps subsets of different universes (points, atoms, lattice
/// elements) from being mixed up.
template <class Tag>
class Mask {
public:
  using bits_type = std::uint64_t;

  constexpr Mask() = default;
  constexpr explicit Mask(bits_type bits) : bits_(bits) {}

  static constexpr Mask singleton(std::size_t i) { return Mask(bits_type{1} << i); }
  static constexpr Mask full(std::size_t n) {
    return Mask(n >= 64 ? ~bits_type{0} : (bits_type{1} << n) - 1);
  }

  constexpr bits_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Mask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Mask other) const { return (bits_ & other.bits_) != 0; }
  constexpr Mask without(Mask other) const { return Mask(bits_ & ~other.bits_); }
  constexpr Mask complement_in(std::size_t n) const { return full(n).without(*this); }
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr Mask operator|(Mask o) const { return Mask(bits_ | o.bits_); }
  constexpr Mask operator&(Mask o) const { return Mask(bits_ & o.bits_); }
  constexpr Mask& operator|=(Mask o) { bits_ |= o.bits_; return *this; }
  constexpr Mask& operator&=(Mask o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const Mask&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (bits_type b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

private:
  bits_type bits_ = 0;
};

struct PointTag {};
struct AtomTag {};
struct ElementTag {};

using PointSet = Mask<PointTag>;
using AtomSet = Mask<AtomTag>;
using ElementSet = Mask<ElementTag>;

/// Calls `f` on every submask of `m`, including the empty one and `m`.
template <class Tag, class F>
void for_each_subset(Mask<Tag> m, F&& f) {
  const auto bits = m.bits();
  auto sub = bits;
  while (true) {
    f(Mask<Tag>(sub));
    if (sub == 0) break;
    sub = (sub - 1) & bits;
  }
}

} // namespace maxitive

template <class Tag>
struct std::hash<maxitive::Mask<Tag>> {
  std::size_t operator()(const maxitive::Mask<Tag>& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits());
  }
};
