// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/errors.hpp"

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maxitive::order {

/// The target structure of a maxitive measure: a poset with bottom where
/// suprema and infima are computed when they exist, together with the
/// way-above relation.
template <class L>
concept ValueLattice = requires(const L& lat, const typename L::value_type& a,
                                const typename L::value_type& b,
                                std::span<const typename L::value_type> values,
                                std::string_view text) {
  typename L::value_type;
  requires std::equality_comparable<typename L::value_type>;
  { lat.bottom() } -> std::convertible_to<typename L::value_type>;
  { lat.contains(a) } -> std::same_as<bool>;
  { lat.leq(a, b) } -> std::same_as<bool>;
  { lat.join(a, b) } -> std::same_as<std::optional<typename L::value_type>>;
  { lat.meet(a, b) } -> std::same_as<std::optional<typename L::value_type>>;
  { lat.supremum(values) } -> std::same_as<std::optional<typename L::value_type>>;
  { lat.infimum(values) } -> std::same_as<std::optional<typename L::value_type>>;
  { lat.way_above(a, b) } -> std::same_as<bool>;
  { lat.is_chain() } -> std::same_as<bool>;
  { lat.format(a) } -> std::same_as<std::string>;
  { lat.parse(text) } -> std::same_as<typename L::value_type>;
  { lat.level_probes(values) } -> std::same_as<std::vector<typename L::value_type>>;
};

/// Lattices whose elements can be listed (needed by the t-scan for the
/// singular part and by brute-force density searches).
template <class L>
concept EnumerableLattice = ValueLattice<L> && requires(const L& lat) {
  { lat.elements() } -> std::same_as<std::vector<typename L::value_type>>;
};

template <ValueLattice L>
typename L::value_type join_or_throw(const L& lat, const typename L::value_type& a,
                                     const typename L::value_type& b) {
  if (auto j = lat.join(a, b)) return *j;
  throw PreconditionError("supremum of " + lat.format(a) + " and " + lat.format(b) + " does not exist");
}

template <ValueLattice L>
typename L::value_type sup_or_throw(const L& lat, std::span<const typename L::value_type> values) {
  if (auto s = lat.supremum(values)) return *s;
  throw PreconditionError("required supremum does not exist in the value lattice");
}

template <ValueLattice L>
typename L::value_type inf_or_throw(const L& lat, std::span<const typename L::value_type> values) {
  if (auto s = lat.infimum(values)) return *s;
  throw PreconditionError("required infimum does not exist in the value lattice");
}

template <ValueLattice L>
bool is_bottom(const L& lat, const typename L::value_type& v) {
  return v == lat.bottom();
}

} // namespace maxitive::order
