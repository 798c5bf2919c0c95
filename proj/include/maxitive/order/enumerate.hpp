// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/order/finite_poset.hpp"

#include <functional>
#include <vector>

namespace maxitive::order {

/// Calls `visit` once for every labeled partial order on n elements
/// (elements named "0" .. "n-1"). Budget: n ≤ 5.
void for_each_labeled_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit);

/// All lattices with exactly n elements, one per isomorphism class, in a
/// fixed order. Elements are named "0" .. "n-1" along a linear extension,
/// so "0" is the bottom. Budget: n ≤ 5.
std::vector<FinitePoset> lattices_up_to_iso(std::size_t n);

/// The diamond {0, a, b, 1} with a, b incomparable.
FinitePoset diamond_m2();
/// The pentagon {0, a, b, c, 1} with a < c and b incomparable to both.
FinitePoset pentagon_n5();

} // namespace maxitive::order
