// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/space/finite_space.hpp"

#include <functional>
#include <vector>

namespace maxitive::space {

/// Largest n accepted by exhaustive topology enumeration.
inline constexpr std::size_t kMaxEnumeratedPoints = 4;

/// Every labeled topology on points "0" .. "n-1", each once, ordered
/// lexicographically by the sorted family of open masks.
/// Throws BudgetError for n > 4.
std::vector<FiniteSpace> enumerate_topologies(std::size_t n);

void for_each_topology(std::size_t n, const std::function<void(const FiniteSpace&)>& visit);

/// The Alexandrov topology of a preorder given by up-sets (`up[x]` holds
/// every y with x ≤ y). Reflexivity and transitivity are not checked.
FiniteSpace space_from_preorder(std::vector<std::string> points, const std::vector<PointSet>& up);

} // namespace maxitive::space
