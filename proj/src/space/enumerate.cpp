// SPDX-License-Identifier: Apache-2.0

#include "maxitive/space/enumerate.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>

namespace maxitive::space {

FiniteSpace space_from_preorder(std::vector<std::string> points, const std::vector<PointSet>& up) {
  const auto n = points.size();
  std::vector<PointSet> opens;
  for (std::uint64_t bits = 0; bits <= PointSet::full(n).bits(); ++bits) {
    const PointSet a(bits);
    bool upward = true;
    a.for_each([&](std::size_t x) { upward = upward && up[x].subset_of(a); });
    if (upward) opens.push_back(a);
  }
  return FiniteSpace(std::move(points), std::move(opens));
}

std::vector<FiniteSpace> enumerate_topologies(std::size_t n) {
  if (n > kMaxEnumeratedPoints) throw BudgetError("exhaustive topology enumeration is limited to 4 points");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);

  // Finite topologies correspond to preorders via the specialization order.
  std::vector<FiniteSpace> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    std::vector<PointSet> up(n);
    for (std::size_t x = 0; x < n; ++x) up[x] = PointSet::singleton(x);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((code >> k) & 1U) up[pairs[k].first] |= PointSet::singleton(pairs[k].second);
    bool transitive = true;
    for (std::size_t x = 0; x < n; ++x)
      up[x].for_each([&](std::size_t y) { transitive = transitive && up[y].subset_of(up[x]); });
    if (transitive) out.push_back(space_from_preorder(names, up));
  }
  std::sort(out.begin(), out.end(),
            [](const FiniteSpace& a, const FiniteSpace& b) { return a.opens() < b.opens(); });
  return out;
}

void for_each_topology(std::size_t n, const std::function<void(const FiniteSpace&)>& visit) {
  for (const auto& space : enumerate_topologies(n)) visit(space);
}

} // namespace maxitive::space
