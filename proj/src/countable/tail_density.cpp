// SPDX-License-Identifier: Apache-2.0

#include "maxitive/countable/tail_density.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>

namespace maxitive::countable {

namespace {

constexpr Natural kMaxBound = 50;

std::vector<std::vector<Natural>> subsets_of(const std::vector<Natural>& points) {
  std::vector<std::vector<Natural>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << points.size()); ++bits) {
    std::vector<Natural> s;
    for (std::size_t i = 0; i < points.size(); ++i)
      if ((bits >> i) & 1U) s.push_back(points[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Natural> members_among(const FinCofinSet& b, const std::vector<Natural>& points) {
  std::vector<Natural> out;
  for (auto x : points)
    if (b.contains(x)) out.push_back(x);
  return out;
}

} // namespace

ReferencePoints reference_points(const std::vector<Natural>& exception_points, const std::vector<FinCofinSet>& extra) {
  std::vector<Natural> points = exception_points;
  for (const auto& s : extra) points.insert(points.end(), s.support().begin(), s.support().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  ReferencePoints ref;
  ref.fresh = points.empty() ? 0 : points.back() + 1;
  points.push_back(ref.fresh);
  ref.points = std::move(points);
  ref.bound = ref.fresh + 2;
  if (ref.bound > kMaxBound) throw BudgetError("countable instances are limited to reference points below 48");
  return ref;
}

std::vector<FinCofinSet> canonical_sets(const ReferencePoints& ref) {
  std::vector<FinCofinSet> out;
  const auto subsets = subsets_of(ref.points);
  for (const auto& s : subsets) out.push_back(FinCofinSet::finite(s));
  for (const auto& s : subsets) {
    std::vector<Natural> excluded;
    std::set_difference(ref.points.begin(), ref.points.end(), s.begin(), s.end(), std::back_inserter(excluded));
    out.push_back(FinCofinSet::cofinite(excluded));
  }
  return out;
}

std::vector<FinCofinSet> finite_witnesses(const FinCofinSet& b, const ReferencePoints& ref) {
  std::vector<FinCofinSet> out;
  for (const auto& s : subsets_of(members_among(b, ref.points))) out.push_back(FinCofinSet::finite(s));
  out.push_back(b & FinCofinSet::range(ref.bound));
  return out;
}

std::vector<FinCofinSet> infinite_witnesses(const FinCofinSet& b, const ReferencePoints& ref) {
  std::vector<FinCofinSet> out;
  if (!b.is_infinite()) return out;
  for (const auto& s : subsets_of(members_among(b, ref.points))) out.push_back(b - FinCofinSet::finite(s));
  return out;
}

std::vector<FinCofinSet> tail_chain(const FinCofinSet& b, const ReferencePoints& ref) {
  std::vector<FinCofinSet> out;
  for (Natural n = 0; n <= ref.bound; ++n) out.push_back(b - FinCofinSet::range(n));
  return out;
}

} // namespace maxitive::countable
