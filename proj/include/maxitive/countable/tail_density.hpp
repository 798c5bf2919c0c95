// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/countable/fincofin.hpp"

#include <map>
#include <vector>

namespace maxitive::countable {

/// An eventually constant density on ℕ plus an infinite-mass term:
/// d(x) = exceptions[x] when listed, else `tail`; infinite sets also
/// receive `infinite_mass`.
template <class V>
struct TailDensity {
  std::map<Natural, V> exceptions;
  V tail{};
  V infinite_mass{};

  const V& at(Natural x) const {
    const auto it = exceptions.find(x);
    return it == exceptions.end() ? tail : it->second;
  }

  friend bool operator==(const TailDensity&, const TailDensity&) = default;
};

/// The finitely many points that matter for an instance: exception points,
/// supports of sets of interest, and one fresh point past all of them.
/// `bound` is the length used for bounded witness chains and singleton
/// covers: it exceeds every reference point, so [0, bound) always contains
/// a point with the tail value.
struct ReferencePoints {
  std::vector<Natural> points;  // sorted, includes `fresh`
  Natural fresh = 0;
  Natural bound = 0;
};

/// Throws BudgetError when the bound would exceed 50.
ReferencePoints reference_points(const std::vector<Natural>& exception_points,
                                 const std::vector<FinCofinSet>& extra = {});

/// Finite(S) for every S ⊆ R, then Cofinite(R ∖ S) for every S ⊆ R. Every
/// representable set agrees with exactly one of these on R and on the
/// eventual tail.
std::vector<FinCofinSet> canonical_sets(const ReferencePoints& ref);

/// Finite subsets of B used to approximate suprema over compact subsets:
/// B ∩ S for S ⊆ R, plus B ∩ [0, bound).
std::vector<FinCofinSet> finite_witnesses(const FinCofinSet& b, const ReferencePoints& ref);

/// Infinite subsets of an infinite B obtained by dropping reference points:
/// B ∖ S for S ⊆ R. Empty when B is finite.
std::vector<FinCofinSet> infinite_witnesses(const FinCofinSet& b, const ReferencePoints& ref);

/// Decreasing chain B ∖ [0, n) for n = 0 .. bound. Its intersection is ∅
/// when B is finite or after the chain is continued forever.
std::vector<FinCofinSet> tail_chain(const FinCofinSet& b, const ReferencePoints& ref);

template <class V>
std::vector<Natural> exception_points(const TailDensity<V>& d) {
  std::vector<Natural> out;
  for (const auto& [x, v] : d.exceptions) out.push_back(x);
  return out;
}

} // namespace maxitive::countable
