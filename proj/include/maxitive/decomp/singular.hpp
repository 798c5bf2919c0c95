// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/errors.hpp"
#include "maxitive/order/lattice.hpp"

#include <vector>

namespace maxitive::decomp {

/// One requirement p ≤ q ⊕ t on t, with p = ν⁺(A) and q = ⌊ν⌋(A) for a
/// Borel A inside the set being evaluated.
template <class V>
struct Constraint {
  V plus;
  V regular;
};

template <order::ValueLattice L>
bool satisfies(const L& lat, const std::vector<Constraint<typename L::value_type>>& cs,
               const typename L::value_type& t) {
  for (const auto& c : cs) {
    const auto j = lat.join(c.regular, t);
    if (!j || !lat.leq(c.plus, *j)) return false;
  }
  return true;
}

/// Least t in L satisfying every constraint, by scanning all of L. The
/// feasible set must have a least element; this is where distributivity
/// is used, and without it the scan throws PreconditionError.
template <order::EnumerableLattice L>
typename L::value_type scan_least(const L& lat, const std::vector<Constraint<typename L::value_type>>& cs) {
  std::vector<typename L::value_type> feasible;
  for (const auto& t : lat.elements())
    if (satisfies(lat, cs, t)) feasible.push_back(t);
  const auto inf = lat.infimum(feasible);
  if (feasible.empty() || !inf || !satisfies(lat, cs, *inf))
    throw PreconditionError("{t : B ∈ I_t} has no least element; the value lattice is not distributive");
  return *inf;
}

/// On a chain the least t with p ≤ q ⊕ t is 0 if p ≤ q and p otherwise;
/// the least t for all constraints is the supremum of these.
template <order::ValueLattice L>
typename L::value_type residual_least(const L& lat, const std::vector<Constraint<typename L::value_type>>& cs) {
  std::vector<typename L::value_type> residuals;
  for (const auto& c : cs) residuals.push_back(lat.leq(c.plus, c.regular) ? lat.bottom() : c.plus);
  return order::sup_or_throw(lat, std::span<const typename L::value_type>(residuals));
}

/// Least feasible value among {0} ∪ {p}. Feasibility is monotone in t and
/// the least feasible t is one of these candidates on a chain.
template <order::ValueLattice L>
typename L::value_type candidate_least(const L& lat, const std::vector<Constraint<typename L::value_type>>& cs) {
  std::vector<typename L::value_type> candidates{lat.bottom()};
  for (const auto& c : cs) candidates.push_back(c.plus);
  std::vector<typename L::value_type> feasible;
  for (const auto& t : candidates)
    if (satisfies(lat, cs, t)) feasible.push_back(t);
  const auto least = lat.infimum(feasible);
  if (feasible.empty() || !least || !satisfies(lat, cs, *least))
    throw PreconditionError("no least feasible candidate for the singular part");
  return *least;
}

/// ⋀{t : p ≤ q ⊕ t for every constraint}. Enumerable lattices use the full
/// scan; other lattices must be chains and use the candidate scan. On
/// chains the residual formula is computed as well and must agree.
template <order::ValueLattice L>
typename L::value_type singular_infimum(const L& lat, const std::vector<Constraint<typename L::value_type>>& cs) {
  if constexpr (order::EnumerableLattice<L>) {
    const auto t = scan_least(lat, cs);
    if (lat.is_chain()) ensure(residual_least(lat, cs) == t, "chain residual differs from the t-scan");
    return t;
  } else {
    if (!lat.is_chain()) throw PreconditionError("singular part needs an enumerable lattice or a chain");
    const auto t = candidate_least(lat, cs);
    ensure(residual_least(lat, cs) == t, "chain residual differs from the candidate scan");
    return t;
  }
}

} // namespace maxitive::decomp
