// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/order/extreal.hpp"
#include "maxitive/order/finite_poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxitive::order {

/// Domain-theoretic properties of a value lattice.
struct LatticeReport {
  bool continuous = false;
  bool filtered_complete = false;
  bool interpolation = false;
  bool distributive = false;
  bool conditionally_complete = false;
  bool is_lattice = false;
  bool has_bottom = false;

  /// What the regular part needs: a continuous conditionally complete
  /// lattice with bottom.
  bool supports_regular_part() const { return continuous && conditionally_complete && has_bottom; }
  /// What the singular part needs in addition: distributivity.
  bool supports_singular_part() const { return supports_regular_part() && is_lattice && distributive; }
};

/// Nonempty, filtered and upward closed. Throws InputError if `s` has
/// elements outside the poset.
bool is_filter(const FinitePoset& poset, ElementSet s);

/// Every filter of the poset, in increasing mask order. Budget: 20 elements.
std::vector<ElementSet> filters(const FinitePoset& poset);

/// s ≫ r straight from the definition: every filter with an infimum below r
/// contains s.
bool way_above_by_filters(const FinitePoset& poset, Element s, Element r);

LatticeReport check_domain(const FinitePoset& poset);
/// Closed-form rules for [0, ∞], cross-validated against ray filters over a
/// small rational grid.
LatticeReport check_domain(const ExtRealLattice& lattice);

/// t ⊕ ⋀F, after checking it equals ⋀(t ⊕ F).
Element join_continuity(const FinitePoset& poset, Element t, ElementSet filter);
ExtReal join_continuity(const ExtRealLattice& lattice, const ExtReal& t, const IntervalFilter& filter);

/// φ : L → [0, 1] with φ(s) = 1 and φ(t) = 0, preserving existing suprema
/// and filtered infima: the indicator of {r : r ≰ t}. Indexed by element.
std::vector<Rational> separating_map(const FinitePoset& poset, Element s, Element t);

/// Exhaustive property check of a candidate separating map. Returns a
/// description of the first failure, if any.
std::optional<std::string> check_separating_map(const FinitePoset& poset,
                                                const std::vector<Rational>& phi, Element s,
                                                Element t);

} // namespace maxitive::order
