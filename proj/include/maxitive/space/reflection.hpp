// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/space/borel.hpp"

#include <string>
#include <vector>

namespace maxitive::space {

/// The T0 quotient E₀ of a finite space and the projection π₀ : E → E₀.
struct Reflection {
  FiniteSpace quotient;
  std::vector<std::size_t> projection;  // point of E -> point of E₀

  PointSet image(PointSet s) const;
  PointSet preimage(PointSet s) const;
};

/// Quotient by topological indistinguishability with the quotient
/// topology. Asserts that the quotient is T0, that π₀ maps opens and
/// compact saturated sets to opens and compact saturated sets (both
/// directions), that π₀⁻¹(π₀(B)) = B for Borel B, and that B ↦ π₀(B) is a
/// bijection of Borel families preserving unions and complements.
Reflection t0_reflection(const FiniteSpace& space);

struct FactorizationReport {
  std::size_t targets = 0;
  std::size_t maps_checked = 0;
  std::vector<std::string> failures;
  bool holds() const { return failures.empty(); }
};

/// For every continuous f : E → T into every labeled T0 space T with at
/// most `max_target_points` points, checks that exactly one map
/// g : E₀ → T satisfies g ∘ π₀ = f, and that g is continuous.
FactorizationReport check_factorization(const FiniteSpace& space, const Reflection& reflection,
                                        std::size_t max_target_points = 3);

} // namespace maxitive::space
