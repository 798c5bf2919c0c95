// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/mask.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxitive::order {

/// Index of an element of a FinitePoset.
struct Element {
  std::uint8_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::size_t i) : index(static_cast<std::uint8_t>(i)) {}

  constexpr auto operator<=>(const Element&) const = default;
};

/// A finite partially ordered set held as an explicit order relation
/// (one up-set mask per element). At most 64 elements.
///
/// A bottom element is not required at construction so that arbitrary
/// posets can be enumerated; code that uses the poset as a value lattice
/// calls bottom(), which throws when there is none.
class FinitePoset {
public:
  using value_type = Element;

  /// `up[a]` is the set of b with a ≤ b. Validates reflexivity,
  /// antisymmetry and transitivity.
  FinitePoset(std::vector<std::string> names, std::vector<ElementSet> up);

  /// Reflexive-transitive closure of the given pairs (a, b) meaning a ≤ b.
  static FinitePoset from_pairs(std::vector<std::string> names,
                                std::span<const std::pair<std::size_t, std::size_t>> pairs);
  /// 0 < 1 < ... < n-1, elements named "0" .. "n-1".
  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  ElementSet all() const { return ElementSet::full(size()); }
  std::vector<Element> elements() const;

  const std::string& name(Element e) const { return names_.at(e.index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;
  bool contains(Element e) const { return e.index < size(); }

  bool leq(Element a, Element b) const { return up_[a.index].contains(b.index); }
  ElementSet up(Element a) const { return up_[a.index]; }
  ElementSet down(Element a) const { return down_[a.index]; }

  std::optional<Element> least(ElementSet s) const;
  std::optional<Element> greatest(ElementSet s) const;
  ElementSet upper_bounds(ElementSet s) const;
  ElementSet lower_bounds(ElementSet s) const;
  ElementSet up_closure(ElementSet s) const;

  std::optional<Element> supremum(ElementSet s) const { return least(upper_bounds(s)); }
  std::optional<Element> infimum(ElementSet s) const { return greatest(lower_bounds(s)); }
  std::optional<Element> supremum(std::span<const Element> values) const { return supremum(to_set(values)); }
  std::optional<Element> infimum(std::span<const Element> values) const { return infimum(to_set(values)); }
  std::optional<Element> join(Element a, Element b) const { return supremum(ElementSet::singleton(a.index) | ElementSet::singleton(b.index)); }
  std::optional<Element> meet(Element a, Element b) const { return infimum(ElementSet::singleton(a.index) | ElementSet::singleton(b.index)); }

  bool has_bottom() const { return least(all()).has_value(); }
  /// Throws PreconditionError when the poset has no least element.
  Element bottom() const;
  std::optional<Element> top() const { return greatest(all()); }

  /// s ≫ r. In a finite poset every filter is principal, so this is s ≥ r;
  /// see way_above_by_filters() for the definition-level computation.
  bool way_above(Element s, Element r) const { return leq(r, s); }

  bool is_lattice() const;
  bool is_chain() const;

  std::string format(Element e) const { return name(e); }
  /// Throws InputError for an unknown name.
  Element parse(std::string_view name) const;
  std::vector<Element> level_probes(std::span<const Element>) const { return elements(); }

  ElementSet to_set(std::span<const Element> values) const;
  /// Throws InputError if the mask has bits beyond size().
  void check_subset(ElementSet s) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

private:
  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

} // namespace maxitive::order
