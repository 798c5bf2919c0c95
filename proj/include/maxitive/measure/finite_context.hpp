// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/space/borel.hpp"

#include <memory>
#include <vector>

namespace maxitive::measure {

/// A subfamily of a collection of Borel sets, by index into the collection,
/// with its union or intersection.
struct Subfamily {
  std::vector<std::size_t> members;
  AtomSet combined;
};

/// Families enumerated for a quantifier over "all families". When the
/// collection is too large the enumeration is reduced (see `exhaustive`).
struct FamilyEnumeration {
  bool exhaustive = true;
  std::vector<Subfamily> families;
};

/// Everything about a finite space that measure classification needs,
/// computed once and shared by every measure on the space.
class FiniteContext {
public:
  /// Collections with at most this many members have all subfamilies
  /// enumerated; larger ones fall back to reduced families.
  static constexpr std::size_t kExhaustiveFamilyLimit = 12;
  /// Largest number of Borel atoms accepted.
  static constexpr std::size_t kMaxAtoms = 8;

  /// Throws BudgetError beyond kMaxAtoms atoms.
  explicit FiniteContext(space::FiniteSpace space);
  static std::shared_ptr<const FiniteContext> make(space::FiniteSpace space) {
    return std::make_shared<const FiniteContext>(std::move(space));
  }

  const space::BorelStructure& borel() const { return borel_; }
  const space::FiniteSpace& space() const { return borel_.space(); }
  std::size_t atom_count() const { return borel_.atom_count(); }
  AtomSet all_atoms() const { return borel_.all_atoms(); }
  std::size_t borel_count() const { return std::size_t{1} << atom_count(); }

  AtomSet saturate(AtomSet b) const { return saturation_[b.bits()]; }
  bool is_open(AtomSet b) const { return open_[b.bits()]; }
  bool is_closed(AtomSet b) const { return is_open(b.complement_in(atom_count())); }
  bool is_compact(AtomSet b) const { return compact_[b.bits()]; }

  const std::vector<AtomSet>& opens() const { return opens_; }
  const std::vector<AtomSet>& closed_sets() const { return closed_; }
  /// 𝒬, compact saturated sets.
  const std::vector<AtomSet>& compact_saturated() const { return compact_saturated_; }
  /// 𝒦, compact Borel sets.
  const std::vector<AtomSet>& compact_borel() const { return compact_borel_; }

  /// Nonempty filtered subfamilies (any two members contain a common member).
  const FamilyEnumeration& filtered_q() const { return filtered_q_; }
  const FamilyEnumeration& filtered_f() const { return filtered_f_; }
  const FamilyEnumeration& filtered_k() const { return filtered_k_; }
  /// Families of opens, with their unions.
  const FamilyEnumeration& open_families() const { return open_families_; }
  /// Strictly decreasing chains of Borel sets (members index Borel masks).
  const FamilyEnumeration& decreasing_chains() const { return chains_; }
  /// Families of Borel sets, with their unions (members index Borel masks).
  const FamilyEnumeration& borel_families() const { return borel_families_; }

  bool quasisober() const { return quasisober_; }
  bool t0() const { return borel_.space().is_t0(); }
  /// Discrete finite spaces are the metrizable (indeed Polish, σ-compact)
  /// ones.
  bool discrete() const { return opens_.size() == borel_count() && atom_count() == space().size(); }

private:
  space::BorelStructure borel_;
  std::vector<AtomSet> saturation_;
  std::vector<bool> open_;
  std::vector<bool> compact_;
  std::vector<AtomSet> opens_, closed_, compact_saturated_, compact_borel_;
  FamilyEnumeration filtered_q_, filtered_f_, filtered_k_, open_families_, chains_, borel_families_;
  bool quasisober_ = false;
};

} // namespace maxitive::measure
