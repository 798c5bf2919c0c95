// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/space/finite_space.hpp"

#include <vector>

namespace maxitive::space {

/// The Borel σ-algebra of a finite space, held through its atoms
/// [x] = ↑x ∩ cl(x). Borel sets are AtomSets; atoms are ordered by their
/// least point.
class BorelStructure {
public:
  /// Computes the atoms both as ↑x ∩ cl(x) and as the classes of points
  /// that no open or compact saturated set separates; the partitions must
  /// agree. Also asserts that opens and compact saturated sets are unions
  /// of atoms, and that every Borel set B satisfies x ∈ B ⟹ [x] ⊆ B.
  explicit BorelStructure(FiniteSpace space);

  const FiniteSpace& space() const { return space_; }

  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<PointSet>& atoms() const { return atoms_; }
  std::size_t atom_of(std::size_t point) const { return atom_of_.at(point); }
  AtomSet all_atoms() const { return AtomSet::full(atoms_.size()); }

  PointSet to_points(AtomSet b) const;
  /// Throws InputError unless `s` is a union of atoms.
  AtomSet to_atoms(PointSet s) const;
  bool is_borel(PointSet s) const;

  /// Every Borel set in mask order. Budget: 20 atoms.
  std::vector<AtomSet> borel_sets() const;

  /// Specialization order on atoms (a partial order: the T0 quotient).
  bool atom_leq(std::size_t a, std::size_t b) const { return atom_up_[a].contains(b); }
  AtomSet atom_up(std::size_t a) const { return atom_up_[a]; }
  AtomSet atom_down(std::size_t a) const { return atom_down_[a]; }

  /// ↑B and cl(B) as atom sets.
  AtomSet saturate(AtomSet b) const;
  AtomSet closure(AtomSet b) const;

  bool is_open(AtomSet b) const;
  bool is_closed(AtomSet b) const { return is_open(b.complement_in(atom_count())); }
  bool is_compact(AtomSet b) const { return space_.is_compact(to_points(b)); }

  std::vector<AtomSet> opens() const;
  std::vector<AtomSet> closed_sets() const;
  /// 𝒬: compact saturated sets.
  std::vector<AtomSet> compact_saturated() const;
  /// 𝒦: Borel sets passing the open-cover compactness test.
  std::vector<AtomSet> compact_borel() const;

  std::string format(AtomSet b) const { return space_.format(to_points(b)); }

private:
  FiniteSpace space_;
  std::vector<PointSet> atoms_;
  std::vector<std::size_t> atom_of_;
  std::vector<AtomSet> atom_up_;
  std::vector<AtomSet> atom_down_;
};

} // namespace maxitive::space
