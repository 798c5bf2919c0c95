// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/errors.hpp"
#include "maxitive/measure/finite_context.hpp"
#include "maxitive/order/lattice.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace maxitive::measure {

using ContextPtr = std::shared_ptr<const FiniteContext>;

/// A maxitive measure on the Borel sets of a finite space. Stored as the
/// full table of values, indexed by atom mask, together with the atom
/// density that generates it.
template <order::ValueLattice L>
class FiniteMeasure {
public:
  using value_type = typename L::value_type;

  /// ν(B) = ⊕ of `density` over the atoms of B. Throws InputError if the
  /// density does not have one value per atom, ValidationError if some
  /// needed supremum does not exist.
  static FiniteMeasure from_density(ContextPtr ctx, L lattice, std::vector<value_type> density) {
    if (density.size() != ctx->atom_count())
      throw InputError("density must give a value for each of the " + std::to_string(ctx->atom_count()) +
                       " Borel atoms, got " + std::to_string(density.size()));
    for (const auto& v : density)
      if (!lattice.contains(v)) throw InputError("density value outside the lattice");

    std::vector<value_type> table(ctx->borel_count(), lattice.bottom());
    for (std::uint64_t bits = 1; bits < ctx->borel_count(); ++bits) {
      const auto a = AtomSet(bits).lowest();
      const auto rest = bits & (bits - 1);
      const auto j = lattice.join(table[rest], density[a]);
      if (!j)
        throw ValidationError("density values have no supremum over a Borel set",
                              ctx->borel().format(AtomSet(bits)));
      table[bits] = *j;
    }
    return FiniteMeasure(std::move(ctx), std::move(lattice), std::move(density), std::move(table));
  }

  /// Validates a table over every Borel set: ν(∅) = 0 and pairwise
  /// maxitivity, then extracts the atom density and checks that it
  /// reproduces the table.
  static FiniteMeasure from_table(ContextPtr ctx, L lattice,
                                  const std::vector<std::pair<AtomSet, value_type>>& entries) {
    const auto count = ctx->borel_count();
    const auto& borel = ctx->borel();
    std::vector<std::optional<value_type>> slots(count);
    for (const auto& [set, value] : entries) {
      if (!set.subset_of(ctx->all_atoms())) throw InputError("table entry refers to atoms outside the space");
      if (!lattice.contains(value)) throw InputError("table value outside the lattice");
      if (slots[set.bits()]) throw InputError("table lists the set " + borel.format(set) + " twice");
      slots[set.bits()] = value;
    }
    std::vector<value_type> table;
    table.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      if (!slots[bits]) throw InputError("table is missing the Borel set " + borel.format(AtomSet(bits)));
      table.push_back(*slots[bits]);
    }
    return from_full_table(std::move(ctx), std::move(lattice), std::move(table));
  }

  /// As from_table, with the values already indexed by atom mask.
  static FiniteMeasure from_full_table(ContextPtr ctx, L lattice, std::vector<value_type> table) {
    const auto count = ctx->borel_count();
    const auto& borel = ctx->borel();
    if (table.size() != count) throw InputError("table size does not match the number of Borel sets");
    if (!(table[0] == lattice.bottom())) throw ValidationError("ν(∅) is not the bottom element", "∅");
    for (std::uint64_t a = 1; a < count; ++a)
      for (std::uint64_t b = a + 1; b < count; ++b) {
        const auto j = lattice.join(table[a], table[b]);
        if (!j || !(*j == table[a | b]))
          throw ValidationError("table is not maxitive",
                                "(" + borel.format(AtomSet(a)) + ", " + borel.format(AtomSet(b)) + ")");
      }
    std::vector<value_type> density;
    for (std::size_t x = 0; x < ctx->atom_count(); ++x) density.push_back(table[AtomSet::singleton(x).bits()]);
    auto m = from_density(ctx, lattice, std::move(density));
    ensure(m.table_ == table, "atom density does not reproduce a maxitive table");
    return m;
  }

  const FiniteContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const L& lattice() const { return lattice_; }
  const std::vector<value_type>& density() const { return density_; }
  const std::vector<value_type>& table() const { return table_; }

  const value_type& operator()(AtomSet b) const { return table_.at(b.bits()); }

  /// ν⁺(B) = ⋀ of ν(G) over open G ⊇ B, which on a finite space is
  /// ν(↑B); both are computed and compared.
  value_type nu_plus(AtomSet b) const {
    std::vector<value_type> over_opens;
    for (auto g : ctx_->opens())
      if (b.subset_of(g)) over_opens.push_back((*this)(g));
    const auto inf = lattice_.infimum(over_opens);
    const auto& by_saturation = (*this)(ctx_->saturate(b));
    ensure(inf.has_value() && *inf == by_saturation, "ν⁺: infimum over open supersets differs from ν(↑B)");
    ensure(lattice_.leq((*this)(b), by_saturation), "ν⁺(B) is not above ν(B)");
    return by_saturation;
  }

  std::vector<value_type> nu_plus_table() const {
    std::vector<value_type> out;
    out.reserve(table_.size());
    for (std::uint64_t bits = 0; bits < table_.size(); ++bits) out.push_back(nu_plus(AtomSet(bits)));
    return out;
  }

  /// ν⁺ rebuilt as a measure; from_full_table re-validates maxitivity.
  FiniteMeasure outer_regularization() const { return from_full_table(ctx_, lattice_, nu_plus_table()); }

  /// c⁺(x) = ν⁺([x]), per atom.
  std::vector<value_type> cplus() const {
    std::vector<value_type> out;
    for (std::size_t a = 0; a < ctx_->atom_count(); ++a) out.push_back(nu_plus(AtomSet::singleton(a)));
    return out;
  }

  bool is_zero() const {
    for (const auto& v : table_)
      if (!(v == lattice_.bottom())) return false;
    return true;
  }

  friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) {
    return a.ctx_ == b.ctx_ && a.lattice_ == b.lattice_ && a.table_ == b.table_;
  }

private:
  FiniteMeasure(ContextPtr ctx, L lattice, std::vector<value_type> density, std::vector<value_type> table)
      : ctx_(std::move(ctx)), lattice_(std::move(lattice)), density_(std::move(density)), table_(std::move(table)) {}

  ContextPtr ctx_;
  L lattice_;
  std::vector<value_type> density_;
  std::vector<value_type> table_;
};

/// Whether {t ≫ c} is open for every t, for a map c on atoms.
template <order::ValueLattice L>
bool atom_map_is_usc(const FiniteContext& ctx, const L& lattice, const std::vector<typename L::value_type>& c) {
  for (const auto& t : lattice.level_probes(c)) {
    AtomSet level;
    for (std::size_t a = 0; a < c.size(); ++a)
      if (lattice.way_above(t, c[a])) level |= AtomSet::singleton(a);
    if (!ctx.is_open(level)) return false;
  }
  return true;
}

/// Whether {t ⋫ c} is compact for every t ≫ 0, for a map c on atoms.
template <order::ValueLattice L>
bool atom_map_is_upper_compact(const FiniteContext& ctx, const L& lattice,
                               const std::vector<typename L::value_type>& c) {
  for (const auto& t : lattice.level_probes(c)) {
    if (!lattice.way_above(t, lattice.bottom())) continue;
    AtomSet level;
    for (std::size_t a = 0; a < c.size(); ++a)
      if (!lattice.way_above(t, c[a])) level |= AtomSet::singleton(a);
    if (!ctx.is_compact(level)) return false;
  }
  return true;
}

/// A map on points, for cardinal densities.
template <order::ValueLattice L>
bool point_map_is_usc(const space::FiniteSpace& space, const L& lattice,
                      const std::vector<typename L::value_type>& c) {
  for (const auto& t : lattice.level_probes(c)) {
    PointSet level;
    for (std::size_t x = 0; x < c.size(); ++x)
      if (lattice.way_above(t, c[x])) level |= PointSet::singleton(x);
    if (!space.is_open(level)) return false;
  }
  return true;
}

template <order::ValueLattice L>
bool point_map_is_upper_compact(const space::FiniteSpace& space, const L& lattice,
                                const std::vector<typename L::value_type>& c) {
  for (const auto& t : lattice.level_probes(c)) {
    if (!lattice.way_above(t, lattice.bottom())) continue;
    PointSet level;
    for (std::size_t x = 0; x < c.size(); ++x)
      if (!lattice.way_above(t, c[x])) level |= PointSet::singleton(x);
    if (!space.is_compact(level)) return false;
  }
  return true;
}

/// Whether ν(B) = ⊕ of c over the points of B, for every Borel B.
template <order::ValueLattice L>
bool is_cardinal_density(const FiniteMeasure<L>& m, const std::vector<typename L::value_type>& c) {
  const auto& ctx = m.context();
  for (std::uint64_t bits = 0; bits < ctx.borel_count(); ++bits) {
    std::vector<typename L::value_type> values;
    ctx.borel().to_points(AtomSet(bits)).for_each([&](std::size_t x) { values.push_back(c[x]); });
    const auto sup = m.lattice().supremum(values);
    if (!sup || !(*sup == m(AtomSet(bits)))) return false;
  }
  return true;
}

/// Lifts a map on atoms to the points of each atom.
template <class V>
std::vector<V> atoms_to_points(const FiniteContext& ctx, const std::vector<V>& per_atom) {
  std::vector<V> out;
  for (std::size_t x = 0; x < ctx.space().size(); ++x) out.push_back(per_atom.at(ctx.borel().atom_of(x)));
  return out;
}

} // namespace maxitive::measure
