// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/decomp/singular.hpp"
#include "maxitive/measure/classify.hpp"
#include "maxitive/order/domain.hpp"

#include <string_view>

namespace maxitive::decomp {

enum class Kind { regular, purely_singular, zero, mixed, not_outer_continuous };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::regular: return "regular";
    case Kind::purely_singular: return "purely_singular";
    case Kind::zero: return "zero";
    case Kind::mixed: return "mixed";
    case Kind::not_outer_continuous: return "not_outer_continuous";
  }
  return "";
}

/// Throws PreconditionError unless the lattice is a continuous
/// conditionally complete lattice with bottom.
template <order::ValueLattice L>
void require_regular_support(const L& lat) {
  if (!order::check_domain(lat).supports_regular_part())
    throw PreconditionError("regular part needs a continuous conditionally complete lattice with bottom");
}

/// In addition, distributivity.
template <order::ValueLattice L>
void require_singular_support(const L& lat) {
  const auto report = order::check_domain(lat);
  if (!report.supports_regular_part())
    throw PreconditionError("singular part needs a continuous conditionally complete lattice with bottom");
  if (!report.is_lattice || !report.distributive)
    throw PreconditionError("singular part needs a distributive lattice");
}

template <class M>
struct Decomposition {
  M outer_reg;
  M regular_part;
  M singular_part;
  bool identity_holds = false;
  bool minimality_checked = false;
  Kind kind = Kind::mixed;
};

namespace detail {

template <order::ValueLattice L>
std::vector<typename L::value_type> regular_table(const measure::FiniteMeasure<L>& m) {
  const auto& ctx = m.context();
  const auto plus = m.nu_plus_table();
  std::vector<typename L::value_type> out;
  for (std::uint64_t bits = 0; bits < ctx.borel_count(); ++bits) {
    std::vector<typename L::value_type> inside;
    for (auto k : ctx.compact_borel())
      if (k.subset_of(AtomSet(bits))) inside.push_back(plus[k.bits()]);
    out.push_back(order::sup_or_throw(m.lattice(), std::span<const typename L::value_type>(inside)));
  }
  return out;
}

template <class Build>
auto as_invariant(const char* what, Build&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    throw InvariantViolation(std::string(what) + " is not maxitive: " + e.witness());
  }
}

template <order::ValueLattice L>
countable::TailDensity<typename L::value_type> regular_density(const measure::TailMeasure<L>& m) {
  auto d = m.density();
  d.infinite_mass = m.lattice().bottom();
  return d;
}

// ⌊ν⌋(B) = ⊕ of ν⁺(K) over the finite witnesses K ⊆ B, on every canonical set.
template <order::ValueLattice L>
void check_tail_regular(const measure::TailMeasure<L>& m, const measure::TailMeasure<L>& fitted) {
  const auto ref = m.reference();
  for (const auto& b : countable::canonical_sets(ref)) {
    std::vector<typename L::value_type> inside;
    for (const auto& k : countable::finite_witnesses(b, ref)) inside.push_back(m.nu_plus(k));
    const auto sup = m.lattice().supremum(inside);
    ensure(sup && *sup == fitted(b), "regular part of a tail measure differs from ⊕ ν⁺ over finite subsets");
  }
}

} // namespace detail

/// ⌊ν⌋(B) = ⊕ of ν⁺(K) over compact Borel K ⊆ B. Asserts that ⌊ν⌋ has
/// density c⁺, is regular and is its own regular part.
template <order::ValueLattice L>
measure::FiniteMeasure<L> regular_part(const measure::FiniteMeasure<L>& m) {
  require_regular_support(m.lattice());
  using M = measure::FiniteMeasure<L>;
  const auto reg = detail::as_invariant("regular part",
                                        [&] { return M::from_full_table(m.context_ptr(), m.lattice(), detail::regular_table(m)); });
  ensure(reg.density() == m.cplus(), "regular part does not have density c⁺");
  ensure(detail::regular_table(reg) == reg.table(), "regular part is not idempotent");
  ensure(measure::classify(reg)[measure::Flag::regular], "regular part is not regular");
  return reg;
}

template <order::ValueLattice L>
measure::TailMeasure<L> regular_part(const measure::TailMeasure<L>& m) {
  require_regular_support(m.lattice());
  const measure::TailMeasure<L> reg(m.lattice(), detail::regular_density(m));
  detail::check_tail_regular(m, reg);
  detail::check_tail_regular(reg, reg);
  const auto ref = m.reference();
  for (auto x : ref.points) ensure(reg.point(x) == m.nu_plus(countable::FinCofinSet::finite({x})), "density is not c⁺");
  ensure(measure::classify(reg)[measure::Flag::regular], "regular part is not regular");
  return reg;
}

/// ⊥ν(B) = ⋀{t : ν⁺(A) ≤ ⌊ν⌋(A) ⊕ t for every Borel A ⊆ B}.
template <order::ValueLattice L>
measure::FiniteMeasure<L> singular_part(const measure::FiniteMeasure<L>& m) {
  require_singular_support(m.lattice());
  using V = typename L::value_type;
  const auto reg = regular_part(m);
  const auto plus = m.nu_plus_table();
  std::vector<V> table;
  for (std::uint64_t bits = 0; bits < m.context().borel_count(); ++bits) {
    std::vector<Constraint<V>> cs;
    for_each_subset(AtomSet(bits), [&](AtomSet a) { cs.push_back({plus[a.bits()], reg(a)}); });
    table.push_back(singular_infimum(m.lattice(), cs));
  }
  return detail::as_invariant("singular part", [&] {
    return measure::FiniteMeasure<L>::from_full_table(m.context_ptr(), m.lattice(), std::move(table));
  });
}

/// On the countable backend the quantifier over A ⊆ B runs over the finite
/// witnesses and the infinite sets B ∖ S for S among the reference points;
/// the result is fitted to a tail density (∅, 0, σ) and compared.
template <order::ValueLattice L>
measure::TailMeasure<L> singular_part(const measure::TailMeasure<L>& m) {
  require_singular_support(m.lattice());
  using V = typename L::value_type;
  const auto reg = regular_part(m);
  const auto ref = m.reference();
  auto literal = [&](const countable::FinCofinSet& b) {
    std::vector<Constraint<V>> cs{{m.nu_plus(b), reg(b)}};
    for (const auto& a : countable::finite_witnesses(b, ref)) cs.push_back({m.nu_plus(a), reg(a)});
    for (const auto& a : countable::infinite_witnesses(b, ref)) cs.push_back({m.nu_plus(a), reg(a)});
    return singular_infimum(m.lattice(), cs);
  };
  countable::TailDensity<V> d;
  d.tail = m.lattice().bottom();
  d.infinite_mass = literal(countable::FinCofinSet::all());
  const measure::TailMeasure<L> sing(m.lattice(), d);
  for (const auto& b : countable::canonical_sets(ref))
    ensure(literal(b) == sing(b), "singular part is not of the form (∅, 0, σ) on " + b.to_string());
  return sing;
}

namespace detail {

template <class M, class Sets, class Compacts>
Kind classify_kind(const M& m, const M& reg, const M& sing, const measure::ClassificationRecord& flags,
                   const Sets& sets, const Compacts& is_compact) {
  if (!flags[measure::Flag::outer]) return Kind::not_outer_continuous;
  bool vanishes_on_compacts = true;
  for (const auto& b : sets)
    if (is_compact(b) && !(m(b) == m.lattice().bottom())) vanishes_on_compacts = false;
  ensure(sing.is_zero() == flags[measure::Flag::regular], "outer-continuous ν: regular iff ⊥ν = 0 fails");
  ensure(reg.is_zero() == vanishes_on_compacts, "outer-continuous ν: ⌊ν⌋ = 0 iff ν vanishes on compacts fails");
  if (m.is_zero()) return Kind::zero;
  if (reg.is_zero()) return Kind::purely_singular;
  if (sing.is_zero()) return Kind::regular;
  return Kind::mixed;
}

} // namespace detail

/// Regular part, singular part and ν⁺, with every property of the
/// decomposition asserted: ν⁺ = ⌊ν⌋ ⊕ ⊥ν, ⊥ν([x]) = 0, ⊥⌊ν⌋ = 0, and
/// for optimal ν on discrete spaces ν = ⌊ν⌋ ⊕ ⊥ν with ⊥ν zero on compacts.
/// On small instances ⊥ν is also compared against every maxitive τ with
/// ν⁺ = ⌊ν⌋ ⊕ τ.
template <order::ValueLattice L>
Decomposition<measure::FiniteMeasure<L>> decompose(const measure::FiniteMeasure<L>& m) {
  using M = measure::FiniteMeasure<L>;
  const auto& ctx = m.context();
  const auto& lat = m.lattice();
  auto sing = singular_part(m);
  auto reg = regular_part(m);
  auto plus = m.outer_regularization();

  std::vector<AtomSet> sets;
  for (std::uint64_t bits = 0; bits < ctx.borel_count(); ++bits) sets.emplace_back(bits);
  for (auto b : sets) {
    const auto j = lat.join(reg(b), sing(b));
    ensure(j && *j == plus(b), "ν⁺ = ⌊ν⌋ ⊕ ⊥ν fails on " + ctx.borel().format(b));
  }
  for (std::size_t a = 0; a < ctx.atom_count(); ++a)
    ensure(sing(AtomSet::singleton(a)) == lat.bottom(), "⊥ν([x]) ≠ 0");
  ensure(singular_part(reg).is_zero(), "⊥⌊ν⌋ ≠ 0");

  const auto flags = measure::classify(m);
  const auto kind = detail::classify_kind(m, reg, sing, flags, sets, [&](AtomSet b) { return ctx.is_compact(b); });
  if (ctx.discrete() && flags[measure::Flag::optimal])
    for (auto b : sets) {
      ensure(lat.join(reg(b), sing(b)) == m(b), "optimal ν ≠ ⌊ν⌋ ⊕ ⊥ν");
      if (ctx.is_compact(b)) ensure(sing(b) == lat.bottom(), "⊥ν of an optimal measure is nonzero on a compact set");
    }

  bool minimality = false;
  if constexpr (order::EnumerableLattice<L>) {
    const auto elems = lat.elements();
    if (ctx.atom_count() <= 3 && elems.size() <= 4) {
      minimality = true;
      bool found_self = false;
      std::vector<std::size_t> digits(ctx.atom_count(), 0);
      while (true) {
        std::vector<typename L::value_type> d;
        for (auto i : digits) d.push_back(elems[i]);
        const auto tau = M::from_density(m.context_ptr(), lat, d);
        bool decomposes = true;
        for (auto b : sets)
          if (lat.join(reg(b), tau(b)) != std::optional(plus(b))) decomposes = false;
        if (decomposes) {
          for (auto b : sets) ensure(lat.leq(sing(b), tau(b)), "⊥ν is not the least singular complement");
          if (tau == sing) found_self = true;
        }
        std::size_t x = 0;
        while (x < digits.size() && ++digits[x] == elems.size()) digits[x++] = 0;
        if (x == digits.size()) break;
      }
      ensure(found_self, "⊥ν does not itself satisfy ν⁺ = ⌊ν⌋ ⊕ ⊥ν");
    }
  }
  return {std::move(plus), std::move(reg), std::move(sing), true, minimality, kind};
}

template <order::ValueLattice L>
Decomposition<measure::TailMeasure<L>> decompose(const measure::TailMeasure<L>& m) {
  const auto& lat = m.lattice();
  auto sing = singular_part(m);
  auto reg = regular_part(m);
  const auto ref = m.reference();
  const auto sets = countable::canonical_sets(ref);
  for (const auto& b : sets) {
    const auto j = lat.join(reg(b), sing(b));
    ensure(j && *j == m.nu_plus(b), "ν⁺ = ⌊ν⌋ ⊕ ⊥ν fails on " + b.to_string());
  }
  for (auto x : ref.points) ensure(sing(countable::FinCofinSet::finite({x})) == lat.bottom(), "⊥ν({x}) ≠ 0");
  ensure(singular_part(reg).is_zero(), "⊥⌊ν⌋ ≠ 0");

  const auto flags = measure::classify(m);
  const auto kind = detail::classify_kind(m, reg, sing, flags, sets,
                                          [](const countable::FinCofinSet& b) { return !b.is_infinite(); });
  if (flags[measure::Flag::optimal])
    for (const auto& b : sets) {
      ensure(lat.join(reg(b), sing(b)) == m(b), "optimal ν ≠ ⌊ν⌋ ⊕ ⊥ν");
      if (!b.is_infinite()) ensure(sing(b) == lat.bottom(), "⊥ν of an optimal measure is nonzero on a finite set");
    }
  // ν⁺ = ν on the discrete backend.
  return {m, std::move(reg), std::move(sing), true, false, kind};
}

} // namespace maxitive::decomp
