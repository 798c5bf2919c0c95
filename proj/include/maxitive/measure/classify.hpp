// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/measure/classification.hpp"
#include "maxitive/measure/finite_measure.hpp"
#include "maxitive/measure/tail_measure.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace maxitive::measure {

namespace detail {

template <order::ValueLattice L>
bool sup_equals(const L& lat, const std::vector<typename L::value_type>& values, const typename L::value_type& target) {
  const auto s = lat.supremum(values);
  return s && *s == target;
}

template <order::ValueLattice L>
bool inf_equals(const L& lat, const std::vector<typename L::value_type>& values, const typename L::value_type& target) {
  const auto s = lat.infimum(values);
  return s && *s == target;
}

inline void require(bool computed, bool expected, Flag f, const char* route) {
  ensure(computed == expected, std::string(flag_name(f)) + ": definition disagrees with " + route);
}

} // namespace detail

/// Largest number of candidate point maps tried by the brute-force density
/// search.
inline constexpr std::size_t kDensitySearchLimit = 4096;

/// Which kinds of cardinal density a measure has, found by trying every
/// map from points to the lattice.
struct DensitySearch {
  bool cardinal = false;
  bool usc = false;
  bool upper_compact_usc = false;
  std::vector<std::vector<std::size_t>> cardinal_densities;  // element indices per point
};

/// Exhaustive search over all |L|^points maps. Returns nullopt beyond
/// kDensitySearchLimit candidates.
template <order::EnumerableLattice L>
std::optional<DensitySearch> search_densities(const FiniteMeasure<L>& m) {
  const auto& lat = m.lattice();
  const auto elems = lat.elements();
  const auto points = m.context().space().size();
  const double candidates = std::pow(static_cast<double>(elems.size()), static_cast<double>(points));
  if (candidates > static_cast<double>(kDensitySearchLimit)) return std::nullopt;

  DensitySearch out;
  std::vector<std::size_t> digits(points, 0);
  std::vector<typename L::value_type> c(points, elems.at(0));
  while (true) {
    for (std::size_t x = 0; x < points; ++x) c[x] = elems[digits[x]];
    if (is_cardinal_density(m, c)) {
      out.cardinal = true;
      out.cardinal_densities.push_back(digits);
      if (point_map_is_usc(m.context().space(), lat, c)) {
        out.usc = true;
        if (point_map_is_upper_compact(m.context().space(), lat, c)) out.upper_compact_usc = true;
      }
    }
    std::size_t x = 0;
    while (x < points && ++digits[x] == elems.size()) digits[x++] = 0;
    if (x == points) break;
  }
  return out;
}

/// Every classification flag of a measure on a finite space, computed from
/// the definitions over the enumerated families of the context. Where the
/// theory gives a second route (Lemma-level characterizations, the closed
/// form "density antitone along specialization", the flags forced by
/// finiteness) it is computed too and must agree; disagreement throws
/// InvariantViolation.
template <order::ValueLattice L>
ClassificationRecord classify(const FiniteMeasure<L>& m) {
  using V = typename L::value_type;
  const auto& ctx = m.context();
  const auto& lat = m.lattice();
  const auto count = ctx.borel_count();
  const auto all = ctx.all_atoms();
  const auto plus = m.nu_plus_table();
  const auto cplus = m.cplus();
  auto nu = [&](AtomSet b) -> const V& { return m(b); };
  auto nu_plus = [&](AtomSet b) -> const V& { return plus[b.bits()]; };

  ClassificationRecord r(Backend::finite);

  bool outer = true, inner = true, saturated = true, weak_outer = true;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const AtomSet b(bits);
    if (!(nu(b) == nu_plus(b))) outer = false;
    std::vector<V> inside;
    for (auto k : ctx.compact_borel())
      if (k.subset_of(b)) inside.push_back(nu(ctx.saturate(k)));
    if (!detail::sup_equals(lat, inside, nu(b))) inner = false;
    if (ctx.is_compact(b)) {
      if (!(nu(b) == nu(ctx.saturate(b)))) saturated = false;
      if (!(nu(b) == nu_plus(b))) weak_outer = false;
      // ν⁺(K) = ⊕_{x∈K} c⁺(x).
      std::vector<V> pointwise;
      b.for_each([&](std::size_t a) { pointwise.push_back(cplus[a]); });
      ensure(detail::sup_equals(lat, pointwise, nu_plus(b)), "ν⁺(K) is not the supremum of c⁺ over K");
    }
  }

  bool weak_inner = true;
  for (auto g : ctx.opens()) {
    std::vector<V> inside;
    for (auto k : ctx.compact_borel())
      if (k.subset_of(g)) inside.push_back(nu_plus(k));
    if (!detail::sup_equals(lat, inside, nu(g))) weak_inner = false;
  }
  bool weak_inner_by_families = true;
  for (const auto& fam : ctx.open_families().families) {
    std::vector<V> values;
    for (auto i : fam.members) values.push_back(nu(ctx.opens()[i]));
    if (!detail::sup_equals(lat, values, nu(fam.combined))) weak_inner_by_families = false;
  }
  detail::require(weak_inner, weak_inner_by_families, Flag::weak_inner, "unions of open families");

  bool weak_outer_by_atoms = true;
  for (std::size_t a = 0; a < ctx.atom_count(); ++a)
    if (!(nu(AtomSet::singleton(a)) == cplus[a])) weak_outer_by_atoms = false;
  detail::require(weak_outer, weak_outer_by_atoms, Flag::weak_outer, "ν([x]) = ν⁺([x])");

  auto smooth = [&](const FamilyEnumeration& fams, const std::vector<AtomSet>& sets) {
    for (const auto& fam : fams.families) {
      std::vector<V> values;
      for (auto i : fam.members) values.push_back(nu(sets[i]));
      if (!detail::inf_equals(lat, values, nu(fam.combined))) return false;
    }
    return true;
  };
  const bool q_smooth = smooth(ctx.filtered_q(), ctx.compact_saturated());
  const bool f_smooth = smooth(ctx.filtered_f(), ctx.closed_sets());
  const bool k_smooth = smooth(ctx.filtered_k(), ctx.compact_borel());

  std::vector<V> outside;
  for (auto k : ctx.compact_borel()) outside.push_back(nu(all.without(k)));
  const bool tight = detail::inf_equals(lat, outside, lat.bottom());

  bool complete = true;
  for (const auto& fam : ctx.borel_families().families) {
    std::vector<V> values;
    for (auto i : fam.members) values.push_back(nu(AtomSet(i)));
    if (!detail::sup_equals(lat, values, nu(fam.combined))) complete = false;
  }
  // Every family of Borel sets of a finite space is finite, hence countable.
  const bool sigma = complete;

  bool from_above = true;
  for (const auto& chain : ctx.decreasing_chains().families) {
    std::vector<V> values;
    for (auto i : chain.members) values.push_back(nu(AtomSet(i)));
    if (!detail::inf_equals(lat, values, nu(chain.combined))) from_above = false;
  }
  ensure(!from_above || sigma, "continuous from above but not σ-maxitive");

  // Candidate densities: c(x) = ν([x]) for complete maxitivity, c⁺ for the
  // usc and upper compact versions (the maximal usc density).
  std::vector<V> per_atom;
  for (std::size_t a = 0; a < ctx.atom_count(); ++a) per_atom.push_back(nu(AtomSet::singleton(a)));
  const auto atom_density = atoms_to_points(ctx, per_atom);
  const auto cplus_points = atoms_to_points(ctx, cplus);
  const bool cardinal = is_cardinal_density(m, atom_density);
  const bool usc_cplus = atom_map_is_usc(ctx, lat, cplus);
  const bool upper_compact_cplus = atom_map_is_upper_compact(ctx, lat, cplus);
  ensure(usc_cplus == point_map_is_usc(ctx.space(), lat, cplus_points), "usc of c⁺ differs on atoms and points");
  const bool cplus_cardinal = is_cardinal_density(m, cplus_points);
  const bool usc_density = cplus_cardinal && usc_cplus;
  const bool uc_usc_density = usc_density && upper_compact_cplus;
  detail::require(complete, cardinal, Flag::cardinal_density_exists, "complete maxitivity");
  if constexpr (order::EnumerableLattice<L>) {
    if (const auto found = search_densities(m)) {
      detail::require(found->cardinal, cardinal, Flag::cardinal_density_exists, "brute-force search");
      detail::require(found->usc, usc_density, Flag::usc_density_exists, "brute-force search");
      detail::require(found->upper_compact_usc, uc_usc_density, Flag::upper_compact_usc_density_exists,
                      "brute-force search");
    }
  }

  r.set(Flag::inner, inner);
  r.set(Flag::outer, outer);
  r.set(Flag::weak_inner, weak_inner);
  r.set(Flag::weak_outer, weak_outer);
  r.set(Flag::regular, inner && outer);
  r.set(Flag::saturated, saturated);
  r.set(Flag::q_smooth, q_smooth);
  r.set(Flag::f_smooth, f_smooth);
  r.set(Flag::k_smooth, k_smooth);
  r.set(Flag::tight, tight);
  r.set(Flag::sigma_maxitive, sigma);
  r.set(Flag::completely_maxitive, complete);
  r.set(Flag::continuous_from_above, from_above);
  r.set(Flag::optimal, from_above && sigma);
  r.set(Flag::usc_density_exists, usc_density);
  r.set(Flag::cardinal_density_exists, cardinal);
  r.set(Flag::upper_compact_usc_density_exists, uc_usc_density);
  r.set(Flag::usc_cplus, usc_cplus);
  r.set(Flag::upper_compact_cplus, upper_compact_cplus);

  // Closed form: ν(B) = ν(↑B) for all B iff the density is antitone along
  // the specialization order of atoms.
  bool antitone = true;
  for (std::size_t a = 0; a < ctx.atom_count(); ++a)
    ctx.borel().atom_up(a).for_each([&](std::size_t b) {
      if (!lat.leq(m.density()[b], m.density()[a])) antitone = false;
    });
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const auto f = static_cast<Flag>(i);
    if (forced_by_backend(Backend::finite, f)) {
      detail::require(r[f], true, f, "finite-space degeneracy");
      r.mark_degenerate(f);
    } else if (equivalence_class(Backend::finite, f) != i) {
      detail::require(r[f], antitone, f, "antitone density");
    }
  }
  return r;
}

/// Every classification flag of a tail measure, computed over the
/// canonical sets of its reference points with bounded witness families
/// (singleton covers, tail chains, sets minus reference points), then
/// compared with the closed forms s∞ ≤ c∞ and c∞ ⊕ s∞ = 0.
template <order::ValueLattice L>
ClassificationRecord classify(const TailMeasure<L>& m) {
  using V = typename L::value_type;
  using countable::FinCofinSet;
  const auto& lat = m.lattice();
  const auto& d = m.density();
  const auto ref = m.reference();
  const auto sets = countable::canonical_sets(ref);
  const auto zero = lat.bottom();

  ClassificationRecord r(Backend::countable);

  bool outer = true, weak_outer = true;
  for (const auto& b : sets) {
    std::vector<V> over;
    for (const auto& c : sets)
      if (b.subset_of(c)) over.push_back(m(c));
    const bool ok = detail::inf_equals(lat, over, m(b));
    outer = outer && ok;
    if (!b.is_infinite()) weak_outer = weak_outer && ok;
  }

  // Compact sets are the finite ones, and ↑K = K.
  bool inner = true;
  for (const auto& b : sets) {
    std::vector<V> inside;
    for (const auto& k : countable::finite_witnesses(b, ref)) inside.push_back(m(k));
    if (!detail::sup_equals(lat, inside, m(b))) inner = false;
  }
  const bool weak_inner = inner;  // every set is open and ν⁺ = ν

  // Countable covers: by singletons, and by a finite part plus the rest.
  auto singletons_of = [&](const FinCofinSet& b) {
    std::vector<V> values;
    for (countable::Natural x = 0; x < ref.bound; ++x)
      if (b.contains(x)) values.push_back(m.point(x));
    return values;
  };
  bool sigma = true;
  for (const auto& b : sets) {
    if (!detail::sup_equals(lat, singletons_of(b), m(b))) sigma = false;
    for (const auto& k : countable::finite_witnesses(b, ref))
      if (!detail::sup_equals(lat, {m(k), m(b - k)}, m(b))) sigma = false;
  }
  detail::require(weak_inner, sigma, Flag::weak_inner, "open singleton covers");
  // A family of subsets of ℕ has a countable subfamily with the same union.
  const bool complete = sigma;

  std::vector<V> outside;
  for (const auto& k : countable::finite_witnesses(FinCofinSet::all(), ref)) outside.push_back(m(k.complement()));
  const bool tight = detail::inf_equals(lat, outside, zero);

  // Decreasing chains. B ∖ [0, n) has empty intersection and its values
  // are constant once n passes every reference point.
  bool from_above = true;
  for (const auto& b : sets) {
    std::vector<V> values;
    for (const auto& c : countable::tail_chain(b, ref)) values.push_back(m(c));
    if (!detail::inf_equals(lat, values, zero)) from_above = false;
    for (const auto& c : sets)
      if (c.subset_of(b) && !detail::inf_equals(lat, {m(b), m(c)}, m(c))) from_above = false;
  }
  // Every subset is closed, so the filtered closed families include these
  // chains; a filtered family of sets beyond them reaches its intersection
  // through such chains.
  const bool f_smooth = from_above;

  // Filtered families of finite sets have a least member.
  bool q_smooth = true;
  for (const auto& b : sets) {
    if (b.is_infinite()) continue;
    std::vector<V> values;
    for (const auto& c : countable::tail_chain(b, ref)) values.push_back(m(c));
    if (!detail::inf_equals(lat, values, zero)) q_smooth = false;
    for (const auto& c : countable::finite_witnesses(b, ref))
      if (!detail::inf_equals(lat, {m(b), m(c)}, m(c))) q_smooth = false;
  }

  bool cardinal = true;
  for (const auto& b : sets)
    if (!detail::sup_equals(lat, singletons_of(b), m(b))) cardinal = false;

  // c⁺ is the pointwise density; {t ≫ c⁺} is open because every set is.
  std::vector<V> image;
  for (const auto& [x, v] : d.exceptions) image.push_back(v);
  image.push_back(d.tail);
  bool upper_compact_cplus = true;
  for (const auto& t : lat.level_probes(image)) {
    if (!lat.way_above(t, zero)) continue;
    std::vector<countable::Natural> members;
    for (const auto& [x, v] : d.exceptions)
      if (!lat.way_above(t, v)) members.push_back(x);
    const auto level = lat.way_above(t, d.tail) ? FinCofinSet::finite(members)
                                                 : FinCofinSet::cofinite(countable::exception_points(d)) |
                                                       FinCofinSet::finite(members);
    if (level.is_infinite()) upper_compact_cplus = false;
  }

  r.set(Flag::inner, inner);
  r.set(Flag::outer, outer);
  r.set(Flag::weak_inner, weak_inner);
  r.set(Flag::weak_outer, weak_outer);
  r.set(Flag::regular, inner && outer);
  r.set(Flag::saturated, true);
  r.set(Flag::q_smooth, q_smooth);
  r.set(Flag::f_smooth, f_smooth);
  r.set(Flag::k_smooth, q_smooth);  // 𝒦 = 𝒬 = finite sets
  r.set(Flag::tight, tight);
  r.set(Flag::sigma_maxitive, sigma);
  r.set(Flag::completely_maxitive, complete);
  r.set(Flag::continuous_from_above, from_above);
  r.set(Flag::optimal, from_above && sigma);
  r.set(Flag::usc_density_exists, cardinal);
  r.set(Flag::cardinal_density_exists, cardinal);
  r.set(Flag::upper_compact_usc_density_exists, cardinal && upper_compact_cplus);
  r.set(Flag::usc_cplus, true);
  r.set(Flag::upper_compact_cplus, upper_compact_cplus);
  ensure(!from_above || sigma, "continuous from above but not σ-maxitive");

  const bool mass_below_tail = lat.leq(d.infinite_mass, d.tail);
  const bool no_tail = d.tail == zero && d.infinite_mass == zero;
  const bool tail_zero = d.tail == zero;
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const auto f = static_cast<Flag>(i);
    const auto cls = equivalence_class(Backend::countable, f);
    if (forced_by_backend(Backend::countable, f)) {
      detail::require(r[f], true, f, "discrete-backend degeneracy");
      r.mark_degenerate(f);
    } else if (cls == kFlagCount) {
      detail::require(r[f], mass_below_tail, f, "closed form s∞ ≤ c∞");
    } else if (cls == kFlagCount + 1) {
      detail::require(r[f], no_tail, f, "closed form c∞ ⊕ s∞ = 0");
    }
  }
  detail::require(upper_compact_cplus, tail_zero, Flag::upper_compact_cplus, "closed form c∞ = 0");
  return r;
}

} // namespace maxitive::measure
