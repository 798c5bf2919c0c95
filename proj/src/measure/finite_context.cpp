// SPDX-License-Identifier: Apache-2.0

#include "maxitive/measure/finite_context.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>

namespace maxitive::measure {

namespace {

constexpr std::size_t kChainAtomLimit = 6;

std::vector<std::size_t> members_of(std::uint64_t fam) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; fam != 0; ++i, fam >>= 1)
    if (fam & 1U) out.push_back(i);
  return out;
}

// Nonempty subfamilies of `sets` that are filtered for reverse inclusion.
FamilyEnumeration filtered_families(const std::vector<AtomSet>& sets, AtomSet everything) {
  FamilyEnumeration out;
  const auto m = sets.size();
  if (m > FiniteContext::kExhaustiveFamilyLimit) {
    // Reduced: singletons and comparable pairs. Every finite filtered
    // family has a least member, so these already exhibit every value pair
    // (⋀ over the family, measure of the intersection) that can occur.
    out.exhaustive = false;
    for (std::size_t i = 0; i < m; ++i) {
      out.families.push_back({{i}, sets[i]});
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && sets[j].subset_of(sets[i])) out.families.push_back({{i, j}, sets[j]});
    }
    return out;
  }
  std::vector<std::vector<std::uint64_t>> below(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (sets[k].subset_of(sets[i] & sets[j])) below[i][j] |= std::uint64_t{1} << k;

  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m); ++fam) {
    bool filtered = true;
    AtomSet meet = everything;
    for (std::size_t i = 0; i < m && filtered; ++i) {
      if (!((fam >> i) & 1U)) continue;
      meet &= sets[i];
      for (std::size_t j = i + 1; j < m && filtered; ++j)
        if ((fam >> j) & 1U) filtered = (fam & below[i][j]) != 0;
    }
    if (filtered) out.families.push_back({members_of(fam), meet});
  }
  return out;
}

// Nonempty subfamilies of `sets` with their unions.
FamilyEnumeration union_families(const std::vector<AtomSet>& sets) {
  FamilyEnumeration out;
  const auto m = sets.size();
  if (m > FiniteContext::kExhaustiveFamilyLimit) {
    out.exhaustive = false;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) out.families.push_back({{i, j}, sets[i] | sets[j]});
    return out;
  }
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m); ++fam) {
    Subfamily f{members_of(fam), AtomSet{}};
    for (auto i : f.members) f.combined |= sets[i];
    out.families.push_back(std::move(f));
  }
  return out;
}

void extend_chains(std::vector<std::size_t>& chain, FamilyEnumeration& out) {
  out.families.push_back({chain, AtomSet(chain.back())});
  const AtomSet last(chain.back());
  // Strict subsets of the last member, largest masks first.
  for_each_subset(last, [&](AtomSet sub) {
    if (sub == last) return;
    chain.push_back(sub.bits());
    extend_chains(chain, out);
    chain.pop_back();
  });
}

} // namespace

FiniteContext::FiniteContext(space::FiniteSpace space) : borel_(std::move(space)) {
  const auto count = borel_count();
  const auto n = atom_count();
  if (n > kMaxAtoms) throw BudgetError("measure classification is limited to 8 Borel atoms");
  saturation_.resize(count);
  open_.assign(count, false);
  compact_.assign(count, false);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const AtomSet b(bits);
    saturation_[bits] = borel_.saturate(b);
    compact_[bits] = borel_.is_compact(b);
    if (compact_[bits]) compact_borel_.push_back(b);
  }
  opens_ = borel_.opens();
  for (auto g : opens_) open_[g.bits()] = true;
  closed_ = borel_.closed_sets();
  compact_saturated_ = borel_.compact_saturated();
  quasisober_ = space::irreducible_closed_sets(borel_.space()).quasisober;

  const auto everything = all_atoms();
  filtered_q_ = filtered_families(compact_saturated_, everything);
  filtered_f_ = filtered_families(closed_, everything);
  filtered_k_ = filtered_families(compact_borel_, everything);

  // The cover of G by the least opens around its atoms.
  std::vector<AtomSet> least_opens;
  for (std::size_t a = 0; a < n; ++a) least_opens.push_back(borel_.atom_up(a));
  open_families_ = union_families(opens_);
  if (!open_families_.exhaustive)
    for (auto g : opens_) {
      Subfamily f;
      g.for_each([&](std::size_t a) {
        const auto pos = std::lower_bound(opens_.begin(), opens_.end(), least_opens[a]) - opens_.begin();
        f.members.push_back(static_cast<std::size_t>(pos));
        f.combined |= least_opens[a];
      });
      if (!f.members.empty()) open_families_.families.push_back(std::move(f));
    }

  std::vector<AtomSet> all_sets;
  for (std::uint64_t bits = 0; bits < count; ++bits) all_sets.emplace_back(bits);
  borel_families_ = union_families(all_sets);
  if (!borel_families_.exhaustive)
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      // The cover of B by its atoms.
      Subfamily f;
      AtomSet(bits).for_each([&](std::size_t a) {
        f.members.push_back(std::size_t{1} << a);
        f.combined |= AtomSet::singleton(a);
      });
      borel_families_.families.push_back(std::move(f));
    }

  if (n <= kChainAtomLimit) {
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      std::vector<std::size_t> chain{bits};
      extend_chains(chain, chains_);
    }
  } else {
    chains_.exhaustive = false;
    for (std::uint64_t bits = 0; bits < count; ++bits)
      for_each_subset(AtomSet(bits), [&](AtomSet sub) {
        if (sub.bits() != bits) chains_.families.push_back({{bits, sub.bits()}, sub});
      });
  }
}

} // namespace maxitive::measure
