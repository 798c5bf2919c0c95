// SPDX-License-Identifier: Apache-2.0

#include "internal.hpp"

#include "maxitive/order/enumerate.hpp"
#include "maxitive/space/enumerate.hpp"

#include <random>

namespace maxitive::harness::detail {

std::vector<FinitePoset> value_lattices(const GeneratorConfig& config) {
  if (config.lattice == 0) throw InputError("lattice size must be at least 1");
  if (!config.all_lattices) return {FinitePoset::chain(config.lattice)};
  if (config.lattice > 5) throw BudgetError("lattices up to isomorphism are enumerated for at most 5 elements");
  return order::lattices_up_to_iso(config.lattice);
}

namespace {

void add_densities(Instances& out, const measure::ContextPtr& ctx, const FinitePoset& lat, const GeneratorConfig& config,
                   std::size_t space_index, std::size_t lattice_index) {
  const auto elems = lat.elements();
  const auto atoms = ctx->atom_count();
  auto emit = [&](const std::vector<std::size_t>& digits) {
    std::vector<Element> d;
    for (auto i : digits) d.push_back(elems[i]);
    out.measures.emplace_back(FiniteP::from_density(ctx, lat, std::move(d)));
    ++out.finite_measures;
  };
  if (config.mode == Mode::sampled) {
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(space_index), static_cast<std::uint64_t>(lattice_index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (std::size_t s = 0; s < config.samples; ++s) {
      std::vector<std::size_t> digits(atoms);
      for (auto& d : digits) d = pick(rng);
      emit(digits);
    }
    return;
  }
  // Lexicographic, first atom most significant.
  std::vector<std::size_t> digits(atoms, 0);
  while (true) {
    emit(digits);
    std::size_t i = atoms;
    while (i > 0 && ++digits[i - 1] == elems.size()) digits[--i] = 0;
    if (i == 0) break;
  }
}

void add_tail_grid(Instances& out, const FinitePoset& lat) {
  const auto elems = lat.elements();
  for (auto e0 : elems)
    for (auto e1 : elems)
      for (auto c : elems)
        for (auto s : elems) {
          countable::TailDensity<Element> d;
          d.exceptions = {{0, e0}, {1, e1}};
          d.tail = c;
          d.infinite_mass = s;
          out.measures.emplace_back(TailP(lat, d));
          ++out.tail_measures;
        }
}

} // namespace

Instances generate(const GeneratorConfig& config, const Needs& needs) {
  Instances out;
  if (config.points > space::kMaxEnumeratedPoints)
    throw BudgetError("spaces are enumerated for at most " + std::to_string(space::kMaxEnumeratedPoints) + " points");
  if (needs.spaces || needs.measures) out.spaces = space::enumerate_topologies(config.points);
  if (needs.posets) {
    if (config.lattice > 5) throw BudgetError("labeled posets are enumerated for at most 5 elements");
    order::for_each_labeled_poset(config.lattice, [&](const FinitePoset& p) { out.posets.push_back(p); });
  }
  if (needs.lattices) {
    if (config.lattice == 0 || config.lattice > 5) throw BudgetError("lattices are enumerated for 1 to 5 elements");
    out.lattices = order::lattices_up_to_iso(config.lattice);
  }
  if (!needs.measures) return out;

  const auto lattices = value_lattices(config);
  if (config.mode == Mode::exhaustive && config.lattice > kMaxExhaustiveLattice)
    throw BudgetError("exhaustive density enumeration needs lattices with at most " +
                      std::to_string(kMaxExhaustiveLattice) + " elements; use sampled mode");
  std::vector<measure::ContextPtr> contexts;
  for (const auto& s : out.spaces) {
    contexts.push_back(measure::FiniteContext::make(s));
    if (config.mode == Mode::exhaustive && contexts.back()->atom_count() > kMaxExhaustiveAtoms)
      throw BudgetError("exhaustive density enumeration needs at most " + std::to_string(kMaxExhaustiveAtoms) +
                        " Borel atoms; space " + s.format(s.all()) + " has " +
                        std::to_string(contexts.back()->atom_count()) + "; use sampled mode");
  }
  for (std::size_t si = 0; si < contexts.size(); ++si)
    for (std::size_t li = 0; li < lattices.size(); ++li) add_densities(out, contexts[si], lattices[li], config, si, li);
  if (config.countable)
    for (const auto& lat : lattices) add_tail_grid(out, lat);
  return out;
}

} // namespace maxitive::harness::detail
