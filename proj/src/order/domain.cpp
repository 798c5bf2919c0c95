// SPDX-License-Identifier: Apache-2.0

#include "maxitive/order/domain.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>

namespace maxitive::order {

namespace {

constexpr std::size_t kSubsetBudget = 20;

bool is_filtered(const FinitePoset& poset, ElementSet s) {
  bool ok = true;
  s.for_each([&](std::size_t a) {
    s.for_each([&](std::size_t b) {
      if (ok && b > a) {
        const auto below_both = poset.down(Element(a)) & poset.down(Element(b));
        ok = below_both.intersects(s);
      }
    });
  });
  return ok;
}

std::vector<ExtReal> extreal_grid() {
  return {ExtReal(0), ExtReal(Rational(1, 2)), ExtReal(1), ExtReal(2), ExtReal::infinity()};
}

std::vector<IntervalFilter> ray_filters(const std::vector<ExtReal>& grid) {
  std::vector<IntervalFilter> out;
  for (const auto& a : grid) {
    out.push_back({a, false});
    if (!a.is_infinite()) out.push_back({a, true});
  }
  return out;
}

} // namespace

bool is_filter(const FinitePoset& poset, ElementSet s) {
  poset.check_subset(s);
  if (s.empty()) return false;
  if (poset.up_closure(s) != s) return false;
  return is_filtered(poset, s);
}

std::vector<ElementSet> filters(const FinitePoset& poset) {
  if (poset.size() > kSubsetBudget) throw BudgetError("filter enumeration is limited to 20 elements");
  std::vector<ElementSet> out;
  const auto all = poset.all();
  for (std::uint64_t bits = 1; bits <= all.bits(); ++bits) {
    const ElementSet s(bits);
    if (is_filter(poset, s)) out.push_back(s);
  }
  return out;
}

bool way_above_by_filters(const FinitePoset& poset, Element s, Element r) {
  for (auto f : filters(poset)) {
    const auto inf = poset.infimum(f);
    if (inf && poset.leq(*inf, r) && !f.contains(s.index)) return false;
  }
  return true;
}

LatticeReport check_domain(const FinitePoset& poset) {
  LatticeReport report;
  const auto n = poset.size();
  if (n > kSubsetBudget) throw BudgetError("domain checks are limited to 20 elements");
  const auto elems = poset.elements();
  const auto fs = filters(poset);

  // The definition-level relation is used while it stays cheap.
  std::vector<ElementSet> way_above_set(n);
  for (auto r : elems)
    for (auto s : elems) {
      const bool wa = n <= 12 ? way_above_by_filters(poset, s, r) : poset.way_above(s, r);
      if (wa) way_above_set[r.index] |= ElementSet::singleton(s.index);
    }

  report.has_bottom = poset.has_bottom();
  report.is_lattice = poset.is_lattice();

  report.continuous = std::all_of(elems.begin(), elems.end(), [&](Element r) {
    const auto wa = way_above_set[r.index];
    return is_filter(poset, wa) && poset.infimum(wa) == r;
  });

  report.filtered_complete =
      std::all_of(fs.begin(), fs.end(), [&](ElementSet f) { return poset.infimum(f).has_value(); });

  report.interpolation = true;
  for (auto r : elems)
    way_above_set[r.index].for_each([&](std::size_t s) {
      bool found = false;
      way_above_set[r.index].for_each([&](std::size_t t) {
        if (way_above_set[t].contains(s)) found = true;
      });
      if (!found) report.interpolation = false;
    });

  if (report.is_lattice) {
    report.distributive = true;
    for (auto a : elems)
      for (auto b : elems)
        for (auto c : elems) {
          const auto lhs = poset.meet(a, *poset.join(b, c));
          const auto rhs = poset.join(*poset.meet(a, b), *poset.meet(a, c));
          if (lhs != rhs) report.distributive = false;
        }
  }

  report.conditionally_complete = true;
  for (std::uint64_t bits = 1; bits <= poset.all().bits() && n > 0; ++bits) {
    const ElementSet s(bits);
    if (!poset.upper_bounds(s).empty() && !poset.supremum(s)) {
      report.conditionally_complete = false;
      break;
    }
  }
  return report;
}

LatticeReport check_domain(const ExtRealLattice& lattice) {
  LatticeReport report;
  report.has_bottom = true;
  report.is_lattice = true;
  report.filtered_complete = true;  // every ray has its endpoint as infimum
  report.conditionally_complete = true;

  const auto grid = extreal_grid();
  const auto rays = ray_filters(grid);

  // Closed form of ≫ against the ray witnesses drawn from the grid.
  bool way_above_ok = true;
  for (const auto& s : grid)
    for (const auto& r : grid) {
      bool by_filters = true;
      for (const auto& f : rays)
        if (f.infimum() <= r && !f.contains(s)) by_filters = false;
      if (by_filters != lattice.way_above(s, r)) way_above_ok = false;
    }

  // ↟r is the ray (r, ∞] (or {∞} at r = ∞), whose infimum is r.
  report.continuous = way_above_ok;
  for (const auto& r : grid) {
    const IntervalFilter expected = r.is_infinite() ? IntervalFilter{r, false} : IntervalFilter{r, true};
    for (const auto& s : lattice.level_probes(grid))
      if (lattice.way_above(s, r) != expected.contains(s)) report.continuous = false;
    if (expected.infimum() != r) report.continuous = false;
  }

  report.interpolation = true;
  for (const auto& s : grid)
    for (const auto& r : grid) {
      if (!lattice.way_above(s, r)) continue;
      ExtReal t;
      if (s.is_infinite()) t = r.is_infinite() ? r : ExtReal(r.finite_value() + 1);
      else t = ExtReal((s.finite_value() + r.finite_value()) / 2);
      if (!(lattice.way_above(s, t) && lattice.way_above(t, r))) report.interpolation = false;
    }

  report.distributive = true;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid)
        if (std::min(a, std::max(b, c)) != std::max(std::min(a, b), std::min(a, c)))
          report.distributive = false;
  return report;
}

Element join_continuity(const FinitePoset& poset, Element t, ElementSet filter) {
  if (!is_filter(poset, filter)) throw InputError("join_continuity: argument is not a filter");
  const auto inf = poset.infimum(filter);
  if (!inf) throw PreconditionError("join_continuity: filter has no infimum");

  std::vector<Element> joined;
  filter.for_each([&](std::size_t f) {
    const auto j = poset.join(t, Element(f));
    if (!j) throw PreconditionError("join_continuity: t ⊕ f does not exist for f = " + poset.name(Element(f)));
    joined.push_back(*j);
  });

  const auto lhs = poset.join(t, *inf);
  const auto rhs = poset.infimum(joined);
  ensure(lhs.has_value(), "join_continuity: t ⊕ ⋀F does not exist");
  ensure(rhs.has_value() && *lhs == *rhs, "join_continuity: t ⊕ ⋀F differs from ⋀(t ⊕ F)");
  return *lhs;
}

ExtReal join_continuity(const ExtRealLattice&, const ExtReal& t, const IntervalFilter& filter) {
  if (filter.open && filter.lower.is_infinite()) throw InputError("join_continuity: (∞, ∞] is empty, not a filter");
  const ExtReal lhs = std::max(t, filter.infimum());
  // {t ⊕ f : f ∈ F} is {t} ∪ (F ∩ (t, ∞]) when t ∈ F, and F itself otherwise.
  const ExtReal rhs = filter.contains(t) ? t : filter.infimum();
  ensure(lhs == rhs, "join_continuity: t ⊕ ⋀F differs from ⋀(t ⊕ F)");
  return lhs;
}

std::vector<Rational> separating_map(const FinitePoset& poset, Element s, Element t) {
  if (poset.leq(s, t))
    throw PreconditionError("separating_map: requires s ≰ t, but " + poset.name(s) + " ≤ " + poset.name(t));
  std::vector<Rational> phi;
  for (auto r : poset.elements()) phi.emplace_back(poset.leq(r, t) ? 0 : 1);
  return phi;
}

std::optional<std::string> check_separating_map(const FinitePoset& poset,
                                                const std::vector<Rational>& phi, Element s,
                                                Element t) {
  if (phi.size() != poset.size()) return "map has the wrong number of values";
  for (const auto& v : phi)
    if (v < 0 || v > 1) return "value outside [0, 1]";
  if (phi[s.index] != 1) return "phi(s) != 1";
  if (phi[t.index] != 0) return "phi(t) != 0";
  if (poset.size() > kSubsetBudget) throw BudgetError("separating map check is limited to 20 elements");

  for (std::uint64_t bits = 0; bits <= poset.all().bits(); ++bits) {
    const ElementSet set(bits);
    if (const auto sup = poset.supremum(set)) {
      Rational best = 0;
      set.for_each([&](std::size_t e) { best = std::max(best, phi[e]); });
      if (phi[sup->index] != best)
        return "supremum of mask " + std::to_string(bits) + " is not preserved";
    }
  }
  for (auto f : filters(poset)) {
    const auto inf = poset.infimum(f);
    if (!inf) continue;
    Rational best = 1;
    f.for_each([&](std::size_t e) { best = std::min(best, phi[e]); });
    if (phi[inf->index] != best) return "infimum of filter mask " + std::to_string(f.bits()) + " is not preserved";
  }
  return std::nullopt;
}

} // namespace maxitive::order
