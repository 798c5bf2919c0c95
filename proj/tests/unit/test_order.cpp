#include "doctest.h"

#include "maxitive/errors.hpp"
#include "maxitive/order/domain.hpp"
#include "maxitive/order/enumerate.hpp"
#include "maxitive/order/lattice.hpp"

#include <algorithm>

using namespace maxitive;
using namespace maxitive::order;

static_assert(ValueLattice<FinitePoset>);
static_assert(EnumerableLattice<FinitePoset>);
static_assert(ValueLattice<ExtRealLattice>);

namespace {

Element el(const FinitePoset& p, const char* name) { return p.parse(name); }

ElementSet set_of(const FinitePoset& p, std::initializer_list<const char*> names) {
  ElementSet s;
  for (auto n : names) s |= ElementSet::singleton(p.parse(n).index);
  return s;
}

// Independent oracle: filters straight from the definition using only leq.
bool oracle_is_filter(const FinitePoset& p, std::uint64_t bits) {
  if (bits == 0) return false;
  const auto n = p.size();
  auto in = [&](std::size_t i) { return (bits >> i) & 1U; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (in(a) && p.leq(Element(a), Element(b)) && !in(b)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!in(a) || !in(b)) continue;
      bool lower = false;
      for (std::size_t c = 0; c < n; ++c)
        lower = lower || (in(c) && p.leq(Element(c), Element(a)) && p.leq(Element(c), Element(b)));
      if (!lower) return false;
    }
  return true;
}

std::optional<std::size_t> oracle_inf(const FinitePoset& p, std::uint64_t bits) {
  const auto n = p.size();
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      if ((bits >> a) & 1U) ok = ok && p.leq(Element(c), Element(a));
    if (ok) lower.push_back(c);
  }
  for (auto g : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t c) { return p.leq(Element(c), Element(g)); }))
      return g;
  return std::nullopt;
}

bool oracle_way_above(const FinitePoset& p, std::size_t s, std::size_t r) {
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << p.size()); ++bits) {
    if (!oracle_is_filter(p, bits)) continue;
    const auto inf = oracle_inf(p, bits);
    if (inf && p.leq(Element(*inf), Element(r)) && !((bits >> s) & 1U)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("is_filter on small lattices") {
  const auto chain = FinitePoset::chain(3);
  const auto m2 = diamond_m2();
  CHECK(is_filter(chain, set_of(chain, {"1", "2"})));
  CHECK_FALSE(is_filter(m2, set_of(m2, {"a", "b", "1"})));
  CHECK(is_filter(m2, set_of(m2, {"1"})));
  CHECK_FALSE(is_filter(m2, ElementSet{}));
  CHECK_THROWS_AS(is_filter(chain, ElementSet::singleton(5)), InputError);
}

TEST_CASE("way_above fixtures") {
  const auto chain = FinitePoset::chain(3);
  CHECK(chain.way_above(el(chain, "2"), el(chain, "1")));
  CHECK(way_above_by_filters(chain, el(chain, "2"), el(chain, "1")));
  CHECK_FALSE(chain.way_above(el(chain, "1"), el(chain, "2")));
  CHECK_FALSE(way_above_by_filters(chain, el(chain, "1"), el(chain, "2")));

  const ExtRealLattice ext;
  CHECK(ext.way_above(ExtReal::infinity(), ExtReal(5)));
  CHECK_FALSE(ext.way_above(ExtReal(0), ExtReal(0)));
  CHECK(ext.way_above(ExtReal::infinity(), ExtReal::infinity()));
  // Witness: the filter (0, ∞] has infimum 0 and excludes 0.
  const IntervalFilter witness{ExtReal(0), true};
  CHECK(witness.infimum() <= ExtReal(0));
  CHECK_FALSE(witness.contains(ExtReal(0)));
}

TEST_CASE("way_above agrees with the filter oracle on every labeled poset up to 4 elements") {
  std::size_t posets = 0;
  std::size_t disagreements = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for_each_labeled_poset(n, [&](const FinitePoset& p) {
      ++posets;
      for (auto s : p.elements())
        for (auto r : p.elements()) {
          const bool fast = p.way_above(s, r);
          if (fast != oracle_way_above(p, s.index, r.index)) ++disagreements;
          if (fast != way_above_by_filters(p, s, r)) ++disagreements;
          if (fast && !p.leq(r, s)) ++disagreements;
        }
    });
  CHECK(posets == 1 + 1 + 3 + 19 + 219);
  CHECK(disagreements == 0);
}

TEST_CASE("labeled poset counts") {
  const std::size_t expected[] = {1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_labeled_poset(n, [&](const FinitePoset&) { ++count; });
    CHECK(count == expected[n]);
  }
  CHECK_THROWS_AS(for_each_labeled_poset(6, [](const FinitePoset&) {}), BudgetError);
}

TEST_CASE("lattices up to isomorphism") {
  CHECK(lattices_up_to_iso(1).size() == 1);
  CHECK(lattices_up_to_iso(3).size() == 1);
  CHECK(lattices_up_to_iso(4).size() == 2);
  CHECK(lattices_up_to_iso(5).size() == 5);
  for (const auto& l : lattices_up_to_iso(5)) CHECK(l.bottom() == Element(0));
}

TEST_CASE("check_domain") {
  const auto m2 = check_domain(diamond_m2());
  CHECK(m2.continuous);
  CHECK(m2.filtered_complete);
  CHECK(m2.interpolation);
  CHECK(m2.distributive);
  CHECK(m2.conditionally_complete);
  CHECK(m2.supports_singular_part());

  const auto ext = check_domain(ExtRealLattice{});
  CHECK(ext.continuous);
  CHECK(ext.filtered_complete);
  CHECK(ext.interpolation);
  CHECK(ext.distributive);
  CHECK(ext.conditionally_complete);

  const auto n5 = check_domain(pentagon_n5());
  CHECK(n5.continuous);
  CHECK_FALSE(n5.distributive);
  CHECK(n5.supports_regular_part());
  CHECK_FALSE(n5.supports_singular_part());

  for (std::size_t n = 1; n <= 4; ++n)
    for_each_labeled_poset(n, [](const FinitePoset& p) {
      const auto r = check_domain(p);
      CHECK(r.continuous);
      CHECK(r.filtered_complete);
      CHECK(r.interpolation);
    });
}

TEST_CASE("join_continuity fixtures") {
  const auto chain = FinitePoset::chain(3);
  CHECK(join_continuity(chain, el(chain, "1"), set_of(chain, {"2"})) == el(chain, "2"));
  const auto m2 = diamond_m2();
  CHECK(join_continuity(m2, el(m2, "a"), set_of(m2, {"b", "1"})) == el(m2, "1"));
  CHECK_THROWS_AS(join_continuity(m2, el(m2, "a"), set_of(m2, {"a", "b"})), InputError);

  const ExtRealLattice ext;
  CHECK(join_continuity(ext, ExtReal(3), IntervalFilter{ExtReal(5), true}) == ExtReal(5));
  CHECK(join_continuity(ext, ExtReal(7), IntervalFilter{ExtReal(5), true}) == ExtReal(7));
}

TEST_CASE("join_continuity holds on every lattice up to 5 elements") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& l : lattices_up_to_iso(n))
      for (auto f : filters(l))
        for (auto t : l.elements()) CHECK_NOTHROW(join_continuity(l, t, f));

  const ExtRealLattice ext;
  const std::vector<ExtReal> grid{ExtReal(0), ExtReal(Rational(1, 3)), ExtReal(1), ExtReal(Rational(5, 2)),
                                  ExtReal(4), ExtReal::infinity()};
  for (const auto& t : grid)
    for (const auto& a : grid) {
      // Oracle: t ⊕ ⋀F = max(t, a) regardless of whether the ray is open.
      CHECK(join_continuity(ext, t, IntervalFilter{a, false}) == std::max(t, a));
      if (!a.is_infinite()) CHECK(join_continuity(ext, t, IntervalFilter{a, true}) == std::max(t, a));
    }
}

TEST_CASE("separating_map fixtures") {
  const auto chain = FinitePoset::chain(3);
  const auto phi = separating_map(chain, el(chain, "2"), el(chain, "1"));
  CHECK(phi == std::vector<Rational>{0, 0, 1});
  CHECK_THROWS_AS(separating_map(chain, el(chain, "1"), el(chain, "2")), PreconditionError);

  const auto m2 = diamond_m2();
  const auto psi = separating_map(m2, el(m2, "a"), el(m2, "b"));
  CHECK(psi[el(m2, "0").index] == 0);
  CHECK(psi[el(m2, "b").index] == 0);
  CHECK(psi[el(m2, "a").index] == 1);
  CHECK(psi[el(m2, "1").index] == 1);
}

TEST_CASE("separating maps separate and preserve order structure on lattices up to 5 elements") {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& l : lattices_up_to_iso(n))
      for (auto s : l.elements())
        for (auto t : l.elements()) {
          if (l.leq(s, t)) continue;
          ++pairs;
          const auto failure = check_separating_map(l, separating_map(l, s, t), s, t);
          CHECK_MESSAGE(!failure, *failure);
        }
  CHECK(pairs > 0);

  // A map that does not preserve the supremum of {a, b} in M2 is rejected.
  const auto m2 = diamond_m2();
  std::vector<Rational> bad(4, 0);
  bad[el(m2, "a").index] = 1;
  CHECK(check_separating_map(m2, bad, el(m2, "a"), el(m2, "b")).has_value());
}

TEST_CASE("ExtReal parsing and formatting") {
  CHECK(ExtReal::parse("inf").is_infinite());
  CHECK(ExtReal::parse("3/6") == ExtReal(Rational(1, 2)));
  CHECK(ExtReal::parse("3/6").to_string() == "1/2");
  CHECK_THROWS_AS(ExtReal::parse("-1"), InputError);
  CHECK_THROWS_AS(ExtReal::parse("x"), InputError);
  CHECK_THROWS_AS(ExtReal::parse("1/0"), InputError);
  const ExtRealLattice ext;
  CHECK(ext.supremum(std::span<const ExtReal>{}) == ExtReal(0));
}
