// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "maxitive/measure/classify.hpp"
#include "maxitive/order/extreal.hpp"
#include "maxitive/order/finite_poset.hpp"
#include "maxitive/space/enumerate.hpp"

#include <random>

using namespace maxitive;
using measure::Flag;
using order::Element;
using order::FinitePoset;
using Measure = measure::FiniteMeasure<FinitePoset>;
using Tail = measure::TailMeasure<FinitePoset>;
using countable::FinCofinSet;

namespace {

space::FiniteSpace sierpinski() {
  return space::FiniteSpace::generate({"a", "b"}, {PointSet::singleton(1)});
}

Element e(std::size_t i) { return Element(i); }

Measure mu(const space::FiniteSpace& s, std::vector<std::size_t> density, std::size_t lattice = 3) {
  std::vector<Element> d;
  for (auto v : density) d.push_back(e(v));
  return Measure::from_density(measure::FiniteContext::make(s), FinitePoset::chain(lattice), d);
}

Tail tail(std::map<countable::Natural, std::size_t> exc, std::size_t c, std::size_t s, std::size_t lattice = 3) {
  countable::TailDensity<Element> d;
  for (auto [x, v] : exc) d.exceptions[x] = e(v);
  d.tail = e(c);
  d.infinite_mass = e(s);
  return Tail(FinitePoset::chain(lattice), d);
}

// ν on a point set, from the point densities of a chain-valued measure.
std::size_t oracle_value(const Measure& m, PointSet s) {
  std::size_t best = 0;
  s.for_each([&](std::size_t x) { best = std::max<std::size_t>(best, m.density()[m.context().borel().atom_of(x)].index); });
  return best;
}

// ν⁺ from the space's open sets.
std::size_t oracle_plus(const Measure& m, PointSet s) {
  std::size_t best = 1000;
  for (auto g : m.context().space().opens())
    if (s.subset_of(g)) best = std::min(best, oracle_value(m, g));
  return best;
}

void for_each_density(std::size_t atoms, std::size_t lattice, const std::function<void(std::vector<std::size_t>)>& f) {
  std::vector<std::size_t> d(atoms, 0);
  while (true) {
    f(d);
    std::size_t i = 0;
    while (i < atoms && ++d[i] == lattice) d[i++] = 0;
    if (i == atoms) return;
  }
}

} // namespace

TEST_CASE("from_density fixtures") {
  const auto m1 = mu(sierpinski(), {0, 1});
  CHECK(m1(AtomSet(3)) == e(1));
  CHECK(m1(AtomSet(1)) == e(0));
  CHECK(mu(sierpinski(), {0, 0}).is_zero());

  const auto indisc = mu(space::FiniteSpace::indiscrete(2), {2});
  CHECK(indisc.context().atom_count() == 1);
  CHECK(indisc(AtomSet(1)) == e(2));
  CHECK(indisc(AtomSet(0)) == e(0));

  CHECK_THROWS_AS(mu(sierpinski(), {0}), InputError);
  CHECK_THROWS_AS(mu(sierpinski(), {0, 5}), InputError);
}

TEST_CASE("from_density needs suprema") {
  // 0 < x, 0 < y with no join of x and y.
  const auto vee = FinitePoset::from_pairs({"0", "x", "y"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});
  const auto ctx = measure::FiniteContext::make(space::FiniteSpace::discrete(2));
  CHECK_THROWS_AS(Measure::from_density(ctx, vee, {e(1), e(2)}), ValidationError);
  CHECK_NOTHROW(Measure::from_density(ctx, vee, {e(1), e(0)}));
}

TEST_CASE("from_table fixtures") {
  const auto ctx = measure::FiniteContext::make(sierpinski());
  const auto chain = FinitePoset::chain(3);
  const auto m1 = Measure::from_table(ctx, chain, {{AtomSet(0), e(0)}, {AtomSet(1), e(0)}, {AtomSet(2), e(1)}, {AtomSet(3), e(1)}});
  CHECK(m1.density() == std::vector<Element>{e(0), e(1)});

  try {
    Measure::from_table(ctx, chain, {{AtomSet(0), e(0)}, {AtomSet(1), e(0)}, {AtomSet(2), e(0)}, {AtomSet(3), e(1)}});
    FAIL("expected a validation error");
  } catch (const ValidationError& err) {
    CHECK(err.witness() == "({a}, {b})");
  }
  CHECK_THROWS_AS(Measure::from_table(ctx, chain, {{AtomSet(0), e(1)}, {AtomSet(1), e(1)}, {AtomSet(2), e(1)}, {AtomSet(3), e(1)}}),
                  ValidationError);
  CHECK_THROWS_AS(Measure::from_table(ctx, chain, {{AtomSet(0), e(0)}, {AtomSet(1), e(0)}}), InputError);

  const auto indisc = measure::FiniteContext::make(space::FiniteSpace::indiscrete(2));
  const auto m = Measure::from_table(indisc, chain, {{AtomSet(0), e(0)}, {AtomSet(1), e(2)}});
  CHECK(m.density() == std::vector<Element>{e(2)});
}

TEST_CASE("nu_plus and cplus fixtures") {
  const auto m1 = mu(sierpinski(), {0, 1});
  const auto m2 = mu(sierpinski(), {1, 0});
  CHECK(m1.nu_plus(AtomSet(1)) == e(1));
  CHECK(m2.nu_plus(AtomSet(1)) == e(1));
  CHECK(m2(AtomSet(1)) == e(1));
  CHECK(m1.nu_plus(AtomSet(0)) == e(0));
  CHECK(m1.cplus() == std::vector<Element>{e(1), e(1)});
  const auto r1 = measure::classify(m1);
  CHECK(r1[Flag::usc_cplus]);
}

TEST_CASE("classification fixtures on the Sierpinski space") {
  const auto r1 = measure::classify(mu(sierpinski(), {0, 1}));
  CHECK_FALSE(r1[Flag::inner]);
  CHECK_FALSE(r1[Flag::outer]);
  CHECK(r1[Flag::weak_inner]);
  CHECK_FALSE(r1[Flag::weak_outer]);
  CHECK_FALSE(r1[Flag::saturated]);
  CHECK(r1[Flag::q_smooth]);
  CHECK(r1[Flag::tight]);
  CHECK(r1[Flag::sigma_maxitive]);
  CHECK(r1[Flag::completely_maxitive]);
  CHECK(r1[Flag::continuous_from_above]);
  CHECK(r1[Flag::optimal]);
  CHECK_FALSE(r1[Flag::regular]);
  CHECK(r1.degenerate(Flag::tight));
  CHECK_FALSE(r1.degenerate(Flag::outer));

  const auto r2 = measure::classify(mu(sierpinski(), {1, 0}));
  for (std::size_t i = 0; i < measure::kFlagCount; ++i) CHECK(r2[static_cast<Flag>(i)]);
}

TEST_CASE("extended-real measures") {
  using order::ExtReal;
  const auto ctx = measure::FiniteContext::make(sierpinski());
  const order::ExtRealLattice lat;
  const auto m = measure::FiniteMeasure<order::ExtRealLattice>::from_density(
      ctx, lat, {ExtReal(order::Rational(1, 2)), ExtReal::infinity()});
  CHECK(m.nu_plus(AtomSet(1)) == ExtReal::infinity());
  const auto r = measure::classify(m);
  CHECK_FALSE(r[Flag::outer]);
  CHECK(r[Flag::weak_inner]);

  const auto m2 = measure::FiniteMeasure<order::ExtRealLattice>::from_density(ctx, lat, {ExtReal(3), ExtReal(1)});
  CHECK(measure::classify(m2)[Flag::regular]);
}

TEST_CASE("classification against independent oracles, all spaces n <= 3") {
  std::size_t instances = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& s : space::enumerate_topologies(n)) {
      const auto ctx = measure::FiniteContext::make(s);
      for (std::size_t size = 1; size <= 3; ++size)
        for_each_density(ctx->atom_count(), size, [&](std::vector<std::size_t> d) {
          std::vector<Element> dv;
          for (auto v : d) dv.push_back(e(v));
          const auto m = Measure::from_density(ctx, FinitePoset::chain(size), dv);
          const auto r = measure::classify(m);
          ++instances;

          bool outer = true;
          for (std::uint64_t bits = 0; bits < ctx->borel_count(); ++bits) {
            const auto pts = ctx->borel().to_points(AtomSet(bits));
            REQUIRE(m(AtomSet(bits)).index == oracle_value(m, pts));
            REQUIRE(m.nu_plus(AtomSet(bits)).index == oracle_plus(m, pts));
            if (oracle_value(m, pts) != oracle_plus(m, pts)) outer = false;
          }
          CHECK(r[Flag::outer] == outer);
          CHECK(r[Flag::regular] == (r[Flag::inner] && r[Flag::outer]));
          // ν⁺ is an outer-continuous maxitive measure.
          CHECK(measure::classify(m.outer_regularization())[Flag::outer]);
          // Flags in one equivalence class agree.
          for (std::size_t i = 0; i < measure::kFlagCount; ++i)
            for (std::size_t j = 0; j < measure::kFlagCount; ++j) {
              const auto fi = static_cast<Flag>(i), fj = static_cast<Flag>(j);
              if (measure::equivalence_class(measure::Backend::finite, fi) ==
                  measure::equivalence_class(measure::Backend::finite, fj))
                CHECK(r[fi] == r[fj]);
            }
        });
    }
  CHECK(instances > 0);
}

TEST_CASE("weak inner-continuity on reduced families survives random families") {
  std::mt19937_64 rng(5);
  for (const auto& s : space::enumerate_topologies(4)) {
    const auto ctx = measure::FiniteContext::make(s);
    if (ctx->open_families().exhaustive) continue;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Element> d;
      for (std::size_t a = 0; a < ctx->atom_count(); ++a) d.push_back(e(rng() % 3));
      const auto m = Measure::from_density(ctx, FinitePoset::chain(3), d);
      if (!measure::classify(m)[Flag::weak_inner]) continue;
      for (int f = 0; f < 20; ++f) {
        AtomSet un;
        std::vector<Element> values;
        for (auto g : ctx->opens())
          if (rng() % 2) {
            un |= g;
            values.push_back(m(g));
          }
        CHECK(m.lattice().supremum(values) == m(un));
      }
    }
  }
}

TEST_CASE("context budget") {
  CHECK_THROWS_AS(measure::FiniteContext(space::FiniteSpace::discrete(9)), BudgetError);
}

TEST_CASE("tail measure evaluation") {
  const auto eta = tail({}, 0, 1, 2);
  CHECK(eta(FinCofinSet::all()) == e(1));
  CHECK(eta(FinCofinSet::finite({5})) == e(0));
  CHECK(eta(FinCofinSet::empty()) == e(0));

  const auto theta = tail({{0, 1}}, 0, 0, 2);
  CHECK(theta(FinCofinSet::finite({0, 3})) == e(1));
  CHECK(theta(FinCofinSet::cofinite({0})) == e(0));
  CHECK(theta(FinCofinSet::empty()) == e(0));

  const auto rho = tail({{0, 2}}, 1, 2);
  CHECK(rho(FinCofinSet::finite({4})) == e(1));
  CHECK(rho(FinCofinSet::cofinite({0})) == e(2));
  CHECK(rho.nu_plus(FinCofinSet::finite({0, 7})) == e(2));
}

TEST_CASE("tail measure classification fixtures") {
  const auto eta = measure::classify(tail({}, 0, 1, 2));
  CHECK_FALSE(eta[Flag::sigma_maxitive]);
  CHECK_FALSE(eta[Flag::tight]);
  CHECK(eta[Flag::outer]);
  CHECK_FALSE(eta[Flag::inner]);
  CHECK_FALSE(eta[Flag::weak_inner]);
  CHECK(eta[Flag::weak_outer]);
  CHECK(eta[Flag::saturated]);
  CHECK_FALSE(eta[Flag::f_smooth]);
  CHECK_FALSE(eta[Flag::continuous_from_above]);
  CHECK_FALSE(eta[Flag::optimal]);
  CHECK(eta[Flag::upper_compact_cplus]);

  const auto theta = measure::classify(tail({{0, 1}}, 0, 0, 2));
  for (std::size_t i = 0; i < measure::kFlagCount; ++i) CHECK(theta[static_cast<Flag>(i)]);

  const auto flat = measure::classify(tail({}, 1, 0, 2));
  CHECK(flat[Flag::sigma_maxitive]);
  CHECK_FALSE(flat[Flag::tight]);
  CHECK_FALSE(flat[Flag::f_smooth]);
  CHECK(flat[Flag::regular]);
  CHECK_FALSE(flat[Flag::upper_compact_cplus]);
}

TEST_CASE("tail grid: closed forms against direct evaluation") {
  for (std::size_t size = 1; size <= 4; ++size)
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        for (std::size_t c = 0; c < size; ++c)
          for (std::size_t s = 0; s < size; ++s) {
            const auto m = tail({{0, a}, {1, b}}, c, s, size);
            const auto r = measure::classify(m);
            // Every infinite set is the union of its singletons; ℕ ∖ {0, 1}
            // is the one that avoids the exceptions.
            const bool sigma_witness = std::max({a, b, c}) == m(FinCofinSet::all()).index &&
                                       c == m(FinCofinSet::cofinite({0, 1})).index;
            // Tails ℕ ∖ [0, n) decrease to ∅.
            const bool tail_witness = m(FinCofinSet::cofinite({0, 1, 2, 3, 4})).index == 0;
            CHECK(r[Flag::sigma_maxitive] == sigma_witness);
            CHECK(r[Flag::continuous_from_above] == tail_witness);
            CHECK(r[Flag::tight] == tail_witness);
            if (r[Flag::f_smooth] && r[Flag::sigma_maxitive]) CHECK(r.all(Flag::tight, Flag::regular));
          }
}

TEST_CASE("tail measures reject missing suprema") {
  const auto vee = FinitePoset::from_pairs({"0", "x", "y"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});
  countable::TailDensity<Element> d;
  d.exceptions[0] = e(1);
  d.tail = e(2);
  CHECK_THROWS_AS(Tail(vee, d), ValidationError);
}
