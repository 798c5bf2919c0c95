// SPDX-License-Identifier: Apache-2.0

#include "internal.hpp"

#include "maxitive/order/domain.hpp"
#include "maxitive/space/reflection.hpp"

#include <set>

namespace maxitive::harness::detail {

namespace {

using Flags = std::initializer_list<Flag>;

std::string conj(Flags fs) {
  std::string out;
  for (auto f : fs) out += (out.empty() ? "" : " ∧ ") + std::string(measure::flag_name(f));
  return out;
}

template <class F>
bool holds(F& f, Flags fs) {
  for (auto x : fs)
    if (!f[x]) return false;
  return true;
}

/// hyp ⟹ concl on one instance. The instance exercises the implication when
/// the hypothesis holds and some conclusion flag is not forced by the
/// backend.
template <class F>
void implies(Outcome& o, F& f, Flags hyp, Flags concl) {
  if (!holds(f, hyp)) return;
  for (auto c : concl)
    if (!measure::forced_by_backend(F::backend, c)) o.exercised = true;
  std::string failed;
  for (auto c : concl)
    if (!f[c]) failed += (failed.empty() ? "" : ", ") + std::string(measure::flag_name(c));
  if (!failed.empty()) o.failures.push_back(conj(hyp) + " ⟹ " + conj(concl) + " fails: " + failed + " false");
}

template <class F>
void equivalent(Outcome& o, F& f, Flags a, Flags b) {
  implies(o, f, a, b);
  implies(o, f, b, a);
}

template <class Check>
MeasureCheck on_measures(Check check) {
  return [check](AnyFacts& any) { return std::visit([&](auto& f) { return check(f); }, any); };
}

template <class F, class A, class B>
bool same_on_sets(F& f, const A& a, const B& b) {
  for (const auto& s : f.sets())
    if (!(a(s) == b(s))) return false;
  return true;
}

// ---------------------------------------------------------------- spaces

Outcome hofmann_mislove(const space::FiniteSpace& s) {
  Outcome o;
  o.exercised = true;
  const auto r = space::hofmann_mislove_check(s);
  o.failures = r.failures;
  return o;
}

Outcome t0_reflection(const space::FiniteSpace& s) {
  Outcome o;
  o.exercised = true;
  const auto refl = space::t0_reflection(s);
  const space::BorelStructure borel(s);
  const space::BorelStructure quotient(refl.quotient);
  o.require(borel.borel_sets().size() == quotient.borel_sets().size(), "Borel families of E and E₀ differ in size");
  for (auto b : borel.borel_sets()) {
    const auto pts = borel.to_points(b);
    o.require(refl.preimage(refl.image(pts)) == pts, "π₀⁻¹(π₀(B)) ≠ B for B = " + s.format(pts));
    o.require(quotient.is_borel(refl.image(pts)), "π₀(B) is not Borel for B = " + s.format(pts));
  }
  const auto f = space::check_factorization(s, refl, 3);
  for (const auto& msg : f.failures) o.failures.push_back(msg);
  return o;
}

/// Generates the σ-algebra from opens and compact saturated sets by closing
/// under complement and union, independently of BorelStructure.
Outcome tilde(const space::FiniteSpace& s) {
  Outcome o;
  o.exercised = !s.is_t0();
  std::set<std::uint64_t> family;
  for (auto g : s.opens()) family.insert(g.bits());
  for (auto q : s.compact_saturated_family()) family.insert(q.bits());
  const auto all = s.all().bits();
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> current(family.begin(), family.end());
    for (auto a : current) {
      grew |= family.insert(all & ~a).second;
      for (auto b : current) grew |= family.insert(a | b).second;
    }
  }
  for (auto bits : family) {
    const PointSet b(bits);
    b.for_each([&](std::size_t x) {
      for (std::size_t y = 0; y < s.size(); ++y)
        if (s.closure(PointSet::singleton(y)) == s.closure(PointSet::singleton(x)))
          o.require(b.contains(y), "x ∈ B but [x] ⊄ B for B = " + s.format(b) + ", x = " + s.point_name(x));
    });
  }
  o.require(family.size() == space::BorelStructure(s).borel_sets().size(), "generated σ-algebra differs from the atom count");
  return o;
}

// -------------------------------------------------------------- lattices

Outcome way_above(const FinitePoset& p) {
  Outcome o;
  o.exercised = true;
  for (auto s : p.elements())
    for (auto r : p.elements())
      if (p.way_above(s, r) != order::way_above_by_filters(p, s, r))
        o.failures.push_back("fast rule and filter definition disagree on " + p.name(s) + " ≫ " + p.name(r));
  return o;
}

Outcome interpolation(const FinitePoset& p) {
  Outcome o;
  const auto report = order::check_domain(p);
  if (!report.continuous) return Outcome::skip();
  bool holds_everywhere = true;
  for (auto s : p.elements())
    for (auto r : p.elements()) {
      if (!order::way_above_by_filters(p, s, r)) continue;
      if (!(s == r)) o.exercised = true;
      bool found = false;
      for (auto t : p.elements())
        if (order::way_above_by_filters(p, s, t) && order::way_above_by_filters(p, t, r)) found = true;
      if (!found) {
        holds_everywhere = false;
        o.failures.push_back("no t with " + p.name(s) + " ≫ t ≫ " + p.name(r));
      }
    }
  o.require(report.interpolation == holds_everywhere, "domain report disagrees on interpolation");
  return o;
}

Outcome join_continuity(const FinitePoset& p) {
  Outcome o;
  o.exercised = true;
  for (auto f : order::filters(p)) {
    const auto inf = p.infimum(f);
    if (!inf) continue;
    for (auto t : p.elements()) {
      std::vector<Element> joined;
      bool all_exist = true;
      f.for_each([&](std::size_t i) {
        const auto j = p.join(t, Element(i));
        if (j) joined.push_back(*j);
        else all_exist = false;
      });
      if (!all_exist) continue;
      const auto lhs = p.join(t, *inf);
      const auto rhs = p.infimum(joined);
      if (!lhs || !rhs || !(*lhs == *rhs)) o.failures.push_back("t ⊕ ⋀F ≠ ⋀(t ⊕ F) for t = " + p.name(t));
    }
  }
  return o;
}

Outcome separation(const FinitePoset& p) {
  Outcome o;
  for (auto s : p.elements())
    for (auto t : p.elements()) {
      if (p.leq(s, t)) continue;
      o.exercised = true;
      if (const auto failure = order::check_separating_map(p, order::separating_map(p, s, t), s, t))
        o.failures.push_back(p.name(s) + " ≰ " + p.name(t) + ": " + *failure);
    }
  return o;
}

// -------------------------------------------------------------- measures

template <class F>
Outcome nu_plus_case(F& f) {
  Outcome o;
  const auto& lat = f.m.lattice();
  for (const auto& b : f.sets()) o.require(lat.leq(f.m(b), f.m.nu_plus(b)), "ν⁺ < ν on " + f.format(b));
  if constexpr (F::backend == Backend::finite) {
    o.exercised = true;
    const auto plus = f.m.outer_regularization();
    o.require(measure::classify(plus)[Flag::outer], "ν⁺ is not outer-continuous");
    o.require(plus.outer_regularization().table() == plus.table(), "(ν⁺)⁺ ≠ ν⁺");
  } else {
    // Every set is open, so ν⁺ = ν.
    for (const auto& b : f.sets()) o.require(f.m.nu_plus(b) == f.m(b), "ν⁺ ≠ ν on " + f.format(b));
  }
  return o;
}

template <class F>
Outcome locconv(F& f) {
  Outcome o;
  implies(o, f, {Flag::inner}, {Flag::weak_inner});
  implies(o, f, {Flag::outer}, {Flag::weak_outer});
  return o;
}

/// Weak inner continuity against ν(⋃𝒪) = ⊕ν(𝒪) over families of opens.
template <class F>
Outcome wic(F& f) {
  Outcome o;
  const auto& lat = f.m.lattice();
  bool union_identity = true;
  if constexpr (F::backend == Backend::finite) {
    const auto& ctx = f.m.context();
    for (const auto& fam : ctx.open_families().families) {
      std::vector<Element> values;
      for (auto i : fam.members) values.push_back(f.m(ctx.opens()[i]));
      const auto sup = lat.supremum(values);
      if (!sup || !(*sup == f.m(fam.combined))) union_identity = false;
    }
  } else {
    // Finite families are covered by maxitivity; an infinite open set is
    // the union of its singletons.
    const auto& d = f.m.density();
    for (const auto& b : f.sets()) {
      if (!b.is_infinite()) continue;
      std::vector<Element> values{d.tail};
      for (const auto& [x, v] : d.exceptions)
        if (b.contains(x)) values.push_back(v);
      const auto sup = lat.supremum(values);
      if (!sup || !(*sup == f.m(b))) union_identity = false;
    }
  }
  if (!measure::forced_by_backend(F::backend, Flag::weak_inner)) o.exercised = true;
  o.require(union_identity == f[Flag::weak_inner], "weak_inner disagrees with the union identity over open families");
  return o;
}

template <class F>
Outcome reg0_lemma(F& f) {
  Outcome o;
  const auto& lat = f.m.lattice();
  const auto classes = f.classes();
  for (const auto& k : f.sets()) {
    if (!f.compact(k)) continue;
    std::vector<Element> values;
    for (const auto& c : classes)
      if (c.subset_of(k)) values.push_back(f.m.nu_plus(c));
    const auto sup = lat.supremum(values);
    o.require(sup && *sup == f.m.nu_plus(k), "ν⁺(K) ≠ ⊕ ν⁺([x]) for K = " + f.format(k));
  }
  bool agree = true;
  for (const auto& c : classes)
    if (!(f.m(c) == f.m.nu_plus(c))) agree = false;
  o.require(agree == f[Flag::weak_outer], "weak_outer disagrees with ν([x]) = ν⁺([x])");
  o.exercised = F::backend == Backend::finite;
  return o;
}

template <class F>
Outcome loccomp(F& f) {
  Outcome o;
  implies(o, f, {Flag::weak_outer, Flag::weak_inner}, {Flag::regular, Flag::completely_maxitive});
  return o;
}

template <class F>
Outcome second_countable(F& f) {
  Outcome o;
  implies(o, f, {Flag::weak_outer, Flag::sigma_maxitive}, {Flag::regular});
  return o;
}

template <class F>
Outcome prop_k(F& f) {
  Outcome o;
  implies(o, f, {Flag::weak_outer}, {Flag::q_smooth, Flag::saturated});
  // Both backends are locally compact and quasisober.
  implies(o, f, {Flag::q_smooth, Flag::saturated}, {Flag::weak_outer});
  return o;
}

template <class F>
Outcome prop_f(F& f) {
  Outcome o;
  implies(o, f, {Flag::tight, Flag::weak_outer}, {Flag::q_smooth, Flag::f_smooth, Flag::saturated});
  implies(o, f, {Flag::q_smooth, Flag::f_smooth, Flag::saturated}, {Flag::tight, Flag::weak_outer});
  return o;
}

template <class F>
Outcome tensioneq(F& f) {
  Outcome o;
  implies(o, f, {Flag::tight, Flag::outer}, {Flag::upper_compact_cplus});
  implies(o, f, {Flag::weak_inner, Flag::upper_compact_cplus}, {Flag::tight});
  return o;
}

template <class F>
Outcome reg_theorem(F& f) {
  Outcome o;
  const Flags i1{Flag::regular}, i2{Flag::usc_density_exists}, i3{Flag::outer, Flag::completely_maxitive},
      i4{Flag::weak_outer, Flag::weak_inner}, i5{Flag::weak_outer, Flag::sigma_maxitive}, i6{Flag::weak_outer},
      i7{Flag::q_smooth, Flag::saturated}, i8{Flag::q_smooth, Flag::weak_inner, Flag::saturated},
      i9{Flag::q_smooth, Flag::sigma_maxitive, Flag::saturated};
  equivalent(o, f, {Flag::cardinal_density_exists}, {Flag::completely_maxitive});
  equivalent(o, f, i1, i2);
  equivalent(o, f, i2, i3);
  equivalent(o, f, i3, i4);
  implies(o, f, i4, i5);
  implies(o, f, i5, i6);
  implies(o, f, i6, i7);
  implies(o, f, i8, i7);
  // Second countable: every backend.
  implies(o, f, i5, i1);
  // Locally compact: every backend.
  implies(o, f, i8, i1);
  implies(o, f, i1, i8);
  implies(o, f, i7, i6);
  // σ-compact metrizable and locally compact Polish: discrete backends.
  if (f.metrizable()) equivalent(o, f, i9, i1);
  return o;
}

template <class F>
Outcome regtight_theorem(F& f) {
  Outcome o;
  const Flags t1{Flag::tight, Flag::regular}, t2{Flag::upper_compact_usc_density_exists},
      t3{Flag::tight, Flag::weak_outer}, t4{Flag::q_smooth, Flag::f_smooth, Flag::saturated},
      t5{Flag::q_smooth, Flag::f_smooth, Flag::weak_inner, Flag::saturated},
      t6{Flag::q_smooth, Flag::f_smooth, Flag::sigma_maxitive, Flag::saturated};
  equivalent(o, f, t1, t2);
  implies(o, f, t2, t3);
  implies(o, f, t3, t4);
  implies(o, f, t5, t4);
  // Locally compact: every backend.
  equivalent(o, f, t5, t1);
  implies(o, f, t4, t3);
  // Polish: discrete backends.
  if (f.metrizable()) equivalent(o, f, t6, t1);
  return o;
}

template <class F>
Outcome optimal_cfa(F& f) {
  Outcome o;
  implies(o, f, {Flag::continuous_from_above}, {Flag::sigma_maxitive});
  equivalent(o, f, {Flag::optimal}, {Flag::continuous_from_above});
  return o;
}

template <class F>
Outcome trpolish(F& f) {
  if (!f.metrizable()) return Outcome::skip();
  Outcome o;
  implies(o, f, {Flag::f_smooth, Flag::sigma_maxitive}, {Flag::tight, Flag::regular});
  return o;
}

template <class F>
Outcome sigcomp(F& f) {
  if (!f.metrizable()) return Outcome::skip();
  Outcome o;
  implies(o, f, {Flag::k_smooth, Flag::sigma_maxitive}, {Flag::regular});
  return o;
}

template <class F>
Outcome sclc(F& f) {
  if (!f.metrizable()) return Outcome::skip();
  Outcome o;
  implies(o, f, {Flag::optimal}, {Flag::regular});
  return o;
}

template <class F>
Outcome polish(F& f) {
  if (!f.metrizable()) return Outcome::skip();
  Outcome o;
  implies(o, f, {Flag::optimal}, {Flag::tight, Flag::regular});
  return o;
}

template <class F>
Outcome metric(F& f) {
  if (!f.metrizable()) return Outcome::skip();
  Outcome o;
  implies(o, f, {Flag::optimal}, {Flag::outer});
  if (!f[Flag::optimal]) return o;
  const auto& lat = f.m.lattice();
  for (const auto& b : f.sets()) {
    std::vector<Element> inner;
    for (const auto& c : f.sets()) {
      bool closed = true;
      if constexpr (F::backend == Backend::finite) closed = f.m.context().is_closed(c);
      if (closed && c.subset_of(b)) inner.push_back(f.m(c));
    }
    const auto sup = lat.supremum(inner);
    o.require(sup && *sup == f.m(b), "ν(B) ≠ ⊕ ν(F) over closed F ⊆ B for B = " + f.format(b));
  }
  return o;
}

template <class F>
Outcome maximal_density(F& f) {
  if (!f[Flag::regular]) return Outcome{};
  Outcome o;
  o.exercised = true;
  const auto& lat = f.m.lattice();
  for (const auto& c : f.classes()) o.require(f.m.nu_plus(c) == f.m(c), "c⁺(x) ≠ ν([x]) at " + f.format(c));
  o.require(f[Flag::usc_cplus], "c⁺ is not usc");
  if constexpr (F::backend == Backend::finite) {
    const auto& ctx = f.m.context();
    const auto cplus = measure::atoms_to_points(ctx, f.m.cplus());
    o.require(measure::is_cardinal_density(f.m, cplus), "c⁺ is not a cardinal density");
    if (const auto search = measure::search_densities(f.m)) {
      const auto elems = lat.elements();
      for (const auto& d : search->cardinal_densities)
        for (std::size_t x = 0; x < d.size(); ++x)
          o.require(lat.leq(elems[d[x]], cplus[x]), "a cardinal density exceeds c⁺ at " + ctx.space().point_name(x));
    }
  } else {
    // A cardinal density on a discrete space takes the value ν({x}) at x.
    for (const auto& c : f.classes()) o.require(f.m.point(c.support().front()) == f.m(c), "density differs from ν({x})");
  }
  return o;
}

template <class F>
Outcome regular_part_case(F& f) {
  if (!order::check_domain(f.m.lattice()).supports_regular_part()) return Outcome::skip();
  Outcome o;
  o.exercised = true;
  const auto reg = decomp::regular_part(f.m);
  o.require(measure::classify(reg)[Flag::regular], "⌊ν⌋ is not regular");
  for (const auto& c : f.classes()) o.require(reg(c) == f.m.nu_plus(c), "⌊ν⌋ density ≠ c⁺ at " + f.format(c));
  const auto again = decomp::regular_part(reg);
  o.require(same_on_sets(f, reg, again), "⌊⌊ν⌋⌋ ≠ ⌊ν⌋");
  return o;
}

template <class F>
Outcome singular_part_case(F& f) {
  if (!f.decomposable()) return Outcome::skip();
  Outcome o;
  o.exercised = true;
  const auto& d = f.decomposition();
  const auto& lat = f.m.lattice();
  for (const auto& b : f.sets()) {
    const auto j = lat.join(d.regular_part(b), d.singular_part(b));
    o.require(j && *j == f.m.nu_plus(b), "ν⁺ ≠ ⌊ν⌋ ⊕ ⊥ν on " + f.format(b));
  }
  for (const auto& c : f.classes()) o.require(d.singular_part(c) == lat.bottom(), "⊥ν([x]) ≠ 0 at " + f.format(c));
  o.require(decomp::singular_part(d.regular_part).is_zero(), "⊥⌊ν⌋ ≠ 0");
  return o;
}

template <class F>
Outcome regular_char(F& f) {
  if (!f.decomposable()) return Outcome::skip();
  if (!f[Flag::outer]) return Outcome{};
  Outcome o;
  o.exercised = true;
  const auto& d = f.decomposition();
  const bool is_regular_part = same_on_sets(f, d.regular_part, f.m);
  const bool singular_zero = d.singular_part.is_zero();
  o.require(is_regular_part == singular_zero, "ν = ⌊ν⌋ disagrees with ⊥ν = 0");
  o.require(singular_zero == f[Flag::regular], "⊥ν = 0 disagrees with regularity");
  return o;
}

template <class F>
Outcome singular_char(F& f) {
  if (!f.decomposable()) return Outcome::skip();
  Outcome o;
  const auto& d = f.decomposition();
  o.require(decomp::regular_part(d.singular_part).is_zero(), "⌊⊥ν⌋ ≠ 0");
  if (!f[Flag::outer]) return o;
  o.exercised = true;
  bool vanishes = true;
  for (const auto& k : f.sets())
    if (f.compact(k) && !(f.m(k) == f.m.lattice().bottom())) vanishes = false;
  o.require(d.regular_part.is_zero() == vanishes, "⌊ν⌋ = 0 disagrees with ν vanishing on compact sets");
  if (d.regular_part.is_zero()) o.require(same_on_sets(f, d.singular_part, f.m), "⌊ν⌋ = 0 but ν ≠ ⊥ν");
  return o;
}

template <class F>
Outcome optimal_decomposition(F& f) {
  if (!f.decomposable() || !f.metrizable()) return Outcome::skip();
  if (!f[Flag::optimal]) return Outcome{};
  Outcome o;
  o.exercised = true;
  const auto& d = f.decomposition();
  const auto& lat = f.m.lattice();
  for (const auto& b : f.sets()) {
    const auto j = lat.join(d.regular_part(b), d.singular_part(b));
    o.require(j && *j == f.m(b), "ν ≠ ⌊ν⌋ ⊕ ⊥ν on " + f.format(b));
    if (f.compact(b)) o.require(d.singular_part(b) == lat.bottom(), "⊥ν(K) ≠ 0 for K = " + f.format(b));
  }
  const auto reg = measure::classify(d.regular_part);
  o.require(reg[Flag::regular] && reg[Flag::optimal], "⌊ν⌋ is not a regular optimal measure");
  o.require(measure::classify(d.singular_part)[Flag::optimal], "⊥ν is not optimal");
  return o;
}

constexpr std::string_view kBoth = "finite,countable";
constexpr std::string_view kDiscrete = "finite(discrete),countable";

CaseDef measure_case(std::string_view id, std::string_view statement, std::string_view backends, MeasureCheck check) {
  return {{id, statement, Scope::measure, backends}, std::move(check), {}, {}};
}
CaseDef space_case(std::string_view id, std::string_view statement, SpaceCheck check) {
  return {{id, statement, Scope::space, "finite"}, {}, std::move(check), {}};
}
CaseDef lattice_case(std::string_view id, std::string_view statement, LatticeFamily family, LatticeCheck check) {
  return {{id, statement, Scope::lattice, "finite"}, {}, {}, std::move(check), family};
}

#define MAXITIVE_MEASURE(fn) on_measures([](auto& f) { return fn(f); })

std::vector<CaseDef> build() {
  std::vector<CaseDef> v;
  v.push_back(space_case("T-HM", "compact saturated sets are closed under finite unions and filtered intersections; a filtered family inside an open G has a member inside G", hofmann_mislove));
  v.push_back(measure_case("L-WIC", "weakly inner-continuous iff ν(⋃𝒪) = ⊕ν(𝒪) for every family 𝒪 of opens", kBoth, MAXITIVE_MEASURE(wic)));
  v.push_back(measure_case("P-LOCCOMP", "weak_outer ∧ weak_inner ⟹ regular ∧ completely_maxitive", kBoth, MAXITIVE_MEASURE(loccomp)));
  v.push_back(measure_case("P-K", "weak_outer ⟹ q_smooth ∧ saturated, with the converse on locally compact quasisober spaces", kBoth, MAXITIVE_MEASURE(prop_k)));
  v.push_back(measure_case("P-F", "tight ∧ weak_outer ⟹ q_smooth ∧ f_smooth ∧ saturated, with the converse on locally compact quasisober spaces", kBoth, MAXITIVE_MEASURE(prop_f)));
  v.push_back(measure_case("P-TENSIONEQ", "tight ∧ outer ⟹ c⁺ upper compact; weak_inner ∧ c⁺ upper compact ⟹ tight", kBoth, MAXITIVE_MEASURE(tensioneq)));
  v.push_back(measure_case("T-REG", "regular ⟺ usc cardinal density ⟺ outer ∧ completely maxitive ⟺ weak_outer ∧ weak_inner ⟹ weak_outer ∧ σ ⟹ weak_outer ⟹ q_smooth ∧ saturated, with the second-countable, locally compact and metrizable strengthenings", kBoth, MAXITIVE_MEASURE(reg_theorem)));
  v.push_back(measure_case("T-REGTIGHT", "tight ∧ regular ⟺ upper compact usc cardinal density ⟹ tight ∧ weak_outer ⟹ QF-smooth ∧ saturated, with the locally compact and Polish strengthenings", kBoth, MAXITIVE_MEASURE(regtight_theorem)));
  v.push_back(measure_case("P-OPT", "optimal ⟺ continuous from above; continuity from above implies σ-maxitivity", kBoth, MAXITIVE_MEASURE(optimal_cfa)));
  v.push_back(lattice_case("L-SEP", "for s ≰ t some φ : L → [0,1] preserving existing suprema and filtered infima has φ(s) = 1, φ(t) = 0", LatticeFamily::lattices, separation));
  v.push_back(measure_case("C-SC", "on second-countable spaces weak_outer ∧ σ-maxitive ⟹ regular", kBoth, MAXITIVE_MEASURE(second_countable)));
  v.push_back(measure_case("C-SIGCOMP", "on σ-compact metrizable spaces k_smooth ∧ σ-maxitive ⟹ regular", kDiscrete, MAXITIVE_MEASURE(sigcomp)));
  v.push_back(measure_case("C-SCLC", "on separable metrizable spaces optimal ⟹ regular", kDiscrete, MAXITIVE_MEASURE(sclc)));
  v.push_back(measure_case("P-POLISH", "on Polish or σ-compact metrizable spaces optimal ⟹ tight ∧ regular", kDiscrete, MAXITIVE_MEASURE(polish)));
  v.push_back(measure_case("D-REGPART", "⌊ν⌋ is regular with density c⁺ and ⌊⌊ν⌋⌋ = ⌊ν⌋", kBoth, MAXITIVE_MEASURE(regular_part_case)));
  v.push_back(measure_case("T-SING", "ν⁺ = ⌊ν⌋ ⊕ ⊥ν with ⊥ν least, ⊥ν([x]) = 0 and ⊥⌊ν⌋ = 0", kBoth, MAXITIVE_MEASURE(singular_part_case)));
  v.push_back(measure_case("C-REGCHAR", "for outer-continuous ν: ν is a regular part ⟺ ⊥ν = 0 ⟺ ν regular", kBoth, MAXITIVE_MEASURE(regular_char)));
  v.push_back(measure_case("C-SINGCHAR", "for outer-continuous ν: ν is a singular part ⟺ ⌊ν⌋ = 0 ⟺ ν vanishes on compact Borel sets", kBoth, MAXITIVE_MEASURE(singular_char)));
  v.push_back(measure_case("C-OPTDEC", "on metrizable spaces an optimal ν = ⌊ν⌋ ⊕ ⊥ν with ⌊ν⌋ regular optimal and ⊥ν optimal, zero on compacts", kDiscrete, MAXITIVE_MEASURE(optimal_decomposition)));
  v.push_back(lattice_case("L-WAYABOVE", "the fast way-above rule agrees with the filter definition", LatticeFamily::posets, way_above));
  v.push_back(lattice_case("T-INTERP", "continuous posets have the interpolation property", LatticeFamily::lattices, interpolation));
  v.push_back(lattice_case("L-JCONT", "t ⊕ ⋀F = ⋀(t ⊕ F) for filters F", LatticeFamily::lattices, join_continuity));
  v.push_back(space_case("T-T0REF", "π₀ : E → E₀ is a T0-reflection and B ↦ π₀(B) is a Borel isomorphism", t0_reflection));
  v.push_back(space_case("C-TILDE", "x ∈ B implies [x] ⊆ B for Borel B", tilde));
  v.push_back(measure_case("E-NUPLUS", "ν⁺ ≥ ν and ν⁺ is an outer-continuous maxitive measure", kBoth, MAXITIVE_MEASURE(nu_plus_case)));
  v.push_back(measure_case("L-LOCCONV", "inner ⟹ weak_inner and outer ⟹ weak_outer", kBoth, MAXITIVE_MEASURE(locconv)));
  v.push_back(measure_case("L-REG0", "ν⁺(K) = ⊕ ν⁺([x]) over x ∈ K for compact K; weak_outer ⟺ ν([x]) = ν⁺([x]) for all x", kBoth, MAXITIVE_MEASURE(reg0_lemma)));
  v.push_back(measure_case("P-TRPOLISH", "on Polish spaces f_smooth ∧ σ-maxitive ⟹ tight ∧ regular", kDiscrete, MAXITIVE_MEASURE(trpolish)));
  v.push_back(measure_case("C-MAXDENS", "for regular ν, c⁺(x) = ν([x]) and c⁺ is the maximal usc cardinal density", kBoth, MAXITIVE_MEASURE(maximal_density)));
  v.push_back(measure_case("P-METRIC", "on metrizable spaces an optimal ν is outer-continuous and inner-approximated by closed sets", kDiscrete, MAXITIVE_MEASURE(metric)));
  return v;
}

#undef MAXITIVE_MEASURE

} // namespace

const std::vector<CaseDef>& case_defs() {
  static const std::vector<CaseDef> defs = build();
  return defs;
}

} // namespace maxitive::harness::detail
