#include "doctest.h"

#include "maxitive/errors.hpp"
#include "maxitive/space/borel.hpp"
#include "maxitive/space/enumerate.hpp"
#include "maxitive/space/reflection.hpp"

#include <algorithm>
#include <set>

using namespace maxitive;
using namespace maxitive::space;

namespace {

FiniteSpace sier() { return FiniteSpace::generate({"a", "b"}, {PointSet(0b10)}); }
FiniteSpace indisc() { return FiniteSpace::generate({"a", "b"}, {}); }

PointSet pts(const FiniteSpace& e, std::initializer_list<const char*> names) {
  PointSet s;
  for (auto n : names) s |= PointSet::singleton(e.parse_point(n));
  return s;
}

// Oracle: count families of subsets that are topologies, straight from the axioms.
std::size_t brute_force_topology_count(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::size_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto has = [&](std::size_t s) { return (fam >> s) & 1U; };
    if (!has(0) || !has(subsets - 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < subsets && closed; ++a)
      for (std::size_t b = 0; b < subsets && closed; ++b)
        if (has(a) && has(b)) closed = has(a | b) && has(a & b);
    if (closed) ++count;
  }
  return count;
}

// Oracle: naive closure of a subbasis under binary unions and intersections.
std::vector<PointSet> naive_closure(std::size_t n, std::vector<PointSet> family) {
  family.push_back(PointSet{});
  family.push_back(PointSet::full(n));
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = family;
    for (auto a : current)
      for (auto b : current)
        for (auto c : {a | b, a & b})
          if (std::find(family.begin(), family.end(), c) == family.end()) {
            family.push_back(c);
            grew = true;
          }
  }
  std::sort(family.begin(), family.end());
  return family;
}

} // namespace

TEST_CASE("generate_topology fixtures") {
  CHECK(sier().opens() == std::vector<PointSet>{PointSet(0), PointSet(0b10), PointSet(0b11)});
  CHECK(indisc().opens() == std::vector<PointSet>{PointSet(0), PointSet(0b11)});
  CHECK(FiniteSpace::discrete(3).opens().size() == 8);
  CHECK_THROWS_AS(FiniteSpace::generate({"a"}, {PointSet(0b10)}), InputError);
  CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {PointSet(0), PointSet(0b01), PointSet(0b10)}), InputError);
  CHECK_THROWS_AS(FiniteSpace({"a", "a"}, {PointSet(0), PointSet(0b11)}), InputError);

  const std::vector<std::vector<PointSet>> subbases{
      {}, {PointSet(0b001)}, {PointSet(0b011), PointSet(0b110)}, {PointSet(0b101), PointSet(0b011), PointSet(0b100)}};
  for (const auto& sb : subbases)
    CHECK(FiniteSpace::generate({"x", "y", "z"}, sb).opens() == naive_closure(3, sb));
}

TEST_CASE("specialization and saturation") {
  const auto s = sier();
  const auto a = s.parse_point("a");
  const auto b = s.parse_point("b");
  CHECK(s.leq(a, b));
  CHECK_FALSE(s.leq(b, a));
  const auto i = indisc();
  CHECK(i.leq(0, 1));
  CHECK(i.leq(1, 0));
  const auto d = FiniteSpace::discrete(3);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(d.leq(x, y) == (x == y));

  CHECK(s.saturate(pts(s, {"a"})) == pts(s, {"a", "b"}));
  CHECK(s.saturate(pts(s, {"b"})) == pts(s, {"b"}));
  CHECK(s.saturate(PointSet{}) == PointSet{});
}

TEST_CASE("saturation routes agree and opens are the saturated sets on every space up to 4 points") {
  std::size_t spaces = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& e) {
      ++spaces;
      std::vector<PointSet> saturated;
      for (std::uint64_t bits = 0; bits <= e.all().bits(); ++bits) {
        const PointSet a(bits);
        CHECK(e.saturate_by_opens(a) == e.saturate_by_order(a));
        if (e.is_saturated(a)) saturated.push_back(a);
        CHECK(e.is_compact(a));
      }
      CHECK(saturated == e.opens());
    });
  CHECK(spaces == 1 + 1 + 4 + 29 + 355);
}

TEST_CASE("topology enumeration counts") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(enumerate_topologies(n).size() == expected[n]);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(brute_force_topology_count(n) == expected[n]);
  CHECK_THROWS_AS(enumerate_topologies(5), BudgetError);

  const auto spaces = enumerate_topologies(3);
  std::set<std::vector<PointSet>> distinct;
  for (const auto& e : spaces) distinct.insert(e.opens());
  CHECK(distinct.size() == spaces.size());
  CHECK(std::is_sorted(spaces.begin(), spaces.end(),
                       [](const FiniteSpace& a, const FiniteSpace& b) { return a.opens() < b.opens(); }));
}

TEST_CASE("irreducible closed sets") {
  const auto s = sier();
  const auto rs = irreducible_closed_sets(s);
  CHECK(rs.irreducible == std::vector<PointSet>{pts(s, {"a"}), pts(s, {"a", "b"})});
  CHECK(rs.quasisober);
  CHECK(rs.t0);
  CHECK(s.closure(pts(s, {"b"})) == s.all());

  const auto ri = irreducible_closed_sets(indisc());
  CHECK(ri.irreducible == std::vector<PointSet>{PointSet(0b11)});
  CHECK(ri.quasisober);
  CHECK_FALSE(ri.t0);

  for (const auto& e : enumerate_topologies(3)) CHECK(irreducible_closed_sets(e).quasisober);
}

TEST_CASE("compact saturated family") {
  const auto s = sier();
  CHECK(s.compact_saturated_family() == std::vector<PointSet>{PointSet(0), pts(s, {"b"}), s.all()});
  CHECK(indisc().compact_saturated_family() == std::vector<PointSet>{PointSet(0), PointSet(0b11)});
  CHECK(FiniteSpace::discrete(2).compact_saturated_family().size() == 4);
  const auto cover = s.finite_subcover(s.all());
  REQUIRE(cover);
  PointSet covered;
  for (auto g : *cover) covered |= g;
  CHECK(covered == s.all());
}

TEST_CASE("Hofmann-Mislove on every space up to 3 points") {
  CHECK(hofmann_mislove_check(sier()).holds());
  CHECK(hofmann_mislove_check(indisc()).holds());
  std::size_t families = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& e : enumerate_topologies(n)) {
      const auto r = hofmann_mislove_check(e);
      CHECK(r.holds());
      families += r.families_checked;
    }
  CHECK(families > 0);
}

TEST_CASE("Borel structure") {
  const BorelStructure bs(sier());
  CHECK(bs.atom_count() == 2);
  CHECK(bs.borel_sets().size() == 4);
  const BorelStructure bi(indisc());
  CHECK(bi.atom_count() == 1);
  CHECK(bi.atoms().front() == PointSet(0b11));
  CHECK(bi.borel_sets().size() == 2);
  CHECK_THROWS_AS(bi.to_atoms(PointSet(0b01)), InputError);
  CHECK(BorelStructure(FiniteSpace::discrete(3)).borel_sets().size() == 8);
  CHECK(bs.compact_borel().size() == 4);

  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& e : enumerate_topologies(n)) {
      const BorelStructure b(e);
      // Oracle: [x] from the definition ↑x ∩ cl({x}) computed with opens only.
      for (std::size_t x = 0; x < e.size(); ++x) {
        PointSet cls;
        for (std::size_t y = 0; y < e.size(); ++y) {
          bool same = true;
          for (auto g : e.opens()) same = same && (g.contains(x) == g.contains(y));
          if (same) cls |= PointSet::singleton(y);
        }
        CHECK(b.atoms()[b.atom_of(x)] == cls);
      }
    }
}

TEST_CASE("T0 reflection") {
  const auto i = t0_reflection(indisc());
  CHECK(i.quotient.size() == 1);
  const auto s = t0_reflection(sier());
  CHECK(s.quotient.size() == 2);
  CHECK(s.quotient.opens() == sier().opens());

  // a ∼ b and c ∼ d with {c, d} open.
  const auto four = FiniteSpace::generate({"a", "b", "c", "d"}, {PointSet(0b1100)});
  const auto r = t0_reflection(four);
  REQUIRE(r.quotient.size() == 2);
  CHECK(r.projection[0] == r.projection[1]);
  CHECK(r.projection[2] == r.projection[3]);
  CHECK(r.quotient.opens().size() == 3);
  CHECK(r.quotient.is_t0());

  std::size_t maps = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& e : enumerate_topologies(n)) {
      const auto refl = t0_reflection(e);
      const auto report = check_factorization(e, refl, 3);
      CHECK(report.holds());
      CHECK(report.targets == 1 + 1 + 3 + 19);
      maps += report.maps_checked;
    }
  CHECK(maps > 0);
}
