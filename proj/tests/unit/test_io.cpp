// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "maxitive/errors.hpp"
#include "maxitive/io/instance.hpp"
#include "maxitive/order/enumerate.hpp"
#include "maxitive/space/enumerate.hpp"

#include <random>

using namespace maxitive;
using io::FiniteP;
using io::FiniteX;
using io::MeasureForm;
using io::TailP;
using io::TailX;
using order::Element;
using order::FinitePoset;

namespace {

// parse(serialize(x)) reproduces x and serialize is a fixed point.
template <class M>
void check_round_trip(const M& m, MeasureForm form) {
  const auto doc = io::to_json(io::Instance{m, form});
  const auto back = io::parse_instance(doc);
  REQUIRE(std::holds_alternative<M>(back.measure));
  CHECK(back.form == form);
  const auto& m2 = std::get<M>(back.measure);
  if constexpr (std::is_same_v<M, TailP> || std::is_same_v<M, TailX>) {
    CHECK(m2 == m);
  } else {
    CHECK(m2.table() == m.table());
    CHECK(m2.context().space().points() == m.context().space().points());
    CHECK(m2.context().opens() == m.context().opens());
  }
  CHECK(io::to_json(back) == doc);
}

} // namespace

TEST_CASE("finite instances round-trip over all small spaces and lattices") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& space : space::enumerate_topologies(n)) {
      const auto ctx = measure::FiniteContext::make(space);
      for (std::size_t size = 1; size <= 4; ++size) {
        for (const auto& lat : order::lattices_up_to_iso(size)) {
          const auto elems = lat.elements();
          std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
          for (int k = 0; k < 3; ++k) {
            std::vector<Element> d;
            for (std::size_t a = 0; a < ctx->atom_count(); ++a) d.push_back(elems[pick(rng)]);
            const auto m = FiniteP::from_density(ctx, lat, d);
            check_round_trip(m, MeasureForm::density);
            check_round_trip(m, MeasureForm::table);
          }
        }
      }
    }
  }
}

TEST_CASE("extended real and tail instances round-trip") {
  const order::ExtRealLattice x;
  const auto ctx = measure::FiniteContext::make(space::enumerate_topologies(3)[7]);
  std::vector<order::ExtReal> d;
  for (auto s : {"0", "7/3", "inf"}) d.push_back(x.parse(s));
  d.resize(ctx->atom_count(), x.parse("1"));
  check_round_trip(FiniteX::from_density(ctx, x, d), MeasureForm::density);
  check_round_trip(FiniteX::from_density(ctx, x, d), MeasureForm::table);

  countable::TailDensity<order::ExtReal> td;
  td.exceptions = {{3, x.parse("5/2")}, {10, x.parse("inf")}};
  td.tail = x.parse("1");
  td.infinite_mass = x.parse("2");
  check_round_trip(TailX(x, td), MeasureForm::tail);

  const auto chain = FinitePoset::chain(3);
  countable::TailDensity<Element> tp;
  tp.exceptions = {{0, Element(2)}};
  tp.tail = Element(1);
  tp.infinite_mass = Element(2);
  check_round_trip(TailP(chain, tp), MeasureForm::tail);
}

TEST_CASE("named chains and non-chains serialize canonically") {
  const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 2}, {2, 1}};
  const auto named = FinitePoset::from_pairs({"lo", "hi", "mid"}, covers);
  CHECK(io::lattice_json(named) == io::json{{"kind", "chain"}, {"elements", {"lo", "mid", "hi"}}});
  CHECK(io::lattice_json(FinitePoset::chain(3)) == io::json{{"kind", "chain"}, {"size", 3}});
  const auto m2 = order::lattices_up_to_iso(4);
  bool saw_finite = false;
  for (const auto& l : m2) saw_finite |= io::lattice_json(l)["kind"] == "finite";
  CHECK(saw_finite);
}

TEST_CASE("parse errors name the field") {
  auto doc = io::json::parse(R"({"lattice":{"kind":"chain","size":2},
    "space":{"kind":"finite","points":["a","b"],"subbasis":[["b"]]},
    "measure":{"density":{"a":"0","b":"1"}}})");
  CHECK_NOTHROW(io::parse_instance(doc));

  auto bad = doc;
  bad["lattice"]["kind"] = "quaternion";
  CHECK_THROWS_WITH_AS(io::parse_instance(bad), doctest::Contains("lattice.kind"), InputError);
  bad = doc;
  bad["measure"]["density"].erase("b");
  CHECK_THROWS_WITH_AS(io::parse_instance(bad), doctest::Contains("measure.density.b"), InputError);
  bad = doc;
  bad["measure"]["density"]["a"] = "7";
  CHECK_THROWS_AS(io::parse_instance(bad), InputError);
  bad = doc;
  bad["extra"] = 1;
  CHECK_THROWS_AS(io::parse_instance(bad), InputError);
  bad = doc;
  bad["space"]["subbasis"] = io::json::array();
  CHECK_THROWS_AS(io::parse_instance(bad), ValidationError);
}
