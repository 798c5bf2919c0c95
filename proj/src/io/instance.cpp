// SPDX-License-Identifier: Apache-2.0

#include "maxitive/io/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace maxitive::io {

namespace {

using LatticeVariant = std::variant<FinitePoset, ExtRealLattice>;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string text(const json& node, const std::string& path) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<long long>());
  fail(path, "expected a string");
}

template <class F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

LatticeVariant parse_lattice(const json& node) {
  const std::string path = "lattice";
  const auto kind = text(field(node, "kind", path), "lattice.kind");
  if (kind == "extreal") return ExtRealLattice{};
  if (kind == "chain") {
    if (node.contains("size")) {
      const auto& size = node.at("size");
      if (!size.is_number_unsigned() || size.get<std::size_t>() == 0 || size.get<std::size_t>() > 64)
        fail("lattice.size", "expected an integer between 1 and 64");
      return FinitePoset::chain(size.get<std::size_t>());
    }
    const auto& elems = field(node, "elements", path);
    if (!elems.is_array() || elems.empty()) fail("lattice.elements", "expected a nonempty array");
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      names.push_back(text(elems[i], "lattice.elements[" + std::to_string(i) + "]"));
      if (i > 0) pairs.emplace_back(i - 1, i);
    }
    return at_path("lattice.elements", [&] { return FinitePoset::from_pairs(names, pairs); });
  }
  if (kind == "finite") {
    const auto& elems = field(node, "elements", path);
    if (!elems.is_array() || elems.empty()) fail("lattice.elements", "expected a nonempty array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i) names.push_back(text(elems[i], "lattice.elements[" + std::to_string(i) + "]"));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const auto& leq = field(node, "leq", path);
    if (!leq.is_array()) fail("lattice.leq", "expected an array of pairs");
    for (std::size_t i = 0; i < leq.size(); ++i) {
      const auto p = "lattice.leq[" + std::to_string(i) + "]";
      if (!leq[i].is_array() || leq[i].size() != 2) fail(p, "expected a pair [a, b]");
      auto index = [&](const json& n, const std::string& q) {
        const auto name = text(n, q);
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail(q, "unknown element '" + name + "'");
        return static_cast<std::size_t>(it - names.begin());
      };
      pairs.emplace_back(index(leq[i][0], p + "[0]"), index(leq[i][1], p + "[1]"));
    }
    return at_path("lattice", [&] { return FinitePoset::from_pairs(names, pairs); });
  }
  fail("lattice.kind", "unknown lattice kind '" + kind + "'");
}

std::optional<space::FiniteSpace> parse_space(const json& node) {
  const std::string path = "space";
  const auto kind = text(field(node, "kind", path), "space.kind");
  if (kind == "countable_discrete") return std::nullopt;
  if (kind != "finite") fail("space.kind", "unknown space kind '" + kind + "'");
  const auto& pts = field(node, "points", path);
  if (!pts.is_array()) fail("space.points", "expected an array");
  if (pts.size() > 64) fail("space.points", "at most 64 points");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto name = text(pts[i], "space.points[" + std::to_string(i) + "]");
    if (std::find(names.begin(), names.end(), name) != names.end())
      fail("space.points[" + std::to_string(i) + "]", "duplicate point '" + name + "'");
    names.push_back(name);
  }
  std::vector<PointSet> subbasis;
  const auto sub = node.contains("subbasis") ? node.at("subbasis") : json::array();
  if (!sub.is_array()) fail("space.subbasis", "expected an array of point lists");
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto p = "space.subbasis[" + std::to_string(i) + "]";
    if (!sub[i].is_array()) fail(p, "expected an array of point names");
    PointSet s;
    for (std::size_t j = 0; j < sub[i].size(); ++j) {
      const auto q = p + "[" + std::to_string(j) + "]";
      const auto name = text(sub[i][j], q);
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail(q, "unknown point '" + name + "'");
      s = s | PointSet::singleton(static_cast<std::size_t>(it - names.begin()));
    }
    subbasis.push_back(s);
  }
  return at_path("space", [&] { return space::FiniteSpace::generate(names, subbasis); });
}

template <class L>
typename L::value_type parse_value(const L& lat, const json& node, const std::string& path) {
  const auto s = text(node, path);
  return at_path(path, [&] { return lat.parse(s); });
}

template <class L>
Instance parse_finite(const L& lat, const space::FiniteSpace& space, const json& m) {
  const auto ctx = at_path("space", [&] { return measure::FiniteContext::make(space); });
  using M = measure::FiniteMeasure<L>;
  if (m.contains("density")) {
    const auto& dens = m.at("density");
    if (!dens.is_object()) fail("measure.density", "expected an object from point names to values");
    for (const auto& [key, _] : dens.items())
      if (!space.find_point(key)) fail("measure.density." + key, "unknown point");
    std::vector<std::optional<typename L::value_type>> per_atom(ctx->atom_count());
    for (std::size_t x = 0; x < space.size(); ++x) {
      const auto& name = space.point_name(x);
      const auto p = "measure.density." + name;
      if (!dens.contains(name)) fail(p, "missing value");
      const auto v = parse_value(lat, dens.at(name), p);
      auto& slot = per_atom[ctx->borel().atom_of(x)];
      if (slot && !(*slot == v))
        throw ValidationError("points of one Borel atom have different values",
                              atom_name(ctx->borel(), ctx->borel().atom_of(x)));
      slot = v;
    }
    std::vector<typename L::value_type> d;
    for (auto& v : per_atom) d.push_back(*v);
    return {M::from_density(ctx, lat, std::move(d)), MeasureForm::density};
  }
  if (m.contains("table")) {
    const auto& table = m.at("table");
    if (!table.is_array()) fail("measure.table", "expected an array of {set, value}");
    std::vector<std::pair<AtomSet, typename L::value_type>> entries;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto p = "measure.table[" + std::to_string(i) + "]";
      const auto& set = field(table[i], "set", p);
      if (!set.is_array()) fail(p + ".set", "expected an array of point names");
      PointSet s;
      for (std::size_t j = 0; j < set.size(); ++j) {
        const auto q = p + ".set[" + std::to_string(j) + "]";
        const auto name = text(set[j], q);
        const auto x = space.find_point(name);
        if (!x) fail(q, "unknown point '" + name + "'");
        s = s | PointSet::singleton(*x);
      }
      const auto b = at_path(p + ".set", [&] { return ctx->borel().to_atoms(s); });
      entries.emplace_back(b, parse_value(lat, field(table[i], "value", p), p + ".value"));
    }
    return {at_path("measure.table", [&] { return M::from_table(ctx, lat, std::move(entries)); }), MeasureForm::table};
  }
  fail("measure", "expected a \"density\" or \"table\" field for a finite space");
}

template <class L>
Instance parse_tail(const L& lat, const json& m) {
  countable::TailDensity<typename L::value_type> d;
  if (m.contains("exceptions")) {
    const auto& exc = m.at("exceptions");
    if (!exc.is_object()) fail("measure.exceptions", "expected an object from naturals to values");
    for (const auto& [key, value] : exc.items()) {
      const auto p = "measure.exceptions." + key;
      if (key.empty() || key.size() > 9 || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(p, "expected a natural number below 10^9");
      d.exceptions[std::stoul(key)] = parse_value(lat, value, p);
    }
  }
  if (m.contains("density") || m.contains("table")) fail("measure", "a countable_discrete space takes exceptions, tail and infinite_mass");
  d.tail = parse_value(lat, field(m, "tail", "measure"), "measure.tail");
  d.infinite_mass = parse_value(lat, field(m, "infinite_mass", "measure"), "measure.infinite_mass");
  return {at_path("measure", [&] { return measure::TailMeasure<L>(lat, std::move(d)); }), MeasureForm::tail};
}

template <class L>
json value_json(const L& lat, const typename L::value_type& v) {
  return lat.format(v);
}

template <class L>
json finite_measure_json(const measure::FiniteMeasure<L>& m, MeasureForm form) {
  const auto& borel = m.context().borel();
  const auto& space = borel.space();
  if (form == MeasureForm::table) {
    json rows = json::array();
    for (std::uint64_t bits = 0; bits < m.context().borel_count(); ++bits) {
      json set = json::array();
      borel.to_points(AtomSet(bits)).for_each([&](std::size_t x) { set.push_back(space.point_name(x)); });
      rows.push_back({{"set", set}, {"value", value_json(m.lattice(), m(AtomSet(bits)))}});
    }
    return {{"table", rows}};
  }
  json dens = json::object();
  for (std::size_t x = 0; x < space.size(); ++x)
    dens[space.point_name(x)] = value_json(m.lattice(), m.density()[borel.atom_of(x)]);
  return {{"density", dens}};
}

template <class L>
json tail_measure_json(const measure::TailMeasure<L>& m) {
  json exc = json::object();
  for (const auto& [x, v] : m.density().exceptions) exc[std::to_string(x)] = value_json(m.lattice(), v);
  return {{"exceptions", exc},
          {"tail", value_json(m.lattice(), m.density().tail)},
          {"infinite_mass", value_json(m.lattice(), m.density().infinite_mass)}};
}

} // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object with lattice, space and measure");
  for (const auto& [key, _] : doc.items())
    if (key != "lattice" && key != "space" && key != "measure") fail(key, "unknown top-level field");
  const auto lattice = parse_lattice(field(doc, "lattice", ""));
  const auto space = parse_space(field(doc, "space", ""));
  const auto& m = field(doc, "measure", "");
  if (!m.is_object()) fail("measure", "expected an object");
  return std::visit(
      [&](const auto& lat) -> Instance {
        if (space) return parse_finite(lat, *space, m);
        return parse_tail(lat, m);
      },
      lattice);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return parse_instance(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

json lattice_json(const FinitePoset& lattice) {
  const auto elems = lattice.elements();
  if (lattice.is_chain()) {
    auto sorted = elems;
    std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) { return lattice.leq(a, b) && !(a == b); });
    bool default_names = true;
    json names = json::array();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      names.push_back(lattice.name(sorted[i]));
      if (lattice.name(sorted[i]) != std::to_string(i)) default_names = false;
    }
    if (default_names) return {{"kind", "chain"}, {"size", lattice.size()}};
    return {{"kind", "chain"}, {"elements", names}};
  }
  json names = json::array(), leq = json::array();
  for (auto a : elems) names.push_back(lattice.name(a));
  // Covering pairs.
  for (auto a : elems)
    for (auto b : elems) {
      if (a == b || !lattice.leq(a, b)) continue;
      bool covers = true;
      for (auto c : elems)
        if (!(c == a) && !(c == b) && lattice.leq(a, c) && lattice.leq(c, b)) covers = false;
      if (covers) leq.push_back({lattice.name(a), lattice.name(b)});
    }
  return {{"kind", "finite"}, {"elements", names}, {"leq", leq}};
}

json lattice_json(const ExtRealLattice&) { return {{"kind", "extreal"}}; }

json space_json(const space::FiniteSpace& space) {
  json points = json::array();
  for (const auto& p : space.points()) points.push_back(p);
  std::vector<PointSet> nbhds;
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto u = space.saturate(PointSet::singleton(x));
    if (u != space.all() && std::find(nbhds.begin(), nbhds.end(), u) == nbhds.end()) nbhds.push_back(u);
  }
  std::sort(nbhds.begin(), nbhds.end(), [](PointSet a, PointSet b) { return a.bits() < b.bits(); });
  json sub = json::array();
  for (auto u : nbhds) {
    json set = json::array();
    u.for_each([&](std::size_t x) { set.push_back(space.point_name(x)); });
    sub.push_back(set);
  }
  return {{"kind", "finite"}, {"points", points}, {"subbasis", sub}};
}

json instance_json(const FiniteP& m, MeasureForm form) {
  return {{"lattice", lattice_json(m.lattice())}, {"space", space_json(m.context().space())}, {"measure", finite_measure_json(m, form)}};
}
json instance_json(const FiniteX& m, MeasureForm form) {
  return {{"lattice", lattice_json(m.lattice())}, {"space", space_json(m.context().space())}, {"measure", finite_measure_json(m, form)}};
}
json instance_json(const TailP& m) {
  return {{"lattice", lattice_json(m.lattice())}, {"space", {{"kind", "countable_discrete"}}}, {"measure", tail_measure_json(m)}};
}
json instance_json(const TailX& m) {
  return {{"lattice", lattice_json(m.lattice())}, {"space", {{"kind", "countable_discrete"}}}, {"measure", tail_measure_json(m)}};
}

json to_json(const Instance& instance) {
  return std::visit(
      [&](const auto& m) -> json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, TailP> || std::is_same_v<M, TailX>) return instance_json(m);
        else return instance_json(m, instance.form);
      },
      instance.measure);
}

std::string atom_name(const space::BorelStructure& borel, std::size_t atom) {
  const auto pts = borel.atoms()[atom];
  std::vector<std::string> names;
  pts.for_each([&](std::size_t x) { names.push_back(borel.space().point_name(x)); });
  if (names.size() == 1) return names.front();
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "]";
}

json borel_set_json(const space::BorelStructure& borel, AtomSet b) {
  std::vector<std::string> names;
  b.for_each([&](std::size_t a) { names.push_back(atom_name(borel, a)); });
  std::sort(names.begin(), names.end());
  return names;
}

} // namespace maxitive::io
