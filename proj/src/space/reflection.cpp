// SPDX-License-Identifier: Apache-2.0

#include "maxitive/space/reflection.hpp"

#include "maxitive/errors.hpp"
#include "maxitive/space/enumerate.hpp"

#include <algorithm>
#include <set>

namespace maxitive::space {

namespace {

std::string class_name(const FiniteSpace& space, PointSet atom) {
  if (atom.count() == 1) return space.point_name(atom.lowest());
  std::string out = "[";
  bool first = true;
  atom.for_each([&](std::size_t x) {
    if (!first) out += ",";
    out += space.point_name(x);
    first = false;
  });
  return out + "]";
}

// All maps from `n` points into `m` points, as digit vectors.
template <class F>
void for_each_map(std::size_t n, std::size_t m, F&& f) {
  if (m == 0 && n > 0) return;
  std::vector<std::size_t> values(n, 0);
  while (true) {
    f(values);
    std::size_t i = 0;
    while (i < n && ++values[i] == m) values[i++] = 0;
    if (i == n) break;
  }
}

PointSet preimage_of(const std::vector<std::size_t>& map, PointSet target) {
  PointSet out;
  for (std::size_t x = 0; x < map.size(); ++x)
    if (target.contains(map[x])) out |= PointSet::singleton(x);
  return out;
}

bool continuous(const FiniteSpace& from, const FiniteSpace& to, const std::vector<std::size_t>& map) {
  return std::all_of(to.opens().begin(), to.opens().end(),
                     [&](PointSet g) { return from.is_open(preimage_of(map, g)); });
}

} // namespace

PointSet Reflection::image(PointSet s) const {
  PointSet out;
  s.for_each([&](std::size_t x) { out |= PointSet::singleton(projection.at(x)); });
  return out;
}

PointSet Reflection::preimage(PointSet s) const { return preimage_of(projection, s); }

Reflection t0_reflection(const FiniteSpace& space) {
  const BorelStructure borel(space);
  std::vector<std::string> names;
  for (auto atom : borel.atoms()) names.push_back(class_name(space, atom));
  std::vector<std::size_t> projection(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) projection[x] = borel.atom_of(x);

  std::vector<PointSet> quotient_opens;
  Reflection r{FiniteSpace::discrete(0), projection};
  for (auto g : space.opens()) quotient_opens.push_back(r.image(g));
  r.quotient = FiniteSpace(std::move(names), std::move(quotient_opens));
  const auto& q = r.quotient;

  ensure(q.is_t0(), "T0 reflection quotient is not T0");
  for (auto g : space.opens()) {
    ensure(q.is_open(r.image(g)), "image of open " + space.format(g) + " is not open");
    ensure(r.preimage(r.image(g)) == g, "open " + space.format(g) + " is not saturated for the projection");
  }
  for (auto g : q.opens()) ensure(space.is_open(r.preimage(g)), "preimage of open " + q.format(g) + " is not open");

  const auto ks = space.compact_saturated_family();
  const auto kq = q.compact_saturated_family();
  auto in = [](const std::vector<PointSet>& fam, PointSet s) { return std::binary_search(fam.begin(), fam.end(), s); };
  for (auto k : ks) ensure(in(kq, r.image(k)), "image of compact saturated " + space.format(k) + " is not compact saturated");
  for (auto k : kq) ensure(in(ks, r.preimage(k)), "preimage of compact saturated " + q.format(k) + " is not compact saturated");

  const BorelStructure qborel(q);
  ensure(qborel.atom_count() == q.size(), "T0 quotient has a non-singleton atom");
  std::set<std::uint64_t> images;
  const auto sets = borel.borel_sets();
  for (auto b : sets) {
    const auto points = borel.to_points(b);
    const auto img = r.image(points);
    ensure(r.preimage(img) == points, "π₀⁻¹(π₀(B)) differs from B for B = " + space.format(points));
    ensure(qborel.is_borel(img), "π₀(B) is not Borel for B = " + space.format(points));
    ensure(r.image(points.complement_in(space.size())) == img.complement_in(q.size()),
           "π₀ does not preserve the complement of " + space.format(points));
    images.insert(img.bits());
  }
  ensure(images.size() == sets.size() && images.size() == qborel.borel_sets().size(),
         "Borel correspondence is not a bijection");
  if (sets.size() <= 256)
    for (auto b : sets)
      for (auto c : sets) {
        const auto pb = borel.to_points(b);
        const auto pc = borel.to_points(c);
        ensure(r.image(pb | pc) == (r.image(pb) | r.image(pc)), "π₀ does not preserve unions");
      }
  return r;
}

FactorizationReport check_factorization(const FiniteSpace& space, const Reflection& reflection,
                                        std::size_t max_target_points) {
  FactorizationReport report;
  const auto n = space.size();
  const auto& q = reflection.quotient;
  for (std::size_t m = 0; m <= max_target_points; ++m)
    for (const auto& target : enumerate_topologies(m)) {
      if (!target.is_t0()) continue;
      ++report.targets;
      for_each_map(n, m, [&](const std::vector<std::size_t>& f) {
        if (!continuous(space, target, f)) return;
        ++report.maps_checked;
        std::size_t factorizations = 0;
        for_each_map(q.size(), m, [&](const std::vector<std::size_t>& g) {
          for (std::size_t x = 0; x < n; ++x)
            if (g[reflection.projection[x]] != f[x]) return;
          ++factorizations;
          if (!continuous(q, target, g)) report.failures.push_back("factor of a continuous map is not continuous");
        });
        if (factorizations != 1)
          report.failures.push_back("continuous map has " + std::to_string(factorizations) + " factorizations through π₀");
      });
    }
  return report;
}

} // namespace maxitive::space
