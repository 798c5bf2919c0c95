// SPDX-License-Identifier: Apache-2.0

#include "maxitive/space/borel.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>

namespace maxitive::space {

namespace {

constexpr std::size_t kMaxBorelAtoms = 20;

// Classes of points with identical membership across `generators`.
std::vector<PointSet> signature_classes(std::size_t n, const std::vector<PointSet>& generators) {
  std::vector<PointSet> classes;
  PointSet assigned;
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned.contains(x)) continue;
    PointSet cls;
    for (std::size_t y = x; y < n; ++y) {
      const bool same = std::all_of(generators.begin(), generators.end(),
                                    [&](PointSet g) { return g.contains(x) == g.contains(y); });
      if (same) cls |= PointSet::singleton(y);
    }
    assigned |= cls;
    classes.push_back(cls);
  }
  return classes;
}

} // namespace

BorelStructure::BorelStructure(FiniteSpace space) : space_(std::move(space)) {
  const auto n = space_.size();
  atom_of_.assign(n, 0);
  PointSet assigned;
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned.contains(x)) continue;
    const auto atom = space_.up(x) & space_.down(x);
    atoms_.push_back(atom);
    assigned |= atom;
    atom.for_each([&](std::size_t y) { atom_of_[y] = atoms_.size() - 1; });
  }
  ensure(assigned == space_.all(), "atoms do not cover the space");

  auto generators = space_.opens();
  const auto q = space_.compact_saturated_family();
  generators.insert(generators.end(), q.begin(), q.end());
  ensure(signature_classes(n, generators) == atoms_, "atoms [x] differ from the classes of the generated σ-algebra");

  for (auto g : generators) ensure(is_borel(g), "open or compact saturated set " + space_.format(g) + " is not a union of atoms");

  atom_up_.assign(atoms_.size(), AtomSet{});
  atom_down_.assign(atoms_.size(), AtomSet{});
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    const auto rep = atoms_[a].lowest();
    atom_up_[a] = to_atoms(space_.up(rep));
    atom_down_[a] = to_atoms(space_.down(rep));
  }

  if (atoms_.size() <= 10)
    for (auto b : borel_sets()) {
      const auto points = to_points(b);
      points.for_each([&](std::size_t x) {
        ensure(atoms_[atom_of_[x]].subset_of(points), "Borel set " + space_.format(points) + " splits an atom");
      });
    }
}

PointSet BorelStructure::to_points(AtomSet b) const {
  if (!b.subset_of(all_atoms())) throw InputError("atom set mentions an atom outside the space");
  PointSet out;
  b.for_each([&](std::size_t a) { out |= atoms_[a]; });
  return out;
}

AtomSet BorelStructure::to_atoms(PointSet s) const {
  space_.check_subset(s);
  AtomSet out;
  s.for_each([&](std::size_t x) { out |= AtomSet::singleton(atom_of_[x]); });
  if (to_points(out) != s) throw InputError("set " + space_.format(s) + " is not Borel");
  return out;
}

bool BorelStructure::is_borel(PointSet s) const {
  if (!s.subset_of(space_.all())) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && atoms_[atom_of_[x]].subset_of(s); });
  return ok;
}

std::vector<AtomSet> BorelStructure::borel_sets() const {
  if (atoms_.size() > kMaxBorelAtoms) throw BudgetError("Borel set enumeration is limited to 20 atoms");
  std::vector<AtomSet> out;
  for (std::uint64_t bits = 0; bits <= all_atoms().bits(); ++bits) out.emplace_back(bits);
  return out;
}

AtomSet BorelStructure::saturate(AtomSet b) const { return to_atoms(space_.saturate(to_points(b))); }

AtomSet BorelStructure::closure(AtomSet b) const { return to_atoms(space_.closure(to_points(b))); }

bool BorelStructure::is_open(AtomSet b) const { return space_.is_open(to_points(b)); }

std::vector<AtomSet> BorelStructure::opens() const {
  std::vector<AtomSet> out;
  for (auto g : space_.opens()) out.push_back(to_atoms(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> BorelStructure::closed_sets() const {
  std::vector<AtomSet> out;
  for (auto f : space_.closed_sets()) out.push_back(to_atoms(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> BorelStructure::compact_saturated() const {
  std::vector<AtomSet> out;
  for (auto q : space_.compact_saturated_family()) out.push_back(to_atoms(q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> BorelStructure::compact_borel() const {
  std::vector<AtomSet> out;
  for (auto b : borel_sets())
    if (is_compact(b)) out.push_back(b);
  return out;
}

} // namespace maxitive::space
