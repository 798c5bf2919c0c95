// SPDX-License-Identifier: Apache-2.0

#include "maxitive/space/finite_space.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>

namespace maxitive::space {

namespace {

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

} // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<PointSet> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  const auto n = points_.size();
  if (n > kMaxPoints) throw InputError("finite spaces are limited to 16 points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points_[i] == points_[j]) throw InputError("duplicate point name '" + points_[i] + "'");
  for (auto g : opens_) check_subset(g);

  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  open_lookup_.assign(std::size_t{1} << n, false);
  for (auto g : opens_) open_lookup_[g.bits()] = true;

  if (!is_open(PointSet{})) throw InputError("open family must contain the empty set");
  if (!is_open(all())) throw InputError("open family must contain the whole space");
  for (auto g : opens_)
    for (auto h : opens_) {
      if (!is_open(g | h)) throw InputError("open family is not closed under unions: " + format(g) + " ∪ " + format(h));
      if (!is_open(g & h))
        throw InputError("open family is not closed under intersections: " + format(g) + " ∩ " + format(h));
    }

  up_.assign(n, all());
  down_.assign(n, PointSet{});
  for (auto g : opens_)
    g.for_each([&](std::size_t x) { up_[x] &= g; });
  for (std::size_t x = 0; x < n; ++x)
    up_[x].for_each([&](std::size_t y) { down_[y] |= PointSet::singleton(x); });
}

FiniteSpace FiniteSpace::generate(std::vector<std::string> points, const std::vector<PointSet>& subbasis) {
  const auto n = points.size();
  if (n > kMaxPoints) throw InputError("finite spaces are limited to 16 points");
  const auto full = PointSet::full(n);
  // The least open around x is the intersection of the subbasic sets containing it.
  std::vector<PointSet> least(n, full);
  for (auto s : subbasis) {
    if (!s.subset_of(full)) throw InputError("subbasis member mentions a point outside the space");
    s.for_each([&](std::size_t x) { least[x] &= s; });
  }
  std::vector<PointSet> opens;
  for (std::uint64_t bits = 0; bits <= full.bits(); ++bits) {
    const PointSet a(bits);
    bool open = true;
    a.for_each([&](std::size_t x) { open = open && least[x].subset_of(a); });
    if (open) opens.push_back(a);
  }
  return FiniteSpace(std::move(points), std::move(opens));
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<PointSet> subbasis;
  for (std::size_t x = 0; x < n; ++x) subbasis.push_back(PointSet::singleton(x));
  return generate(index_names(n), subbasis);
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n) { return generate(index_names(n), {}); }

std::optional<std::size_t> FiniteSpace::find_point(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

std::size_t FiniteSpace::parse_point(std::string_view name) const {
  if (auto x = find_point(name)) return *x;
  throw InputError("unknown point '" + std::string(name) + "'");
}

void FiniteSpace::check_subset(PointSet s) const {
  if (!s.subset_of(all())) throw InputError("set mentions a point outside the space");
}

bool FiniteSpace::is_open(PointSet s) const {
  return s.subset_of(all()) && open_lookup_[s.bits()];
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  for (auto g : opens_) out.push_back(g.complement_in(size()));
  std::sort(out.begin(), out.end());
  return out;
}

PointSet FiniteSpace::saturate(PointSet a) const {
  const auto by_opens = saturate_by_opens(a);
  ensure(by_opens == saturate_by_order(a), "saturation routes disagree on " + format(a));
  return by_opens;
}

PointSet FiniteSpace::saturate_by_opens(PointSet a) const {
  check_subset(a);
  auto out = all();
  for (auto g : opens_)
    if (a.subset_of(g)) out &= g;
  return out;
}

PointSet FiniteSpace::saturate_by_order(PointSet a) const {
  check_subset(a);
  PointSet out;
  a.for_each([&](std::size_t x) { out |= up_[x]; });
  return out;
}

PointSet FiniteSpace::closure(PointSet a) const {
  check_subset(a);
  PointSet out;
  a.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

PointSet FiniteSpace::interior(PointSet a) const {
  check_subset(a);
  PointSet out;
  for (auto g : opens_)
    if (g.subset_of(a)) out |= g;
  return out;
}

bool FiniteSpace::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (leq(x, y) && leq(y, x)) return false;
  return true;
}

std::optional<std::vector<PointSet>> FiniteSpace::finite_subcover(PointSet a) const {
  check_subset(a);
  std::vector<PointSet> cover;
  for (auto g : opens_)
    if (g.intersects(a)) cover.push_back(g);
  // Greedy extraction: for each uncovered point keep one member containing it.
  std::vector<PointSet> sub;
  PointSet covered;
  a.for_each([&](std::size_t x) {
    if (covered.contains(x)) return;
    for (auto g : cover)
      if (g.contains(x)) {
        sub.push_back(g);
        covered |= g;
        return;
      }
  });
  if (!a.subset_of(covered) || sub.size() > a.count()) return std::nullopt;
  return sub;
}

std::vector<PointSet> FiniteSpace::compact_saturated_family() const {
  std::vector<PointSet> out;
  for (std::uint64_t bits = 0; bits <= all().bits(); ++bits) {
    const PointSet a(bits);
    if (is_saturated(a) && is_compact(a)) out.push_back(a);
  }
  return out;
}

std::string FiniteSpace::format(PointSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ",";
    out += x < size() ? points_[x] : "#" + std::to_string(x);
    first = false;
  });
  return out + "}";
}

IrreducibleReport irreducible_closed_sets(const FiniteSpace& space) {
  IrreducibleReport report;
  const auto closed = space.closed_sets();
  for (auto c : closed) {
    if (c.empty()) continue;
    bool irreducible = true;
    for (auto f : closed)
      for (auto g : closed)
        if (c.subset_of(f | g) && !c.subset_of(f) && !c.subset_of(g)) irreducible = false;
    if (irreducible) report.irreducible.push_back(c);
  }
  report.quasisober = std::all_of(report.irreducible.begin(), report.irreducible.end(), [&](PointSet c) {
    bool point_closure = false;
    c.for_each([&](std::size_t x) { point_closure = point_closure || space.down(x) == c; });
    return point_closure;
  });
  report.t0 = space.is_t0();
  return report;
}

HofmannMisloveReport hofmann_mislove_check(const FiniteSpace& space) {
  HofmannMisloveReport report;
  const auto irreducible = irreducible_closed_sets(space);
  if (!irreducible.quasisober) report.failures.push_back("space is not quasisober");

  const auto q = space.compact_saturated_family();
  if (q.size() > 16) throw BudgetError("Hofmann-Mislove check enumerates filtered families of at most 16 sets");
  auto in_q = [&](PointSet s) { return std::binary_search(q.begin(), q.end(), s); };

  for (auto a : q)
    for (auto b : q)
      if (!in_q(a | b)) report.failures.push_back("union " + space.format(a) + " ∪ " + space.format(b) + " is not compact saturated");

  const auto m = q.size();
  // below[i][j]: members of q contained in q[i] ∩ q[j].
  std::vector<std::vector<std::uint64_t>> below(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (q[k].subset_of(q[i] & q[j])) below[i][j] |= std::uint64_t{1} << k;

  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m); ++fam) {
    // Filtered for reverse inclusion: any two members contain a common member.
    bool filtered = true;
    PointSet meet = space.all();
    for (std::size_t i = 0; i < m && filtered; ++i) {
      if (!((fam >> i) & 1U)) continue;
      meet &= q[i];
      for (std::size_t j = i + 1; j < m && filtered; ++j)
        if ((fam >> j) & 1U) filtered = (fam & below[i][j]) != 0;
    }
    if (!filtered) continue;
    ++report.families_checked;
    if (!in_q(meet)) report.failures.push_back("filtered intersection " + space.format(meet) + " is not compact saturated");
    for (auto g : space.opens()) {
      if (!meet.subset_of(g)) continue;
      bool escapes = false;
      for (std::size_t k = 0; k < m && !escapes; ++k) escapes = ((fam >> k) & 1U) && q[k].subset_of(g);
      if (!escapes)
        report.failures.push_back("filtered family with intersection inside " + space.format(g) + " has no member inside it");
    }
  }
  return report;
}

} // namespace maxitive::space
