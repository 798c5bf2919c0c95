// SPDX-License-Identifier: Apache-2.0

#include "maxitive/order/finite_poset.hpp"

#include "maxitive/errors.hpp"

namespace maxitive::order {

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)) {
  const auto n = names_.size();
  if (n > 64) throw InputError("finite posets are limited to 64 elements");
  if (up_.size() != n) throw InputError("order relation size does not match element count");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate element name '" + names_[i] + "'");

  down_.assign(n, ElementSet{});
  for (std::size_t a = 0; a < n; ++a) {
    check_subset(up_[a]);
    if (!up_[a].contains(a)) throw InputError("order relation is not reflexive at '" + names_[a] + "'");
    up_[a].for_each([&](std::size_t b) { down_[b] |= ElementSet::singleton(a); });
  }
  for (std::size_t a = 0; a < n; ++a) {
    up_[a].for_each([&](std::size_t b) {
      if (b != a && up_[b].contains(a))
        throw InputError("order relation is not antisymmetric: '" + names_[a] + "' and '" + names_[b] + "'");
      if (!up_[b].subset_of(up_[a]))
        throw InputError("order relation is not transitive through '" + names_[b] + "'");
    });
  }
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> names,
                                    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const auto n = names.size();
  std::vector<ElementSet> up(n);
  for (std::size_t a = 0; a < n; ++a) up[a] = ElementSet::singleton(a);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("order pair refers to an element out of range");
    up[a] |= ElementSet::singleton(b);
  }
  // Warshall closure on up-sets.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (up[a].contains(k)) up[a] |= up[k];
  return FinitePoset(std::move(names), std::move(up));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<ElementSet> up;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    up.push_back(ElementSet::full(n).without(ElementSet::full(i)));
  }
  return FinitePoset(std::move(names), std::move(up));
}

std::vector<Element> FinitePoset::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

std::optional<Element> FinitePoset::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Element(i);
  return std::nullopt;
}

Element FinitePoset::parse(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InputError("unknown lattice element '" + std::string(name) + "'");
}

std::optional<Element> FinitePoset::least(ElementSet s) const {
  std::optional<Element> out;
  s.for_each([&](std::size_t a) {
    if (!out && s.subset_of(up_[a])) out = Element(a);
  });
  return out;
}

std::optional<Element> FinitePoset::greatest(ElementSet s) const {
  std::optional<Element> out;
  s.for_each([&](std::size_t a) {
    if (!out && s.subset_of(down_[a])) out = Element(a);
  });
  return out;
}

ElementSet FinitePoset::upper_bounds(ElementSet s) const {
  auto out = all();
  s.for_each([&](std::size_t a) { out &= up_[a]; });
  return out;
}

ElementSet FinitePoset::lower_bounds(ElementSet s) const {
  auto out = all();
  s.for_each([&](std::size_t a) { out &= down_[a]; });
  return out;
}

ElementSet FinitePoset::up_closure(ElementSet s) const {
  ElementSet out;
  s.for_each([&](std::size_t a) { out |= up_[a]; });
  return out;
}

Element FinitePoset::bottom() const {
  if (auto b = least(all())) return *b;
  throw PreconditionError("value lattice has no bottom element");
}

bool FinitePoset::is_lattice() const {
  if (size() == 0) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!join(Element(a), Element(b)) || !meet(Element(a), Element(b))) return false;
  return true;
}

bool FinitePoset::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!leq(Element(a), Element(b)) && !leq(Element(b), Element(a))) return false;
  return true;
}

ElementSet FinitePoset::to_set(std::span<const Element> values) const {
  ElementSet s;
  for (auto e : values) {
    if (e.index >= size()) throw InputError("element index out of range");
    s |= ElementSet::singleton(e.index);
  }
  return s;
}

void FinitePoset::check_subset(ElementSet s) const {
  if (!s.subset_of(all())) throw InputError("subset contains an element outside the poset");
}

} // namespace maxitive::order
