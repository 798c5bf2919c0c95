// SPDX-License-Identifier: Apache-2.0

#include "maxitive/order/enumerate.hpp"

#include "maxitive/errors.hpp"

#include <algorithm>
#include <numeric>

namespace maxitive::order {

namespace {

constexpr std::size_t kMaxEnumerated = 5;

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

bool transitive(const std::vector<ElementSet>& up) {
  for (std::size_t a = 0; a < up.size(); ++a) {
    bool ok = true;
    up[a].for_each([&](std::size_t b) { ok = ok && up[b].subset_of(up[a]); });
    if (!ok) return false;
  }
  return true;
}

// Relabels by `perm` (old index -> new index).
std::vector<ElementSet> relabel(const std::vector<ElementSet>& up, const std::vector<std::size_t>& perm) {
  std::vector<ElementSet> out(up.size());
  for (std::size_t a = 0; a < up.size(); ++a)
    up[a].for_each([&](std::size_t b) { out[perm[a]] |= ElementSet::singleton(perm[b]); });
  return out;
}

std::vector<ElementSet> up_sets(const FinitePoset& p) {
  std::vector<ElementSet> up;
  for (auto e : p.elements()) up.push_back(p.up(e));
  return up;
}

} // namespace

void for_each_labeled_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit) {
  if (n > kMaxEnumerated) throw BudgetError("labeled poset enumeration is limited to 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  // Each unordered pair is incomparable, i < j, or j < i.
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
  const auto names = index_names(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<ElementSet> up(n);
    for (std::size_t a = 0; a < n; ++a) up[a] = ElementSet::singleton(a);
    auto c = code;
    for (const auto& [i, j] : pairs) {
      const auto choice = c % 3;
      c /= 3;
      if (choice == 1) up[i] |= ElementSet::singleton(j);
      if (choice == 2) up[j] |= ElementSet::singleton(i);
    }
    if (transitive(up)) visit(FinitePoset(names, up));
  }
}

std::vector<FinitePoset> lattices_up_to_iso(std::size_t n) {
  if (n > kMaxEnumerated) throw BudgetError("lattice enumeration is limited to 5 elements");
  std::vector<std::vector<ElementSet>> seen;
  std::vector<FinitePoset> out;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);

  for_each_labeled_poset(n, [&](const FinitePoset& p) {
    if (!p.is_lattice()) return;
    const auto up = up_sets(p);
    // Canonical form: least relabeled up-set vector among linear extensions.
    std::vector<ElementSet> best;
    auto perm = identity;
    do {
      bool extension = true;
      for (std::size_t a = 0; a < n && extension; ++a)
        up[a].for_each([&](std::size_t b) { extension = extension && perm[a] <= perm[b]; });
      if (!extension) continue;
      auto candidate = relabel(up, perm);
      if (best.empty() || candidate < best) best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (std::find(seen.begin(), seen.end(), best) != seen.end()) return;
    seen.push_back(best);
    out.emplace_back(index_names(n), best);
  });
  return out;
}

FinitePoset diamond_m2() {
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FinitePoset::from_pairs({"0", "a", "b", "1"}, pairs);
}

FinitePoset pentagon_n5() {
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}};
  return FinitePoset::from_pairs({"0", "a", "b", "c", "1"}, pairs);
}

} // namespace maxitive::order
