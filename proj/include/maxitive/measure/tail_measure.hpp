// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/countable/tail_density.hpp"
#include "maxitive/errors.hpp"
#include "maxitive/order/lattice.hpp"

#include <vector>

namespace maxitive::measure {

/// A maxitive measure on the finite/cofinite sets of discrete ℕ given by a
/// tail density: ν(B) = ⊕_{x∈B} d(x), plus s∞ when B is infinite. An
/// infinite set always contains points carrying the tail value c∞.
template <order::ValueLattice L>
class TailMeasure {
public:
  using value_type = typename L::value_type;
  using Density = countable::TailDensity<value_type>;

  /// Throws InputError for values outside the lattice and ValidationError
  /// when some needed supremum does not exist.
  TailMeasure(L lattice, Density density) : lattice_(std::move(lattice)), density_(std::move(density)) {
    auto check = [&](const value_type& v) {
      if (!lattice_.contains(v)) throw InputError("tail density value outside the lattice");
    };
    for (const auto& [x, v] : density_.exceptions) check(v);
    check(density_.tail);
    check(density_.infinite_mass);
    for (const auto& b : countable::canonical_sets(reference()))
      if (!try_value(b)) throw ValidationError("tail density values have no supremum over a set", b.to_string());
  }

  const L& lattice() const { return lattice_; }
  const Density& density() const { return density_; }

  value_type operator()(const countable::FinCofinSet& b) const {
    if (auto v = try_value(b)) return *v;
    throw ValidationError("tail density values have no supremum over a set", b.to_string());
  }

  /// ν({x}), the only candidate cardinal density.
  const value_type& point(countable::Natural x) const { return density_.at(x); }

  /// Exception points plus the supports of `extra`, with a fresh point.
  countable::ReferencePoints reference(const std::vector<countable::FinCofinSet>& extra = {}) const {
    return countable::reference_points(countable::exception_points(density_), extra);
  }

  /// Every subset of discrete ℕ is open, so the infimum over open
  /// supersets is attained at B; it is still taken over the canonical
  /// supersets and compared.
  value_type nu_plus(const countable::FinCofinSet& b) const {
    std::vector<value_type> over_opens{(*this)(b)};
    for (const auto& c : countable::canonical_sets(reference({b}))) over_opens.push_back((*this)(b | c));
    const auto inf = lattice_.infimum(over_opens);
    ensure(inf.has_value() && *inf == (*this)(b), "ν⁺ differs from ν on the discrete backend");
    return *inf;
  }

  bool is_zero() const {
    const auto zero = lattice_.bottom();
    for (const auto& [x, v] : density_.exceptions)
      if (!(v == zero)) return false;
    return density_.tail == zero && density_.infinite_mass == zero;
  }

  friend bool operator==(const TailMeasure& a, const TailMeasure& b) {
    return a.lattice_ == b.lattice_ && a.density_ == b.density_;
  }

private:
  std::optional<value_type> try_value(const countable::FinCofinSet& b) const {
    std::vector<value_type> values;
    if (b.is_infinite()) {
      for (const auto& [x, v] : density_.exceptions)
        if (b.contains(x)) values.push_back(v);
      values.push_back(density_.tail);
      values.push_back(density_.infinite_mass);
    } else {
      for (auto x : b.support()) values.push_back(density_.at(x));
    }
    return lattice_.supremum(values);
  }

  L lattice_;
  Density density_;
};

} // namespace maxitive::measure
