// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Boost 1.74 declares rational == integer as a member template; under C++20
// rewritten comparisons it recurses into itself. Exact non-template
// overloads take precedence and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
} // namespace boost

namespace maxitive::order {

using Rational = boost::rational<std::int64_t>;

/// An element of [0, ∞]: an exact nonnegative rational or ∞.
class ExtReal {
public:
  constexpr ExtReal() = default;
  ExtReal(Rational value);  // throws InputError if negative
  ExtReal(std::int64_t value) : ExtReal(Rational(value)) {}

  static ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  /// Precondition: !is_infinite().
  const Rational& finite_value() const { return value_; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  /// "inf", "p" or "p/q" in lowest terms.
  std::string to_string() const;
  /// Accepts "inf", "∞", integers and "p/q".
  static ExtReal parse(std::string_view text);

private:
  Rational value_{0};
  bool infinite_ = false;
};

/// A filter of [0, ∞]: either the closed ray [lower, ∞] or the open ray
/// (lower, ∞] (lower finite). Every filter of [0, ∞] has one of these forms.
struct IntervalFilter {
  ExtReal lower;
  bool open = false;

  bool contains(const ExtReal& x) const { return open ? lower < x : lower <= x; }
  const ExtReal& infimum() const { return lower; }
};

/// [0, ∞] as a value lattice: a complete chain.
class ExtRealLattice {
public:
  using value_type = ExtReal;

  ExtReal bottom() const { return ExtReal{}; }
  ExtReal top() const { return ExtReal::infinity(); }
  bool leq(const ExtReal& a, const ExtReal& b) const { return a <= b; }
  std::optional<ExtReal> join(const ExtReal& a, const ExtReal& b) const { return std::max(a, b); }
  std::optional<ExtReal> meet(const ExtReal& a, const ExtReal& b) const { return std::min(a, b); }
  /// Empty family has supremum 0.
  std::optional<ExtReal> supremum(std::span<const ExtReal> values) const;
  /// Empty family has infimum ∞ (the lattice is complete).
  std::optional<ExtReal> infimum(std::span<const ExtReal> values) const;

  /// s ≫ r iff s = ∞ or s > r.
  bool way_above(const ExtReal& s, const ExtReal& r) const { return s.is_infinite() || r < s; }

  bool is_chain() const { return true; }
  bool contains(const ExtReal&) const { return true; }

  std::string format(const ExtReal& v) const { return v.to_string(); }
  ExtReal parse(std::string_view text) const { return ExtReal::parse(text); }

  /// Values of t that realise every distinct level set {t ≫ c} and
  /// {t ⋫ c} of a map c whose image is `image`.
  std::vector<ExtReal> level_probes(std::span<const ExtReal> image) const;

  friend bool operator==(const ExtRealLattice&, const ExtRealLattice&) { return true; }
};

} // namespace maxitive::order
