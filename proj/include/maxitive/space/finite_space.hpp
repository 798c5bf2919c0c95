// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/mask.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxitive::space {

/// A finite topological space: named points and the full family of open
/// sets, kept sorted by mask. At most 16 points.
class FiniteSpace {
public:
  static constexpr std::size_t kMaxPoints = 16;

  /// Validates that `opens` contains ∅ and the whole space and is closed
  /// under binary unions and intersections. Duplicates are removed.
  FiniteSpace(std::vector<std::string> points, std::vector<PointSet> opens);

  /// Smallest topology containing the subbasis.
  static FiniteSpace generate(std::vector<std::string> points, const std::vector<PointSet>& subbasis);
  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace indiscrete(std::size_t n);

  std::size_t size() const { return points_.size(); }
  PointSet all() const { return PointSet::full(size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(std::size_t x) const { return points_.at(x); }
  std::optional<std::size_t> find_point(std::string_view name) const;
  /// Throws InputError for unknown names.
  std::size_t parse_point(std::string_view name) const;
  /// Throws InputError if `s` mentions points beyond size().
  void check_subset(PointSet s) const;

  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement_in(size())); }
  std::vector<PointSet> closed_sets() const;

  /// x ≤ y in the specialization preorder: every open containing x contains y.
  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  /// ↑x, the least open containing x.
  PointSet up(std::size_t x) const { return up_[x]; }
  /// ↓x, the closure of {x}.
  PointSet down(std::size_t x) const { return down_[x]; }

  /// ↑A, computed both as the intersection of the opens containing A and as
  /// the specialization up-set; the two must agree.
  PointSet saturate(PointSet a) const;
  PointSet saturate_by_opens(PointSet a) const;
  PointSet saturate_by_order(PointSet a) const;
  bool is_saturated(PointSet a) const { return saturate(a) == a; }

  PointSet closure(PointSet a) const;
  PointSet interior(PointSet a) const;

  bool is_t0() const;

  /// Open-cover compactness of `a`: from the cover by every open meeting
  /// `a`, extracts a subcover of at most |a| members and checks it covers.
  /// Returns the subcover, or nothing when `a` is not compact.
  std::optional<std::vector<PointSet>> finite_subcover(PointSet a) const;
  bool is_compact(PointSet a) const { return finite_subcover(a).has_value(); }

  /// Sets that are compact and saturated, in mask order.
  std::vector<PointSet> compact_saturated_family() const;

  std::string format(PointSet s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

private:
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
  std::vector<bool> open_lookup_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

struct IrreducibleReport {
  std::vector<PointSet> irreducible;  // nonempty irreducible closed sets, mask order
  bool quasisober = false;
  bool t0 = false;
};

IrreducibleReport irreducible_closed_sets(const FiniteSpace& space);

struct HofmannMisloveReport {
  std::size_t families_checked = 0;
  std::vector<std::string> failures;
  bool holds() const { return failures.empty(); }
};

/// Checks that compact saturated sets are closed under finite unions and
/// filtered intersections, and that a filtered family whose intersection
/// lies in an open G has a member inside G. Every filtered subfamily is
/// enumerated, so the compact saturated family must have at most 16 members.
HofmannMisloveReport hofmann_mislove_check(const FiniteSpace& space);

} // namespace maxitive::space
