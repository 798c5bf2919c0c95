// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace maxitive::countable {

using Natural = std::uint64_t;

/// A finite or cofinite subset of ℕ. The support lists the members of a
/// finite set, or the excluded points of a cofinite one; it is kept sorted
/// and duplicate-free, so equal sets have equal representations.
class FinCofinSet {
public:
  enum class Kind { Finite, Cofinite };

  FinCofinSet() = default;
  static FinCofinSet finite(std::vector<Natural> members);
  static FinCofinSet cofinite(std::vector<Natural> excluded);
  static FinCofinSet finite(std::initializer_list<Natural> members) { return finite(std::vector<Natural>(members)); }
  static FinCofinSet cofinite(std::initializer_list<Natural> excluded) { return cofinite(std::vector<Natural>(excluded)); }
  static FinCofinSet empty() { return {}; }
  static FinCofinSet all() { return cofinite(std::vector<Natural>{}); }
  /// {0, 1, ..., n-1}.
  static FinCofinSet range(Natural n);

  Kind kind() const { return kind_; }
  const std::vector<Natural>& support() const { return support_; }
  bool is_infinite() const { return kind_ == Kind::Cofinite; }
  bool is_empty() const { return kind_ == Kind::Finite && support_.empty(); }
  bool contains(Natural x) const;

  FinCofinSet complement() const;
  FinCofinSet operator|(const FinCofinSet& other) const;
  FinCofinSet operator&(const FinCofinSet& other) const;
  FinCofinSet operator-(const FinCofinSet& other) const { return *this & other.complement(); }
  bool subset_of(const FinCofinSet& other) const { return (*this - other).is_empty(); }

  /// "{1,2}" or "ℕ∖{2,3}".
  std::string to_string() const;

  auto operator<=>(const FinCofinSet&) const = default;

private:
  FinCofinSet(Kind kind, std::vector<Natural> support);

  Kind kind_ = Kind::Finite;
  std::vector<Natural> support_;
};

} // namespace maxitive::countable
