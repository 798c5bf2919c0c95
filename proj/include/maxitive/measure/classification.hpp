// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace maxitive::measure {

enum class Flag : std::size_t {
  inner,
  outer,
  weak_inner,
  weak_outer,
  regular,
  saturated,
  q_smooth,
  f_smooth,
  k_smooth,
  tight,
  sigma_maxitive,
  completely_maxitive,
  continuous_from_above,
  optimal,
  usc_density_exists,
  cardinal_density_exists,
  upper_compact_usc_density_exists,
  usc_cplus,
  upper_compact_cplus,
};

inline constexpr std::size_t kFlagCount = 19;

inline constexpr std::array<std::string_view, kFlagCount> kFlagNames{
    "inner",          "outer",          "weak_inner",          "weak_outer",
    "regular",        "saturated",      "q_smooth",            "f_smooth",
    "k_smooth",       "tight",          "sigma_maxitive",      "completely_maxitive",
    "continuous_from_above", "optimal",  "usc_density_exists", "cardinal_density_exists",
    "upper_compact_usc_density_exists", "usc_cplus", "upper_compact_cplus"};

inline std::string_view flag_name(Flag f) { return kFlagNames[static_cast<std::size_t>(f)]; }

inline std::optional<Flag> parse_flag(std::string_view name) {
  for (std::size_t i = 0; i < kFlagCount; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

enum class Backend { finite, countable };

inline std::string_view backend_name(Backend b) { return b == Backend::finite ? "finite" : "countable"; }

/// The classification flags of one measure, each with a note on whether
/// the backend forces its value.
class ClassificationRecord {
public:
  explicit ClassificationRecord(Backend backend) : backend_(backend) {}

  Backend backend() const { return backend_; }

  bool operator[](Flag f) const { return flags_[index(f)]; }
  void set(Flag f, bool value) { flags_[index(f)] = value; }

  /// True when every measure on this backend has the same value of the
  /// flag, so the flag carries no information about the instance.
  bool degenerate(Flag f) const { return degenerate_[index(f)]; }
  void mark_degenerate(Flag f) { degenerate_[index(f)] = true; }

  /// Whether a conjunction of flags holds.
  template <class... Fs>
  bool all(Fs... fs) const {
    return ((*this)[fs] && ...);
  }

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;

private:
  static std::size_t index(Flag f) { return static_cast<std::size_t>(f); }

  Backend backend_;
  std::array<bool, kFlagCount> flags_{};
  std::array<bool, kFlagCount> degenerate_{};
};

/// Flags whose value is the same for every measure on the backend. On a
/// finite space every set is compact, every filtered family of Borel sets
/// has a least member, and every family of Borel sets is finite. On the
/// countable discrete backend every set is open and the compact sets are
/// the finite ones.
inline bool forced_by_backend(Backend backend, Flag f) {
  switch (backend) {
    case Backend::finite:
      switch (f) {
        case Flag::weak_inner:
        case Flag::q_smooth:
        case Flag::f_smooth:
        case Flag::k_smooth:
        case Flag::tight:
        case Flag::sigma_maxitive:
        case Flag::completely_maxitive:
        case Flag::continuous_from_above:
        case Flag::optimal:
        case Flag::cardinal_density_exists:
        case Flag::usc_cplus:
        case Flag::upper_compact_cplus:
          return true;
        default:
          return false;
      }
    case Backend::countable:
      switch (f) {
        case Flag::outer:
        case Flag::weak_outer:
        case Flag::saturated:
        case Flag::q_smooth:
        case Flag::k_smooth:
        case Flag::usc_cplus:
          return true;
        default:
          return false;
      }
  }
  return false;
}

/// Flags that take the same value on every measure of the backend share a
/// class number; other flags get their own. Finite spaces: ν is outer
/// continuous iff ν(B) = ν(↑B) for all B, and every set is compact, so the
/// continuity and density flags collapse. Countable backend: the closed
/// forms s∞ ≤ c∞ and c∞ ⊕ s∞ = 0.
inline std::size_t equivalence_class(Backend backend, Flag f) {
  constexpr std::size_t kRegular = kFlagCount, kTight = kFlagCount + 1, kForced = kFlagCount + 2;
  if (forced_by_backend(backend, f)) return kForced;
  switch (backend) {
    case Backend::finite:
      switch (f) {
        case Flag::inner:
        case Flag::outer:
        case Flag::weak_outer:
        case Flag::regular:
        case Flag::saturated:
        case Flag::usc_density_exists:
        case Flag::upper_compact_usc_density_exists:
          return kRegular;
        default:
          break;
      }
      break;
    case Backend::countable:
      switch (f) {
        case Flag::inner:
        case Flag::weak_inner:
        case Flag::regular:
        case Flag::sigma_maxitive:
        case Flag::completely_maxitive:
        case Flag::usc_density_exists:
        case Flag::cardinal_density_exists:
          return kRegular;
        case Flag::tight:
        case Flag::f_smooth:
        case Flag::continuous_from_above:
        case Flag::optimal:
        case Flag::upper_compact_usc_density_exists:
          return kTight;
        default:
          break;
      }
      break;
  }
  return static_cast<std::size_t>(f);
}

} // namespace maxitive::measure
