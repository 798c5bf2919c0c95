// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/decomp/decompose.hpp"
#include "maxitive/harness/harness.hpp"
#include "maxitive/io/instance.hpp"
#include "maxitive/measure/classify.hpp"

#include <functional>
#include <initializer_list>
#include <variant>

namespace maxitive::harness::detail {

using io::FiniteP;
using io::TailP;
using measure::Backend;
using measure::ClassificationRecord;
using measure::Flag;
using order::Element;
using order::FinitePoset;

/// The result of one case on one instance.
struct Outcome {
  bool applicable = true;
  bool exercised = false;
  std::vector<std::string> failures;

  static Outcome skip() {
    Outcome o;
    o.applicable = false;
    return o;
  }
  void require(bool cond, const std::string& message) {
    if (!cond) failures.push_back(message);
  }
};

template <class M>
inline constexpr Backend backend_of = std::is_same_v<M, FiniteP> ? Backend::finite : Backend::countable;

/// Lazily computed facts about one measure instance, shared by every case
/// evaluated on it. Not thread-safe; each worker owns its instances.
template <class M>
class Facts {
public:
  using Set = std::conditional_t<std::is_same_v<M, FiniteP>, AtomSet, countable::FinCofinSet>;
  static constexpr Backend backend = backend_of<M>;

  explicit Facts(const M& m) : m(m) {}

  const M& m;

  const ClassificationRecord& flags() {
    if (!flags_) flags_ = measure::classify(m);
    return *flags_;
  }
  bool operator[](Flag f) { return flags()[f]; }

  bool decomposable() {
    if (!decomposable_) decomposable_ = order::check_domain(m.lattice()).supports_singular_part();
    return *decomposable_;
  }
  const decomp::Decomposition<M>& decomposition() {
    if (!decomposition_) decomposition_ = decomp::decompose(m);
    return *decomposition_;
  }

  /// Finite: discrete. Countable: ℕ is discrete, Polish, σ-compact.
  bool metrizable() const {
    if constexpr (backend == Backend::finite) return m.context().discrete();
    else return true;
  }

  /// Every Borel set (finite) or the canonical sets of the instance (countable).
  const std::vector<Set>& sets() {
    if (sets_.empty()) {
      if constexpr (backend == Backend::finite) {
        for (std::uint64_t b = 0; b < m.context().borel_count(); ++b) sets_.emplace_back(b);
      } else {
        sets_ = countable::canonical_sets(m.reference());
      }
    }
    return sets_;
  }
  /// The classes [x]: atoms, or singletons of the reference points.
  std::vector<Set> classes() const {
    std::vector<Set> out;
    if constexpr (backend == Backend::finite) {
      for (std::size_t a = 0; a < m.context().atom_count(); ++a) out.push_back(AtomSet::singleton(a));
    } else {
      for (auto x : m.reference().points) out.push_back(countable::FinCofinSet::finite({x}));
    }
    return out;
  }
  bool compact(const Set& b) const {
    if constexpr (backend == Backend::finite) return m.context().is_compact(b);
    else return !b.is_infinite();
  }
  std::string format(const Set& b) const {
    if constexpr (backend == Backend::finite) return m.context().borel().format(b);
    else return b.to_string();
  }
  json instance() const { return io::instance_json(m); }

private:
  std::optional<ClassificationRecord> flags_;
  std::optional<bool> decomposable_;
  std::optional<decomp::Decomposition<M>> decomposition_;
  std::vector<Set> sets_;
};

using AnyFacts = std::variant<Facts<FiniteP>, Facts<TailP>>;

using MeasureCheck = std::function<Outcome(AnyFacts&)>;
using SpaceCheck = std::function<Outcome(const space::FiniteSpace&)>;
using LatticeCheck = std::function<Outcome(const FinitePoset&)>;

/// Which lattices a lattice-scope case runs over.
enum class LatticeFamily { posets, lattices };

struct CaseDef {
  TheoremCase info;
  MeasureCheck measure;
  SpaceCheck space;
  LatticeCheck lattice;
  LatticeFamily family = LatticeFamily::lattices;
};

const std::vector<CaseDef>& case_defs();

/// One generated measure instance.
using MeasureItem = std::variant<FiniteP, TailP>;

struct Instances {
  std::vector<space::FiniteSpace> spaces;
  std::vector<FinitePoset> posets;
  std::vector<FinitePoset> lattices;
  std::vector<MeasureItem> measures;
  std::size_t finite_measures = 0;
  std::size_t tail_measures = 0;
};

struct Needs {
  bool spaces = false;
  bool posets = false;
  bool lattices = false;
  bool measures = false;
};

/// Deterministic instance stream. Throws BudgetError beyond the limits of
/// the mode.
Instances generate(const GeneratorConfig& config, const Needs& needs);

/// Value lattices with exactly config.lattice elements.
std::vector<FinitePoset> value_lattices(const GeneratorConfig& config);

} // namespace maxitive::harness::detail
