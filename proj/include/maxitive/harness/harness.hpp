// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/measure/classification.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxitive::harness {

using json = nlohmann::json;

enum class Mode { exhaustive, sampled };

/// Which instances a run draws from. Spaces have exactly `points` points
/// and value lattices exactly `lattice` elements, so a sweep over sizes is
/// a loop over configs.
///
/// Enumeration order: spaces in enumerate_topologies order; value lattices
/// (the chain, or every lattice up to isomorphism); atom densities in
/// lexicographic order with the first atom most significant; then the
/// countable grid over exception values at 0 and 1, c∞ and s∞, again
/// lexicographic with s∞ varying fastest.
struct GeneratorConfig {
  std::size_t points = 3;
  std::size_t lattice = 3;
  bool all_lattices = false;
  bool countable = true;
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  /// Densities drawn per (space, lattice) pair in sampled mode.
  std::size_t samples = 8;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

/// Exhaustive density enumeration accepts spaces with at most this many
/// Borel atoms and lattices with at most this many elements.
inline constexpr std::size_t kMaxExhaustiveAtoms = 3;
inline constexpr std::size_t kMaxExhaustiveLattice = 4;

enum class Scope { space, lattice, measure };

std::string_view scope_name(Scope s);

struct TheoremCase {
  std::string_view id;
  std::string_view statement;
  Scope scope;
  /// Backends on which the case is evaluated, e.g. "finite,countable".
  std::string_view backends;
};

/// Every registered case, in a fixed order.
const std::vector<TheoremCase>& registry();
/// Throws InputError for an unknown id.
const TheoremCase& find_case(std::string_view id);

struct Violation {
  json instance;
  std::string message;
};

struct VerificationReport {
  std::string id;
  std::size_t instances_checked = 0;
  /// Instances outside the case's hypotheses on the space or lattice, for
  /// example non-metrizable finite spaces for the metric statements.
  std::size_t instances_skipped = 0;
  /// Instances where the hypothesis failed or every conclusion is forced
  /// by the backend.
  std::size_t degenerate = 0;
  std::size_t violation_count = 0;
  /// The first kMaxListedViolations violations in enumeration order.
  std::vector<Violation> violations;

  double degenerate_fraction() const {
    return instances_checked == 0 ? 1.0 : static_cast<double>(degenerate) / static_cast<double>(instances_checked);
  }
};

inline constexpr std::size_t kMaxListedViolations = 10;

struct Coverage {
  std::size_t spaces = 0;
  std::size_t lattices = 0;
  std::size_t posets = 0;
  std::size_t finite_measures = 0;
  std::size_t tail_measures = 0;
};

struct SuiteReport {
  GeneratorConfig config;
  Coverage coverage;
  std::vector<VerificationReport> cases;

  std::size_t total_violations() const;
};

/// Runs one case. Throws InputError for an unknown id and BudgetError when
/// the config exceeds the enumeration budget for the case's scope.
VerificationReport run_theorem(std::string_view id, const GeneratorConfig& config);

/// Runs the given cases (all registered cases when empty) over one shared
/// instance stream.
SuiteReport run_suite(const std::vector<std::string>& ids, const GeneratorConfig& config);

enum class SearchStatus { found, unattainable, none_within_budget };

std::string_view search_status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::none_within_budget;
  std::optional<json> witness;
  std::size_t examined = 0;
  std::string note;
};

/// First measure instance with every hypothesis flag true and some
/// conclusion flag false. When no backend in the config can produce such
/// an instance (each conclusion flag is forced, or collapses into the class
/// of a hypothesis flag), the verdict is `unattainable`; the instances are
/// still scanned and must not produce a witness.
SearchResult search_counterexample(const std::vector<measure::Flag>& hypothesis,
                                   const std::vector<measure::Flag>& conclusion,
                                   const GeneratorConfig& config, std::size_t budget = 100000);

json to_json(const GeneratorConfig& config);
json to_json(const VerificationReport& report);
json to_json(const SuiteReport& report);
json to_json(const SearchResult& result);

} // namespace maxitive::harness
