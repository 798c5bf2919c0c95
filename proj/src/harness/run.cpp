// SPDX-License-Identifier: Apache-2.0

#include "internal.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace maxitive::harness {

using namespace detail;

std::string_view scope_name(Scope s) {
  switch (s) {
    case Scope::space: return "space";
    case Scope::lattice: return "lattice";
    case Scope::measure: return "measure";
  }
  return "";
}

std::string_view search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::unattainable: return "unattainable";
    case SearchStatus::none_within_budget: return "none_within_budget";
  }
  return "";
}

const std::vector<TheoremCase>& registry() {
  static const std::vector<TheoremCase> cases = [] {
    std::vector<TheoremCase> out;
    for (const auto& d : case_defs()) out.push_back(d.info);
    return out;
  }();
  return cases;
}

const TheoremCase& find_case(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

std::size_t SuiteReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.violation_count;
  return n;
}

namespace {

/// Runs eval(i) for every index on a pool of threads. Results are indexed,
/// so the merge order does not depend on scheduling; the exception of the
/// lowest failing index is rethrown.
template <class Eval>
void parallel_for(std::size_t count, std::size_t threads, Eval eval) {
  if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        eval(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class Check, class... Args>
Outcome guarded(const Check& check, Args&&... args) {
  try {
    return check(std::forward<Args>(args)...);
  } catch (const InvariantViolation& e) {
    Outcome o;
    o.failures.push_back(std::string("invariant violated: ") + e.what());
    return o;
  }
}

json measure_json(const MeasureItem& item) {
  return std::visit([](const auto& m) { return io::instance_json(m); }, item);
}

void merge(VerificationReport& report, const Outcome& o, const std::function<json()>& witness) {
  if (!o.applicable) {
    ++report.instances_skipped;
    return;
  }
  ++report.instances_checked;
  if (!o.exercised) ++report.degenerate;
  for (const auto& msg : o.failures) {
    ++report.violation_count;
    if (report.violations.size() < kMaxListedViolations) report.violations.push_back({witness(), msg});
  }
}

} // namespace

SuiteReport run_suite(const std::vector<std::string>& ids, const GeneratorConfig& config) {
  std::vector<const CaseDef*> cases;
  if (ids.empty()) {
    for (const auto& d : case_defs()) cases.push_back(&d);
  } else {
    for (const auto& id : ids) {
      find_case(id);
      for (const auto& d : case_defs())
        if (d.info.id == id) cases.push_back(&d);
    }
  }

  Needs needs;
  for (const auto* c : cases) {
    needs.spaces |= c->info.scope == Scope::space;
    needs.measures |= c->info.scope == Scope::measure;
    if (c->info.scope == Scope::lattice) {
      needs.posets |= c->family == LatticeFamily::posets;
      needs.lattices |= c->family == LatticeFamily::lattices;
    }
  }
  const auto inst = generate(config, needs);

  SuiteReport suite;
  suite.config = config;
  suite.coverage = {needs.spaces || needs.measures ? inst.spaces.size() : 0,
                    needs.lattices ? inst.lattices.size() : 0,
                    inst.posets.size(),
                    inst.finite_measures,
                    inst.tail_measures};
  for (const auto* c : cases) {
    VerificationReport r;
    r.id = std::string(c->info.id);
    suite.cases.push_back(std::move(r));
  }

  // outcomes[item][case position]; cases outside the item's scope stay empty.
  auto run_scope = [&](Scope scope, std::size_t count, auto&& eval_item, auto&& witness) {
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < cases.size(); ++k)
      if (cases[k]->info.scope == scope) positions.push_back(k);
    if (positions.empty()) return;
    std::vector<std::vector<Outcome>> outcomes(count);
    parallel_for(count, config.threads, [&](std::size_t i) { outcomes[i] = eval_item(i, positions); });
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t p = 0; p < positions.size(); ++p)
        merge(suite.cases[positions[p]], outcomes[i][p], [&] { return witness(i); });
  };

  run_scope(
      Scope::space, inst.spaces.size(),
      [&](std::size_t i, const std::vector<std::size_t>& pos) {
        std::vector<Outcome> row;
        for (auto k : pos) row.push_back(guarded(cases[k]->space, inst.spaces[i]));
        return row;
      },
      [&](std::size_t i) { return json{{"space", io::space_json(inst.spaces[i])}}; });

  // Lattice cases run over posets or lattices; split by family.
  for (auto family : {LatticeFamily::posets, LatticeFamily::lattices}) {
    const auto& items = family == LatticeFamily::posets ? inst.posets : inst.lattices;
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < cases.size(); ++k)
      if (cases[k]->info.scope == Scope::lattice && cases[k]->family == family) positions.push_back(k);
    if (positions.empty()) continue;
    std::vector<std::vector<Outcome>> outcomes(items.size());
    parallel_for(items.size(), config.threads, [&](std::size_t i) {
      for (auto k : positions) outcomes[i].push_back(guarded(cases[k]->lattice, items[i]));
    });
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t p = 0; p < positions.size(); ++p)
        merge(suite.cases[positions[p]], outcomes[i][p], [&] { return json{{"lattice", io::lattice_json(items[i])}}; });
  }

  run_scope(
      Scope::measure, inst.measures.size(),
      [&](std::size_t i, const std::vector<std::size_t>& pos) {
        AnyFacts facts = std::visit([](const auto& m) -> AnyFacts { return Facts<std::decay_t<decltype(m)>>(m); },
                                    inst.measures[i]);
        std::vector<Outcome> row;
        for (auto k : pos) row.push_back(guarded(cases[k]->measure, facts));
        return row;
      },
      [&](std::size_t i) { return measure_json(inst.measures[i]); });
  return suite;
}

VerificationReport run_theorem(std::string_view id, const GeneratorConfig& config) {
  return run_suite({std::string(id)}, config).cases.front();
}

SearchResult search_counterexample(const std::vector<Flag>& hypothesis, const std::vector<Flag>& conclusion,
                                   const GeneratorConfig& config, std::size_t budget) {
  if (conclusion.empty()) throw InputError("counterexample search needs at least one conclusion flag");
  const auto inst = generate(config, Needs{false, false, false, true});

  auto attainable = [&](Backend b) {
    for (auto c : conclusion) {
      if (measure::forced_by_backend(b, c)) continue;
      bool tied = false;
      for (auto h : hypothesis)
        if (measure::equivalence_class(b, h) == measure::equivalence_class(b, c)) tied = true;
      if (!tied) return true;
    }
    return false;
  };
  std::vector<std::string> blocked;
  if (inst.finite_measures > 0 && !attainable(Backend::finite)) blocked.emplace_back("finite");
  if (inst.tail_measures > 0 && !attainable(Backend::countable)) blocked.emplace_back("countable");
  const bool unattainable = !inst.measures.empty() && blocked.size() ==(inst.finite_measures > 0 ? 1U : 0U) + (inst.tail_measures > 0 ? 1U : 0U);

  SearchResult result;
  for (const auto& item : inst.measures) {
    if (result.examined == budget) break;
    ++result.examined;
    const auto flags = std::visit([](const auto& m) { return measure::classify(m); }, item);
    bool hyp = true, concl = true;
    for (auto h : hypothesis) hyp = hyp && flags[h];
    for (auto c : conclusion) concl = concl && flags[c];
    if (hyp && !concl) {
      ensure(!unattainable, "counterexample found although the backend collapses the flags");
      result.status = SearchStatus::found;
      result.witness = measure_json(item);
      return result;
    }
  }
  if (unattainable) {
    result.status = SearchStatus::unattainable;
    std::string backends;
    for (const auto& b : blocked) backends += (backends.empty() ? "" : ", ") + b;
    result.note = "structurally unattainable on " + backends +
                  ": every conclusion flag is forced or equivalent to a hypothesis flag on this backend";
  } else {
    result.status = SearchStatus::none_within_budget;
    result.note = "no witness among " + std::to_string(result.examined) + " instances";
  }
  return result;
}

json to_json(const GeneratorConfig& c) {
  return {{"points", c.points},
          {"lattice", c.lattice},
          {"lattice_family", c.all_lattices ? "all" : "chain"},
          {"countable", c.countable},
          {"mode", c.mode == Mode::exhaustive ? "exhaustive" : "sampled"},
          {"seed", c.seed},
          {"samples", c.samples}};
}

json to_json(const VerificationReport& r) {
  const auto& info = find_case(r.id);
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"instance", v.instance}, {"message", v.message}});
  return {{"id", r.id},
          {"statement", info.statement},
          {"scope", scope_name(info.scope)},
          {"backends", info.backends},
          {"instances_checked", r.instances_checked},
          {"instances_skipped", r.instances_skipped},
          {"degenerate", r.degenerate},
          {"degenerate_fraction", r.degenerate_fraction()},
          {"violation_count", r.violation_count},
          {"violations", violations}};
}

json to_json(const SuiteReport& s) {
  json cases = json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(c));
  return {{"config", to_json(s.config)},
          {"coverage",
           {{"spaces", s.coverage.spaces},
            {"lattices", s.coverage.lattices},
            {"posets", s.coverage.posets},
            {"finite_measures", s.coverage.finite_measures},
            {"tail_measures", s.coverage.tail_measures}}},
          {"cases", cases},
          {"total_violations", s.total_violations()}};
}

json to_json(const SearchResult& r) {
  json out{{"status", search_status_name(r.status)}, {"examined", r.examined}, {"note", r.note}};
  out["witness"] = r.witness ? *r.witness : json(nullptr);
  return out;
}

} // namespace maxitive::harness
