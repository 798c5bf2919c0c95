// SPDX-License-Identifier: Apache-2.0
//
// maxitive: analyze, decompose, verify, enumerate.
//
// Exit codes: 0 success, 1 theorem violation or internal invariant failure,
// 2 usage, parse or validation error, 3 precondition or budget error.

#include "maxitive/decomp/decompose.hpp"
#include "maxitive/errors.hpp"
#include "maxitive/harness/harness.hpp"
#include "maxitive/io/instance.hpp"
#include "maxitive/measure/classify.hpp"
#include "maxitive/order/domain.hpp"
#include "maxitive/space/enumerate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace maxitive;
using json = nlohmann::json;

constexpr const char* kSchema = "maxitive-report/1";

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kPrecondition = 3 };

json report(const char* command) { return {{"schema", kSchema}, {"command", command}}; }

json flags_json(const measure::ClassificationRecord& r) {
  json out = json::object();
  for (std::size_t i = 0; i < measure::kFlagCount; ++i) {
    const auto f = static_cast<measure::Flag>(i);
    out[std::string(measure::flag_name(f))] = {{"value", r[f]}, {"forced_by_backend", r.degenerate(f)}};
  }
  return out;
}

template <class L>
json domain_json(const L& lat) {
  const auto d = order::check_domain(lat);
  return {{"continuous", d.continuous},
          {"distributive", d.distributive},
          {"interpolation", d.interpolation},
          {"is_lattice", d.is_lattice},
          {"supports_regular_part", d.supports_regular_part()},
          {"supports_singular_part", d.supports_singular_part()}};
}

json set_json(const measure::FiniteContext& ctx, AtomSet b) { return io::borel_set_json(ctx.borel(), b); }

json set_json(const countable::FinCofinSet& b) {
  json pts = json::array();
  for (auto x : b.support()) pts.push_back(std::to_string(x));
  return {{b.is_infinite() ? "cofinite" : "finite", pts}};
}

// analyze ---------------------------------------------------------------

template <class L>
json analyze(const measure::FiniteMeasure<L>& m) {
  const auto& ctx = m.context();
  const auto& lat = m.lattice();
  json out{{"backend", "finite"}, {"lattice_properties", domain_json(lat)}};
  out["flags"] = flags_json(measure::classify(m));
  json cplus = json::array();
  const auto c = m.cplus();
  for (std::size_t a = 0; a < ctx.atom_count(); ++a)
    cplus.push_back({{"atom", io::atom_name(ctx.borel(), a)}, {"value", lat.format(c[a])}});
  out["cplus"] = cplus;
  json dens = nullptr;
  if constexpr (order::EnumerableLattice<L>) {
    if (const auto s = measure::search_densities(m)) {
      dens = {{"cardinal", s->cardinal},
              {"usc", s->usc},
              {"upper_compact_usc", s->upper_compact_usc},
              {"cardinal_count", s->cardinal_densities.size()}};
    }
  }
  out["density_search"] = dens;
  return out;
}

template <class L>
json analyze(const measure::TailMeasure<L>& m) {
  const auto& lat = m.lattice();
  json out{{"backend", "countable"}, {"lattice_properties", domain_json(lat)}};
  out["flags"] = flags_json(measure::classify(m));
  // On a discrete space c⁺(x) = ν⁺({x}) = ν({x}).
  const auto& d = m.density();
  json exc = json::object();
  for (const auto& [x, v] : d.exceptions) exc[std::to_string(x)] = lat.format(v);
  out["cplus"] = {{"exceptions", exc}, {"tail", lat.format(d.tail)}};
  out["density_search"] = nullptr;
  return out;
}

// decompose -------------------------------------------------------------

template <class M, class Sets, class Name>
json decomposition_json(const M& m, const decomp::Decomposition<M>& d, const Sets& sets, Name name) {
  const auto& lat = m.lattice();
  json rows = json::array();
  for (const auto& b : sets) {
    rows.push_back({{"set", name(b)},
                    {"nu", lat.format(m(b))},
                    {"nu_plus", lat.format(d.outer_reg(b))},
                    {"regular_part", lat.format(d.regular_part(b))},
                    {"singular_part", lat.format(d.singular_part(b))}});
  }
  return {{"kind", decomp::kind_name(d.kind)},
          {"identity_holds", d.identity_holds},
          {"minimality_checked", d.minimality_checked},
          {"table", rows}};
}

template <class L>
json decompose(const measure::FiniteMeasure<L>& m) {
  const auto d = decomp::decompose(m);
  std::vector<AtomSet> sets;
  for (std::uint64_t b = 0; b < m.context().borel_count(); ++b) sets.emplace_back(b);
  auto out = decomposition_json(m, d, sets, [&](AtomSet b) { return set_json(m.context(), b); });
  out["backend"] = "finite";
  out["sets"] = "borel";
  return out;
}

template <class L>
json decompose(const measure::TailMeasure<L>& m) {
  const auto d = decomp::decompose(m);
  const auto sets = countable::canonical_sets(m.reference());
  auto out = decomposition_json(m, d, sets, [](const countable::FinCofinSet& b) { return set_json(b); });
  out["backend"] = "countable";
  out["sets"] = "canonical";
  return out;
}

// output ----------------------------------------------------------------

/// Writes the whole document in one go; to a file via a temporary and a
/// rename so readers never see a partial report.
void emit(const json& doc, const std::string& path) {
  const auto text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

struct Bounds {
  std::optional<std::size_t> n;
  std::optional<std::size_t> lattice;
};

Bounds parse_bounds(const std::string& text) {
  Bounds b;
  if (text.empty()) return b;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--bounds: expected key=value, got '" + item + "'");
    const auto key = item.substr(0, eq);
    const auto val = item.substr(eq + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size() || val.front() == '-') throw InputError("--bounds: bad value for " + key);
    if (key == "n") b.n = v;
    else if (key == "lattice") b.lattice = v;
    else throw InputError("--bounds: unknown key '" + key + "'");
    pos = end + 1;
  }
  return b;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maxitive measures on finite and countable spaces"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));
  app.add_option("-o,--output", output, "Write the report to a file instead of standard output");

  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a measure");
  analyze_cmd->add_option("instance", path, "Instance file")->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "Regular and singular parts of a measure");
  decompose_cmd->add_option("instance", path, "Instance file")->required();

  std::string suite;
  std::string bounds_text;
  std::uint64_t seed = 0;
  std::string mode = "exhaustive";
  std::size_t samples = 8;
  std::size_t threads = 0;
  bool all_lattices = false;
  bool no_countable = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem cases over generated instances");
  verify_cmd->add_option("suite", suite, "Case id, or 'all'")->required();
  verify_cmd->add_option("--bounds", bounds_text, "n=<points>,lattice=<size>");
  verify_cmd->add_option("--seed", seed, "Seed for sampled mode");
  verify_cmd->add_option("--mode", mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--samples", samples, "Densities drawn per space and lattice in sampled mode");
  verify_cmd->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  verify_cmd->add_flag("--all-lattices", all_lattices, "Every lattice of the given size instead of the chain");
  verify_cmd->add_flag("--no-countable", no_countable, "Skip the countable tail grid");

  std::optional<std::size_t> enum_n;
  bool dump = false;
  std::string enum_bounds;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count topologies on n labeled points");
  enumerate_cmd->add_option("n", enum_n, "Number of points");
  enumerate_cmd->add_option("--bounds", enum_bounds, "n=<points>");
  enumerate_cmd->add_flag("--dump", dump, "List every space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed() || decompose_cmd->parsed()) {
      const bool is_analyze = analyze_cmd->parsed();
      const auto inst = io::load_instance(path);
      auto doc = report(is_analyze ? "analyze" : "decompose");
      doc["instance"] = io::to_json(inst);
      const auto body = std::visit([&](const auto& m) { return is_analyze ? analyze(m) : decompose(m); }, inst.measure);
      doc.update(body);
      emit(doc, output);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto b = parse_bounds(bounds_text);
      harness::GeneratorConfig c;
      c.points = b.n.value_or(c.points);
      c.lattice = b.lattice.value_or(c.lattice);
      c.seed = seed;
      c.mode = mode == "sampled" ? harness::Mode::sampled : harness::Mode::exhaustive;
      c.samples = samples;
      c.threads = threads;
      c.all_lattices = all_lattices;
      c.countable = !no_countable;
      std::vector<std::string> ids;
      if (suite != "all") ids.push_back(suite);
      const auto result = harness::run_suite(ids, c);
      auto doc = report("verify");
      doc["suite"] = suite;
      doc.update(harness::to_json(result));
      emit(doc, output);
      return result.total_violations() == 0 ? kOk : kViolation;
    }
    if (enumerate_cmd->parsed()) {
      const auto b = parse_bounds(enum_bounds);
      if (b.lattice) throw InputError("--bounds: enumerate takes only n");
      if (enum_n && b.n && *enum_n != *b.n) throw InputError("conflicting point counts");
      const auto n = enum_n ? *enum_n : b.n.value_or(0);
      if (!enum_n && !b.n) throw InputError("enumerate needs a point count");
      if (n > space::kMaxEnumeratedPoints)
        throw BudgetError("topologies are enumerated for at most " + std::to_string(space::kMaxEnumeratedPoints) +
                          " points");
      const auto spaces = space::enumerate_topologies(n);
      auto doc = report("enumerate");
      doc["n"] = n;
      doc["count"] = spaces.size();
      if (dump) {
        json list = json::array();
        for (const auto& s : spaces) list.push_back(io::space_json(s));
        doc["spaces"] = list;
      }
      emit(doc, output);
      return kOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\nwitness: " << e.witness() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kViolation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
