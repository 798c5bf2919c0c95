// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxitive/measure/finite_measure.hpp"
#include "maxitive/measure/tail_measure.hpp"
#include "maxitive/order/extreal.hpp"
#include "maxitive/order/finite_poset.hpp"

#include <json.hpp>

#include <filesystem>
#include <variant>

namespace maxitive::io {

using json = nlohmann::json;
using order::ExtRealLattice;
using order::FinitePoset;

using FiniteP = measure::FiniteMeasure<FinitePoset>;
using FiniteX = measure::FiniteMeasure<ExtRealLattice>;
using TailP = measure::TailMeasure<FinitePoset>;
using TailX = measure::TailMeasure<ExtRealLattice>;
using AnyMeasure = std::variant<FiniteP, FiniteX, TailP, TailX>;

/// How the measure was written: a point density, a full table of Borel
/// sets, or a tail density on ℕ.
enum class MeasureForm { density, table, tail };

struct Instance {
  AnyMeasure measure;
  MeasureForm form = MeasureForm::density;
};

/// Throws InputError naming the offending JSON path, or ValidationError
/// with a witness when the data do not define a maxitive measure.
Instance parse_instance(const json& doc);
/// Reads and parses a file; JSON syntax errors become InputError with the
/// byte offset.
Instance load_instance(const std::filesystem::path& path);

/// Canonical serialization: parse(to_json(x)) reproduces x, and
/// to_json(parse(d)) = d for documents already in canonical form.
json to_json(const Instance& instance);

json lattice_json(const FinitePoset& lattice);
json lattice_json(const ExtRealLattice& lattice);
/// {"kind":"finite","points":[...],"subbasis":[...]}, with the subbasis
/// given by the distinct minimal open neighbourhoods other than the whole
/// space.
json space_json(const space::FiniteSpace& space);

json instance_json(const FiniteP& m, MeasureForm form = MeasureForm::density);
json instance_json(const FiniteX& m, MeasureForm form = MeasureForm::density);
json instance_json(const TailP& m);
json instance_json(const TailX& m);

/// Sorted list of atom names: a point name, or "[a,b]" for an atom with
/// several points.
json borel_set_json(const space::BorelStructure& borel, AtomSet b);
std::string atom_name(const space::BorelStructure& borel, std::size_t atom);

} // namespace maxitive::io
