#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "uvlab/applications.hpp"
#include "uvlab/balg.hpp"
#include "uvlab/space.hpp"

namespace uvlab {

// Document schemas:
//   ba.json:     {"atoms": k}  or  {"carrier": n, "meet": [[..]],
//                "join": [[..]], "neg": [..], "zero": i, "one": j}
//   poset.json / space.json: {"elements": [names], "leq": [[a, b], ...]}
//   map.json:    {"dom": file, "cod": file, "map": {name: name}}
// Emission is canonical: emit(parse(d)) is idempotent.

FiniteBA parse_ba(const nlohmann::json& doc);
nlohmann::json emit_ba(const FiniteBA& a);

Poset parse_poset(const nlohmann::json& doc);
nlohmann::json emit_poset(const Poset& p);  // covers only, canonical order

FiniteSpace parse_space(const nlohmann::json& doc);
nlohmann::json emit_space(const FiniteSpace& x);

// dom/cod paths resolve relative to base_dir.
SpaceMap parse_map(const nlohmann::json& doc, const std::string& base_dir);
// The emitted document refers to the spaces through the given paths.
nlohmann::json emit_map(const SpaceMap& f, const std::string& dom_path,
                        const std::string& cod_path);

// Partition documents name the points of each block:
//   {"blocks": [["y1"], ["y2"]]}
// Parsing re-validates the regular-partition invariants on the space.
RegularPartition parse_partition(const nlohmann::json& doc,
                                 const FiniteSpace& x);
nlohmann::json emit_partition(const FiniteSpace& x,
                              const RegularPartition& part);

nlohmann::json load_json_file(const std::string& path);  // SchemaError

// Hasse diagram of the covering relation, maximal elements on the top
// rank, deterministic node order.
std::string export_dot(const Poset& p, const std::string& name = "poset");

}  // namespace uvlab
