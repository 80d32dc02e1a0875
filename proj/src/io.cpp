#include "uvlab/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uvlab/errors.hpp"

namespace uvlab {

using nlohmann::json;

FiniteBA parse_ba(const json& doc) {
  if (!doc.is_object()) throw SchemaError("ba document must be an object");
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_number_integer())
      throw SchemaError("\"atoms\" must be an integer");
    FiniteBA a = powerset_ba(doc["atoms"].get<int>());
    if (doc.contains("atom_labels")) {
      auto labels = doc["atom_labels"].get<std::vector<std::string>>();
      if (static_cast<int>(labels.size()) != a.atoms)
        throw SchemaError("atom_labels size mismatch");
      a.atom_labels = std::move(labels);
    }
    return a;
  }
  for (const char* key : {"carrier", "meet", "join", "neg", "zero", "one"})
    if (!doc.contains(key))
      throw SchemaError(std::string("ba table document lacks \"") + key +
                        "\"");
  try {
    TableValidation v = ba_from_tables(
        doc["carrier"].get<int>(),
        doc["meet"].get<std::vector<std::vector<int>>>(),
        doc["join"].get<std::vector<std::vector<int>>>(),
        doc["neg"].get<std::vector<int>>(), doc["zero"].get<int>(),
        doc["one"].get<int>());
    return v.ba;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed ba tables: ") + e.what());
  }
}

json emit_ba(const FiniteBA& a) {
  json doc;
  doc["atoms"] = a.atoms;
  if (!a.atom_labels.empty()) doc["atom_labels"] = a.atom_labels;
  return doc;
}

Poset parse_poset(const json& doc) {
  if (!doc.is_object()) throw SchemaError("poset document must be an object");
  std::vector<std::string> elements;
  if (doc.contains("elements")) {
    try {
      elements = doc["elements"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw SchemaError(std::string("malformed elements: ") + e.what());
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("leq")) {
    if (!doc["leq"].is_array()) throw SchemaError("\"leq\" must be an array");
    for (const auto& entry : doc["leq"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
          !entry[1].is_string())
        throw SchemaError("each leq entry must be a pair of names");
      pairs.emplace_back(entry[0].get<std::string>(),
                         entry[1].get<std::string>());
    }
  }
  if (!elements.empty()) {
    for (const auto& [a, b] : pairs) {
      auto known = [&](const std::string& s) {
        for (const auto& e : elements)
          if (e == s) return true;
        return false;
      };
      if (!known(a) || !known(b))
        throw SchemaError("leq pair references an undeclared element");
    }
  }
  return validate_poset(elements, pairs);
}

json emit_poset(const Poset& p) {
  json doc;
  {
    std::vector<std::string> names(p.n);
    for (int i = 0; i < p.n; ++i) names[i] = p.label(i);
    doc["elements"] = std::move(names);
  }
  json leq = json::array();
  for (auto [a, b] : p.covers())
    leq.push_back(json::array({p.label(a), p.label(b)}));
  doc["leq"] = std::move(leq);
  return doc;
}

FiniteSpace parse_space(const json& doc) { return FiniteSpace{parse_poset(doc)}; }

json emit_space(const FiniteSpace& x) { return emit_poset(x.order); }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return doc;
}

SpaceMap parse_map(const json& doc, const std::string& base_dir) {
  if (!doc.is_object() || !doc.contains("dom") || !doc.contains("cod") ||
      !doc.contains("map"))
    throw SchemaError("map document needs dom, cod and map");
  auto resolve = [&](const std::string& p) {
    if (!p.empty() && p.front() == '/') return p;
    return base_dir.empty() ? p : base_dir + "/" + p;
  };
  SpaceMap f;
  f.dom = parse_space(load_json_file(resolve(doc["dom"].get<std::string>())));
  f.cod = parse_space(load_json_file(resolve(doc["cod"].get<std::string>())));
  f.map.assign(f.dom.points(), -1);
  if (!doc["map"].is_object()) throw SchemaError("\"map\" must be an object");
  for (auto it = doc["map"].begin(); it != doc["map"].end(); ++it) {
    int from = f.dom.order.id_of(it.key());
    int to = f.cod.order.id_of(it.value().get<std::string>());
    f.map[from] = to;
  }
  for (int v : f.map)
    if (v < 0) throw SchemaError("map is not total on the domain");
  return f;
}

json emit_map(const SpaceMap& f, const std::string& dom_path,
              const std::string& cod_path) {
  json doc;
  doc["dom"] = dom_path;
  doc["cod"] = cod_path;
  json m = json::object();
  for (int p = 0; p < f.dom.points(); ++p)
    m[f.dom.order.label(p)] = f.cod.order.label(f.map[p]);
  doc["map"] = std::move(m);
  return doc;
}

RegularPartition parse_partition(const nlohmann::json& doc,
                                 const FiniteSpace& x) {
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
    throw SchemaError("partition document needs a blocks array");
  RegularPartition part;
  for (const auto& block : doc["blocks"]) {
    if (!block.is_array()) throw SchemaError("each block must be an array");
    Mask b = 0;
    for (const auto& name : block) {
      if (!name.is_string()) throw SchemaError("block members must be names");
      b |= Mask{1} << x.order.id_of(name.get<std::string>());
    }
    part.blocks.push_back(b);
  }
  validate_partition(x, part);
  return part;
}

json emit_partition(const FiniteSpace& x, const RegularPartition& part) {
  json blocks = json::array();
  for (Mask b : part.blocks) {
    json names = json::array();
    for (int p : mask_elems(b)) names.push_back(x.order.label(p));
    blocks.push_back(std::move(names));
  }
  return json{{"blocks", std::move(blocks)}};
}

std::string export_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < p.n; ++i)
    out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [a, b] : p.covers())
    out << "  n" << a << " -> n" << b << ";\n";
  // Maximal elements share the top rank.
  Mask maxes = p.maximal_elements();
  if (p.n > 0) {
    out << "  { rank=max;";
    for (int i : mask_elems(maxes)) out << " n" << i << ";";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace uvlab
