#include "alia/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alia/errors.hpp"
#include "alia/presets.hpp"
#include "alia/rational_io.hpp"

namespace alia {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lie_algebra_to_json(const StructLieAlgebra& g) {
  json j;
  j["dim"] = g.dim();
  j["field_order"] = g.order();
  j["labels"] = g.labels();
  if (g.grading()) j["grading"] = *g.grading();
  json entries = json::array();
  for (const auto& [key, entry] : g.structure_constants())
    for (const auto& [k, c] : entry)
      entries.push_back(json::array({key.first, key.second, k, c.str()}));
  j["entries"] = std::move(entries);
  return j.dump(2);
}

StructLieAlgebra lie_algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("lie algebra JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("labels") || !j.contains("entries"))
    throw ConfigError("lie algebra JSON: need dim, labels, entries");
  long dim = j["dim"].get<long>();
  long order = j.value("field_order", 1L);
  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  StructureConstants sc;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 4) throw ConfigError("lie algebra JSON: bad entry");
    long i = e[0].get<long>(), jj = e[1].get<long>(), k = e[2].get<long>();
    CycScalar c = parse_scalar(e[3].get<std::string>(), order).embed(order);
    if (i >= jj) throw ConfigError("lie algebra JSON: entries must be keyed with i < j");
    sc[{i, jj}].emplace_back(k, c);
  }
  std::optional<std::vector<long>> grading;
  if (j.contains("grading")) grading = j["grading"].get<std::vector<long>>();
  return StructLieAlgebra(dim, order, std::move(labels), std::move(sc), std::move(grading));
}

namespace {

ExactMatrix matrix_from_json(const json& j, long order) {
  if (!j.is_array() || j.empty()) throw ConfigError("config: matrix must be a non-empty array");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j[0].size());
  ExactMatrix m(rows, cols, order);
  for (long r = 0; r < rows; ++r) {
    if (static_cast<long>(j[r].size()) != cols) throw ConfigError("config: ragged matrix");
    for (long c = 0; c < cols; ++c) {
      const auto& cell = j[r][c];
      if (cell.is_number_integer())
        m.at(r, c) = CycScalar::integer(cell.get<long>(), order);
      else
        m.at(r, c) = parse_scalar(cell.get<std::string>(), order).embed(order);
    }
  }
  return m;
}

json parse_config(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("action config: ") + e.what());
  }
}

}  // namespace

GroupAction parse_action_config(const std::string& text) {
  json j = parse_config(text);
  if (!j.contains("lie") || !j.contains("poles"))
    throw ConfigError("action config: need 'lie' and 'poles'");
  long order = j.value("field_order", 1L);
  // collect the session order from all scalar expressions up front
  auto scan = [&order](const std::string& s) {
    // cheap scan: parse and take the order of the result
    CycScalar v = parse_scalar(s, 1);
    order = lcm_long(order, v.order());
  };
  for (const auto& p : j["poles"]) {
    std::string s = p.get<std::string>();
    if (s != "inf" && s != "infinity" && s != "oo") scan(s);
  }
  if (j.contains("generators"))
    for (const auto& g : j["generators"])
      for (const char* key : {"lie_matrix", "mobius"})
        for (const auto& row : g.at(key))
          for (const auto& cell : row)
            if (cell.is_string()) scan(cell.get<std::string>());

  StructLieAlgebra lie;
  if (j["lie"].is_string())
    lie = lie_preset(j["lie"].get<std::string>(), order);
  else
    lie = lie_algebra_from_json(j["lie"].dump()).embed(order);

  std::vector<SpherePoint> poles;
  for (const auto& p : j["poles"]) poles.push_back(parse_point(p.get<std::string>(), order));

  std::vector<GroupElement> generators;
  std::vector<std::string> names;
  if (j.contains("generators")) {
    for (const auto& g : j["generators"]) {
      if (!g.contains("name") || !g.contains("lie_matrix") || !g.contains("mobius"))
        throw ConfigError("action config: generator needs name, lie_matrix, mobius");
      GroupElement e;
      e.lie = matrix_from_json(g["lie_matrix"], order);
      e.mobius = matrix_from_json(g["mobius"], order);
      if (e.lie.rows() != lie.dim() || e.lie.cols() != lie.dim())
        throw ConfigError("action config: lie_matrix shape must match the algebra dimension");
      if (e.mobius.rows() != 2 || e.mobius.cols() != 2)
        throw ConfigError("action config: mobius must be 2x2");
      names.push_back(g["name"].get<std::string>());
      generators.push_back(std::move(e));
    }
  }
  long cap = j.value("max_elements", 200L);
  return GroupAction(std::move(lie), std::move(generators), std::move(names), std::move(poles),
                     cap);
}

GroupAction load_action_config(const std::string& path) {
  return parse_action_config(read_text_file(path));
}

std::vector<std::pair<std::string, std::string>> config_named_elements(const std::string& text) {
  json j = parse_config(text);
  std::vector<std::pair<std::string, std::string>> out;
  if (j.contains("named_elements"))
    for (auto it = j["named_elements"].begin(); it != j["named_elements"].end(); ++it)
      out.emplace_back(it.key(), it.value().get<std::string>());
  return out;
}

std::vector<std::pair<std::string, std::string>> file_named_elements(const std::string& path) {
  return config_named_elements(read_text_file(path));
}

}  // namespace alia
