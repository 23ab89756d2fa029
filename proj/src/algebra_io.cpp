#include <evoalg/algebra_io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace evoalg {

namespace {

using nlohmann::json;

Rat entry_to_rat(const json& cell, const std::string& where) {
  if (cell.is_string()) {
    try {
      return parse_rat(cell.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (cell.is_number_integer()) return Rat(cell.get<long>());
  throw ParseError(where + ": expected a rational string like \"p/q\"");
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level value must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("missing integer field \"dim\"");
  const long dim = doc["dim"].get<long>();
  if (dim < 1) throw ParseError("\"dim\" must be >= 1");
  if (!doc.contains("squares") || !doc["squares"].is_array())
    throw ParseError("missing array field \"squares\"");
  const auto& squares = doc["squares"];
  if (squares.size() != static_cast<std::size_t>(dim)) {
    std::ostringstream msg;
    msg << "\"squares\" has " << squares.size() << " rows, expected " << dim;
    throw ParseError(msg.str());
  }
  RatMatrix structure(dim, dim);
  for (std::size_t r = 0; r < squares.size(); ++r) {
    const auto& row = squares[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      std::ostringstream msg;
      msg << "squares[" << r << "] must be an array of " << dim << " entries";
      throw ParseError(msg.str());
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::ostringstream where;
      where << "squares[" << r << "][" << c << "]";
      structure.at(r, c) = entry_to_rat(row[c], where.str());
    }
  }

  AlgebraFile out{EvolutionAlgebra(std::move(structure)), std::nullopt, {}, {}};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) throw ParseError("\"params\" must be an object");
    for (const auto& [key, value] : doc["params"].items())
      out.params[key] = entry_to_rat(value, "params." + key);
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "dim" && key != "squares" && key != "name" && key != "params")
      out.warnings.push_back("ignoring unknown field \"" + key + "\"");
  }
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str());
}

std::string serialize_algebra(const EvolutionAlgebra& e, const std::optional<std::string>& name) {
  json doc;
  doc["dim"] = e.dim();
  json squares = json::array();
  for (std::size_t r = 0; r < e.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < e.dim(); ++c) row.push_back(to_string(e.structure().at(r, c)));
    squares.push_back(std::move(row));
  }
  doc["squares"] = std::move(squares);
  if (name) doc["name"] = *name;
  return doc.dump(2) + "\n";
}

}  // namespace evoalg
