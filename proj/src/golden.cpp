#include "glw/golden.hpp"

#include <nlohmann/json.hpp>

#include "glw/errors.hpp"

namespace glw {

namespace detail {
std::string_view golden_tables_text();
}

std::string_view golden_tables_json() { return detail::golden_tables_text(); }

GoldenTables parse_golden_tables(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("golden tables: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "glw-golden-tables")
    throw ParseError("golden tables: unexpected format tag");
  if (doc.value("version", 0) != 1)
    throw ParseError("golden tables: unsupported version");
  GoldenTables g;
  g.version = 1;
  auto read = [](const nlohmann::json& entry, const std::string& where) {
    if (!entry.is_string())
      throw ParseError("golden tables: " + where + " is not a string");
    try {
      return parse_polynomial(entry.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("golden tables: " + where + ": " + e.what());
    }
  };
  for (const auto& [table, entries] : doc.at("tables").items())
    for (const auto& [key, value] : entries.items())
      g.tables[table].emplace(key, read(value, table + "/" + key));
  for (const auto& [key, value] : doc.at("worked_examples").items())
    g.worked_examples.emplace(key, read(value, "worked_examples/" + key));
  return g;
}

const GoldenTables& golden_tables() {
  static const GoldenTables tables = parse_golden_tables(golden_tables_json());
  return tables;
}

} // namespace glw
