#pragma once

// Reference tables of w_GL(K_n), its primitive projection and the
// Harish-Chandra images, embedded at build time.

#include <map>
#include <string>
#include <string_view>

#include "glw/polyring.hpp"

namespace glw {

struct GoldenTables {
  int version = 0;
  /// table name -> entry key -> value. Tables: wgl_c, wgl_p, wbar_c, wbar_p
  /// (keys "K2".."K7") and phi_casimir (keys "1".."4").
  std::map<std::string, std::map<std::string, Polynomial>> tables;
  /// "wgl_K2", "wgl_132".
  std::map<std::string, Polynomial> worked_examples;
};

/// The embedded fixture text.
std::string_view golden_tables_json();
/// Parses a fixture document; throws ParseError on a wrong format or version.
GoldenTables parse_golden_tables(std::string_view json_text);
/// Parsed embedded fixture (parsed once).
const GoldenTables& golden_tables();

} // namespace glw
