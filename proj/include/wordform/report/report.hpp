#pragma once

#include <string>

#include "wordform/witness/witness_report.hpp"

namespace wordform {

inline constexpr int report_schema_version = 1;

enum class Provenance { measured, paper_formula, derived_oracle };

std::string to_string(Provenance p);

/// {"value": v, "provenance": p}.
Json claim(const Json& value, Provenance p);

/// One run of one subcommand: a JSON body, a pass flag, and an optional TSV table.
struct Report {
  Json body = Json::object();
  bool ok = true;
  std::string table;

  /// Records a named assertion under "checks" and folds it into `ok`.
  void check(const std::string& name, bool pass);
};

/// Pretty JSON with a trailing newline.
std::string render_json(const Report& r);

}  // namespace wordform
