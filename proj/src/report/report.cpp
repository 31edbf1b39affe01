#include "wordform/report/report.hpp"

namespace wordform {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::measured: return "measured";
    case Provenance::paper_formula: return "paper-formula";
    case Provenance::derived_oracle: return "derived-oracle";
  }
  return "measured";
}

Json claim(const Json& value, Provenance p) {
  Json j;
  j["value"] = value;
  j["provenance"] = to_string(p);
  return j;
}

void Report::check(const std::string& name, bool pass) {
  body["checks"][name] = pass;
  ok = ok && pass;
}

std::string render_json(const Report& r) { return r.body.dump(2) + "\n"; }

}  // namespace wordform
