#include "wordform/witness/witness_report.hpp"

namespace wordform {

Json to_json(const WitnessReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["mode"] = r.mode;
  if (r.budget) j["budget"] = *r.budget;
  if (r.seed) j["seed"] = *r.seed;
  j["instances"] = r.instances;
  j["passes"] = r.passes;
  j["excluded_hypothesis_violations"] = r.excluded;
  j["counterexamples"] = r.counterexamples;
  j["extremal"] = r.extremal;
  j["ok"] = r.ok();
  return j;
}

}  // namespace wordform
