#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wordform {

using Json = nlohmann::ordered_json;

struct SweepMode {
  bool exhaustive = true;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
};

/// Outcome of a lemma sweep. passes + counterexamples.size() == instances;
/// instances that break the lemma's hypotheses are counted in `excluded` only.
struct WitnessReport {
  std::string lemma;
  std::string mode = "exhaustive";
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;
  std::uint64_t excluded = 0;
  std::vector<Json> counterexamples;
  Json extremal = Json::object();
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;

  bool ok() const { return counterexamples.empty() && passes == instances; }

  void record(bool pass, const Json& detail) {
    ++instances;
    if (pass)
      ++passes;
    else
      counterexamples.push_back(detail);
  }
};

Json to_json(const WitnessReport& r);

}  // namespace wordform
