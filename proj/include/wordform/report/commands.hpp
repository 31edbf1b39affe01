#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordform/error.hpp"
#include "wordform/report/report.hpp"

namespace wordform {

struct RunConfig {
  std::string command;
  std::string group_file;
  std::size_t n = 2, k = 2, d = 1;
  std::string polarity = "sigma";
  std::uint32_t u0 = 1, uk = 1;  // 1-based
  std::string action = "shifted-diagonal";
  std::string formula_file;
  std::string emit_file;
  std::string h_file, k_file, basis_file;
  std::string lemma;
  std::uint32_t p = 2;
  std::uint32_t q = 0;
  std::size_t r_max = 4;
  std::size_t beta_lattice = 64;
  bool exhaustive = false;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  std::size_t exhaustive_limit = 100000;
  std::vector<std::size_t> n_values{2, 3}, k_values{2, 4, 9}, d_values{1, 2};
  std::optional<std::size_t> corrupt_row;
  std::string format = "json";
  bool timings = false;
  Ceilings ceilings;
};

/// Dispatches to the subcommand. Input and ceiling errors propagate as exceptions.
Report run(const RunConfig& config);

/// Names of the subcommands, in help order.
const std::vector<std::string>& command_names();

}  // namespace wordform
