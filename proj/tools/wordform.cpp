#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordform/report/commands.hpp"

using namespace wordform;

namespace {

void add_construction(CLI::App* sub, RunConfig& c) {
  sub->add_option("--k", c.k, "word length")->check(CLI::PositiveNumber);
  sub->add_option("--d", c.d, "construction depth parameter")->check(CLI::PositiveNumber);
  sub->add_option("--polarity", c.polarity, "sigma or pi")->check(CLI::IsMember({"sigma", "pi"}));
  sub->add_option("--u0", c.u0, "row of the entry, 1-based")->check(CLI::PositiveNumber);
  sub->add_option("--uk", c.uk, "column of the entry, 1-based")->check(CLI::PositiveNumber);
}

void add_sampling(CLI::App* sub, RunConfig& c) {
  auto* ex = sub->add_flag("--exhaustive", c.exhaustive, "enumerate every instance");
  sub->add_option("--budget", c.budget, "sampled instances")->excludes(ex);
  sub->add_option("--seed", c.seed, "sampling seed");
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto item = text.substr(start, end - start);
    if (!item.empty()) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || v == 0) throw ParseError("bad list entry '" + item + "'");
      out.push_back(static_cast<std::size_t>(v));
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant formulas for the word problem: constructions, stabilizers and lemma sweeps"};
  app.require_subcommand(1);
  RunConfig c;
  std::string output;
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_flag("--timings", c.timings, "include wall-clock timings in the report");
  app.add_option("--max-elements", c.ceilings.elements, "ceiling on enumerated group elements")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subgroups", c.ceilings.subgroups, "ceiling on enumerated subgroups")
      ->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "build the depth-d formula and compare with the size law");
  construct->add_option("--n", c.n, "matrix dimension")->required()->check(CLI::PositiveNumber);
  add_construction(construct, c);
  construct->add_option("--emit", c.emit_file, "write the formula as an s-expression");

  auto* verify = app.add_subcommand("verify", "check a formula against the word oracle and for invariance");
  verify->add_option("--group", c.group_file, "group file")->required();
  add_construction(verify, c);
  verify->add_option("--formula", c.formula_file, "s-expression file instead of the construction");
  verify->add_option("--samples", c.samples, "sampled points when the domain is large");
  verify->add_option("--exhaustive-limit", c.exhaustive_limit, "largest domain checked exhaustively");
  verify->add_option("--seed", c.seed, "sampling seed");

  auto* stabilizer = app.add_subcommand("stabilizer", "syntactic and semantic stabilizers");
  stabilizer->add_option("--group", c.group_file, "group file")->required();
  add_construction(stabilizer, c);
  stabilizer->add_option("--action", c.action, "shifted-diagonal, left-right, left-only or abelian-lift")
      ->check(CLI::IsMember({"shifted-diagonal", "left-right", "left-only", "abelian-lift"}));
  stabilizer->add_option("--formula", c.formula_file, "s-expression file instead of the construction");

  auto* mu = app.add_subcommand("mu", "largest component of E(H) and E(K) in the left-right group");
  mu->add_option("--group", c.group_file, "group file")->required();
  mu->add_option("--k", c.k, "word length")->required()->check(CLI::PositiveNumber);
  mu->add_option("--H", c.h_file, "subgroup file")->required();
  mu->add_option("--K", c.k_file, "subgroup file")->required();

  auto* beta = app.add_subcommand("beta", "interval for beta by good-tuple search");
  beta->add_option("--group", c.group_file, "group file")->required();
  add_construction(beta, c);
  beta->add_option("--rmax", c.r_max, "largest tuple length")->check(CLI::PositiveNumber);
  beta->add_option("--lattice-limit", c.beta_lattice, "largest subgroup lattice searched");
  beta->add_option("--H", c.h_file, "subgroup file (default: stabilizer of the word)");
  beta->add_option("--K", c.k_file, "subgroup file (default: stabilizer of the word)");

  auto* sweep = app.add_subcommand("sweep", "lemma sweep over subgroups of G^2 or the left-right group");
  sweep->add_option("--lemma", c.lemma, "intersection, shrinkage, support, diag or quotient")
      ->required()
      ->check(CLI::IsMember({"intersection", "shrinkage", "support", "diag", "quotient"}));
  sweep->add_option("--group", c.group_file, "group file")->required();
  sweep->add_option("--k", c.k, "word length")->check(CLI::PositiveNumber);
  add_sampling(sweep, c);

  auto* fp_mu = app.add_subcommand("fp-mu", "minimum-weight witness of a subspace of F_p^k");
  fp_mu->add_option("--p", c.p, "prime")->required();
  fp_mu->add_option("--k", c.k, "dimension")->required()->check(CLI::PositiveNumber);
  fp_mu->add_option("--basis", c.basis_file, "one vector per line, entries separated by spaces")->required();

  auto* fp_sweep = app.add_subcommand("fp-sweep", "lemma sweep over subspaces of F_p^k");
  fp_sweep->add_option("--lemma", c.lemma, "intersection, shrinkage, perp-unique, dim-bound or literal-mu")
      ->required()
      ->check(CLI::IsMember({"intersection", "shrinkage", "perp-unique", "dim-bound", "literal-mu"}));
  fp_sweep->add_option("--p", c.p, "prime");
  fp_sweep->add_option("--q", c.q, "prime power for dim-bound and literal-mu");
  fp_sweep->add_option("--k", c.k, "dimension")->required()->check(CLI::PositiveNumber);
  add_sampling(fp_sweep, c);

  auto* params = app.add_subcommand("group-params", "order, simplicity, q(G) and n(G)");
  params->add_option("--group", c.group_file, "group file")->required();

  auto* grid = app.add_subcommand("grid", "constructions over C_n with lower bound, size and envelope");
  std::string n_values = "2,3", k_values = "2,4,9", d_values = "1,2";
  grid->add_option("--n-values", n_values, "comma-separated matrix dimensions, may be empty");
  grid->add_option("--k-values", k_values, "comma-separated word lengths, may be empty");
  grid->add_option("--d-values", d_values, "comma-separated depth parameters, may be empty");
  grid->add_option("--corrupt", c.corrupt_row, "flip one literal in this row (0-based)");
  grid->add_option("--samples", c.samples, "sampled points when the domain is large");
  grid->add_option("--exhaustive-limit", c.exhaustive_limit, "largest domain checked exhaustively");
  grid->add_option("--seed", c.seed, "sampling seed");
  grid->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  CLI11_PARSE(app, argc, argv);
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  try {
    c.n_values = parse_list(n_values);
    c.k_values = parse_list(k_values);
    c.d_values = parse_list(d_values);
    const auto report = run(c);
    const std::string text = c.format == "tsv" && c.command == "grid" ? report.table : render_json(report);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw PreconditionError("cannot write " + output);
      out << text;
    }
    return report.ok ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const CeilingExceeded& e) {
    std::cerr << "ceiling exceeded: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
