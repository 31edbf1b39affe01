#include "wordform/report/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "wordform/formula/sexpr.hpp"
#include "wordform/fp/sweeps.hpp"
#include "wordform/fp/witness.hpp"
#include "wordform/group/group_io.hpp"
#include "wordform/group/lattice.hpp"
#include "wordform/group/params.hpp"
#include "wordform/word/construct.hpp"
#include "wordform/word/verify.hpp"
#include "wordform/witness/beta.hpp"
#include "wordform/witness/framework.hpp"
#include "wordform/witness/sweeps.hpp"

namespace wordform {

namespace {

using Clock = std::chrono::steady_clock;

std::shared_ptr<const PermGroup> require_group(const RunConfig& c) {
  if (c.group_file.empty()) throw PreconditionError("--group is required for " + c.command);
  return load_group(c.group_file, c.ceilings);
}

ConstructionParams params_for(const RunConfig& c, std::size_t n) {
  if (c.u0 < 1 || c.u0 > n || c.uk < 1 || c.uk > n) throw PreconditionError("u0 and uk must lie in 1..n");
  return {n, c.k, c.d, polarity_from_string(c.polarity), c.u0 - 1, c.uk - 1};
}

bool is_exact(std::size_t k, std::size_t d) { return exact_root(k, d).has_value(); }

Formula build(const ConstructionParams& p) { return is_exact(p.k, p.d) ? build_exact(p) : build_general(p); }

// The formula from --formula, or the construction over n points.
Formula formula_for(const RunConfig& c, std::size_t n, bool& built) {
  built = c.formula_file.empty();
  if (!built) return parse_sexpr(read_file(c.formula_file));
  return build(params_for(c, n));
}

Json config_echo(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  auto put = [&](const char* key, const Json& v) { j[key] = v; };
  if (!c.group_file.empty()) put("group", c.group_file);
  const auto& cmd = c.command;
  if (cmd == "construct") put("n", c.n);
  if (cmd == "construct" || cmd == "verify" || cmd == "stabilizer" || cmd == "beta") {
    put("d", c.d);
    put("u0", c.u0);
    put("uk", c.uk);
    put("polarity", c.polarity);
  }
  if (cmd != "group-params" && cmd != "grid" && cmd != "fp-mu") put("k", c.k);
  if (cmd == "stabilizer") put("action", c.action);
  if (!c.formula_file.empty()) put("formula", c.formula_file);
  if (!c.h_file.empty()) put("H", c.h_file);
  if (!c.k_file.empty()) put("K", c.k_file);
  if (!c.basis_file.empty()) put("basis", c.basis_file);
  if (!c.lemma.empty()) put("lemma", c.lemma);
  if (cmd == "fp-sweep" || cmd == "fp-mu") {
    put("p", c.p);
    if (c.q) put("q", c.q);
  }
  if (cmd == "fp-mu") put("k", c.k);
  if (cmd == "beta") {
    put("r_max", c.r_max);
    put("lattice_limit", c.beta_lattice);
  }
  if (cmd == "sweep" || cmd == "fp-sweep") {
    put("exhaustive", c.exhaustive);
    if (!c.exhaustive) {
      put("budget", c.budget);
      put("seed", c.seed);
    }
  }
  if (cmd == "verify" || cmd == "grid") {
    put("samples", c.samples);
    put("exhaustive_limit", c.exhaustive_limit);
    put("seed", c.seed);
  }
  if (cmd == "grid") {
    put("n_values", c.n_values);
    put("k_values", c.k_values);
    put("d_values", c.d_values);
    if (c.corrupt_row) put("corrupt_row", *c.corrupt_row);
  }
  put("ceilings", Json{{"elements", c.ceilings.elements}, {"subgroups", c.ceilings.subgroups}});
  return j;
}

Json labels(const FiniteGroup& g, const std::vector<Elem>& xs) {
  Json j = Json::array();
  for (auto x : xs) j.push_back(g.label(x));
  return j;
}

Json edge_list(const EdgeGraph& e) {
  Json j = Json::array();
  for (std::size_t i = 0; i < e.edges.size(); ++i)
    if (e.edges[i]) j.push_back(Json::array({i + 1, i + 2}));
  return j;
}

Report cmd_construct(const RunConfig& c) {
  Report r;
  const auto p = params_for(c, c.n);
  const bool exact = is_exact(c.k, c.d);
  const auto f = build(p);
  r.body["exact_root"] = exact;
  r.body["size"] = claim(f.size(), Provenance::measured);
  r.body["depth"] = claim(f.depth(), Provenance::measured);
  r.body["distinct_nodes"] = claim(distinct_nodes(f), Provenance::measured);
  const auto envelope = size_envelope(c.n, c.k, c.d);
  r.body["envelope"] = claim(static_cast<double>(envelope), Provenance::paper_formula);
  r.check("within_envelope", static_cast<long double>(f.size()) <= envelope);
  if (exact) {
    const auto predicted = predicted_size(c.n, c.k, c.d);
    r.body["predicted_size"] = claim(predicted, Provenance::paper_formula);
    r.body["predicted_depth"] = claim(c.d + 1, Provenance::paper_formula);
    r.check("size_matches_prediction", f.size() == predicted);
    r.check("depth_matches_prediction", f.depth() == c.d + 1);
  }
  if (!c.emit_file.empty()) {
    std::ofstream out(c.emit_file);
    if (!out) throw PreconditionError("cannot write " + c.emit_file);
    out << to_sexpr(f) << "\n";
    r.body["emitted"] = c.emit_file;
  }
  return r;
}

Report cmd_verify(const RunConfig& c) {
  Report r;
  const auto g = require_group(c);
  bool built = false;
  const auto f = formula_for(c, g->degree(), built);
  std::optional<std::uint64_t> predicted_size_value;
  std::optional<std::uint32_t> predicted_depth;
  if (built && is_exact(c.k, c.d)) {
    predicted_size_value = predicted_size(g->degree(), c.k, c.d);
    predicted_depth = static_cast<std::uint32_t>(c.d + 1);
  }
  VerifyOptions o;
  o.exhaustive_limit = c.exhaustive_limit;
  o.samples = c.samples;
  o.seed = c.seed;
  const auto v = verify_construction(f, g, c.k, c.u0 - 1, c.uk - 1, predicted_size_value, predicted_depth, o);
  r.body["mode"] = v.exhaustive ? "exhaustive" : "sampled";
  r.body["points"] = claim(v.points, Provenance::measured);
  r.body["mismatches"] = claim(v.mismatches, Provenance::derived_oracle);
  r.body["size"] = claim(v.size, Provenance::measured);
  r.body["depth"] = claim(v.depth, Provenance::measured);
  if (v.predicted_size) r.body["predicted_size"] = claim(*v.predicted_size, Provenance::paper_formula);
  if (v.predicted_depth) r.body["predicted_depth"] = claim(*v.predicted_depth, Provenance::paper_formula);
  r.body["generators_checked"] = v.generators_checked;
  r.check("semantic_match", v.semantic_match);
  r.check("invariant", v.invariant);
  if (v.predicted_size) r.check("size_match", v.size_match);
  if (v.predicted_depth) r.check("depth_match", v.depth_match);
  return r;
}

Report cmd_stabilizer(const RunConfig& c) {
  Report r;
  const auto g = require_group(c);
  bool built = false;
  const auto f = formula_for(c, g->degree(), built);
  const auto action = WordAction::make(action_kind_from_string(c.action), g, c.k, c.ceilings);
  const WordDomain omega(g, c.k, c.ceilings.elements);
  const auto& q = action->group();
  const auto h = syntactic_stabilizer(f, *action);
  const auto k = semantic_stabilizer(f, *action, omega);
  const auto word = function_stabilizer(word_table(omega, c.u0 - 1, c.uk - 1), *action, omega);
  r.body["q_order"] = q.order();
  r.body["syntactic"] = {{"order", claim(h.size(), Provenance::measured)}, {"generators", labels(q, h.generators())}};
  r.body["semantic"] = {{"order", claim(k.size(), Provenance::measured)}, {"generators", labels(q, k.generators())}};
  r.body["word"] = {{"order", claim(word.size(), Provenance::derived_oracle)},
                    {"generators", labels(q, word.generators())}};
  r.check("syntactic_within_semantic", h.is_subgroup_of(k));
  return r;
}

Report cmd_mu(const RunConfig& c) {
  Report r;
  const auto g = require_group(c);
  if (c.h_file.empty() || c.k_file.empty()) throw PreconditionError("mu needs --H and --K");
  const auto action = WordAction::make(ActionKind::left_right, g, c.k, c.ceilings);
  const auto& q = action->tuples();
  const auto h = load_subgroup(c.h_file, q, *g);
  const auto k = load_subgroup(c.k_file, q, *g);
  if (!h.is_subgroup_of(k)) throw PreconditionError("mu needs H <= K");
  const bool k_is_q = k.size() == q.order();
  r.body["q_order"] = q.order();
  r.body["H_order"] = h.size();
  r.body["K_order"] = k.size();
  r.body["K_is_Q"] = k_is_q;
  r.body["E_H"] = edge_list(edge_set(q, h));
  r.body["E_K"] = edge_list(edge_set(q, k));
  r.body["mu"] = claim(mu_nonabelian(q, h, k, k_is_q), Provenance::measured);
  return r;
}

Report cmd_beta(const RunConfig& c) {
  Report r;
  const auto g = require_group(c);
  const auto kind = g->is_abelian() ? ActionKind::abelian_lift : ActionKind::left_right;
  const auto action = WordAction::make(kind, g, c.k, c.ceilings);
  const WordDomain omega(g, c.k, c.ceilings.elements);
  BetaOptions options;
  options.r_max = c.r_max;
  options.lattice_limit = c.beta_lattice;
  BetaSearch search(*action, omega, mu_model(*action, c.ceilings), options);
  const auto& q = action->tuples();
  const auto word = function_stabilizer(word_table(omega, c.u0 - 1, c.uk - 1), *action, omega);
  const auto h = c.h_file.empty() ? word : load_subgroup(c.h_file, q, *g);
  const auto k = c.k_file.empty() ? word : load_subgroup(c.k_file, q, *g);
  const auto b = search.query(c.d, h, k);
  r.body["action"] = to_string(kind);
  r.body["q_order"] = q.order();
  r.body["lattice_size"] = search.lattice().size();
  r.body["H_order"] = h.size();
  r.body["K_order"] = k.size();
  r.body["mu"] = claim(b.mu, Provenance::measured);
  r.body["lo"] = claim(static_cast<double>(b.lo), Provenance::paper_formula);
  if (b.hi == beta_infinity)
    r.body["hi"] = claim("inf", Provenance::measured);
  else
    r.body["hi"] = claim(static_cast<double>(b.hi), Provenance::measured);
  r.body["identity"] = b.identity;
  r.body["witness_components"] = b.witness_components;
  r.body["budget_exhausted"] = b.budget_exhausted;
  r.check("lo_le_hi", b.lo <= b.hi);
  return r;
}

SweepMode sweep_mode(const RunConfig& c) { return {c.exhaustive, c.budget, c.seed}; }

Report from_witness(const WitnessReport& w) {
  Report r;
  r.body["result"] = to_json(w);
  r.check("zero_counterexamples", w.ok());
  return r;
}

Report cmd_sweep(const RunConfig& c) {
  const auto g = require_group(c);
  const auto& lemma = c.lemma;
  if (lemma == "intersection" || lemma == "shrinkage") {
    const auto s = LeftRightSetting::build(g, c.k, c.ceilings);
    const auto mode = sweep_mode(c);
    auto r = from_witness(lemma == "intersection" ? check_intersection_property(s, mode)
                                                  : check_shrinkage_property(s, mode));
    r.body["lattice_size"] = s.lattice.size();
    r.body["n"] = s.n;
    return r;
  }
  if (lemma == "support" || lemma == "diag" || lemma == "quotient") {
    if (c.k != 2) throw PreconditionError("the " + lemma + " sweep runs on G^2; use --k 2");
    const auto g2 = TupleGroup::make(g, 2, Constraint::full, c.ceilings);
    const auto lattice = square_lattice(*g2, c.ceilings);
    WitnessReport w;
    if (lemma == "support") {
      const auto base_lattice = enumerate_subgroups(*g, c.ceilings);
      w = support_sweep(*g2, lattice, min_faithful_degree(*g, Subgroup::whole(*g), base_lattice));
    } else if (lemma == "diag") {
      w = diag_sweep(*g2, lattice);
    } else {
      w = quotient_sweep(*g2, lattice);
    }
    auto r = from_witness(w);
    r.body["lattice_size"] = lattice.size();
    return r;
  }
  throw PreconditionError("unknown lemma '" + lemma + "'");
}

Report cmd_fp_mu(const RunConfig& c) {
  Report r;
  if (c.basis_file.empty()) throw PreconditionError("fp-mu needs --basis");
  std::istringstream in(read_file(c.basis_file));
  std::vector<FpVec> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream ls(line);
    FpVec v;
    long long x;
    while (ls >> x) {
      if (x < 0) throw ParseError("negative entry on line " + std::to_string(line_no));
      v.push_back(static_cast<std::uint32_t>(x % c.p));
    }
    if (!ls.eof()) throw ParseError("bad entry on line " + std::to_string(line_no));
    if (v.size() != c.k) throw ParseError("line " + std::to_string(line_no) + " does not have k entries");
    rows.push_back(std::move(v));
  }
  const auto v = Subspace::span(c.p, c.k, rows);
  r.body["dim"] = v.dim();
  r.body["basis"] = v.to_string();
  r.body["perp"] = v.perp().to_string();
  Json covers_json = Json::array();
  for (const auto& w : covers(v)) {
    const auto gap = min_weight_gap(v, w);
    covers_json.push_back({{"W", w.to_string()}, {"weight", gap.weight}, {"witness", format_vector(gap.witness)}});
  }
  r.body["covers"] = covers_json;
  r.body["mu"] = claim(mu_p(v), Provenance::measured);
  return r;
}

Report cmd_fp_sweep(const RunConfig& c) {
  const auto mode = sweep_mode(c);
  const auto& lemma = c.lemma;
  if (lemma == "intersection") return from_witness(check_intersection_fp(c.p, c.k, mode));
  if (lemma == "shrinkage") return from_witness(check_shrinkage_fp(c.p, c.k, mode));
  if (lemma == "perp-unique") return from_witness(perp_uniqueness_check(c.p, c.k, mode));
  if (lemma == "dim-bound") return from_witness(check_dim_bound(c.q ? c.q : c.p, c.k, c.ceilings));
  if (lemma == "literal-mu") return from_witness(literal_mu_check(c.q ? c.q : c.p, c.k));
  throw PreconditionError("unknown lemma '" + lemma + "'");
}

Report cmd_group_params(const RunConfig& c) {
  Report r;
  const auto g = require_group(c);
  const auto lattice = enumerate_subgroups(*g, c.ceilings);
  const auto whole = Subgroup::whole(*g);
  const bool simple = is_simple(*g, whole, lattice);
  r.body["degree"] = g->degree();
  r.body["order"] = claim(g->order(), Provenance::measured);
  r.body["abelian"] = g->is_abelian();
  r.body["simple"] = simple;
  r.body["subgroups"] = claim(lattice.size(), Provenance::measured);
  r.body["q_param"] = claim(q_param(*g), Provenance::measured);
  r.body["n_param"] = claim(n_param(*g, c.ceilings), Provenance::measured);
  if (simple) r.body["min_faithful_degree"] = claim(min_faithful_degree(*g, whole, lattice), Provenance::measured);
  return r;
}

std::string format_number(long double x) {
  if (std::isnan(static_cast<double>(x))) return "na";
  std::ostringstream s;
  s.precision(6);
  s << static_cast<double>(x);
  return s.str();
}

Report cmd_grid(const RunConfig& c) {
  Report r;
  Json rows = Json::array();
  std::ostringstream tsv;
  tsv << "n\tk\td\texact\tlower\tmeasured\tpredicted\tenvelope\tsemantic\tinvariant\tpass\n";
  std::size_t row = 0;
  bool all = true;
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  for (auto n : sorted(c.n_values))
    for (auto k : sorted(c.k_values))
      for (auto d : sorted(c.d_values)) {
        const bool exact = is_exact(k, d);
        const ConstructionParams p{n, k, d, Polarity::sigma, 0, 0};
        auto f = build(p);
        if (c.corrupt_row && *c.corrupt_row == row) f = flip_literal(f, 0);
        const auto g = PermGroup::cyclic(n);
        VerifyOptions o;
        o.exhaustive_limit = c.exhaustive_limit;
        o.samples = c.samples;
        o.seed = c.seed;
        std::optional<std::uint64_t> predicted;
        if (exact) predicted = predicted_size(n, k, d);
        const auto v = verify_construction(f, g, k, 0, 0, predicted, std::nullopt, o);
        long double lower = std::nanl("");
        if (is_prime(n)) {
          const auto action = WordAction::make(ActionKind::abelian_lift, g, k, c.ceilings);
          const WordDomain omega(g, k, c.ceilings.elements);
          lower = framework_check(f, *action, omega, d, c.ceilings).bound;
        }
        const auto envelope = size_envelope(n, k, d);
        const bool lower_ok = std::isnan(static_cast<double>(lower)) ||
                              static_cast<long double>(f.size()) >= lower * (1.0L - 1e-12L);
        const bool pass = v.semantic_match && v.invariant && v.size_match && lower_ok &&
                          static_cast<long double>(f.size()) <= envelope;
        all = all && pass;
        Json j;
        j["n"] = n;
        j["k"] = k;
        j["d"] = d;
        j["exact"] = exact;
        j["lower"] = std::isnan(static_cast<double>(lower)) ? claim(nullptr, Provenance::paper_formula)
                                                           : claim(static_cast<double>(lower), Provenance::paper_formula);
        j["measured"] = claim(f.size(), Provenance::measured);
        j["predicted"] = predicted ? claim(*predicted, Provenance::paper_formula) : claim(nullptr, Provenance::paper_formula);
        j["envelope"] = claim(static_cast<double>(envelope), Provenance::paper_formula);
        j["semantic"] = v.semantic_match;
        j["invariant"] = v.invariant;
        j["pass"] = pass;
        rows.push_back(j);
        tsv << n << '\t' << k << '\t' << d << '\t' << (exact ? "yes" : "no") << '\t' << format_number(lower) << '\t'
            << f.size() << '\t' << (predicted ? std::to_string(*predicted) : "na") << '\t' << format_number(envelope)
            << '\t' << (v.semantic_match ? "yes" : "no") << '\t' << (v.invariant ? "yes" : "no") << '\t'
            << (pass ? "PASS" : "FAIL") << '\n';
        ++row;
      }
  r.body["rows"] = rows;
  r.check("all_rows_pass", all);
  r.table = tsv.str();
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& dispatch() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> table{
      {"construct", cmd_construct}, {"verify", cmd_verify},   {"stabilizer", cmd_stabilizer},
      {"mu", cmd_mu},               {"beta", cmd_beta},       {"sweep", cmd_sweep},
      {"fp-mu", cmd_fp_mu},         {"fp-sweep", cmd_fp_sweep}, {"group-params", cmd_group_params},
      {"grid", cmd_grid},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"construct", "verify", "stabilizer", "mu",           "beta",
                                              "sweep",     "fp-mu",  "fp-sweep",   "group-params", "grid"};
  return names;
}

Report run(const RunConfig& config) {
  const auto& table = dispatch();
  auto it = table.find(config.command);
  if (it == table.end()) throw PreconditionError("unknown command '" + config.command + "'");
  const auto start = Clock::now();
  Report body = it->second(config);
  Report r;
  r.body["schema_version"] = report_schema_version;
  r.body["config"] = config_echo(config);
  for (auto& [key, value] : body.body.items()) r.body[key] = value;
  r.ok = body.ok;
  r.table = std::move(body.table);
  if (config.timings)
    r.body["timings"] = {{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
  r.body["ok"] = r.ok;
  return r;
}

}  // namespace wordform
