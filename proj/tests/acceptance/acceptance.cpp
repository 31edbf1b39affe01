// Acceptance run: one PASS/FAIL line per criterion, with the measured evidence.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wordform/fp/sweeps.hpp"
#include "wordform/fp/witness.hpp"
#include "wordform/group/group_io.hpp"
#include "wordform/group/params.hpp"
#include "wordform/witness/beta.hpp"
#include "wordform/witness/edge_graph.hpp"
#include "wordform/witness/framework.hpp"
#include "wordform/witness/sweeps.hpp"
#include "wordform/word/construct.hpp"
#include "wordform/word/verify.hpp"
#include "wordform/word/word.hpp"

using namespace wordform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Cell {
  std::size_t n, k, d;
};

const std::vector<Cell> cells{{2, 2, 1}, {2, 4, 1}, {2, 4, 2}, {3, 3, 1}, {3, 9, 2}, {4, 4, 1}, {2, 8, 3}};

struct Built {
  Cell cell;
  Formula f;
  std::shared_ptr<const PermGroup> g;
  double seconds = 0;
};

VerifyOptions verify_options() {
  VerifyOptions o;
  o.exhaustive_limit = 100000;
  o.samples = 100000;
  o.seed = 1;
  return o;
}

class Printer {
 public:
  explicit Printer(std::set<int> expected) : expected_(std::move(expected)) {}
  void line(int id, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    if (!pass) failed_.insert(id);
  }
  int exit_code() const {
    if (failed_ == expected_) return 0;
    for (int id : failed_)
      if (!expected_.count(id)) std::cout << "unexpected failure: criterion " << id << "\n";
    for (int id : expected_)
      if (!failed_.count(id)) std::cout << "expected failure did not occur: criterion " << id << "\n";
    return 1;
  }

 private:
  std::set<int> expected_;
  std::set<int> failed_;
};

std::string cell_name(const Cell& c) {
  std::ostringstream s;
  s << "(" << c.n << "," << c.k << "," << c.d << ")";
  return s.str();
}

void criterion1(Printer& out, std::vector<Built>& built) {
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cells) {
    const auto t0 = Clock::now();
    const ConstructionParams p{c.n, c.k, c.d, Polarity::sigma, 0, 0};
    auto f = build_exact(p);
    const double secs = seconds_since(t0);
    const auto root = *exact_root(c.k, c.d);
    const std::uint64_t expected = c.k * ipow(c.n, c.d * (root - 1));
    const bool ok = f.size() == expected && f.depth() == c.d + 1 && secs < 30.0;
    pass = pass && ok;
    detail << cell_name(c) << " size " << f.size() << "/" << expected << " depth " << f.depth() << "; ";
    built.push_back({c, std::move(f), PermGroup::symmetric(c.n), secs});
  }
  out.line(1, pass, detail.str());
}

void criteria2and3(Printer& out, const std::vector<Built>& built) {
  bool semantic = true, invariant = true;
  std::ostringstream d2, d3;
  for (const auto& b : built) {
    const auto v = verify_construction(b.f, b.g, b.cell.k, 0, 0, std::nullopt, std::nullopt, verify_options());
    semantic = semantic && v.semantic_match && v.mismatches == 0;
    invariant = invariant && v.invariant;
    d2 << cell_name(b.cell) << " " << (v.exhaustive ? "exhaustive " : "sampled ") << v.points << " points, "
       << v.mismatches << " mismatches; ";
    d3 << cell_name(b.cell) << " " << v.generators_checked << " generators " << (v.invariant ? "fixed" : "MOVED")
       << "; ";
  }
  out.line(2, semantic, d2.str());
  out.line(3, invariant, d3.str());
}

void criterion4(Printer& out) {
  bool pass = true;
  std::ostringstream detail;
  for (std::size_t p : {2, 3}) {
    const auto g = PermGroup::cyclic(p);
    for (const auto& [k, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {4, 2}, {3, 1}}) {
      const auto f = build_exact({p, k, d, Polarity::sigma, 0, 0});
      const auto action = WordAction::make(ActionKind::abelian_lift, g, k);
      const WordDomain omega(g, k);
      const auto r = framework_check(f, *action, omega, d);
      const std::uint64_t target = ipow(p, d * (*exact_root(k, d) - 1));
      const bool bound_exact = std::llround(static_cast<double>(r.bound)) == static_cast<long long>(target) &&
                               std::fabs(static_cast<double>(r.bound) - static_cast<double>(target)) < 1e-9;
      const bool ok = r.c == p && bound_exact && r.size >= target && r.pass;
      pass = pass && ok;
      detail << "C" << p << " k=" << k << " d=" << d << " bound " << target << " <= size " << r.size << "; ";
    }
  }
  out.line(4, pass, detail.str());
}

void criterion5(Printer& out) {
  bool pass = true;
  std::ostringstream detail;
  const auto s3 = PermGroup::symmetric(3);
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto action = WordAction::make(ActionKind::shifted_diagonal, s3, k);
    const auto& q = action->tuples();
    const auto whole = Subgroup::whole(q);
    const auto mu = mu_nonabelian(q, whole, whole, false);
    pass = pass && mu == k;
    detail << "S3 k=" << k << " mu " << mu << "; ";
  }
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t k = 1; k <= 6; ++k) {
      std::vector<FpVec> rows;
      for (std::size_t i = 1; i < k; ++i) {
        FpVec v(k, 0);
        v[0] = 1;
        v[i] = p - 1;
        rows.push_back(v);
      }
      const auto zero_sum = rows.empty() ? Subspace::zero(p, k) : Subspace::span(p, k, rows);
      const auto mu = mu_p(zero_sum);
      pass = pass && mu == k;
      detail << "F" << p << " k=" << k << " mu " << mu << "; ";
    }
  out.line(5, pass, detail.str());
}

void criterion6(Printer& out) {
  bool pass = true;
  std::ostringstream detail;
  SweepMode exhaustive;
  exhaustive.exhaustive = true;
  auto run = [&](const std::string& name, const std::function<WitnessReport()>& sweep) {
    const auto t0 = Clock::now();
    const auto r = sweep();
    const double secs = seconds_since(t0);
    const bool ok = r.ok() && r.mode == "exhaustive" && r.instances > 0 && secs < 300.0;
    pass = pass && ok;
    detail << name << " " << r.instances << " instances " << r.counterexamples.size() << " counterexamples "
           << std::lround(secs * 1000) << " ms; ";
  };
  for (std::size_t k = 1; k <= 4; ++k)
    run("fp-intersection p=2 k=" + std::to_string(k), [&] { return check_intersection_fp(2, k, exhaustive); });
  for (std::size_t k = 1; k <= 3; ++k)
    run("fp-intersection p=3 k=" + std::to_string(k), [&] { return check_intersection_fp(3, k, exhaustive); });
  for (std::size_t k = 1; k <= 5; ++k)
    run("fp-shrinkage p=2 k=" + std::to_string(k), [&] { return check_shrinkage_fp(2, k, exhaustive); });
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t k = 1; k <= 4; ++k)
      run("perp-unique p=" + std::to_string(p) + " k=" + std::to_string(k),
          [&] { return perp_uniqueness_check(p, k, exhaustive); });
  for (std::size_t k = 1; k <= 3; ++k)
    run("dim-bound q=4 k=" + std::to_string(k), [&] { return check_dim_bound(4, k); });

  const auto g = PermGroup::generate(5, {Perm::from_cycles(5, "(1 2 3)"), Perm::from_cycles(5, "(1 2 3 4 5)")});
  const auto g2 = TupleGroup::make(g, 2, Constraint::full);
  const auto t0 = Clock::now();
  const auto lattice = square_lattice(*g2);
  const double lattice_secs = seconds_since(t0);
  detail << "A5^2 lattice " << lattice.size() << " subgroups " << std::lround(lattice_secs * 1000) << " ms; ";
  const auto n = min_faithful_degree(*g);
  run("support A5 k=2", [&] { return support_sweep(*g2, lattice, n); });
  run("diag A5 k=2", [&] { return diag_sweep(*g2, lattice); });
  out.line(6, pass, detail.str());
}

void criterion7(Printer& out) {
  bool pass = true;
  std::ostringstream detail;
  const auto g = PermGroup::cyclic(2);
  const std::size_t k = 2;
  const auto action = WordAction::make(ActionKind::abelian_lift, g, k);
  const WordDomain omega(g, k);
  BetaSearch search(*action, omega, mu_model(*action));
  const auto word = function_stabilizer(word_table(omega, 0, 0), *action, omega);
  for (std::size_t d : {1, 2}) {
    const auto b = search.query(d, word, word);
    const auto f = exact_root(k, d) ? build_exact({2, k, d, Polarity::sigma, 0, 0})
                                    : build_general({2, k, d, Polarity::sigma, 0, 0});
    const long double expected_lo = std::pow(2.0L, static_cast<long double>(d) * (std::pow(2.0L, 1.0L / d) - 1));
    const bool lo_ok = std::fabs(static_cast<double>(b.lo - expected_lo)) < 1e-12;
    const bool ok = lo_ok && b.lo <= b.hi && b.hi <= static_cast<long double>(f.size()) && !b.budget_exhausted;
    pass = pass && ok;
    detail << "d=" << d << " [" << static_cast<double>(b.lo) << ", "
           << (b.hi == beta_infinity ? std::string("inf") : std::to_string(static_cast<double>(b.hi))) << "] size "
           << f.size() << (ok ? " ok" : " violated") << "; ";
  }
  out.line(7, pass, detail.str());
}

void criterion8(Printer& out, const std::string& data_dir) {
  const auto s5 = PermGroup::symmetric(5);
  const auto gl32 = load_group(data_dir + "/groups/gl32.grp");
  const auto a5 = PermGroup::generate(5, {Perm::from_cycles(5, "(1 2 3)"), Perm::from_cycles(5, "(1 2 3 4 5)")});
  const auto c7 = PermGroup::cyclic(7);
  const auto q_s5 = q_param(*s5);
  const auto q_gl = q_param(*gl32);
  const auto n_a5 = min_faithful_degree(*a5);
  const auto n_c7 = min_faithful_degree(*c7);
  std::ostringstream detail;
  detail << "q(S5)=" << q_s5 << " q(GL(3,2))=" << q_gl << " (order " << gl32->order() << ") minfaithful(A5)=" << n_a5
         << " minfaithful(C7)=" << n_c7;
  out.line(8, q_s5 == 5 && q_gl == 7 && gl32->order() == 168 && n_a5 == 5 && n_c7 == 7, detail.str());
}

void criterion9(Printer& out, const std::vector<Built>& built) {
  bool pass = true;
  std::ostringstream detail;
  std::mt19937_64 rng(9);
  for (const auto& b : built) {
    std::uniform_int_distribution<std::uint64_t> pick(0, b.f.size() - 1);
    std::size_t detected = 0;
    for (int i = 0; i < 20; ++i) {
      const auto mutant = flip_literal(b.f, pick(rng));
      const auto v = verify_construction(mutant, b.g, b.cell.k, 0, 0, std::nullopt, std::nullopt, verify_options());
      if (!v.semantic_match) ++detected;
    }
    pass = pass && detected == 20;
    detail << cell_name(b.cell) << " " << detected << "/20; ";
  }
  out.line(9, pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = WORDFORM_DATA_DIR;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::stoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--data") == 0 && i + 1 < argc) {
      data_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--data DIR] [--expect-fail N]...\n";
      return 2;
    }
  }
  Printer out(expected);
  try {
    std::vector<Built> built;
    criterion1(out, built);
    criteria2and3(out, built);
    criterion4(out);
    criterion5(out);
    criterion6(out);
    criterion7(out);
    criterion8(out, data_dir);
    criterion9(out, built);
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  return out.exit_code();
}
