// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "infsub/bch.hpp"
#include "infsub/cli.hpp"
#include "infsub/dist.hpp"
#include "infsub/heisenberg.hpp"
#include "infsub/oneparam.hpp"
#include "infsub/rootdata.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace infsub;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostream &)> body;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool note_failures(std::ostream &log, const std::string &what, const Report &r) {
  if (r.passed())
    return true;
  log << "  " << what << " failed:";
  for (const auto &c : r.checks())
    if (c.failed)
      log << " " << c.name << "(" << c.failed << "/" << c.evaluated << ")";
  log << "\n";
  return false;
}

bool require(std::ostream &log, bool ok, const std::string &what) {
  if (!ok)
    log << "  " << what << "\n";
  return ok;
}

// 1. Bijection round trip.
bool criterion1(std::ostream &log) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  struct Case {
    unsigned p;
    std::size_t n;
    unsigned r;
  };
  for (const Case c : {Case{3, 3, 2}, Case{5, 3, 3}, Case{5, 4, 2}, Case{7, 3, 2}}) {
    const Report rep = bijection_check(Field::prime(c.p), c.n, c.r, 200, 2024);
    const std::string label = "(p,n,r)=(" + std::to_string(c.p) + "," + std::to_string(c.n) +
                              "," + std::to_string(c.r) + ")";
    ok = note_failures(log, label, rep) && ok;
    ok = require(log, rep.tally("round_trip").evaluated == 200 &&
                          rep.tally("homomorphism").evaluated == 200,
                 label + ": expected 200 samples") &&
         ok;
  }
  const double t = seconds_since(start);
  log << "  runtime " << t << " s\n";
  return require(log, t < 30.0, "runtime exceeds 30 s") && ok;
}

// 2. SL_2 example coefficient identities.
bool criterion2(std::ostream &log) {
  bool ok = true;
  for (unsigned p : {3u, 5u}) {
    const Report rep = sl2_example_check(p);
    ok = note_failures(log, "p=" + std::to_string(p), rep) && ok;
    for (const char *check : {"dphi1_u0_eq_dphi3_u0", "difference_is_X", "difference_trace_zero"})
      ok = require(log, rep.tally(check).evaluated == 1 && rep.tally(check).failed == 0,
                   std::string("missing or failed ") + check) &&
           ok;
  }
  return ok;
}

// 3. Heisenberg counterexample.
bool criterion3(std::ostream &log) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  const auto maps = enumerate_hopf_maps(3, 2);
  ok = require(log, maps.size() == 27, "(3,2): expected 27 Hopf maps, got " + std::to_string(maps.size())) && ok;
  for (const auto &m : maps)
    ok = require(log, is_closed_form(m) && is_hopf_map(m), "(3,2): map outside the closed form") && ok;

  const CounterexampleReport r32 = counterexample_report(3, 2);
  ok = require(log, r32.complete_search && r32.hom_count == 27 && r32.tuple_count == 81 && r32.mismatch(),
               "(3,2): expected complete 27 vs 81") &&
       ok;
  const CounterexampleReport r31 = counterexample_report(3, 1);
  ok = require(log, r31.complete_search && r31.hom_count == 9 && r31.tuple_count == 9 && !r31.mismatch(),
               "(3,1): expected 9 = 9") &&
       ok;
  const FamilyReport f33 = verify_family(3, 3), f52 = verify_family(5, 2);
  ok = require(log, f33.checked == 81 && f33.all_pass(), "(3,3): family of 81 must all pass") && ok;
  ok = require(log, f52.checked == 125 && f52.all_pass(), "(5,2): family of 125 must all pass") && ok;
  const double t = seconds_since(start);
  log << "  runtime " << t << " s\n";
  return require(log, t < 60.0, "runtime exceeds 60 s") && ok;
}

// 4. Distribution algebra.
bool criterion4(std::ostream &log) {
  bool ok = true;
  for (auto [p, r] : {std::pair<unsigned, unsigned>{3, 3}, {5, 2}, {7, 2}}) {
    const Report rep = dist_check(Field::prime(p), r, 20, 4);
    const std::string label = "(p,r)=(" + std::to_string(p) + "," + std::to_string(r) + ")";
    ok = note_failures(log, label, rep) && ok;
    ok = require(log, rep.tally("padic_identity").evaluated == trunc_length(p, r) &&
                          rep.tally("u_nilpotent").evaluated == r,
                 label + ": exhaustive checks incomplete") &&
         ok;
  }
  // Exhaustive primitive-space computation at (3, 2).
  const Report rep = dist_check(Field::prime(3), 2, 0, 0);
  ok = note_failures(log, "(3,2) primitives", rep) && ok;
  ok = require(log, rep.tally("primitive_space").evaluated == 1 && rep.tally("lie_algebra").evaluated == 1,
               "(3,2): primitive checks missing") &&
       ok;
  return ok;
}

// 5. Exponential-map axioms for the truncated series.
bool criterion5(std::ostream &log) {
  bool ok = true;
  for (auto [p, n] : {std::pair<unsigned, std::size_t>{5, 3}, {3, 2}}) {
    const Field f = Field::prime(p);
    const AxiomSamples samples = make_axiom_samples(f, n, 50, 50, 20, 100, 5);
    const Report rep = verify_exponential_axioms(ExponentialCandidate::truncated_series(f, n), samples);
    const std::string label = "gl_" + std::to_string(n) + "@p=" + std::to_string(p);
    ok = note_failures(log, label, rep) && ok;
    ok = require(log, samples.conjugators.size() == 50 && samples.scalars.size() == 20 &&
                          samples.commuting_pairs.size() == 100,
                 label + ": sample counts") &&
         ok;
    for (const char *check : {"one_parameter_law", "differential", "adjoint_trivial", "equivariance",
                              "commuting_lemma"})
      ok = require(log, rep.tally(check).evaluated > 0, label + ": " + check + " not evaluated") && ok;
    ok = require(log, rep.tally("equivariance").evaluated >= 50 &&
                          rep.tally("commuting_lemma").evaluated == 100,
                 label + ": equivariance / commuting-lemma counts") &&
         ok;
  }
  return ok;
}

// 6. BCH group law and epsilon_P.
bool criterion6(std::ostream &log) {
  bool ok = true;
  const std::vector<std::pair<unsigned, std::vector<std::size_t>>> models{
      {5, {1, 1, 1}}, {5, {2, 1}},       {5, {1, 2, 1}}, {5, {2, 2}},
      {5, {1, 1, 1, 1}}, {3, {1, 1, 1}}, {3, {2, 1}},    {7, {1, 1, 1, 1}}};
  for (const auto &[p, blocks] : models) {
    const Field f = Field::prime(p);
    const UnipotentRadicalModel m(f, blocks);
    const UnipotentRadicalModel rev(f, std::vector<std::size_t>(blocks.rbegin(), blocks.rend()));
    std::string label = "p=" + std::to_string(p) + " blocks=";
    for (std::size_t b : blocks)
      label += std::to_string(b);

    const Report group = check_bch_group(m, 100, 6);
    ok = note_failures(log, label + " group", group) && ok;
    for (const char *check : {"associativity", "identity", "inverse"})
      ok = require(log, group.tally(check).evaluated == 100, label + ": " + check + " count") && ok;
    if (m.nilpotence_class() <= 2)
      ok = require(log, group.tally("class2_closed_form").evaluated == 100, label + ": class-2 form") && ok;
    ok = require(log, group.tally("root_clause").evaluated == m.root_vectors().size() * p,
                 label + ": root clause must cover every root vector and s") &&
         ok;

    const Report eq = check_P_equivariance(m, 100, 7);
    ok = note_failures(log, label + " P-equivariance", eq) && ok;
    ok = require(log, eq.tally("equivariance").evaluated == 100, label + ": equivariance count") && ok;
    const Report cross = check_cross_parabolic(m, rev, 100, 8);
    ok = note_failures(log, label + " cross-parabolic", cross) && ok;
    ok = require(log, cross.tally("agreement").evaluated == 100, label + ": agreement count") && ok;
  }
  return ok;
}

// 7. Prime predicates.
bool criterion7(std::ostream &log) {
  bool ok = true;
  // Case list: A none; B, C, D p > 2; E6, E7, F4, G2 p > 3; E8 p > 5.
  const auto expected_good = [](const std::string &label, unsigned p) {
    switch (label[0]) {
    case 'A':
      return true;
    case 'B':
    case 'C':
    case 'D':
      return p > 2;
    default:
      return label == "E8" ? p > 5 : p > 3;
    }
  };
  for (const auto &name : builtin_datum_names()) {
    const RootDatum d = builtin_datum(name);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      bool expect = true;
      for (const auto &label : d.type_labels)
        expect = expect && expected_good(label, p);
      ok = require(log, is_good_prime(d.type_labels, p) == expect,
                   name + " good at p=" + std::to_string(p)) &&
           ok;
    }
  }
  for (const std::string label : {"A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"})
    for (unsigned p : {2u, 3u, 5u, 7u})
      ok = require(log, is_good_prime({label}, p) == expected_good(label, p),
                   label + " good at p=" + std::to_string(p)) &&
           ok;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned p : {2u, 3u, 5u, 7u})
      ok = require(log, is_pretty_good(builtin_datum("GL" + std::to_string(n)), p),
                   "GL" + std::to_string(n) + " pretty good at p=" + std::to_string(p)) &&
           ok;
  ok = require(log, !is_pretty_good(builtin_datum("SL2"), 2), "SL2 at 2 must not be pretty good") && ok;
  ok = require(log, !is_pretty_good(builtin_datum("SL3"), 3), "SL3 at 3 must not be pretty good") && ok;
  ok = require(log, is_pretty_good(builtin_datum("SL2"), 3), "SL2 at 3 must be pretty good") && ok;
  return ok;
}

// 8. Saturation.
bool criterion8(std::ostream &log) {
  bool ok = true;
  const Field f = Field::prime(5);
  for (std::size_t n = 2; n <= 5; ++n) {
    const Report rep = saturation_check(f, n, 100, 20, 8);
    const std::string label = "GL_" + std::to_string(n);
    ok = note_failures(log, label, rep) && ok;
    for (const char *check : {"passes_through_g", "homomorphism", "equivariance"})
      ok = require(log, rep.tally(check).evaluated == 100, label + ": " + check + " count") && ok;
  }
  return ok;
}

// 9. CLI determinism.
bool criterion9(std::ostream &log) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "infsub_acceptance";
  fs::create_directories(dir);
  const auto write = [&](const std::string &name, const std::string &text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string j3 = write("J3.json", R"({"rows":[[0,1,0],[0,0,1],[0,0,0]]})");
  const std::string u3 = write("U3.json", R"({"p":5,"rows":[[1,1,3],[0,1,1],[0,0,1]]})");
  const std::string tuple = write(
      "tuple.json", R"({"p":3,"r":2,"layers":[{"rows":[[0,1],[0,0]]},{"rows":[[0,1],[0,0]]}]})");
  std::ostringstream phi_text, sink;
  run_cli({"lift", "--in", tuple}, phi_text, sink);
  const std::string phi = write("phi.json", phi_text.str());

  const std::vector<std::vector<std::string>> commands{
      {"exp", "--p", "5", "--in", j3},
      {"log", "--in", u3},
      {"lift", "--in", tuple},
      {"decompose", "--in", phi},
      {"saturate", "--in", u3},
      {"verify", "bijection", "--p", "3", "--n", "3", "--r", "2", "--samples", "200", "--seed", "7"},
      {"verify", "axioms", "--p", "5", "--n", "3", "--samples", "20", "--seed", "7"},
      {"verify", "bch", "--p", "5", "--blocks", "1,2,1", "--samples", "50", "--seed", "7"},
      {"verify", "dist", "--p", "3", "--r", "3"},
      {"verify", "dist", "--p", "3", "--r", "2", "--samples", "20", "--seed", "7"},
      {"verify", "sl2-example", "--p", "3"},
      {"verify", "sl-n", "--p", "5", "--n", "3", "--r", "2", "--samples", "50", "--seed", "7"},
      {"verify", "saturation", "--p", "5", "--n", "4", "--samples", "50", "--seed", "7"},
      {"heisenberg", "enumerate", "--p", "3", "--r", "2"},
      {"heisenberg", "family", "--p", "3", "--r", "3"},
      {"heisenberg", "report", "--p", "3", "--r", "2"},
      {"primes", "good", "--type", "G2", "--p", "5"},
      {"primes", "pretty-good", "--datum", "SL3", "--p", "3"},
  };
  bool ok = true;
  for (const auto &cmd : commands) {
    std::string line;
    for (const auto &a : cmd)
      line += a + " ";
    std::ostringstream a, b, c, err;
    const int ca = run_cli(cmd, a, err);
    const int cb = run_cli(cmd, b, err);
    std::vector<std::string> parallel = cmd;
    parallel.insert(parallel.end(), {"--jobs", "3"});
    const bool takes_jobs = cmd[0] == "heisenberg" ||
                            (cmd[0] == "verify" && cmd[1] != "dist" && cmd[1] != "sl2-example");
    const int cc = takes_jobs ? run_cli(parallel, c, err) : ca;
    ok = require(log, ca == 0 && cb == 0 && cc == 0, line + ": nonzero exit; " + err.str()) && ok;
    ok = require(log, !a.str().empty() && a.str() == b.str(), line + ": output differs between runs") && ok;
    if (takes_jobs)
      ok = require(log, a.str() == c.str(), line + ": output depends on --jobs") && ok;
  }
  fs::remove_all(dir);
  log << "  " << commands.size() << " commands compared\n";
  return ok;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bijection round trip (lift/decompose, homomorphism law)", criterion1},
      {2, "SL2 example coefficient identities", criterion2},
      {3, "Heisenberg counterexample counts and families", criterion3},
      {4, "distribution algebra identities", criterion4},
      {5, "exponential-map axioms for the truncated series", criterion5},
      {6, "BCH group law and epsilon_P", criterion6},
      {7, "good and pretty good primes", criterion7},
      {8, "saturation", criterion8},
      {9, "CLI determinism", criterion9},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    std::ostringstream log;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.body(log);
    } catch (const std::exception &e) {
      log << "  exception: " << e.what() << "\n";
    }
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds_since(start));
    std::cout << std::flush;
    if (!ok || !log.str().empty())
      std::cout << log.str() << std::flush;
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
