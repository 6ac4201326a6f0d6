#include "infsub/cli.hpp"

#include "infsub/bch.hpp"
#include "infsub/dist.hpp"
#include "infsub/errors.hpp"
#include "infsub/heisenberg.hpp"
#include "infsub/io.hpp"
#include "infsub/oneparam.hpp"
#include "infsub/rootdata.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace infsub {

namespace {

using io::json;

struct RunConfig {
  std::optional<unsigned> p;
  unsigned r = 1;
  std::size_t n = 3;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 100;
  std::size_t conjugators = 20;
  std::size_t scalars = 20;
  std::size_t pairs = 100;
  unsigned jobs = 1;
  std::string in;
  std::string out;
  std::string datum;
  std::string datum_file;
  std::vector<std::string> types;
  std::vector<std::size_t> blocks;
};

unsigned default_jobs() {
  if (const char *env = std::getenv(kJobsEnv)) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  return 1;
}

json read_json(const std::string &path) {
  if (path.empty())
    throw UsageError("--in is required");
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file)
      throw UsageError("cannot open " + path);
    text << file.rdbuf();
  }
  try {
    return json::parse(text.str());
  } catch (const json::parse_error &e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json(const RunConfig &cfg, std::ostream &out, const json &j) {
  const std::string text = io::canonical(j);
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file)
    throw UsageError("cannot write " + cfg.out);
  file << text;
}

unsigned require_p(const RunConfig &cfg) {
  if (!cfg.p)
    throw UsageError("--p is required");
  return *cfg.p;
}

std::uint64_t require_seed(const RunConfig &cfg) {
  if (!cfg.seed)
    throw UsageError("--seed is required for randomized commands");
  return *cfg.seed;
}

/// Reads a matrix, using --p as the field when the file has none.
Matrix read_matrix(const RunConfig &cfg) {
  const json j = read_json(cfg.in);
  std::optional<Field> fallback;
  if (cfg.p)
    fallback = Field::prime(*cfg.p);
  Matrix m = io::matrix_from_json(j, fallback ? &*fallback : nullptr);
  if (cfg.p && m.field().p() != *cfg.p)
    throw UsageError("--p " + std::to_string(*cfg.p) + " disagrees with the field in " + cfg.in);
  return m;
}

int emit_report(const RunConfig &cfg, std::ostream &out, const Report &report) {
  write_json(cfg, out, io::report_to_json(report));
  return report.passed() ? 0 : 1;
}

int cmd_exp(const RunConfig &cfg, std::ostream &out) {
  write_json(cfg, out, io::matrix_to_json(exp_p(read_matrix(cfg))));
  return 0;
}

int cmd_log(const RunConfig &cfg, std::ostream &out) {
  write_json(cfg, out, io::matrix_to_json(log_p(read_matrix(cfg))));
  return 0;
}

int cmd_lift(const RunConfig &cfg, std::ostream &out) {
  const CommutingTuple tuple = io::tuple_from_json(read_json(cfg.in));
  write_json(cfg, out, io::oneparam_to_json(lift(tuple).poly()));
  return 0;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out) {
  const PolyMatrix phi = io::oneparam_from_json(read_json(cfg.in));
  write_json(cfg, out, io::tuple_to_json(decompose(phi)));
  return 0;
}

int cmd_saturate(const RunConfig &cfg, std::ostream &out) {
  const Matrix g = read_matrix(cfg);
  const OneParamSubgroup phi = saturate(g, cfg.r);
  json j = io::oneparam_to_json(phi.poly());
  const bool through_g = evaluate(phi.poly(), 1) == g;
  const bool hom = verify_homomorphism(phi.poly());
  j["verification"] = {{"phi_at_1_equals_g", through_g}, {"homomorphism", hom}};
  write_json(cfg, out, j);
  return through_g && hom ? 0 : 1;
}

int cmd_verify(const std::string &suite, const RunConfig &cfg, std::ostream &out) {
  if (suite == "sl2-example")
    return emit_report(cfg, out, sl2_example_check(require_p(cfg)));

  const Field field = Field::prime(require_p(cfg));
  if (suite == "dist") {
    // The exhaustive part needs no seed; sampled checks run only with one.
    const std::size_t samples = cfg.seed ? cfg.samples : 0;
    return emit_report(cfg, out, dist_check(field, cfg.r, samples, cfg.seed.value_or(0)));
  }
  const std::uint64_t seed = require_seed(cfg);
  if (suite == "bijection")
    return emit_report(cfg, out, bijection_check(field, cfg.n, cfg.r, cfg.samples, seed, cfg.jobs));
  if (suite == "sl-n")
    return emit_report(cfg, out,
                       sl_n_compatibility_check(field, cfg.n, cfg.r, cfg.samples, seed, cfg.jobs));
  if (suite == "saturation")
    return emit_report(cfg, out,
                       saturation_check(field, cfg.n, cfg.samples, cfg.conjugators, seed, cfg.jobs));
  if (suite == "axioms") {
    const AxiomSamples samples = make_axiom_samples(field, cfg.n, cfg.samples, cfg.conjugators,
                                                    cfg.scalars, cfg.pairs, seed);
    return emit_report(cfg, out,
                       verify_exponential_axioms(
                           ExponentialCandidate::truncated_series(field, cfg.n), samples, cfg.jobs));
  }
  if (suite == "bch") {
    std::vector<std::size_t> blocks = cfg.blocks;
    if (blocks.empty())
      blocks.assign(cfg.n, 1);
    const UnipotentRadicalModel model(field, blocks);
    std::vector<std::size_t> reversed(blocks.rbegin(), blocks.rend());
    const UnipotentRadicalModel opposite(field, reversed);
    Report report("bch");
    report.set_fact("n", static_cast<long long>(model.n()));
    report.set_fact("class", static_cast<long long>(model.nilpotence_class()));
    report.absorb(check_bch_group(model, cfg.samples, seed, cfg.jobs), "group.");
    report.absorb(check_P_equivariance(model, cfg.samples, seed + 1, cfg.jobs), "P_equivariance.");
    report.absorb(check_cross_parabolic(model, model, cfg.samples, seed + 2, cfg.jobs),
                  "cross_parabolic.same.");
    report.absorb(check_cross_parabolic(model, opposite, cfg.samples, seed + 3, cfg.jobs),
                  "cross_parabolic.reversed.");
    return emit_report(cfg, out, report);
  }
  throw UsageError("unknown verify suite " + suite);
}

int cmd_heisenberg(const std::string &mode, const RunConfig &cfg, std::ostream &out) {
  const unsigned p = require_p(cfg);
  if (mode == "enumerate") {
    const auto maps = enumerate_hopf_maps(p, cfg.r, cfg.jobs);
    json list = json::array();
    for (const auto &m : maps)
      list.push_back(io::hopf_map_to_json(m));
    write_json(cfg, out, {{"p", p}, {"r", cfg.r}, {"count", maps.size()}, {"maps", list}});
    return 0;
  }
  if (mode == "family") {
    const FamilyReport report = verify_family(p, cfg.r, cfg.jobs);
    write_json(cfg, out, io::family_to_json(report));
    return report.all_pass() ? 0 : 1;
  }
  write_json(cfg, out, io::counterexample_to_json(counterexample_report(p, cfg.r, cfg.jobs)));
  return 0;
}

RootDatum resolve_datum(const RunConfig &cfg) {
  if (!cfg.datum_file.empty())
    return io::datum_from_json(read_json(cfg.datum_file));
  if (cfg.datum.empty())
    throw UsageError("--datum or --datum-file is required");
  return builtin_datum(cfg.datum);
}

int cmd_primes(const std::string &mode, const RunConfig &cfg, std::ostream &out) {
  const unsigned p = require_p(cfg);
  if (!is_prime(p))
    throw UsageError(std::to_string(p) + " is not prime");
  if (mode == "good") {
    std::vector<std::string> labels = cfg.types;
    json j = {{"p", p}};
    if (labels.empty()) {
      const RootDatum d = resolve_datum(cfg);
      labels = d.type_labels;
      j["datum"] = d.name;
    }
    j["types"] = labels;
    j["good"] = is_good_prime(labels, p);
    write_json(cfg, out, j);
    return 0;
  }
  const RootDatum d = resolve_datum(cfg);
  d.validate();
  write_json(cfg, out,
             {{"datum", d.name},
              {"p", p},
              {"pretty_good", is_pretty_good(d, p)},
              {"roots", d.roots.size()},
              {"torsion_primes", torsion_primes(d)}});
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  cfg.jobs = default_jobs();

  CLI::App app{"Infinitesimal one-parameter subgroups: computations and verifications"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const auto add_p = [&](CLI::App *c) { c->add_option("--p", cfg.p, "Prime"); };
  const auto add_io = [&](CLI::App *c) {
    c->add_option("--in", cfg.in, "Input JSON file (- for stdin)")->required();
    c->add_option("--out", cfg.out, "Output file (default stdout)");
  };
  const auto add_out = [&](CLI::App *c) {
    c->add_option("--out", cfg.out, "Output file (default stdout)");
  };
  const auto add_sampling = [&](CLI::App *c) {
    c->add_option("--seed", cfg.seed, "RNG seed (required for sampled checks)");
    c->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();
    c->add_option("--jobs", cfg.jobs, std::string("Worker threads (default $") + kJobsEnv + " or 1)");
  };

  CLI::App *exp_cmd = app.add_subcommand("exp", "Truncated exponential of a p-nilpotent matrix");
  CLI::App *log_cmd = app.add_subcommand("log", "Truncated logarithm of a p-unipotent matrix");
  for (CLI::App *c : {exp_cmd, log_cmd}) {
    add_p(c);
    add_io(c);
  }
  CLI::App *lift_cmd = app.add_subcommand("lift", "Commuting tuple file -> one-parameter subgroup file");
  CLI::App *dec_cmd = app.add_subcommand("decompose", "One-parameter subgroup file -> tuple file");
  add_io(lift_cmd);
  add_io(dec_cmd);
  CLI::App *sat_cmd = app.add_subcommand("saturate", "p-unipotent matrix -> phi_g(t) = exp(t log g)");
  add_p(sat_cmd);
  add_io(sat_cmd);
  sat_cmd->add_option("--r", cfg.r, "Height")->capture_default_str();

  CLI::App *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->require_subcommand(1);
  std::string suite;
  const std::pair<const char *, const char *> suites[] = {
      {"bijection", "lift/decompose round trips and homomorphism property"},
      {"axioms", "Equivariance, scaling, Frobenius and commuting-pair axioms"},
      {"bch", "BCH group law on a parabolic unipotent radical"},
      {"dist", "Divided-power algebra identities and duality"},
      {"sl2-example", "Worked SL2 example"},
      {"sl-n", "Trace-zero inputs give determinant-one exp and lifts"},
      {"saturation", "Saturation phi_g of sampled p-unipotent elements"}};
  for (const auto &[name, help] : suites) {
    CLI::App *c = verify_cmd->add_subcommand(name, help);
    c->callback([&suite, name] { suite = name; });
    add_p(c);
    add_out(c);
    if (std::string(name) == "sl2-example")
      continue;
    add_sampling(c);
    c->add_option("--r", cfg.r, "Height")->capture_default_str();
    c->add_option("--n", cfg.n, "Matrix size")->capture_default_str();
    if (std::string(name) == "axioms" || std::string(name) == "saturation")
      c->add_option("--conjugators", cfg.conjugators, "Sampled conjugators")->capture_default_str();
    if (std::string(name) == "axioms") {
      c->add_option("--scalars", cfg.scalars, "Sampled s-values")->capture_default_str();
      c->add_option("--pairs", cfg.pairs, "Sampled commuting pairs")->capture_default_str();
    }
    if (std::string(name) == "bch")
      c->add_option("--blocks", cfg.blocks, "Block sizes of the parabolic (default 1^n)")
          ->delimiter(',');
  }

  CLI::App *heis_cmd = app.add_subcommand("heisenberg", "Fake Heisenberg group counterexample");
  heis_cmd->require_subcommand(1);
  std::string heis_mode;
  const std::pair<const char *, const char *> heis_modes[] = {
      {"enumerate", "List all Hopf maps k[t]/(t^{p^r}) -> k[H]"},
      {"family", "Check the explicit family of Hopf maps"},
      {"report", "Compare Hopf-map count with commuting-tuple count"}};
  for (const auto &[name, help] : heis_modes) {
    CLI::App *c = heis_cmd->add_subcommand(name, help);
    c->callback([&heis_mode, name] { heis_mode = name; });
    add_p(c);
    add_out(c);
    c->add_option("--r", cfg.r, "Height")->capture_default_str();
    c->add_option("--jobs", cfg.jobs, std::string("Worker threads (default $") + kJobsEnv + " or 1)");
  }

  CLI::App *primes_cmd = app.add_subcommand("primes", "Good and pretty good primes");
  primes_cmd->require_subcommand(1);
  std::string primes_mode;
  const std::pair<const char *, const char *> prime_modes[] = {
      {"good", "Is p good for the given type(s)?"},
      {"pretty-good", "Is p pretty good for a root datum (Smith normal form test)?"}};
  for (const auto &[name, help] : prime_modes) {
    CLI::App *c = primes_cmd->add_subcommand(name, help);
    c->callback([&primes_mode, name] { primes_mode = name; });
    add_p(c);
    add_out(c);
    c->add_option("--datum", cfg.datum, "Built-in root datum (GL1.., SL2.., Sp4, B2, G2)");
    c->add_option("--datum-file", cfg.datum_file, "Root datum JSON file");
    if (std::string(name) == "good")
      c->add_option("--type", cfg.types, "Component type label, e.g. G2 (repeatable)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.jobs == 0)
      throw UsageError("--jobs must be positive");
    if (*exp_cmd)
      return cmd_exp(cfg, out);
    if (*log_cmd)
      return cmd_log(cfg, out);
    if (*lift_cmd)
      return cmd_lift(cfg, out);
    if (*dec_cmd)
      return cmd_decompose(cfg, out);
    if (*sat_cmd)
      return cmd_saturate(cfg, out);
    if (*verify_cmd)
      return cmd_verify(suite, cfg, out);
    if (*heis_cmd)
      return cmd_heisenberg(heis_mode, cfg, out);
    if (*primes_cmd)
      return cmd_primes(primes_mode, cfg, out);
  } catch (const InternalConsistencyError &e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    // UsageError, DomainError, CapacityError and JSON type errors.
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace infsub
