#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace fjq;
using namespace fjq::cli;

const std::map<std::string, IndexBase> kIndexBases = {
    {"auto", IndexBase::kAuto}, {"0", IndexBase::kZero}, {"1", IndexBase::kOne}};

void add_distribution_flags(CLI::App* app, DistributionSpec& spec, std::string& kind) {
  app->add_option("--distribution", kind, "uniform | exponential | power-law")
      ->check(CLI::IsMember({"uniform", "exponential", "power-law"}));
  app->add_option("--seed", spec.seed, "RNG seed");
  app->add_option("--x-min", spec.x_min, "Minimum raw value for exponential/power-law");
  app->add_option("--alpha", spec.alpha, "Power-law exponent");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friedkin-Johnsen opinion quantities: exact, approximate and oracle paths"};
  app.require_subcommand(1);

  // compute
  ComputeOptions compute;
  std::string compute_dist = "uniform";
  std::string compute_mode = "theoretical-delta";
  std::string compute_precond = "jacobi";
  std::string compute_base = "auto";
  auto* c = app.add_subcommand("compute", "Compute the five quantities for one graph");
  c->add_option("graph", compute.graph_path, "Edge list \"u v [w]\"")->required();
  c->add_option("--opinions", compute.opinions_path, "File with one internal opinion per line");
  add_distribution_flags(c, compute.distribution, compute_dist);
  c->add_option("--method", compute.method, "exact | approx | fj")
      ->check(CLI::IsMember({"exact", "approx", "fj"}));
  c->add_option("--epsilon", compute.epsilon, "Error parameter in (0, 1/2)");
  c->add_option("--delta-mode", compute_mode, "theoretical-delta | practical-tolerance");
  c->add_option("--max-iters", compute.max_iterations, "Solver iteration cap");
  c->add_option("--preconditioner", compute_precond, "jacobi | ic0")
      ->check(CLI::IsMember({"jacobi", "ic0"}));
  c->add_option("--exact-cutoff", compute.exact_cutoff, "Dense guard for --method exact");
  c->add_option("--fj-tol", compute.fj_tolerance, "Step tolerance for --method fj");
  c->add_option("--fj-max-steps", compute.fj_max_steps, "Sweep cap for --method fj");
  c->add_option("--trajectory", compute.trajectory_path, "Write 'iteration step' lines (fj)");
  c->add_option("--index-base", compute_base, "auto | 0 | 1")->check(CLI::IsMember({"auto", "0", "1"}));
  c->add_option("--format", compute.format, "kv | json")->check(CLI::IsMember({"kv", "json"}));
  c->add_option("--output", compute.output_path, "Also write the report to this file");
  c->add_flag("--debug", compute.debug, "Print equilibrium vectors and solver details to stderr");

  // bench
  BenchOptions bench;
  std::vector<std::string> bench_dists;
  std::string bench_mode = "theoretical-delta";
  auto* b = app.add_subcommand("bench", "Run exact and approximate paths over several graphs");
  b->add_option("graphs", bench.graph_paths, "Edge lists")->required();
  b->add_option("--distribution", bench_dists, "Distributions to run (default: all three)")
      ->check(CLI::IsMember({"uniform", "exponential", "power-law"}));
  b->add_option("--epsilon", bench.config.epsilon, "Error parameter in (0, 1/2)");
  b->add_option("--seed", bench.config.seed, "RNG seed for opinions");
  b->add_option("--exact-cutoff", bench.config.exact_cutoff, "Largest n' for the exact path");
  b->add_option("--delta-mode", bench_mode, "theoretical-delta | practical-tolerance");
  b->add_option("--max-iters", bench.config.max_iterations, "Solver iteration cap");
  b->add_option("--jobs", bench.config.jobs, "Cells evaluated concurrently");
  b->add_option("--format", bench.format, "table | records")->check(CLI::IsMember({"table", "records"}));
  b->add_option("--output", bench.output_path, "Write machine-readable records here");

  // gen-opinions
  GenOpinionsOptions gen;
  std::string gen_dist = "uniform";
  auto* g = app.add_subcommand("gen-opinions", "Generate internal opinions");
  g->add_option("n", gen.n, "Number of nodes")->required();
  add_distribution_flags(g, gen.distribution, gen_dist);
  g->add_option("--output", gen.output_path, "Output file (default stdout)");

  // lcc
  LccOptions lcc;
  std::string lcc_base = "auto";
  auto* l = app.add_subcommand("lcc", "Extract the largest connected component");
  l->add_option("graph", lcc.graph_path, "Edge list")->required();
  l->add_option("--index-base", lcc_base, "auto | 0 | 1")->check(CLI::IsMember({"auto", "0", "1"}));
  l->add_option("--output", lcc.output_path, "Write the component edge list (new ids)");
  l->add_option("--map", lcc.map_path, "Write the 'old new' relabeling map");

  // oracle
  OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "Cross-check the forest matrix against forest enumeration");
  o->add_option("graph", oracle.graph_path, "Edge list with at most 10 nodes");
  o->add_option("--random", oracle.random_graphs, "Number of random connected graphs");
  o->add_option("--max-n", oracle.max_n, "Largest random graph size (<= 10)");
  o->add_option("--seed", oracle.seed, "RNG seed");
  o->add_option("--tolerance", oracle.tolerance, "Allowed relative deviation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  return run_guarded(std::cerr, [&]() -> int {
    if (*c) {
      compute.distribution.kind = parse_distribution(compute_dist);
      compute.delta_mode = parse_delta_mode(compute_mode);
      compute.preconditioner =
          compute_precond == "ic0" ? Preconditioner::kIncompleteCholesky : Preconditioner::kJacobi;
      compute.index_base = kIndexBases.at(compute_base);
      return cmd_compute(compute, std::cout, std::cerr);
    }
    if (*b) {
      bench.config.delta_mode = parse_delta_mode(bench_mode);
      if (!bench_dists.empty()) {
        bench.config.distributions.clear();
        for (const auto& d : bench_dists) bench.config.distributions.push_back(parse_distribution(d));
      }
      return cmd_bench(bench, std::cout, std::cerr);
    }
    if (*g) {
      gen.distribution.kind = parse_distribution(gen_dist);
      return cmd_gen_opinions(gen, std::cout, std::cerr);
    }
    if (*l) {
      lcc.index_base = kIndexBases.at(lcc_base);
      return cmd_lcc(lcc, std::cout, std::cerr);
    }
    return cmd_oracle(oracle, std::cout, std::cerr);
  });
}
