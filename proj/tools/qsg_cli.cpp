#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qsg/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"desk-scale computations for quantum symmetries of filtered algebras"};
  app.require_subcommand(1);

  qsg::JobConfig config;
  std::string out_path;
  app.add_option("--tol", config.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--format", config.format, "text | json")->capture_default_str();
  if (const char* cap = std::getenv("QSG_MAX_SIZE")) config.max_size = std::strtoull(cap, nullptr, 10);

  std::string file, weights, factors, mode = "length-block", expect, group = "s3", support, span;
  int radius = 3, fleet = 0, upper = 2, lower = 2;
  bool pairs = false, all_colors = false;

  auto* filtration = app.add_subcommand("filtration", "filtration pipelines");
  auto* analyze = filtration->add_subcommand("analyze", "validate, project, color and search");
  analyze->add_option("file", file, "filtration JSON")->required();
  analyze->add_option("--weights", weights, "comma list of Q weights (default 0,1,2,...)");

  auto* dual = app.add_subcommand("dual", "duals of finite abelian groups");
  auto* qiso = dual->add_subcommand("qiso", "character-side reduction and Cayley comparison");
  qiso->add_option("--factors", factors, "cyclic factor orders, e.g. 2,2,2")->required();

  auto* words = app.add_subcommand("words", "free product word combinatorics");
  auto* partition = words->add_subcommand("partition", "balls and partitions");
  partition->add_option("--factors", factors, "factor kinds, e.g. z,z or z2,z3")->required();
  partition->add_option("--radius", radius, "ball radius")->capture_default_str();
  partition->add_option("--mode", mode, "length | length-block | shape")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "operator-matrix relation reports");
  verify->add_option("file", file, "operator matrix JSON");
  verify->add_option("--fleet", fleet, "run the seeded instance fleet of this size per family");
  verify->add_option("--expect", expect, "additional gating flags: magic, kplus");

  auto* partitions = app.add_subcommand("partitions", "colored noncrossing partitions");
  partitions->add_option("--upper", upper, "upper points")->capture_default_str();
  partitions->add_option("--lower", lower, "lower points")->capture_default_str();
  partitions->add_flag("--pairs", pairs, "pair partitions only");
  partitions->add_flag("--all-colors", all_colors, "drop the balanced-color filter");
  partitions->add_option("--span", span, "operator matrix JSON for the span check");

  auto* ergodic = app.add_subcommand("ergodic", "spectral subspaces of group actions");
  auto* spectral = ergodic->add_subcommand("spectral", "regular decomposition and support check");
  spectral->add_option("--group", group, "builtin group: z<n>, z2^<k>, s3, d4")->capture_default_str();
  spectral->add_option("--support", support, "comma 0/1 list of spectral support dimensions");

  for (auto* sub : {filtration, analyze, dual, qiso, words, partition, verify, partitions, ergodic, spectral})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    config.command = {"filtration", "analyze", file};
    if (!weights.empty()) config.options["weights"] = weights;
  } else if (qiso->parsed()) {
    config.command = {"dual", "qiso"};
    config.options["factors"] = factors;
  } else if (partition->parsed()) {
    config.command = {"words", "partition"};
    config.options["factors"] = factors;
    config.options["radius"] = std::to_string(radius);
    config.options["mode"] = mode;
  } else if (verify->parsed()) {
    config.command = {"verify"};
    if (!file.empty()) config.command.push_back(file);
    if (fleet > 0) config.options["fleet"] = std::to_string(fleet);
    if (!expect.empty()) config.options["expect"] = expect;
  } else if (partitions->parsed()) {
    config.command = {"partitions"};
    config.options["upper"] = std::to_string(upper);
    config.options["lower"] = std::to_string(lower);
    if (pairs) config.options["pairs"] = "1";
    if (all_colors) config.options["all-colors"] = "1";
    if (!span.empty()) config.options["span"] = span;
  } else if (spectral->parsed()) {
    config.command = {"ergodic", "spectral"};
    config.options["group"] = group;
    if (!support.empty()) config.options["support"] = support;
  } else {
    std::cerr << "error: unknown command\n";
    return 1;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open output file " << out_path << "\n";
      return 1;
    }
    return qsg::run_job(config, out);
  }
  return qsg::run_job(config, std::cout);
}
