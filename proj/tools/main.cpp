#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "aoicoex/commands.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{
      "Age-vs-throughput CSMA/CA coexistence: equilibria, stage payoffs and "
      "Monte Carlo simulation of the repeated game"};
  app.require_subcommand(1);

  // msne
  aoicoex::MsneArgs msne_args;
  CLI::App* msne = app.add_subcommand(
      "msne", "Print the stage-game equilibrium access probabilities");
  msne->add_option("--na", msne_args.n_aon, "AON node count")->required();
  msne->add_option("--nw", msne_args.n_ton, "TON node count")->required();
  msne->add_option("--beta", msne_args.beta, "idle-slot fraction")
      ->capture_default_str();
  msne->add_option("--rate", msne_args.rate, "per-node bit rate")
      ->capture_default_str();
  msne->add_option("--age", msne_args.age, "AON average age at slot start")
      ->required();

  // stage
  aoicoex::StageArgs stage_args;
  CLI::App* stage = app.add_subcommand(
      "stage", "Print stage payoffs for a given strategy profile");
  stage->add_option("--na", stage_args.n_aon, "AON node count")->required();
  stage->add_option("--nw", stage_args.n_ton, "TON node count")->required();
  stage->add_option("--beta", stage_args.beta, "idle-slot fraction")
      ->capture_default_str();
  stage->add_option("--rate", stage_args.rate, "per-node bit rate")
      ->capture_default_str();
  stage->add_option("--age", stage_args.age, "AON average age at slot start")
      ->required();
  stage->add_option("--tau-aon", stage_args.tau_aon, "AON access probability")
      ->required();
  stage->add_option("--tau-ton", stage_args.tau_ton, "TON access probability")
      ->required();
  stage->add_flag("--verify", stage_args.verify,
                  "also run the brute-force oracle, print max deviation");

  // simulate
  std::string config_path;
  std::string out_dir_override;
  int threads = 1;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run a scenario from a JSON config, write CSV outputs");
  simulate->add_option("--config", config_path, "JSON config file")
      ->required();
  simulate->add_option("--out", out_dir_override,
                       "output directory (overrides config)");
  simulate->add_option("--threads", threads,
                       "worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  // reproduce
  std::string target;
  aoicoex::SimulateJob repro_job;
  long long repro_runs = -1;
  std::uint64_t repro_seed = 0;
  bool repro_seed_set = false;
  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Rebuild a report table or figure dataset");
  reproduce
      ->add_option("target", target,
                   "one of: table1, fig2, fig3, fig4, fig5, fig6")
      ->required();
  reproduce->add_option("--runs", repro_runs, "Monte Carlo runs");
  reproduce
      ->add_option_function<std::uint64_t>(
          "--seed",
          [&](std::uint64_t v) {
            repro_seed = v;
            repro_seed_set = true;
          },
          "master seed")
      ->expected(1);
  reproduce->add_option("--beta", repro_job.spec.beta, "idle-slot fraction")
      ->capture_default_str();
  reproduce->add_option("--out", repro_job.out_dir, "output directory")
      ->capture_default_str();
  reproduce
      ->add_option("--threads", threads,
                   "worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  reproduce->add_flag("--json", repro_job.json_mirror,
                      "also write JSON mirrors");
  reproduce->add_flag("--full-precision", repro_job.full_precision,
                      "print 17 significant digits");

  CLI11_PARSE(app, argc, argv);

  if (msne->parsed()) {
    std::fputs(aoicoex::cmd_msne(msne_args).c_str(), stdout);
    return 0;
  }
  if (stage->parsed()) {
    std::fputs(aoicoex::cmd_stage(stage_args).c_str(), stdout);
    return 0;
  }
  if (simulate->parsed()) {
    aoicoex::SimulateJob job = aoicoex::load_config(config_path);
    if (!out_dir_override.empty()) job.out_dir = out_dir_override;
    for (const auto& path : aoicoex::cmd_simulate(job, threads)) {
      std::printf("wrote %s\n", path.string().c_str());
    }
    return 0;
  }
  // reproduce
  if (repro_runs > 0) repro_job.spec.runs = repro_runs;
  if (repro_seed_set) repro_job.spec.master_seed = repro_seed;
  for (const auto& path :
       aoicoex::cmd_reproduce(target, repro_job, threads)) {
    std::printf("wrote %s\n", path.string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
