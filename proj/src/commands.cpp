#include "aoicoex/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

#include "aoicoex/equilibrium_oracle.hpp"
#include "aoicoex/report.hpp"
#include "aoicoex/stage_game.hpp"

namespace aoicoex {

namespace {

std::string line(const char* label, double value) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-16s %.6g\n", label, value);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  file << text;
  if (!file) throw std::runtime_error("write failed for " + path.string());
}

StageGameParams stage_params(int n_aon, int n_ton, double beta, double rate,
                             double age) {
  StageGameParams params{n_aon, n_ton, SlotLengths::from_beta(beta, rate),
                         age};
  params.validate();
  return params;
}

}  // namespace

std::string cmd_msne(const MsneArgs& args) {
  const StageGameParams params =
      stage_params(args.n_aon, args.n_ton, args.beta, args.rate, args.age);
  const EquilibriumResult eq = msne(params);
  std::string out;
  if (eq.tau_aon_star) out += line("tau_aon_star", *eq.tau_aon_star);
  if (eq.tau_ton_star) out += line("tau_ton_star", *eq.tau_ton_star);
  out += line("age_threshold", eq.age_threshold);
  return out;
}

std::string cmd_stage(const StageArgs& args) {
  const StageGameParams params =
      stage_params(args.n_aon, args.n_ton, args.beta, args.rate, args.age);
  StrategyProfile profile{args.tau_aon, args.tau_ton};
  profile.validate();
  const StagePayoffs payoffs = stage_payoffs(params, profile);
  std::string out;
  out += line("u_ton", payoffs.u_ton);
  out += line("u_aon", payoffs.u_aon);
  if (args.verify) {
    const StagePayoffs oracle = expected_payoffs_bruteforce(params, profile);
    const double dev = std::max(std::abs(payoffs.u_ton - oracle.u_ton),
                                std::abs(payoffs.u_aon - oracle.u_aon));
    out += line("oracle_max_dev", dev);
  }
  return out;
}

std::vector<std::filesystem::path> cmd_simulate(const SimulateJob& job,
                                                int threads) {
  job.spec.validate();
  const std::filesystem::path dir(job.out_dir);
  std::filesystem::create_directories(dir);

  const MonteCarloConfig config = build(job.spec, threads, job.trace_runs);
  const RunAggregate agg = monte_carlo(config);

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::filesystem::path& path, const Table& table) {
    write_csv(path, table, job.full_precision);
    written.push_back(path);
    if (job.json_mirror) {
      std::filesystem::path mirror = path;
      mirror.replace_extension(".json");
      write_json(mirror, table);
      written.push_back(mirror);
    }
  };

  emit(dir / "aggregate.csv", aggregate_table(job.spec, agg));

  Table freq;
  freq.columns = {"scenario",
                  "freq_success_net1_per_node",
                  "freq_success_net2_per_node",
                  "freq_collision",
                  "freq_tau_zero_net1",
                  "freq_tau_zero_net2"};
  freq.rows.push_back(frequencies_row(job.spec, agg));
  emit(dir / "frequencies.csv", freq);

  if (job.trace_runs >= 1) {
    emit(dir / "trace_run0.csv", trace_table(agg));
  }

  write_text(dir / "manifest.json", config_echo_json(job, threads));
  written.push_back(dir / "manifest.json");
  return written;
}

std::vector<std::filesystem::path> cmd_reproduce(const std::string& target,
                                                 const SimulateJob& job,
                                                 int threads) {
  static const std::set<std::string> targets{"table1", "fig2", "fig3",
                                             "fig4",   "fig5", "fig6"};
  if (!targets.count(target)) {
    throw std::invalid_argument(
        "unknown target '" + target +
        "' (expected table1, fig2, fig3, fig4, fig5 or fig6)");
  }
  job.spec.validate();
  const std::filesystem::path dir(job.out_dir);
  std::filesystem::create_directories(dir);

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const Table& table) {
    const std::filesystem::path path = dir / name;
    write_csv(path, table, job.full_precision);
    written.push_back(path);
    if (job.json_mirror) {
      std::filesystem::path mirror = path;
      mirror.replace_extension(".json");
      write_json(mirror, table);
      written.push_back(mirror);
    }
  };

  if (target == "table1") {
    emit("frequencies.csv", frequencies_table(job.spec, threads));
  } else if (target == "fig2") {
    emit("access_probability.csv", sweep_access_probability(job.spec.beta));
  } else if (target == "fig3") {
    emit("stage_payoffs.csv", sweep_stage_payoffs(job.spec.beta));
  } else if (target == "fig4") {
    SimulateJob trace_job = job;
    trace_job.spec.runs = 1;
    trace_job.spec.alphas = {0.99};
    const MonteCarloConfig config = build(trace_job.spec, threads, 1);
    emit("trace_run0.csv", trace_table(monte_carlo(config)));
  } else if (target == "fig5") {
    emit("discounted_payoffs.csv",
         sweep_discounted_payoffs(job.spec, threads));
  } else {  // fig6
    emit("tau_zero_frequency.csv",
         sweep_tau_zero_frequency(job.spec, threads));
  }

  write_text(dir / "manifest.json", config_echo_json(job, threads));
  written.push_back(dir / "manifest.json");
  return written;
}

}  // namespace aoicoex
