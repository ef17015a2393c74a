#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "aoicoex/config.hpp"

// Command implementations shared by the CLI binary and the acceptance
// harness. Each returns printable text or writes the requested files and
// returns their paths; errors surface as exceptions with one-line messages.

namespace aoicoex {

struct MsneArgs {
  int n_aon = 0;
  int n_ton = 0;
  double beta = 0.01;
  double rate = 1.0;
  double age = 0.0;
};

std::string cmd_msne(const MsneArgs& args);

struct StageArgs {
  int n_aon = 0;
  int n_ton = 0;
  double beta = 0.01;
  double rate = 1.0;
  double age = 0.0;
  double tau_aon = 0.0;
  double tau_ton = 0.0;
  bool verify = false;  // also run the brute-force oracle, print max deviation
};

std::string cmd_stage(const StageArgs& args);

// Writes aggregate.csv, frequencies.csv, trace_run0.csv (when trace_runs >=
// 1) and manifest.json into job.out_dir. Returns the written paths.
std::vector<std::filesystem::path> cmd_simulate(const SimulateJob& job,
                                                int threads);

// Reproduction targets for the report tables. Writes one CSV per target plus
// manifest.json. Valid targets: table1, fig2, fig3, fig4, fig5, fig6.
std::vector<std::filesystem::path> cmd_reproduce(const std::string& target,
                                                 const SimulateJob& job,
                                                 int threads);

}  // namespace aoicoex
