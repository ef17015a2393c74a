#pragma once

#include <filesystem>
#include <string>

#include "aoicoex/scenarios.hpp"

// Human-editable JSON configuration for the simulate command: the scenario
// fields as flat keys plus output and trace-sampling options. Unknown keys
// are rejected and every invariant is enforced on load.

namespace aoicoex {

struct SimulateJob {
  ScenarioSpec spec;
  std::string out_dir = "out";
  int trace_runs = 1;
  bool full_precision = false;
  bool json_mirror = false;
};

// Throws std::invalid_argument with a one-line diagnostic on parse errors,
// unknown keys, or invariant violations.
SimulateJob parse_config_text(const std::string& text);
SimulateJob load_config(const std::filesystem::path& path);

// Serialized config echo (used by the output manifest).
std::string config_echo_json(const SimulateJob& job, int threads);

}  // namespace aoicoex
