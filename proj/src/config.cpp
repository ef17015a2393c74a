#include "aoicoex/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace aoicoex {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "scenario",    "n_first",     "n_second",       "beta",
      "rate",        "alphas",      "runs",           "stages",
      "seed",        "age_reset",   "out_dir",        "trace_runs",
      "full_precision", "json_mirror"};
  return keys;
}

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config error: " + message);
}

}  // namespace

SimulateJob parse_config_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("top-level value must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().count(key)) fail("unknown key '" + key + "'");
  }

  SimulateJob job;
  try {
    if (doc.contains("scenario")) {
      job.spec.pairing = pairing_from_name(doc.at("scenario").get<std::string>());
    }
    if (doc.contains("n_first")) job.spec.n_first = doc.at("n_first").get<int>();
    if (doc.contains("n_second")) {
      job.spec.n_second = doc.at("n_second").get<int>();
    }
    if (doc.contains("beta")) job.spec.beta = doc.at("beta").get<double>();
    if (doc.contains("rate")) job.spec.rate = doc.at("rate").get<double>();
    if (doc.contains("alphas")) {
      job.spec.alphas = doc.at("alphas").get<std::vector<double>>();
    }
    if (doc.contains("runs")) job.spec.runs = doc.at("runs").get<long long>();
    if (doc.contains("stages")) job.spec.stages = doc.at("stages").get<int>();
    if (doc.contains("seed")) {
      job.spec.master_seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("age_reset")) {
      const std::string mode = doc.at("age_reset").get<std::string>();
      if (mode == "network") {
        job.spec.age_reset = AgeReset::network;
      } else if (mode == "node") {
        job.spec.age_reset = AgeReset::node;
      } else {
        fail("age_reset must be 'network' or 'node'");
      }
    }
    if (doc.contains("out_dir")) {
      job.out_dir = doc.at("out_dir").get<std::string>();
    }
    if (doc.contains("trace_runs")) {
      job.trace_runs = doc.at("trace_runs").get<int>();
    }
    if (doc.contains("full_precision")) {
      job.full_precision = doc.at("full_precision").get<bool>();
    }
    if (doc.contains("json_mirror")) {
      job.json_mirror = doc.at("json_mirror").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }

  try {
    job.spec.validate();
  } catch (const std::domain_error& e) {
    fail(e.what());
  }
  if (job.trace_runs < 0 || job.trace_runs > job.spec.runs) {
    fail("trace_runs must lie in [0, runs]");
  }
  if (job.out_dir.empty()) fail("out_dir must be non-empty");
  return job;
}

SimulateJob load_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("config error: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config_text(buffer.str());
}

std::string config_echo_json(const SimulateJob& job, int threads) {
  nlohmann::json doc;
  doc["scenario"] = pairing_name(job.spec.pairing);
  doc["n_first"] = job.spec.n_first;
  doc["n_second"] = job.spec.n_second;
  doc["beta"] = job.spec.beta;
  doc["rate"] = job.spec.rate;
  doc["alphas"] = job.spec.alphas.empty() ? default_alpha_grid()
                                          : job.spec.alphas;
  doc["runs"] = job.spec.runs;
  doc["stages"] = job.spec.stages;
  doc["seed"] = job.spec.master_seed;
  doc["age_reset"] =
      job.spec.age_reset == AgeReset::network ? "network" : "node";
  doc["out_dir"] = job.out_dir;
  doc["trace_runs"] = job.trace_runs;
  doc["full_precision"] = job.full_precision;
  doc["json_mirror"] = job.json_mirror;
  doc["threads"] = threads;
  return doc.dump(2) + "\n";
}

}  // namespace aoicoex
