// Copyright 2026 The mzm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzm/error.hpp"
#include "mzm/experiment.hpp"
#include "oracle_check.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

namespace fs = std::filesystem;

namespace {

fs::path find_preset(const std::string& name) {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("MZM_PRESET_DIR")) dirs.emplace_back(env);
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) dirs.push_back(exe.parent_path().parent_path() / "share" / "mzm" / "presets");
#ifdef MZM_SOURCE_PRESET_DIR
  dirs.emplace_back(MZM_SOURCE_PRESET_DIR);
#endif
  for (const fs::path& d : dirs) {
    const fs::path p = d / (name + ".json");
    if (fs::exists(p)) return p;
  }
  mzm::fail(mzm::ErrorKind::InvalidParameter, "unknown preset '" + name + "'");
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) mzm::fail(mzm::ErrorKind::InvalidParameter, "cannot open " + p.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    mzm::fail(mzm::ErrorKind::InvalidParameter, p.string() + ": " + e.what());
  }
}

// Relative output paths land under $MZM_OUTPUT_ROOT when it is set.
fs::path output_dir(const std::string& out) {
  fs::path p = out.empty() ? fs::path("results") : fs::path(out);
  if (p.is_relative()) {
    if (const char* root = std::getenv("MZM_OUTPUT_ROOT")) p = fs::path(root) / p;
  }
  return p;
}

struct RunArgs {
  std::string preset;
  std::string config;
  std::optional<int> n;
  std::vector<double> mu;
  std::vector<std::string> states;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<int> bootstrap;
  std::optional<double> p2q, p1q, p_idle, readout;
  bool no_readout = false;
  bool no_postselect = false;
  bool no_purify = false;
  bool no_idle = false;
  std::string output;
  int jobs = 0;
  bool quiet = false;
};

int run(const RunArgs& a) {
  nlohmann::json j = a.config.empty() ? read_json(find_preset(a.preset.empty() ? "smoke" : a.preset))
                                      : read_json(a.config);
  if (a.n) {
    j["n"] = *a.n;
    // a named preset resolves against the new size; explicit states would not
    if (!j.at("states").is_string() && a.states.empty()) j["states"] = "six-state";
  }
  if (!a.mu.empty()) j["mu_values"] = a.mu;
  if (!a.states.empty()) {
    j["states"] = a.states.size() == 1 && a.states[0] == "six-state" ? nlohmann::json("six-state")
                                                                       : nlohmann::json(a.states);
  }
  if (a.shots) j["shots"] = *a.shots;
  if (a.seed) j["seed"] = *a.seed;
  if (a.bootstrap) j["bootstrap_resamples"] = *a.bootstrap;
  if (a.p2q) j["noise"]["p2q"] = *a.p2q;
  if (a.p1q) j["noise"]["p1q"] = *a.p1q;
  if (a.p_idle) j["noise"]["p_idle"] = *a.p_idle;
  if (a.readout) j["noise"]["readout"] = {{"p01", *a.readout}, {"p10", *a.readout}};
  if (a.no_readout) j["mitigation"]["readout"] = false;
  if (a.no_postselect) j["mitigation"]["postselect"] = false;
  if (a.no_purify) j["mitigation"]["purify"] = false;
  if (a.no_idle) j["idle_noise"] = false;
  if (!a.output.empty()) j["output"] = a.output;

  const mzm::ExperimentConfig config = mzm::config_from_json(j);
  const int jobs = a.jobs > 0 ? a.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const mzm::ExperimentResults results = mzm::run_experiment(config, jobs);
  const fs::path dir = output_dir(config.output);
  mzm::write_results(results, dir);

  if (!a.quiet) {
    std::printf("%-6s %-8s %12s %12s %12s %9s\n", "mu", "state", "E_ideal", "E_raw", "E_mitigated", "F_W");
    for (const nlohmann::json& p : results.points) {
      const std::string occ = p.at("occupation").get<std::string>();
      if (!p.at("ok").get<bool>()) {
        std::printf("%-6.3g %-8s failed: %s\n", p.at("mu").get<double>(), occ.c_str(),
                    p.at("error").at("message").get<std::string>().c_str());
        continue;
      }
      std::printf("%-6.3g %-8s %12.6f %12.6f %12.6f %9.5f\n", p.at("mu").get<double>(), occ.c_str(),
                  p.at("ideal").at("energy").get<double>(), p.at("energy").at("raw").get<double>(),
                  p.at("energy").at("mitigated").get<double>(), p.at("witness").at("mitigated").get<double>());
    }
    std::printf("results written to %s\n", dir.string().c_str());
  }
  return results.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kitaev-chain Majorana zero mode experiment on a simulated quantum processor"};
  app.set_version_flag("--version", std::string(mzm::library_version()));
  app.require_subcommand(1);

  RunArgs ra;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a parameter sweep and write results");
  auto* preset_opt = run_cmd->add_option("--preset", ra.preset, "Named preset: paper6, paper7 or smoke");
  run_cmd->add_option("--config", ra.config, "Config file (JSON)")->excludes(preset_opt)->check(CLI::ExistingFile);
  run_cmd->add_option("--n", ra.n, "Number of sites");
  run_cmd->add_option("--mu", ra.mu, "Chemical potential values");
  run_cmd->add_option("--states", ra.states, "Occupation strings, or six-state");
  run_cmd->add_option("--shots", ra.shots, "Shots per measurement setting");
  run_cmd->add_option("--seed", ra.seed, "Master seed");
  run_cmd->add_option("--bootstrap", ra.bootstrap, "Bootstrap resamples per point");
  run_cmd->add_option("--p2q", ra.p2q, "Two-qubit depolarizing probability");
  run_cmd->add_option("--p1q", ra.p1q, "Single-qubit depolarizing probability");
  run_cmd->add_option("--p-idle", ra.p_idle, "Idle dephasing probability");
  run_cmd->add_option("--readout", ra.readout, "Symmetric readout flip probability");
  run_cmd->add_flag("--no-readout-mitigation", ra.no_readout, "Skip readout mitigation");
  run_cmd->add_flag("--no-postselect", ra.no_postselect, "Skip parity postselection");
  run_cmd->add_flag("--no-purify", ra.no_purify, "Skip McWeeny purification");
  run_cmd->add_flag("--no-idle-noise", ra.no_idle, "Disable idle dephasing");
  run_cmd->add_option("--output", ra.output, "Output directory (relative paths go under $MZM_OUTPUT_ROOT)");
  run_cmd->add_option("--jobs", ra.jobs, "Worker threads (default: hardware concurrency)");
  run_cmd->add_flag("-q,--quiet", ra.quiet, "Do not print the summary table");

  std::string report_dir, report_out;
  CLI::App* report_cmd = app.add_subcommand("report", "Rebuild the CSV tables from a result directory");
  report_cmd->add_option("dir", report_dir, "Result directory")->required();
  report_cmd->add_option("--output", report_out, "Where to write the tables (default: the result directory)");

  mzm::tools::OracleCheckOptions oc;
  CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "Validate against brute-force diagonalization");
  oracle_cmd->add_option("--max-n", oc.max_n, "Largest system size")->check(CLI::Range(2, 8));
  oracle_cmd->add_option("--trials", oc.trials, "Random Hamiltonians per size")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", oc.seed, "Seed for the random Hamiltonians");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(ra);
    if (*report_cmd) {
      const fs::path dir = output_dir(report_dir);
      mzm::report_tables(mzm::load_points(dir), report_out.empty() ? dir : output_dir(report_out));
      return 0;
    }
    if (*oracle_cmd) return mzm::tools::oracle_check(oc, std::cout) ? 0 : 1;
  } catch (const mzm::Error& e) {
    std::fprintf(stderr, "mzm: %s error: %s\n", std::string(mzm::to_string(e.kind())).c_str(), e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mzm: %s\n", e.what());
    return 2;
  }
  return 0;
}
