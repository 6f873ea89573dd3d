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

#pragma once

#include "mzm/analysis.hpp"
#include "mzm/measure.hpp"
#include "mzm/mitigate.hpp"
#include "mzm/simulate.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mzm {

inline constexpr std::string_view kConfigSchema = "mzm.config/1";
inline constexpr std::string_view kPointSchema = "mzm.point/1";
inline constexpr std::string_view kManifestSchema = "mzm.manifest/1";

std::string_view library_version();

struct MitigationOptions {
  bool readout = true;
  bool postselect = true;
  bool purify = true;
  int hamming_radius = kDefaultHammingRadius;
};

struct ExperimentConfig {
  std::string name = "custom";
  int n = 0;
  double t = -1.0;
  Complex delta = 1.0;
  std::vector<double> mu_values;
  std::string state_preset;        // "six-state", or empty for explicit states
  std::vector<Occupation> states;  // resolved list
  std::uint64_t shots = 0;
  NoiseModel noise;
  bool idle_noise_on = true;
  MitigationOptions mitigation;
  int bootstrap_resamples = 100;
  std::uint64_t seed = 0;
  std::string output;

  void validate() const;
  /// Noise actually simulated (idle dephasing removed when switched off).
  NoiseModel effective_noise() const;
};

/// Ground, first and second single excitations, and their complements.
std::vector<Occupation> six_state_occupations(int n);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);
std::uint64_t config_hash(const ExperimentConfig& c);

enum class Stage { Raw = 0, Readout = 1, Postselect = 2, Purify = 3 };
inline constexpr std::array<std::string_view, 4> kStageNames = {"raw", "readout", "postselect", "purify"};

struct StageResult {
  CorrelationMatrix gamma;
  double energy = 0.0;
  double witness = 0.0;
};

struct PipelineOutput {
  std::array<StageResult, 4> stages;  // cumulative: each stage includes the earlier ones
  double discarded_mass = 0.0;        // mean over settings, signed
  double discarded_abs_mass = 0.0;
  int purify_iterations = 0;
  double purify_residual = 0.0;
  bool purify_near_half = false;

  const StageResult& final_stage() const { return stages[3]; }
};

/// Counts -> readout mitigation -> parity postselection -> assembly ->
/// purification, with energy and witness evaluated after every stage.
PipelineOutput mitigate_and_analyze(const QuadraticHamiltonian& h, const CorrelationMatrix& target,
                                    const std::vector<MeasurementSetting>& settings,
                                    const std::vector<ShotCounts>& counts, const ConfusionModel& confusion,
                                    const MitigationOptions& options);

/// Simulates every setting of one eigenstate; stream ids keep settings independent.
std::vector<ShotCounts> simulate_settings(const std::vector<MeasurementSetting>& settings, std::uint64_t shots,
                                          const NoiseModel& noise, std::uint64_t seed);

struct PointResult {
  double mu = 0.0;
  std::size_t mu_index = 0;
  Occupation occupation;
  bool ok = false;
  std::string error_kind;
  std::string error_message;

  double ideal_energy = 0.0;
  bool real_protocol = false;
  int setting_count = 0;
  nlohmann::json circuit;  // preparation circuit, mzm.circuit/1
  std::vector<double> exact_profile;
  std::vector<double> measured_profile;  // raw
  std::vector<double> mitigated_profile;
  PipelineOutput pipeline;
  Interval energy_raw_ci, energy_mitigated_ci, witness_raw_ci, witness_mitigated_ci;
  int bootstrap_failures = 0;

  nlohmann::json to_json() const;
};

PointResult run_point(const ExperimentConfig& config, std::size_t mu_index, std::size_t state_index);

struct ExperimentResults {
  ExperimentConfig config;
  std::vector<nlohmann::json> points;  // mzm.point/1 documents, sweep order
  bool all_ok() const;
};

/// Runs every (mu, state) point on `jobs` worker threads; results do not
/// depend on the thread count. Excitation energies are attached afterwards.
ExperimentResults run_experiment(const ExperimentConfig& config, int jobs);

/// One JSON per point, the CSV tables and a manifest, all under `dir`.
void write_results(const ExperimentResults& results, const std::filesystem::path& dir);

/// energies.csv, site_correlation.csv, discarded_mass.csv, witness.csv.
void report_tables(const std::vector<nlohmann::json>& points, const std::filesystem::path& dir);

/// Reads the point documents listed by a manifest.
std::vector<nlohmann::json> load_points(const std::filesystem::path& dir);

std::string point_file_name(std::size_t mu_index, const Occupation& occupation);

}  // namespace mzm
