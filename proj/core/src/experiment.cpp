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

#include "mzm/experiment.hpp"

#include "mzm/error.hpp"
#include "mzm/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <thread>

#ifndef MZM_VERSION
#define MZM_VERSION "0.0.0"
#endif

namespace mzm {

std::string_view library_version() { return MZM_VERSION; }

void ExperimentConfig::validate() const {
  require(n >= 2 && n <= 14, "n must lie in 2..14");
  require(std::isfinite(t) && std::isfinite(delta.real()) && std::isfinite(delta.imag()), "non-finite t or delta");
  require(!mu_values.empty(), "mu_values must not be empty");
  require(!states.empty(), "states must not be empty");
  for (const Occupation& o : states) {
    require(o.size() == n, "state " + o.to_string() + " does not have " + std::to_string(n) + " modes");
  }
  require(shots > 0, "shots must be positive");
  require(bootstrap_resamples >= 0, "bootstrap_resamples must be non-negative");
  require(mitigation.hamming_radius >= 0, "hamming_radius must be non-negative");
  noise.validate(n);
}

NoiseModel ExperimentConfig::effective_noise() const {
  NoiseModel m = noise;
  if (!idle_noise_on) m.p_idle = 0.0;
  return m;
}

std::vector<Occupation> six_state_occupations(int n) {
  require(n >= 2, "six-state preset needs n >= 2");
  const Occupation first = Occupation::single(n, 0);
  const Occupation second = Occupation::single(n, 1);
  return {Occupation::zeros(n), first, second, Occupation::ones(n), first.complement(), second.complement()};
}

namespace {

ReadoutError readout_from_json(const nlohmann::json& j) {
  return {j.value("p01", 0.0), j.value("p10", 0.0)};
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (j.contains("schema")) {
    require(j.at("schema").get<std::string>() == kConfigSchema, "unsupported config schema");
  }
  ExperimentConfig c;
  try {
    c.name = j.value("name", std::string("custom"));
    c.n = j.at("n").get<int>();
    c.t = j.value("t", -1.0);
    if (j.contains("delta")) {
      const nlohmann::json& d = j.at("delta");
      c.delta = d.is_array() ? Complex(d.at(0).get<double>(), d.at(1).get<double>()) : Complex(d.get<double>(), 0.0);
    }
    c.mu_values = j.at("mu_values").get<std::vector<double>>();
    const nlohmann::json& st = j.at("states");
    if (st.is_string()) {
      c.state_preset = st.get<std::string>();
      require(c.state_preset == "six-state", "unknown state preset '" + c.state_preset + "'");
      c.states = six_state_occupations(c.n);
    } else {
      for (const nlohmann::json& s : st) c.states.push_back(Occupation::from_string(s.get<std::string>()));
    }
    c.shots = j.at("shots").get<std::uint64_t>();
    if (j.contains("noise")) {
      const nlohmann::json& nz = j.at("noise");
      c.noise.p2q = nz.value("p2q", 0.0);
      c.noise.p1q = nz.value("p1q", 0.0);
      c.noise.p_idle = nz.value("p_idle", 0.0);
      if (nz.contains("readout")) {
        const nlohmann::json& r = nz.at("readout");
        if (r.is_array()) {
          for (const nlohmann::json& e : r) c.noise.readout.push_back(readout_from_json(e));
        } else {
          c.noise.readout.push_back(readout_from_json(r));
        }
      }
    }
    c.idle_noise_on = j.value("idle_noise", true);
    if (j.contains("mitigation")) {
      const nlohmann::json& m = j.at("mitigation");
      c.mitigation.readout = m.value("readout", true);
      c.mitigation.postselect = m.value("postselect", true);
      c.mitigation.purify = m.value("purify", true);
      c.mitigation.hamming_radius = m.value("hamming_radius", kDefaultHammingRadius);
    }
    c.bootstrap_resamples = j.value("bootstrap_resamples", 100);
    c.seed = j.value("seed", std::uint64_t{0});
    c.output = j.value("output", std::string());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidParameter, std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["schema"] = std::string(kConfigSchema);
  j["name"] = c.name;
  j["n"] = c.n;
  j["t"] = c.t;
  if (c.delta.imag() == 0.0) {
    j["delta"] = c.delta.real();
  } else {
    j["delta"] = {c.delta.real(), c.delta.imag()};
  }
  j["mu_values"] = c.mu_values;
  if (!c.state_preset.empty()) {
    j["states"] = c.state_preset;
  } else {
    nlohmann::json s = nlohmann::json::array();
    for (const Occupation& o : c.states) s.push_back(o.to_string());
    j["states"] = std::move(s);
  }
  j["shots"] = c.shots;
  nlohmann::json readout = nlohmann::json::array();
  for (const ReadoutError& r : c.noise.readout) readout.push_back({{"p01", r.p01}, {"p10", r.p10}});
  j["noise"] = {{"p2q", c.noise.p2q}, {"p1q", c.noise.p1q}, {"p_idle", c.noise.p_idle}, {"readout", readout}};
  j["idle_noise"] = c.idle_noise_on;
  j["mitigation"] = {{"readout", c.mitigation.readout},
                     {"postselect", c.mitigation.postselect},
                     {"purify", c.mitigation.purify},
                     {"hamming_radius", c.mitigation.hamming_radius}};
  j["bootstrap_resamples"] = c.bootstrap_resamples;
  j["seed"] = c.seed;
  j["output"] = c.output;
  return j;
}

std::uint64_t config_hash(const ExperimentConfig& c) {
  nlohmann::json j = config_to_json(c);
  j.erase("output");  // where results land does not change them
  return fnv1a(j.dump());
}

std::vector<ShotCounts> simulate_settings(const std::vector<MeasurementSetting>& settings, std::uint64_t shots,
                                          const NoiseModel& noise, std::uint64_t seed) {
  std::vector<ShotCounts> out;
  out.reserve(settings.size());
  for (std::size_t k = 0; k < settings.size(); ++k) {
    out.push_back(run_noisy(settings[k].circuit, shots, noise, derive_seed(seed, k)));
  }
  return out;
}

PipelineOutput mitigate_and_analyze(const QuadraticHamiltonian& h, const CorrelationMatrix& target,
                                    const std::vector<MeasurementSetting>& settings,
                                    const std::vector<ShotCounts>& counts, const ConfusionModel& confusion,
                                    const MitigationOptions& options) {
  require(settings.size() == counts.size(), "one count record per setting is required");
  PipelineOutput out;
  auto finish = [&](Stage stage, CorrelationMatrix gamma) {
    StageResult& r = out.stages[static_cast<std::size_t>(stage)];
    r.energy = energy_from_correlation(h, gamma);
    r.witness = fidelity_witness(target, gamma);
    r.gamma = std::move(gamma);
  };

  std::vector<QuasiDistribution> quasi;
  quasi.reserve(counts.size());
  for (const ShotCounts& c : counts) quasi.push_back(QuasiDistribution::from_counts(c));
  finish(Stage::Raw, assemble_correlation_matrix(settings, quasi));

  if (options.readout) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      quasi[k] = readout_mitigate(counts[k], confusion, options.hamming_radius);
    }
    finish(Stage::Readout, assemble_correlation_matrix(settings, quasi));
  } else {
    out.stages[1] = out.stages[0];
  }

  if (options.postselect) {
    for (std::size_t k = 0; k < quasi.size(); ++k) {
      Postselected ps = parity_postselect(quasi[k], settings[k].circuit.x_parity());
      out.discarded_mass += ps.discarded_mass;
      out.discarded_abs_mass += ps.discarded_abs_mass;
      quasi[k] = std::move(ps.kept);
    }
    out.discarded_mass /= static_cast<double>(quasi.size());
    out.discarded_abs_mass /= static_cast<double>(quasi.size());
    finish(Stage::Postselect, assemble_correlation_matrix(settings, quasi));
  } else {
    out.stages[2] = out.stages[1];
  }

  if (options.purify) {
    Purified p = mcweeny_purify(out.stages[2].gamma);
    out.purify_iterations = p.iterations;
    out.purify_residual = p.residual;
    out.purify_near_half = p.near_half;
    finish(Stage::Purify, std::move(p.gamma));
  } else {
    out.stages[3] = out.stages[2];
  }
  return out;
}

namespace {

nlohmann::json interval_json(const Interval& i) { return {i.lo, i.hi}; }

nlohmann::json stage_json(const PipelineOutput& p) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t s = 0; s < kStageNames.size(); ++s) {
    j[std::string(kStageNames[s])] = {{"energy", p.stages[s].energy}, {"witness", p.stages[s].witness}};
  }
  return j;
}

}  // namespace

nlohmann::json PointResult::to_json() const {
  nlohmann::json j;
  j["schema"] = std::string(kPointSchema);
  j["n"] = occupation.size();
  j["mu"] = mu;
  j["mu_index"] = mu_index;
  j["occupation"] = occupation.to_string();
  j["ok"] = ok;
  j["ideal"] = {{"energy", ideal_energy}, {"site_correlation", exact_profile}};
  if (!ok) {
    j["error"] = {{"kind", error_kind}, {"message", error_message}};
    return j;
  }
  j["protocol"] = {{"real", real_protocol}, {"settings", setting_count}, {"circuit", circuit}};
  j["stages"] = stage_json(pipeline);
  j["energy"] = {{"raw", pipeline.stages[0].energy},
                 {"mitigated", pipeline.final_stage().energy},
                 {"ideal", ideal_energy},
                 {"raw_ci", interval_json(energy_raw_ci)},
                 {"mitigated_ci", interval_json(energy_mitigated_ci)}};
  j["witness"] = {{"raw", pipeline.stages[0].witness},
                  {"mitigated", pipeline.final_stage().witness},
                  {"raw_ci", interval_json(witness_raw_ci)},
                  {"mitigated_ci", interval_json(witness_mitigated_ci)}};
  j["site_correlation"] = {{"exact", exact_profile}, {"raw", measured_profile}, {"mitigated", mitigated_profile}};
  j["postselection"] = {{"discarded_mass", pipeline.discarded_mass},
                        {"discarded_abs_mass", pipeline.discarded_abs_mass}};
  j["purification"] = {{"iterations", pipeline.purify_iterations},
                       {"residual", pipeline.purify_residual},
                       {"near_half_warning", pipeline.purify_near_half}};
  j["bootstrap"] = {{"failures", bootstrap_failures}};
  nlohmann::json raw = correlation_to_json(pipeline.stages[0].gamma);
  nlohmann::json mit = correlation_to_json(pipeline.final_stage().gamma);
  raw["occupation"] = mit["occupation"] = occupation.to_string();
  j["gamma"] = {{"raw", raw}, {"mitigated", mit}};
  return j;
}

PointResult run_point(const ExperimentConfig& config, std::size_t mu_index, std::size_t state_index) {
  PointResult r;
  r.mu_index = mu_index;
  r.mu = config.mu_values.at(mu_index);
  r.occupation = config.states.at(state_index);
  try {
    const QuadraticHamiltonian h = kitaev_chain({config.n, config.t, config.delta, r.mu});
    const BogoliubovTransform bt = diagonalize(h);
    r.ideal_energy = eigenstate_energy(bt, r.occupation);
    const CorrelationMatrix target = gaussian_correlation(bt, r.occupation);
    r.exact_profile = site_correlation_profile(target);

    const Circuit base = prepare_eigenstate_circuit(bt, r.occupation);
    r.circuit = circuit_to_json(base);
    r.real_protocol = h.is_real() && is_real_circuit(base);
    const std::vector<MeasurementSetting> settings = measurement_settings(bt, r.occupation, r.real_protocol);
    r.setting_count = static_cast<int>(settings.size());

    const std::uint64_t point_seed = derive_seed(config.seed, mu_index * config.states.size() + state_index);
    const NoiseModel noise = config.effective_noise();
    const std::vector<ShotCounts> counts = simulate_settings(settings, config.shots, noise, point_seed);
    const ConfusionModel confusion = ConfusionModel::from_noise(noise, config.n);
    r.pipeline = mitigate_and_analyze(h, target, settings, counts, confusion, config.mitigation);
    r.measured_profile = site_correlation_profile(r.pipeline.stages[0].gamma);
    r.mitigated_profile = site_correlation_profile(r.pipeline.final_stage().gamma);

    std::vector<double> e_raw, e_mit, w_raw, w_mit;
    Rng rng = make_rng(point_seed, 0xB0075712ULL);
    for (int b = 0; b < config.bootstrap_resamples; ++b) {
      std::vector<ShotCounts> boot;
      boot.reserve(counts.size());
      for (const ShotCounts& c : counts) boot.push_back(resample(c, rng));
      try {
        const PipelineOutput p = mitigate_and_analyze(h, target, settings, boot, confusion, config.mitigation);
        e_raw.push_back(p.stages[0].energy);
        e_mit.push_back(p.final_stage().energy);
        w_raw.push_back(p.stages[0].witness);
        w_mit.push_back(p.final_stage().witness);
      } catch (const Error&) {
        ++r.bootstrap_failures;
      }
    }
    if (!e_raw.empty()) {
      r.energy_raw_ci = two_sigma_interval(e_raw);
      r.energy_mitigated_ci = two_sigma_interval(e_mit);
      r.witness_raw_ci = two_sigma_interval(w_raw);
      r.witness_mitigated_ci = two_sigma_interval(w_mit);
    }
    r.ok = true;
  } catch (const Error& e) {
    r.error_kind = std::string(to_string(e.kind()));
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.error_kind = "internal";
    r.error_message = e.what();
  }
  return r;
}

bool ExperimentResults::all_ok() const {
  return std::all_of(points.begin(), points.end(), [](const nlohmann::json& p) { return p.at("ok").get<bool>(); });
}

namespace {

// Excitation of x above the vacuum-side reference, or of the all-ones state
// above x for states on the hole side of the spectrum.
void attach_excitations(std::vector<nlohmann::json>& points) {
  std::map<std::pair<std::size_t, std::string>, const nlohmann::json*> index;
  for (const nlohmann::json& p : points) {
    index[{p.at("mu_index").get<std::size_t>(), p.at("occupation").get<std::string>()}] = &p;
  }
  std::vector<nlohmann::json> extra(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const nlohmann::json& p = points[i];
    const std::string occ = p.at("occupation").get<std::string>();
    const int n = static_cast<int>(occ.size());
    const int weight = static_cast<int>(std::count(occ.begin(), occ.end(), '1'));
    const bool hole_side = 2 * weight > n;
    const std::string ref = std::string(static_cast<std::size_t>(n), hole_side ? '1' : '0');
    nlohmann::json e = {{"reference", ref}};
    auto it = index.find({p.at("mu_index").get<std::size_t>(), ref});
    if (it == index.end() || !p.at("ok").get<bool>() || !it->second->at("ok").get<bool>()) {
      e["ideal"] = e["raw"] = e["mitigated"] = nullptr;
    } else {
      const nlohmann::json& q = *it->second;
      auto diff = [&](const nlohmann::json& a, const nlohmann::json& b) {
        return hole_side ? b.get<double>() - a.get<double>() : a.get<double>() - b.get<double>();
      };
      e["ideal"] = diff(p.at("ideal").at("energy"), q.at("ideal").at("energy"));
      e["raw"] = diff(p.at("energy").at("raw"), q.at("energy").at("raw"));
      e["mitigated"] = diff(p.at("energy").at("mitigated"), q.at("energy").at("mitigated"));
    }
    extra[i] = std::move(e);
  }
  for (std::size_t i = 0; i < points.size(); ++i) points[i]["excitation"] = std::move(extra[i]);
}

}  // namespace

ExperimentResults run_experiment(const ExperimentConfig& config, int jobs) {
  config.validate();
  const std::size_t total = config.mu_values.size() * config.states.size();
  ExperimentResults results;
  results.config = config;
  results.points.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      results.points[k] = run_point(config, k / config.states.size(), k % config.states.size()).to_json();
    }
  };
  const int threads = std::max(1, std::min(jobs, static_cast<int>(total)));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  attach_excitations(results.points);
  return results;
}

std::string point_file_name(std::size_t mu_index, const Occupation& occupation) {
  return "point_mu" + std::to_string(mu_index) + "_" + occupation.to_string() + ".json";
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidParameter, "cannot write " + path.string());
  out << text;
}

std::string num(const nlohmann::json& v) {
  if (v.is_null()) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
  return buf;
}

std::string num(double v) { return num(nlohmann::json(v)); }

}  // namespace

void report_tables(const std::vector<nlohmann::json>& points, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  int max_n = 0;
  for (const nlohmann::json& p : points) max_n = std::max(max_n, p.at("n").get<int>());

  std::string energies =
      "n,mu,state,energy_ideal,energy_raw,energy_mitigated,energy_mitigated_lo,energy_mitigated_hi,"
      "excitation_ideal,excitation_raw,excitation_mitigated\n";
  std::string witness = "n,mu,state,raw,readout,postselect,purify,mitigated_lo,mitigated_hi\n";
  std::string sites = "n,mu,state,source";
  for (int j = 2; j <= 2 * max_n; ++j) sites += ",j" + std::to_string(j);
  sites += "\n";

  // system size -> (vacuum sum, vacuum count, occupied sum, occupied count)
  std::map<int, std::array<double, 4>> discarded;

  for (const nlohmann::json& p : points) {
    const std::string key = std::to_string(p.at("n").get<int>()) + "," + num(p.at("mu")) + "," +
                            p.at("occupation").get<std::string>();
    if (!p.at("ok").get<bool>()) {
      energies += key + "," + num(p.at("ideal").at("energy")) + ",,,,,,,\n";
      continue;
    }
    const nlohmann::json& e = p.at("energy");
    const nlohmann::json& x = p.at("excitation");
    energies += key + "," + num(e.at("ideal")) + "," + num(e.at("raw")) + "," + num(e.at("mitigated")) + "," +
                num(e.at("mitigated_ci").at(0)) + "," + num(e.at("mitigated_ci").at(1)) + "," + num(x.at("ideal")) +
                "," + num(x.at("raw")) + "," + num(x.at("mitigated")) + "\n";

    const nlohmann::json& st = p.at("stages");
    witness += key;
    for (std::string_view s : kStageNames) witness += "," + num(st.at(std::string(s)).at("witness"));
    witness += "," + num(p.at("witness").at("mitigated_ci").at(0)) + "," +
               num(p.at("witness").at("mitigated_ci").at(1)) + "\n";

    for (const char* source : {"exact", "raw", "mitigated"}) {
      sites += key + "," + source;
      const nlohmann::json& prof = p.at("site_correlation").at(source);
      for (std::size_t j = 0; j < static_cast<std::size_t>(2 * max_n - 1); ++j) {
        sites += "," + (j < prof.size() ? num(prof.at(j)) : std::string());
      }
      sites += "\n";
    }

    const std::string occ = p.at("occupation").get<std::string>();
    const bool vacuum = occ.find('1') == std::string::npos;
    auto& d = discarded[p.at("n").get<int>()];
    const double mass = p.at("postselection").at("discarded_mass").get<double>();
    d[vacuum ? 0 : 2] += mass;
    d[vacuum ? 1 : 3] += 1.0;
  }

  std::string table = "system_size,vacuum,occupied\n";
  for (const auto& [n, d] : discarded) {
    table += std::to_string(n) + "," + (d[1] > 0 ? num(d[0] / d[1]) : "") + "," + (d[3] > 0 ? num(d[2] / d[3]) : "") +
             "\n";
  }

  write_text(dir / "energies.csv", energies);
  write_text(dir / "witness.csv", witness);
  write_text(dir / "site_correlation.csv", sites);
  write_text(dir / "discarded_mass.csv", table);
}

void write_results(const ExperimentResults& results, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json listing = nlohmann::json::array();
  for (const nlohmann::json& p : results.points) {
    const std::string file =
        point_file_name(p.at("mu_index").get<std::size_t>(), Occupation::from_string(p.at("occupation").get<std::string>()));
    write_text(dir / file, p.dump(2) + "\n");
    listing.push_back({{"file", file}, {"mu", p.at("mu")}, {"occupation", p.at("occupation")}, {"ok", p.at("ok")}});
  }
  report_tables(results.points, dir);

  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config_hash(results.config)));
  nlohmann::json manifest;
  manifest["schema"] = std::string(kManifestSchema);
  manifest["version"] = std::string(library_version());
  manifest["config_hash"] = hash;
  manifest["config"] = config_to_json(results.config);
  manifest["points"] = std::move(listing);
  manifest["all_ok"] = results.all_ok();
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

std::vector<nlohmann::json> load_points(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) fail(ErrorKind::InvalidParameter, "no manifest.json in " + dir.string());
  const nlohmann::json manifest = nlohmann::json::parse(in);
  require(manifest.at("schema").get<std::string>() == kManifestSchema, "unsupported manifest schema");
  std::vector<nlohmann::json> points;
  for (const nlohmann::json& entry : manifest.at("points")) {
    std::ifstream pf(dir / entry.at("file").get<std::string>());
    if (!pf) fail(ErrorKind::IncompleteData, "missing result file " + entry.at("file").get<std::string>());
    points.push_back(nlohmann::json::parse(pf));
  }
  return points;
}

}  // namespace mzm
