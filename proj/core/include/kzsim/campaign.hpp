/*
Copyright 2026 The kzsim Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Campaign configuration is a flat `key = value` file. '#' starts a comment,
   strings may be quoted, lists are comma separated. Relative paths resolve
   against the directory holding the config file.

     name                 report name (default: config file stem)
     mode                 svmc | theory | ingest
     length               chain length L (svmc, theory; ingest checks it)
     coupling             ferro | antiferro | gauge (default antiferro)
     schedule             linear | linear:<B(1)/2 GHz> | path to a schedule CSV
     device               nasa | burnaby | custom:<B(1)/2 GHz>,<T K> (default nasa)
     temperature_mK       SVMC temperature (default: the device temperature)
     n0                   SVMC sweeps per unit t'_a (default 1000)
     samples              SVMC samples per time point (default 1000)
     time_grid            t'_a (svmc), tau (theory); for ingest the grid is read from the data
     fit_range            <t_min>:<t_max> (either side may be empty) or auto; default
                          auto, except ingest which defaults to 0:100 (t_a <= 100 us)
     bootstrap            bootstrap resamples (default 1000)
     seed                 master seed (default 1)
     beta_reference_time  time whose trace-norm beta' fixes the decay series (default: last point)
     input                sample CSV (ingest)
     instances            optional JSON {"<instance_id>": [J_1, ..., J_{L-1}], ...} (ingest)
     output_dir           where emit_report writes (default: <name>-out)
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kzsim/embedding.hpp"
#include "kzsim/model.hpp"
#include "kzsim/report.hpp"
#include "kzsim/stats.hpp"
#include "kzsim/units.hpp"

namespace kzsim::campaign {

enum class Mode { svmc, theory, ingest };

Mode parse_mode(std::string_view text);
std::string_view to_string(Mode mode);

struct CampaignConfig {
    std::string name;
    Mode mode = Mode::theory;
    int length = 0;
    embedding::CouplingKind coupling = embedding::CouplingKind::antiferro;
    std::string schedule = "linear";
    units::DeviceConstants device = units::nasa_device();
    std::optional<double> temperature_kelvin;
    int n0 = 1000;
    int samples = 1000;
    std::vector<double> time_grid;
    std::optional<stats::FitRange> fit_range;  // empty means auto
    int bootstrap = 1000;
    std::uint64_t seed = 1;
    std::optional<double> beta_reference_time;
    std::filesystem::path input;
    std::filesystem::path instances;
    std::filesystem::path output_dir;
    std::string source_text;  // the text the config was parsed from, hashed into provenance

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;
};

/// Parses config text; relative paths resolve against `base_dir`.
CampaignConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                            const std::string& default_name = "campaign");
CampaignConfig load_config(const std::filesystem::path& path);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);

/// linear, linear:<scale> or a CSV path (resolved against base_dir).
AnnealSchedule resolve_schedule(const std::string& spec, const std::filesystem::path& base_dir = {});

/// Reads a sample CSV and groups it by (instance_id, anneal_time). Couplings come
/// from `instances` when an entry exists and otherwise from `coupling` (gauge is
/// not accepted here: a gauge needs its mask, so supply it through `instances`).
std::vector<SampleSet> ingest_samples(const std::filesystem::path& path,
                                      embedding::CouplingKind coupling = embedding::CouplingKind::antiferro,
                                      const std::filesystem::path& instances = {});

/// Analysis of one time point from kink counts: cumulants with bootstrap CIs,
/// histogram, Boltzmann fit and effective temperature. Failures of the Boltzmann
/// fit leave `beta` empty and add a record to `warnings`.
report::PointResult analyze_counts(double time, const std::vector<int>& counts, int length, int bootstrap,
                                   std::uint64_t bootstrap_seed, const units::DeviceConstants& device,
                                   std::vector<std::string>& warnings);

/// Fits over the per-point results: density and cumulant power laws, constant
/// ratios, and the trace-norm decay series with its shape.
void fit_report(report::Report& report, const std::optional<stats::FitRange>& range,
                std::optional<double> beta_reference_time);

/// Power-law range ending at the crossover: the prefix grows while each new
/// point stays within `threshold` standard errors (log space) of the fit to the
/// points before it. Needs at least `min_points` points to start.
stats::FitRange detect_crossover(const std::vector<stats::DataPoint>& points, const std::vector<double>& log_sigma,
                                 std::size_t min_points = 4, double threshold = 3.0);

/// Runs generation or ingestion and the full analysis chain. Throws ConfigError
/// for invalid configs and std::runtime_error when every point failed.
report::Report run_campaign(const CampaignConfig& config);

}  // namespace kzsim::campaign
