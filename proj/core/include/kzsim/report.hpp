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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kzsim/boltzmann.hpp"
#include "kzsim/stats.hpp"

namespace kzsim::report {

struct PointResult {
    double time = 0.0;           // t_a in microseconds, t'_a, or tau depending on mode
    std::string status = "ok";   // "ok" or "failed"
    std::string error;           // message when failed
    std::string source;          // ingested, svmc, theory
    std::uint64_t seed = 0;      // generation seed, 0 for ingested and theory points
    std::size_t samples = 0;
    double density = 0.0;
    stats::CumulantEstimate cumulants;
    std::vector<double> histogram;
    std::optional<boltzmann::BetaFit> beta;
    std::optional<double> effective_temperature_kelvin;

    bool ok() const noexcept { return status == "ok"; }
    bool operator==(const PointResult&) const = default;
};

struct Provenance {
    std::uint64_t seed = 0;
    std::string config_hash;  // FNV-1a 64 of the config text, hex
    std::string version;
    std::string timestamp;    // the only field allowed to differ between identical runs
    std::vector<std::string> records;

    bool operator==(const Provenance&) const = default;
};

struct Report {
    std::string name;
    std::string mode;
    std::string time_unit;
    int length = 0;
    std::vector<PointResult> points;
    std::map<std::string, stats::FitResult> fits;
    std::optional<double> beta_reference_time;
    std::vector<std::pair<double, double>> tn_series;
    std::optional<stats::DecayFit> decay;
    std::vector<std::string> warnings;
    Provenance provenance;

    bool operator==(const Report&) const = default;
};

enum class Format { json, csv_bundle, markdown };

Format parse_format(std::string_view text);

std::string to_json(const Report& report);
Report from_json(const std::string& text);

/// "0.204±0.002" with the error rounded to one significant figure (two when it
/// starts with 1) and the value to the same decimal place.
std::string format_with_error(double value, double error);

std::string to_markdown(const Report& report);

/// Writes report.json, report.md or a csv bundle (points.csv, fits.csv, tn_series.csv
/// and one histogram_<index>.csv per time point) into `dir`. Returns the files written.
std::vector<std::filesystem::path> emit_report(const Report& report, Format format, const std::filesystem::path& dir);

}  // namespace kzsim::report
