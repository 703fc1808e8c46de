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

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "kzsim/model.hpp"

namespace kzsim::io {

// Schedule CSV: header `s,A_GHz,B_GHz`, then one row per knot. Lines starting
// with '#' and blank lines are skipped anywhere in the file.
AnnealSchedule read_schedule_csv(std::istream& in, const std::string& name);
AnnealSchedule read_schedule_csv(const std::filesystem::path& path);
void write_schedule_csv(std::ostream& out, const AnnealSchedule& schedule);

struct SampleRow {
    std::string instance_id;
    double anneal_time = 0.0;
    SpinConfig spins;
    std::size_t line = 0;
};

// Sample CSV: header `instance_id,anneal_time,spins` with spins a '+'/'-' string.
std::vector<SampleRow> read_sample_rows(std::istream& in);

// Groups rows by (instance_id, anneal_time), ordered by instance id then time.
// Every group shares `instance`; its length must match every row.
std::vector<SampleSet> group_samples(const std::vector<SampleRow>& rows,
                                     std::shared_ptr<const ChainInstance> instance);

void write_samples_csv(std::ostream& out, const std::vector<SampleSet>& sets);
void write_samples_csv(const std::filesystem::path& path, const std::vector<SampleSet>& sets);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace kzsim::io
