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

#include "kzsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "kzsim/errors.hpp"

namespace kzsim::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::string_view column, std::size_t line) {
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("column " + std::string(column) + ": not a number: '" + std::string(field) + "'", line);
    return value;
}

bool skippable(std::string_view line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

// Reads lines, skipping comments, and checks the header. Calls row(fields, line) per data row.
template <class Row>
void read_table(std::istream& in, const std::vector<std::string_view>& header, Row&& row) {
    std::string text;
    std::size_t line = 0;
    bool seen_header = false;
    while (std::getline(in, text)) {
        ++line;
        if (skippable(text)) continue;
        const auto fields = split(text);
        if (!seen_header) {
            if (fields != header) {
                std::string want;
                for (auto h : header) want += (want.empty() ? "" : ",") + std::string(h);
                throw ParseError("expected header '" + want + "'", line);
            }
            seen_header = true;
            continue;
        }
        if (fields.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             line);
        row(fields, line);
    }
    if (!seen_header) throw ParseError("missing header", 0);
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

AnnealSchedule read_schedule_csv(std::istream& in, const std::string& name) {
    std::vector<SchedulePoint> points;
    read_table(in, {"s", "A_GHz", "B_GHz"}, [&](const auto& f, std::size_t line) {
        points.push_back({parse_double(f[0], "s", line), parse_double(f[1], "A_GHz", line),
                          parse_double(f[2], "B_GHz", line)});
    });
    if (points.empty()) throw ParseError("no data rows", 0);
    return AnnealSchedule(std::move(points), name);
}

AnnealSchedule read_schedule_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_schedule_csv(in, path.stem().string());
}

void write_schedule_csv(std::ostream& out, const AnnealSchedule& schedule) {
    out << "# " << schedule.name() << '\n' << "s,A_GHz,B_GHz\n";
    for (const auto& p : schedule.points())
        out << format_double(p.s) << ',' << format_double(p.a) << ',' << format_double(p.b) << '\n';
}

std::vector<SampleRow> read_sample_rows(std::istream& in) {
    std::vector<SampleRow> rows;
    read_table(in, {"instance_id", "anneal_time", "spins"}, [&](const auto& f, std::size_t line) {
        if (f[0].empty()) throw ParseError("empty instance_id", line);
        const double t = parse_double(f[1], "anneal_time", line);
        if (!(t > 0.0)) throw ParseError("anneal_time must be positive", line);
        SpinConfig spins;
        try {
            spins = SpinConfig::from_string(f[2]);
        } catch (const std::exception& e) {
            throw ParseError(std::string("spins: ") + e.what(), line);
        }
        if (spins.size() < 2) throw ParseError("spins: need at least 2 spins", line);
        rows.push_back({std::string(f[0]), t, std::move(spins), line});
    });
    if (rows.empty()) throw ParseError("no data rows", 0);
    return rows;
}

std::vector<SampleSet> group_samples(const std::vector<SampleRow>& rows,
                                     std::shared_ptr<const ChainInstance> instance) {
    if (!instance) throw ConfigError("group_samples needs a chain instance");
    std::map<std::pair<std::string, double>, std::vector<SpinConfig>> groups;
    for (const auto& row : rows) {
        if (row.spins.size() != static_cast<std::size_t>(instance->length()))
            throw ConfigError("line " + std::to_string(row.line) + ": spin string has length " +
                              std::to_string(row.spins.size()) + ", instance has L = " +
                              std::to_string(instance->length()));
        groups[{row.instance_id, row.anneal_time}].push_back(row.spins);
    }
    std::vector<SampleSet> out;
    out.reserve(groups.size());
    for (auto& [key, configs] : groups)
        out.emplace_back(key.first, instance, key.second, std::move(configs), SampleSource::ingested);
    return out;
}

void write_samples_csv(std::ostream& out, const std::vector<SampleSet>& sets) {
    out << "instance_id,anneal_time,spins\n";
    for (const auto& set : sets) {
        const auto t = format_double(set.anneal_time());
        for (const auto& c : set.configs()) out << set.instance_id() << ',' << t << ',' << c.to_string() << '\n';
    }
}

void write_samples_csv(const std::filesystem::path& path, const std::vector<SampleSet>& sets) {
    std::ostringstream buf;
    write_samples_csv(buf, sets);
    write_text(path, buf.str());
}

std::string read_text(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace kzsim::io
