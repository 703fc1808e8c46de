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

#include "kzsim/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "kzsim/boltzmann.hpp"
#include "kzsim/errors.hpp"
#include "kzsim/io.hpp"
#include "kzsim/rng.hpp"
#include "kzsim/svmc.hpp"
#include "kzsim/theory.hpp"

namespace kzsim::campaign {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view v) {
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front())
        return std::string(v.substr(1, v.size() - 2));
    return std::string(v);
}

// Drops a trailing '#' comment that is not inside quotes.
std::string_view strip_comment(std::string_view line) {
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    return line;
}

double to_double(std::string_view text, const std::string& key, std::size_t line) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("config line " + std::to_string(line) + ": " + key + ": not a number: '" +
                          std::string(text) + "'");
    return v;
}

long long to_integer(std::string_view text, const std::string& key, std::size_t line) {
    text = trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("config line " + std::to_string(line) + ": " + key + ": not an integer: '" +
                          std::string(text) + "'");
    return v;
}

std::vector<double> to_list(std::string_view text, const std::string& key, std::size_t line) {
    std::string body(trim(text));
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::vector<double> out;
    std::string_view rest = body;
    while (!trim(rest).empty()) {
        const auto comma = rest.find(',');
        out.push_back(to_double(rest.substr(0, comma), key, line));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

fs::path resolve(const fs::path& base, const std::string& value) {
    fs::path p(value);
    return (p.is_absolute() || base.empty() ? p : base / p).lexically_normal();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

ChainInstance chain_for(int length, embedding::CouplingKind kind, std::uint64_t seed) {
    switch (kind) {
        case embedding::CouplingKind::ferro: return ChainInstance::uniform(length, -1);
        case embedding::CouplingKind::antiferro: return ChainInstance::uniform(length, 1);
        case embedding::CouplingKind::gauge: break;
    }
    return apply_random_gauge(ChainInstance::uniform(length, 1), seed).instance;
}

double half_width(const stats::Interval& ci) { return 0.5 * (ci.high - ci.low); }

report::PointResult failed_point(double time, std::string source, std::string error) {
    report::PointResult p;
    p.time = time;
    p.status = "failed";
    p.error = std::move(error);
    p.source = std::move(source);
    return p;
}

}  // namespace

Mode parse_mode(std::string_view text) {
    if (text == "svmc") return Mode::svmc;
    if (text == "theory") return Mode::theory;
    if (text == "ingest") return Mode::ingest;
    throw ConfigError("unknown mode '" + std::string(text) + "' (svmc, theory, ingest)");
}

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::svmc: return "svmc";
        case Mode::theory: return "theory";
        case Mode::ingest: return "ingest";
    }
    return "?";
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CampaignConfig parse_config(const std::string& text, const fs::path& base_dir, const std::string& default_name) {
    CampaignConfig c;
    c.name = default_name;
    c.source_text = text;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    bool have_output = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto body = trim(strip_comment(raw));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line) + ": expected key = value");
        const std::string key(trim(body.substr(0, eq)));
        const std::string value = unquote(trim(body.substr(eq + 1)));
        if (!seen.insert(key).second)
            throw ConfigError("config line " + std::to_string(line) + ": duplicate key '" + key + "'");

        if (key == "name") {
            c.name = value;
        } else if (key == "mode") {
            c.mode = parse_mode(value);
        } else if (key == "length") {
            c.length = static_cast<int>(to_integer(value, key, line));
        } else if (key == "coupling") {
            c.coupling = embedding::parse_coupling(value);
        } else if (key == "schedule") {
            c.schedule = value.rfind("linear", 0) == 0 ? value : resolve(base_dir, value).string();
        } else if (key == "device") {
            c.device = units::parse_device(value);
        } else if (key == "temperature_mK") {
            c.temperature_kelvin = to_double(value, key, line) * 1e-3;
        } else if (key == "n0") {
            c.n0 = static_cast<int>(to_integer(value, key, line));
        } else if (key == "samples") {
            c.samples = static_cast<int>(to_integer(value, key, line));
        } else if (key == "time_grid") {
            c.time_grid = to_list(value, key, line);
        } else if (key == "fit_range") {
            if (value == "auto") {
                c.fit_range.reset();
            } else {
                const auto colon = value.find(':');
                if (colon == std::string::npos)
                    throw ConfigError("config line " + std::to_string(line) + ": fit_range must be a:b or auto");
                stats::FitRange r;
                const auto lo = trim(std::string_view(value).substr(0, colon));
                const auto hi = trim(std::string_view(value).substr(colon + 1));
                if (!lo.empty()) r.t_min = to_double(lo, key, line);
                if (!hi.empty()) r.t_max = to_double(hi, key, line);
                c.fit_range = r;
            }
        } else if (key == "bootstrap") {
            c.bootstrap = static_cast<int>(to_integer(value, key, line));
        } else if (key == "seed") {
            const auto v = to_integer(value, key, line);
            if (v < 0) throw ConfigError("config line " + std::to_string(line) + ": seed must be non-negative");
            c.seed = static_cast<std::uint64_t>(v);
        } else if (key == "beta_reference_time") {
            c.beta_reference_time = to_double(value, key, line);
        } else if (key == "input") {
            c.input = resolve(base_dir, value);
        } else if (key == "instances") {
            c.instances = resolve(base_dir, value);
        } else if (key == "output_dir") {
            c.output_dir = resolve(base_dir, value);
            have_output = true;
        } else {
            throw ConfigError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (!seen.count("mode")) throw ConfigError("config: missing required key 'mode'");
    // Hardware-style data is analyzed up to 100 us unless told otherwise.
    if (!seen.count("fit_range") && c.mode == Mode::ingest) c.fit_range = stats::FitRange{0.0, 100.0};
    if (!have_output) c.output_dir = resolve(base_dir, c.name + "-out");
    return c;
}

CampaignConfig load_config(const fs::path& path) {
    return parse_config(io::read_text(path), path.parent_path(), path.stem().string());
}

void CampaignConfig::validate() const {
    auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
    if (mode != Mode::ingest) {
        if (time_grid.empty()) fail("time_grid is empty");
        if (length < 2) fail("length must be >= 2");
    }
    for (std::size_t i = 0; i < time_grid.size(); ++i) {
        if (!(time_grid[i] > 0.0)) fail("time_grid values must be positive");
        if (i > 0 && !(time_grid[i] > time_grid[i - 1])) fail("time_grid must be strictly increasing");
    }
    if (mode == Mode::theory && (length < 4 || length % 2 != 0)) fail("theory mode needs an even length >= 4");
    if (mode == Mode::svmc) {
        if (n0 < 1) fail("n0 must be >= 1");
        if (samples < 10) fail("samples must be >= 10");
        for (double t : time_grid)
            if (t < 1.0) fail("SVMC t'_a values must be >= 1");
        if (temperature_kelvin && !(*temperature_kelvin > 0.0)) fail("temperature_mK must be positive");
        if (schedule.rfind("linear", 0) != 0 && !fs::exists(schedule)) fail("schedule file not found: " + schedule);
    }
    if (mode == Mode::ingest) {
        if (input.empty()) fail("ingest mode needs 'input'");
        if (!fs::exists(input)) fail("input file not found: " + input.string());
        if (coupling == embedding::CouplingKind::gauge) fail("ingest coupling must be ferro or antiferro");
    }
    if (!instances.empty() && !fs::exists(instances)) fail("instances file not found: " + instances.string());
    if (bootstrap < 100) fail("bootstrap must be >= 100");
    if (fit_range && !(fit_range->t_min < fit_range->t_max)) fail("fit_range needs t_min < t_max");
}

AnnealSchedule resolve_schedule(const std::string& spec, const fs::path& base_dir) {
    if (spec == "linear") return linear_schedule();
    if (spec.rfind("linear:", 0) == 0) {
        const auto v = to_double(std::string_view(spec).substr(7), "schedule", 0);
        if (!(v > 0.0)) throw ConfigError("linear schedule scale must be positive");
        return linear_schedule(v);
    }
    return io::read_schedule_csv(resolve(base_dir, spec));
}

std::vector<SampleSet> ingest_samples(const fs::path& path, embedding::CouplingKind coupling,
                                      const fs::path& instances) {
    if (coupling == embedding::CouplingKind::gauge)
        throw ConfigError("ingest coupling must be ferro or antiferro; give gauged couplings in an instances file");
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    const auto rows = io::read_sample_rows(in);

    std::map<std::string, std::vector<std::int8_t>> known;
    if (!instances.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(io::read_text(instances));
            for (const auto& [id, couplings] : j.items()) known[id] = couplings.get<std::vector<std::int8_t>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(instances.string() + ": " + e.what(), 0);
        }
    }

    std::map<std::string, std::vector<io::SampleRow>> by_instance;
    for (const auto& row : rows) by_instance[row.instance_id].push_back(row);

    std::vector<SampleSet> out;
    for (const auto& [id, group] : by_instance) {
        const int length = static_cast<int>(group.front().spins.size());
        std::shared_ptr<const ChainInstance> instance;
        if (const auto it = known.find(id); it != known.end()) {
            if (static_cast<int>(it->second.size()) != length - 1)
                throw ConfigError("instance '" + id + "' has " + std::to_string(it->second.size()) +
                                  " couplings, samples need " + std::to_string(length - 1));
            instance = std::make_shared<const ChainInstance>(length, it->second);
        } else {
            instance = std::make_shared<const ChainInstance>(
                ChainInstance::uniform(length, coupling == embedding::CouplingKind::ferro ? -1 : 1));
        }
        auto sets = io::group_samples(group, instance);
        std::move(sets.begin(), sets.end(), std::back_inserter(out));
    }
    return out;
}

report::PointResult analyze_counts(double time, const std::vector<int>& counts, int length, int bootstrap,
                                   std::uint64_t bootstrap_seed, const units::DeviceConstants& device,
                                   std::vector<std::string>& warnings) {
    report::PointResult p;
    p.time = time;
    p.samples = counts.size();
    p.cumulants = stats::estimate_cumulants(counts, bootstrap, bootstrap_seed);
    p.density = p.cumulants.k1 / length;
    const auto hist = stats::histogram(counts);
    p.histogram = hist.pmf();
    try {
        const auto fit = boltzmann::fit_beta(hist, length);
        p.beta = fit;
        if (fit.beta_tn > 0.0) p.effective_temperature_kelvin = boltzmann::effective_temperature_kelvin(fit.beta_tn, device);
    } catch (const std::exception& e) {
        warnings.push_back("time " + fmt(time) + ": Boltzmann fit skipped: " + e.what());
    }
    return p;
}

stats::FitRange detect_crossover(const std::vector<stats::DataPoint>& points, const std::vector<double>& log_sigma,
                                 std::size_t min_points, double threshold) {
    if (points.size() != log_sigma.size()) throw DomainError("detect_crossover: sigma count mismatch");
    if (points.size() < std::max<std::size_t>(min_points, 3))
        throw DomainError("detect_crossover needs at least " + std::to_string(std::max<std::size_t>(min_points, 3)) +
                          " points");
    stats::FitRange range{points.front().t, points[min_points - 1].t};
    for (std::size_t k = min_points; k < points.size(); ++k) {
        const auto fit = stats::fit_power_law(std::span(points.data(), k));
        const double dof = static_cast<double>(k) - 2.0;
        const double scatter = dof > 0 ? fit.residual / dof : 0.0;
        const double predicted = fit.value("intercept") - fit.value("alpha") * std::log(points[k].t);
        const double sigma = std::sqrt(log_sigma[k] * log_sigma[k] + scatter);
        if (sigma > 0.0 && std::fabs(std::log(points[k].y) - predicted) > threshold * sigma) break;
        range.t_max = points[k].t;
    }
    return range;
}

void fit_report(report::Report& r, const std::optional<stats::FitRange>& range,
                std::optional<double> beta_reference_time) {
    std::vector<const report::PointResult*> ok;
    for (const auto& p : r.points)
        if (p.ok()) ok.push_back(&p);

    std::vector<stats::DataPoint> density;
    std::vector<double> log_sigma;
    for (const auto* p : ok) {
        if (!(p->density > 0.0)) continue;
        density.push_back({p->time, p->density, 1.0});
        log_sigma.push_back(half_width(p->cumulants.ci_k1) / p->cumulants.k1);
    }

    stats::FitRange fit_range;
    try {
        fit_range = range ? *range : detect_crossover(density, log_sigma);
    } catch (const std::exception& e) {
        r.warnings.push_back(std::string("fit range: ") + e.what());
        fit_range = range.value_or(stats::FitRange{});
    }

    auto try_fit = [&](const std::string& name, auto&& fn) {
        try {
            r.fits[name] = fn();
        } catch (const std::exception& e) {
            r.warnings.push_back(name + " fit: " + e.what());
        }
    };

    try_fit("density", [&] { return stats::fit_power_law(density, fit_range); });
    const std::pair<const char*, double stats::CumulantEstimate::*> kappas[] = {
        {"kappa1", &stats::CumulantEstimate::k1},
        {"kappa2", &stats::CumulantEstimate::k2},
        {"kappa3", &stats::CumulantEstimate::k3}};
    for (const auto& [name, member] : kappas) {
        try_fit(name, [&] {
            std::vector<stats::DataPoint> pts;
            for (const auto* p : ok) pts.push_back({p->time, p->cumulants.*member, 1.0});
            return stats::fit_power_law(pts, fit_range);
        });
    }

    const std::pair<const char*, std::pair<double stats::CumulantEstimate::*, stats::Interval stats::CumulantEstimate::*>>
        ratios[] = {{"ratio21", {&stats::CumulantEstimate::ratio21, &stats::CumulantEstimate::ci_ratio21}},
                    {"ratio31", {&stats::CumulantEstimate::ratio31, &stats::CumulantEstimate::ci_ratio31}}};
    for (const auto& [name, members] : ratios) {
        try_fit(name, [&] {
            std::vector<stats::RatioPoint> pts;
            double smallest = 0.0;
            for (const auto* p : ok) {
                if (p->time < fit_range.t_min || p->time > fit_range.t_max) continue;
                const double sigma = half_width(p->cumulants.*(members.second));
                pts.push_back({p->time, p->cumulants.*(members.first), sigma});
                if (sigma > 0.0 && (smallest == 0.0 || sigma < smallest)) smallest = sigma;
            }
            // Exact (theory) points carry no sampling error; their scatter stands in for it.
            double fill = smallest;
            if (fill == 0.0 && pts.size() > 1) {
                double mean = 0.0, ss = 0.0;
                for (const auto& pt : pts) mean += pt.r / pts.size();
                for (const auto& pt : pts) ss += (pt.r - mean) * (pt.r - mean);
                fill = std::sqrt(ss / (pts.size() - 1));
            }
            for (auto& pt : pts)
                if (pt.sigma <= 0.0) pt.sigma = fill;
            return stats::fit_constant(pts);
        });
    }

    const report::PointResult* reference = nullptr;
    for (const auto* p : ok) {
        if (!p->beta) continue;
        if (beta_reference_time ? p->time == *beta_reference_time : true) reference = p;
    }
    if (beta_reference_time && !reference)
        r.warnings.push_back("beta_reference_time " + fmt(*beta_reference_time) + " matches no fitted point");
    if (reference) {
        r.beta_reference_time = reference->time;
        const auto q = boltzmann::boltzmann_pmf(r.length, reference->beta->beta_tn);
        r.tn_series.clear();
        for (const auto* p : ok)
            r.tn_series.emplace_back(p->time, stats::tv_distance(p->histogram, q.pmf()));
        std::vector<std::pair<double, double>> positive;
        for (const auto& pt : r.tn_series)
            if (pt.second > 0.0) positive.push_back(pt);
        try {
            r.decay = stats::fit_decay_shape(positive);
        } catch (const std::exception& e) {
            r.warnings.push_back(std::string("decay fit: ") + e.what());
        }
    }
}

report::Report run_campaign(const CampaignConfig& config) {
    config.validate();

    report::Report r;
    r.name = config.name;
    r.mode = std::string(to_string(config.mode));
    r.provenance.seed = config.seed;
    r.provenance.config_hash = fnv1a_hex(config.source_text);
#ifdef KZSIM_VERSION
    r.provenance.version = KZSIM_VERSION;
#endif
    r.provenance.timestamp = utc_timestamp();

    switch (config.mode) {
        case Mode::theory: {
            r.time_unit = "tau";
            r.length = config.length;
            for (std::size_t i = 0; i < config.time_grid.size(); ++i) {
                const double tau = config.time_grid[i];
                try {
                    const auto dist = theory::kink_distribution({config.length, tau});
                    report::PointResult p;
                    p.time = tau;
                    p.source = "theory";
                    const auto& c = dist.cumulants();
                    p.cumulants.k1 = c.k1;
                    p.cumulants.k2 = c.k2;
                    p.cumulants.k3 = c.k3;
                    p.cumulants.ci_k1 = {c.k1, c.k1};
                    p.cumulants.ci_k2 = {c.k2, c.k2};
                    p.cumulants.ci_k3 = {c.k3, c.k3};
                    p.cumulants.ratio21 = c.k1 != 0.0 ? c.k2 / c.k1 : 0.0;
                    p.cumulants.ratio31 = c.k1 != 0.0 ? c.k3 / c.k1 : 0.0;
                    p.cumulants.ci_ratio21 = {p.cumulants.ratio21, p.cumulants.ratio21};
                    p.cumulants.ci_ratio31 = {p.cumulants.ratio31, p.cumulants.ratio31};
                    p.density = c.k1 / config.length;
                    p.histogram = dist.pmf();
                    r.points.push_back(std::move(p));
                    r.provenance.records.push_back("point " + std::to_string(i) + ": theory L=" +
                                                   std::to_string(config.length) + " tau=" + fmt(tau));
                } catch (const std::exception& e) {
                    r.points.push_back(failed_point(tau, "theory", e.what()));
                }
            }
            break;
        }
        case Mode::svmc: {
            r.time_unit = "t'_a";
            r.length = config.length;
            const auto instance = std::make_shared<const ChainInstance>(
                chain_for(config.length, config.coupling, derive_seed(config.seed, {0})));
            svmc::SvmcParams params;
            params.schedule = resolve_schedule(config.schedule);
            params.temperature_kelvin = config.temperature_kelvin.value_or(config.device.temperature_kelvin);
            params.n0 = config.n0;
            params.samples = config.samples;
            for (std::size_t i = 0; i < config.time_grid.size(); ++i) {
                const double ta = config.time_grid[i];
                params.ta_prime = ta;
                params.seed = derive_seed(config.seed, {1, i});
                try {
                    const auto set = svmc::SvmcAnnealer(params).run(instance, config.name);
                    const auto kd = kink_density(*instance, set.configs());
                    auto p = analyze_counts(ta, kd.counts, config.length, config.bootstrap,
                                            derive_seed(config.seed, {2, i}), config.device, r.warnings);
                    p.source = "svmc";
                    p.seed = params.seed;
                    r.points.push_back(std::move(p));
                    r.provenance.records.push_back(
                        "point " + std::to_string(i) + ": svmc L=" + std::to_string(config.length) + " coupling=" +
                        std::string(embedding::to_string(config.coupling)) + " schedule=" + params.schedule.name() +
                        " T=" + fmt(params.temperature_kelvin) + "K n0=" + std::to_string(params.n0) +
                        " t'_a=" + fmt(ta) + " samples=" + std::to_string(params.samples) +
                        " seed=" + std::to_string(params.seed));
                } catch (const std::exception& e) {
                    r.points.push_back(failed_point(ta, "svmc", e.what()));
                }
            }
            break;
        }
        case Mode::ingest: {
            r.time_unit = "t_a";
            const auto sets = ingest_samples(config.input, config.coupling, config.instances);
            std::map<double, std::vector<int>> pooled;
            std::map<double, std::vector<std::string>> ids;
            int length = 0;
            for (const auto& set : sets) {
                if (length == 0) length = set.instance().length();
                if (set.instance().length() != length)
                    throw ConfigError("ingested instances have different lengths");
                auto& counts = pooled[set.anneal_time()];
                const auto kd = kink_density(set.instance(), set.configs());
                counts.insert(counts.end(), kd.counts.begin(), kd.counts.end());
                ids[set.anneal_time()].push_back(set.instance_id());
            }
            if (config.length > 0 && config.length != length)
                throw ConfigError("config length " + std::to_string(config.length) + " but samples have L = " +
                                  std::to_string(length));
            r.length = length;
            std::size_t i = 0;
            for (const auto& [t, counts] : pooled) {
                try {
                    auto p = analyze_counts(t, counts, length, config.bootstrap, derive_seed(config.seed, {2, i}),
                                            config.device, r.warnings);
                    p.source = "ingested";
                    r.points.push_back(std::move(p));
                } catch (const std::exception& e) {
                    r.points.push_back(failed_point(t, "ingested", e.what()));
                }
                std::string record = "point " + std::to_string(i) + ": ingested " + config.input.filename().string() +
                                     " t_a=" + fmt(t) + " samples=" + std::to_string(counts.size()) + " instances=";
                for (std::size_t k = 0; k < ids[t].size(); ++k) record += (k ? "," : "") + ids[t][k];
                r.provenance.records.push_back(record);
                ++i;
            }
            break;
        }
    }

    const auto failed = std::count_if(r.points.begin(), r.points.end(), [](const auto& p) { return !p.ok(); });
    if (!r.points.empty() && failed == static_cast<long>(r.points.size()))
        throw std::runtime_error("all " + std::to_string(failed) + " time points failed; first: " +
                                 r.points.front().error);
    fit_report(r, config.fit_range, config.beta_reference_time);
    return r;
}

}  // namespace kzsim::campaign
