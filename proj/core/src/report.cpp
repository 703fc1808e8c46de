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

#include "kzsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "kzsim/errors.hpp"
#include "kzsim/io.hpp"

using nlohmann::json;

namespace kzsim::stats {

void to_json(json& j, const Interval& v) { j = json::array({v.low, v.high}); }
void from_json(const json& j, Interval& v) {
    v.low = j.at(0).get<double>();
    v.high = j.at(1).get<double>();
}

void to_json(json& j, const CumulantEstimate& c) {
    j = json{{"k1", c.k1},           {"k2", c.k2},           {"k3", c.k3},
             {"ci_k1", c.ci_k1},     {"ci_k2", c.ci_k2},     {"ci_k3", c.ci_k3},
             {"ratio21", c.ratio21}, {"ratio31", c.ratio31}, {"ci_ratio21", c.ci_ratio21},
             {"ci_ratio31", c.ci_ratio31}, {"n_samples", c.n_samples}};
}
void from_json(const json& j, CumulantEstimate& c) {
    j.at("k1").get_to(c.k1);
    j.at("k2").get_to(c.k2);
    j.at("k3").get_to(c.k3);
    j.at("ci_k1").get_to(c.ci_k1);
    j.at("ci_k2").get_to(c.ci_k2);
    j.at("ci_k3").get_to(c.ci_k3);
    j.at("ratio21").get_to(c.ratio21);
    j.at("ratio31").get_to(c.ratio31);
    j.at("ci_ratio21").get_to(c.ci_ratio21);
    j.at("ci_ratio31").get_to(c.ci_ratio31);
    j.at("n_samples").get_to(c.n_samples);
}

void to_json(json& j, const FitResult& f) {
    j = json{{"params", f.params}, {"errors", f.errors},     {"t_min", f.t_min},
             {"t_max", f.t_max},   {"residual", f.residual}, {"n_points", f.n_points}};
}
void from_json(const json& j, FitResult& f) {
    j.at("params").get_to(f.params);
    j.at("errors").get_to(f.errors);
    j.at("t_min").get_to(f.t_min);
    j.at("t_max").get_to(f.t_max);
    j.at("residual").get_to(f.residual);
    j.at("n_points").get_to(f.n_points);
}

void to_json(json& j, const DecayFit& d) {
    j = json{{"power", d.power}, {"exponential", d.exponential}, {"preferred", to_string(d.preferred)}};
}
void from_json(const json& j, DecayFit& d) {
    j.at("power").get_to(d.power);
    j.at("exponential").get_to(d.exponential);
    const auto preferred = j.at("preferred").get<std::string>();
    if (preferred == "power")
        d.preferred = DecayShape::power;
    else if (preferred == "exponential")
        d.preferred = DecayShape::exponential;
    else
        throw ParseError("unknown decay shape '" + preferred + "'", 0);
}

}  // namespace kzsim::stats

namespace kzsim::boltzmann {

void to_json(json& j, const BetaFit& b) {
    j = json{{"beta_kl", b.beta_kl},
             {"beta_tn", b.beta_tn},
             {"kl_at_optimum", b.kl_at_optimum},
             {"tn_at_optimum", b.tn_at_optimum},
             {"beta_density", b.beta_density},
             {"evaluations", b.evaluations}};
}
void from_json(const json& j, BetaFit& b) {
    j.at("beta_kl").get_to(b.beta_kl);
    j.at("beta_tn").get_to(b.beta_tn);
    j.at("kl_at_optimum").get_to(b.kl_at_optimum);
    j.at("tn_at_optimum").get_to(b.tn_at_optimum);
    j.at("beta_density").get_to(b.beta_density);
    j.at("evaluations").get_to(b.evaluations);
}

}  // namespace kzsim::boltzmann

namespace kzsim::report {

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

std::string number(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

std::string brief(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void to_json(json& j, const PointResult& p) {
    j = json{{"time", p.time},
             {"status", p.status},
             {"error", p.error},
             {"source", p.source},
             {"seed", p.seed},
             {"samples", p.samples},
             {"density", p.density},
             {"cumulants", p.cumulants},
             {"histogram", p.histogram},
             {"beta", optional_json(p.beta)},
             {"effective_temperature_kelvin", optional_json(p.effective_temperature_kelvin)}};
}
void from_json(const json& j, PointResult& p) {
    j.at("time").get_to(p.time);
    j.at("status").get_to(p.status);
    j.at("error").get_to(p.error);
    j.at("source").get_to(p.source);
    j.at("seed").get_to(p.seed);
    j.at("samples").get_to(p.samples);
    j.at("density").get_to(p.density);
    j.at("cumulants").get_to(p.cumulants);
    j.at("histogram").get_to(p.histogram);
    p.beta = optional_from<boltzmann::BetaFit>(j, "beta");
    p.effective_temperature_kelvin = optional_from<double>(j, "effective_temperature_kelvin");
}

void to_json(json& j, const Provenance& p) {
    j = json{{"seed", p.seed},
             {"config_hash", p.config_hash},
             {"version", p.version},
             {"timestamp", p.timestamp},
             {"records", p.records}};
}
void from_json(const json& j, Provenance& p) {
    j.at("seed").get_to(p.seed);
    j.at("config_hash").get_to(p.config_hash);
    j.at("version").get_to(p.version);
    j.at("timestamp").get_to(p.timestamp);
    j.at("records").get_to(p.records);
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv-bundle" || text == "csv") return Format::csv_bundle;
    if (text == "markdown" || text == "markdown-table" || text == "md") return Format::markdown;
    throw ConfigError("unknown report format '" + std::string(text) + "' (json, csv-bundle, markdown)");
}

std::string to_json(const Report& r) {
    json j{{"name", r.name},
           {"mode", r.mode},
           {"time_unit", r.time_unit},
           {"length", r.length},
           {"points", r.points},
           {"fits", r.fits},
           {"beta_reference_time", optional_json(r.beta_reference_time)},
           {"tn_series", r.tn_series},
           {"decay", optional_json(r.decay)},
           {"warnings", r.warnings},
           {"provenance", r.provenance}};
    return j.dump(2) + "\n";
}

Report from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report JSON: ") + e.what(), 0);
    }
    Report r;
    try {
        j.at("name").get_to(r.name);
        j.at("mode").get_to(r.mode);
        j.at("time_unit").get_to(r.time_unit);
        j.at("length").get_to(r.length);
        j.at("points").get_to(r.points);
        j.at("fits").get_to(r.fits);
        r.beta_reference_time = optional_from<double>(j, "beta_reference_time");
        j.at("tn_series").get_to(r.tn_series);
        r.decay = optional_from<stats::DecayFit>(j, "decay");
        j.at("warnings").get_to(r.warnings);
        j.at("provenance").get_to(r.provenance);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what(), 0);
    }
    return r;
}

std::string format_with_error(double value, double error) {
    if (!std::isfinite(value)) return "n/a";
    if (!(error > 0.0) || !std::isfinite(error) || error < 1e-9 * std::fabs(value)) return brief(value) + "±0";
    const int exponent = static_cast<int>(std::floor(std::log10(error)));
    // One significant figure, or two when the leading digit is 1.
    const double leading = error / std::pow(10.0, exponent);
    const int decimals = std::max(0, -exponent + (leading < 2.0 ? 1 : 0));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*f±%.*f", decimals, value, decimals, error);
    return buf;
}

std::string to_markdown(const Report& r) {
    std::ostringstream out;
    out << "# " << r.name << "\n\n";
    out << "mode: " << r.mode << ", L = " << r.length << ", seed " << r.provenance.seed << ", config "
        << r.provenance.config_hash << "\n\n";

    if (!r.fits.empty()) {
        out << "| fit | value | range | points |\n|---|---|---|---|\n";
        for (const auto& [name, f] : r.fits) {
            for (const auto& [param, value] : f.params) {
                if (param == "intercept") continue;
                const auto err = f.errors.count(param) ? f.errors.at(param) : 0.0;
                out << "| " << name << '.' << param << " | " << format_with_error(value, err) << " | ["
                    << brief(f.t_min) << ", " << brief(f.t_max) << "] | " << f.n_points << " |\n";
            }
        }
        out << '\n';
    }

    out << "| " << r.time_unit << " | density | k1 | k2/k1 | k3/k1 | beta' (TN) | status |\n"
        << "|---|---|---|---|---|---|---|\n";
    for (const auto& p : r.points) {
        if (!p.ok()) {
            out << "| " << brief(p.time) << " | | | | | | failed: " << p.error << " |\n";
            continue;
        }
        const auto& c = p.cumulants;
        const auto half = [](const stats::Interval& ci) { return 0.5 * (ci.high - ci.low); };
        out << "| " << brief(p.time) << " | " << brief(p.density) << " | "
            << format_with_error(c.k1, half(c.ci_k1)) << " | " << format_with_error(c.ratio21, half(c.ci_ratio21))
            << " | " << format_with_error(c.ratio31, half(c.ci_ratio31)) << " | "
            << (p.beta ? brief(p.beta->beta_tn) : std::string()) << " | ok |\n";
    }
    if (r.decay) {
        out << "\ntrace-norm decay: preferred " << stats::to_string(r.decay->preferred) << " (power tau = "
            << format_with_error(r.decay->power.value("tau"), r.decay->power.error("tau")) << ", exponential gamma = "
            << format_with_error(r.decay->exponential.value("gamma"), r.decay->exponential.error("gamma")) << ")\n";
    }
    for (const auto& w : r.warnings) out << "\nwarning: " << w;
    if (!r.warnings.empty()) out << '\n';
    return out.str();
}

std::vector<std::filesystem::path> emit_report(const Report& r, Format format, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    auto write = [&](const std::string& file, const std::string& text) {
        io::write_text(dir / file, text);
        written.push_back(dir / file);
    };

    switch (format) {
        case Format::json:
            write("report.json", to_json(r));
            break;
        case Format::markdown:
            write("report.md", to_markdown(r));
            break;
        case Format::csv_bundle: {
            std::ostringstream points;
            points << "index,time,status,samples,density,k1,k1_low,k1_high,k2,k2_low,k2_high,k3,k3_low,k3_high,"
                      "ratio21,ratio31,beta_kl,beta_tn,teff_kelvin\n";
            for (std::size_t i = 0; i < r.points.size(); ++i) {
                const auto& p = r.points[i];
                const auto& c = p.cumulants;
                points << i << ',' << number(p.time) << ',' << p.status << ',' << p.samples << ','
                       << number(p.density) << ',' << number(c.k1) << ',' << number(c.ci_k1.low) << ','
                       << number(c.ci_k1.high) << ',' << number(c.k2) << ',' << number(c.ci_k2.low) << ','
                       << number(c.ci_k2.high) << ',' << number(c.k3) << ',' << number(c.ci_k3.low) << ','
                       << number(c.ci_k3.high) << ',' << number(c.ratio21) << ',' << number(c.ratio31) << ','
                       << (p.beta ? number(p.beta->beta_kl) : "") << ',' << (p.beta ? number(p.beta->beta_tn) : "")
                       << ',' << (p.effective_temperature_kelvin ? number(*p.effective_temperature_kelvin) : "")
                       << '\n';
            }
            write("points.csv", points.str());

            std::ostringstream fits;
            fits << "fit,param,value,stderr,t_min,t_max,n_points,residual\n";
            for (const auto& [name, f] : r.fits)
                for (const auto& [param, value] : f.params)
                    fits << name << ',' << param << ',' << number(value) << ','
                         << number(f.errors.count(param) ? f.errors.at(param) : 0.0) << ',' << number(f.t_min)
                         << ',' << number(f.t_max) << ',' << f.n_points << ',' << number(f.residual) << '\n';
            write("fits.csv", fits.str());

            std::ostringstream tn;
            tn << "time,d_tn\n";
            for (const auto& [t, d] : r.tn_series) tn << number(t) << ',' << number(d) << '\n';
            write("tn_series.csv", tn.str());

            for (std::size_t i = 0; i < r.points.size(); ++i) {
                std::ostringstream h;
                h << "# time = " << number(r.points[i].time) << "\nn,p\n";
                for (std::size_t n = 0; n < r.points[i].histogram.size(); ++n)
                    h << n << ',' << number(r.points[i].histogram[n]) << '\n';
                write("histogram_" + std::to_string(i) + ".csv", h.str());
            }
            break;
        }
    }
    return written;
}

}  // namespace kzsim::report
