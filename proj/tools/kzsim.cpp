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

// kzsim command-line front end.
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 runtime failure,
// 3 campaign finished with some failed time points.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kzsim/boltzmann.hpp"
#include "kzsim/campaign.hpp"
#include "kzsim/embedding.hpp"
#include "kzsim/errors.hpp"
#include "kzsim/io.hpp"
#include "kzsim/report.hpp"
#include "kzsim/rng.hpp"
#include "kzsim/svmc.hpp"
#include "kzsim/theory.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace kzsim;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kRuntime = 2;
constexpr int kPartial = 3;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_text(path, text);
}

std::shared_ptr<const ChainInstance> load_instance(const std::string& path) {
    const auto j = json::parse(io::read_text(path));
    const int length = j.at("length").get<int>();
    auto couplings = j.at("couplings").get<std::vector<std::int8_t>>();
    if (j.contains("embedding") && !j.at("embedding").empty())
        return std::make_shared<const ChainInstance>(length, std::move(couplings),
                                                     j.at("embedding").get<std::vector<int>>(),
                                                     j.at("chimera_cells").get<int>());
    return std::make_shared<const ChainInstance>(length, std::move(couplings));
}

int finish(const report::Report& r) {
    for (const auto& p : r.points)
        if (!p.ok()) return kPartial;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kink statistics of annealed transverse-field Ising chains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(KZSIM_TOOL_VERSION));

    // embed
    auto* embed = app.add_subcommand("embed", "Generate a chain as a self-avoiding walk on a Chimera graph");
    int embed_cells = 16, embed_length = 0, embed_retries = 100000, embed_count = 1;
    std::uint64_t embed_seed = 1;
    std::string embed_coupling = "antiferro", embed_out;
    embed->add_option("--cells", embed_cells, "Unit cells per side of the Chimera graph")->capture_default_str();
    embed->add_option("-L,--length", embed_length, "Chain length")->required();
    embed->add_option("--seed", embed_seed, "Random seed")->capture_default_str();
    embed->add_option("--max-retries", embed_retries, "Walk restarts before giving up")->capture_default_str();
    embed->add_option("--coupling", embed_coupling, "ferro, antiferro or gauge")->capture_default_str();
    embed->add_option("--instances", embed_count, "Number of chains; more than one writes a JSON array")
        ->capture_default_str();
    embed->add_option("-o,--out", embed_out, "Instance JSON (stdout when omitted)");

    // svmc
    auto* sv = app.add_subcommand("svmc", "Anneal a chain with spin-vector Monte Carlo and write a sample CSV");
    int sv_length = 0, sv_n0 = svmc::kNasaN0, sv_samples = 1000;
    std::vector<double> sv_ta{1.0};
    double sv_temp_mk = 12.1;
    std::uint64_t sv_seed = 1;
    std::string sv_instance, sv_schedule = "linear", sv_coupling = "antiferro", sv_out, sv_id = "svmc-0";
    sv->add_option("-L,--length", sv_length, "Chain length (uniform couplings)");
    sv->add_option("--instance", sv_instance, "Instance JSON from `embed`")->check(CLI::ExistingFile);
    sv->add_option("--coupling", sv_coupling, "ferro or antiferro for --length chains")->capture_default_str();
    sv->add_option("--schedule", sv_schedule, "linear, linear:<B(1)/2 GHz> or a schedule CSV")->capture_default_str();
    sv->add_option("--temp-mK,--temperature-mK", sv_temp_mk, "Temperature in millikelvin")->capture_default_str();
    sv->add_option("--n0", sv_n0, "Sweeps per unit annealing time")->capture_default_str();
    sv->add_option("--ta-prime,--ta", sv_ta, "Dimensionless annealing times t'_a")->capture_default_str();
    sv->add_option("--samples", sv_samples, "Independent anneals")->capture_default_str();
    sv->add_option("--seed", sv_seed, "Random seed")->capture_default_str();
    sv->add_option("--id", sv_id, "instance_id written to the CSV")->capture_default_str();
    sv->add_option("-o,--out", sv_out, "Sample CSV (stdout when omitted)");

    // theory
    auto* th = app.add_subcommand("theory", "Closed-system kink statistics from independent Landau-Zener modes");
    int th_length = 0;
    std::vector<double> th_tau;
    std::string th_schedule = "linear", th_out;
    bool th_pmf = false, th_exact = false;
    th->add_option("-L,--L,--length", th_length, "Even chain length")->required();
    th->add_option("--tau-list,--tau", th_tau, "Dimensionless quench times")->required();
    th->add_flag("--pmf", th_pmf, "Include the full kink pmf");
    th->add_flag("--exact-dynamics", th_exact, "Also integrate every mode through the schedule");
    th->add_option("--schedule", th_schedule, "Schedule for --exact-dynamics")->capture_default_str();
    th->add_option("-o,--out", th_out, "Output file; .csv writes a table, anything else JSON (stdout: JSON)");

    // analyze
    auto* an = app.add_subcommand("analyze", "Cumulants, fits and Boltzmann analysis of a sample CSV");
    std::string an_in, an_coupling = "antiferro", an_instances, an_range = "0:100", an_device = "nasa", an_format = "json",
                an_out = "analysis-out";
    int an_bootstrap = 1000;
    std::uint64_t an_seed = 1;
    an->add_option("-i,--in", an_in, "Sample CSV")->required()->check(CLI::ExistingFile);
    an->add_option("--coupling", an_coupling, "Couplings for instances not in --instances")->capture_default_str();
    an->add_option("--instances", an_instances, "Instance couplings JSON")->check(CLI::ExistingFile);
    an->add_option("--fit-range", an_range, "t_min:t_max or auto")->capture_default_str();
    an->add_option("--device", an_device, "nasa, burnaby or custom:B1,T")->capture_default_str();
    an->add_option("--bootstrap", an_bootstrap, "Bootstrap resamples")->capture_default_str();
    an->add_option("--seed", an_seed, "Bootstrap seed")->capture_default_str();
    an->add_option("--format", an_format, "json, csv-bundle or markdown")->capture_default_str();
    an->add_option("-o,--out", an_out, "Output directory, or a .json/.md file path")->capture_default_str();
    std::string an_group = "anneal_time";
    an->add_option("--group-by", an_group, "Grouping key; samples are pooled over instances per anneal_time")
        ->check(CLI::IsMember({"anneal_time"}))
        ->capture_default_str();

    // boltzmann-fit
    auto* bf = app.add_subcommand("boltzmann-fit", "Effective temperature of each time point in a sample CSV");
    std::string bf_in, bf_device = "nasa", bf_coupling = "antiferro", bf_out;
    int bf_length = 0;
    bf->add_option("-i,--in", bf_in, "Sample CSV")->required()->check(CLI::ExistingFile);
    bf->add_option("--L", bf_length, "Chain length the samples must have");
    bf->add_option("--device", bf_device, "nasa, burnaby or custom:B1,T")->capture_default_str();
    bf->add_option("--coupling", bf_coupling, "ferro or antiferro")->capture_default_str();
    bf->add_option("-o,--out", bf_out, "Output JSON (stdout when omitted)");

    // report
    auto* rp = app.add_subcommand("report", "Re-emit a report JSON as json, csv-bundle or markdown");
    std::string rp_in, rp_format = "markdown", rp_out = ".";
    rp->add_option("-i,--in", rp_in, "report.json")->required()->check(CLI::ExistingFile);
    rp->add_option("--format", rp_format, "json, csv-bundle or markdown")->capture_default_str();
    rp->add_option("-o,--out", rp_out, "Output directory")->capture_default_str();

    // campaign
    auto* cp = app.add_subcommand("campaign", "Run a campaign config end to end");
    std::string cp_config, cp_out;
    std::vector<std::string> cp_formats{"json", "markdown", "csv-bundle"};
    cp->add_option("config", cp_config, "Campaign config file")->required()->check(CLI::ExistingFile);
    cp->add_option("--format", cp_formats, "Formats to emit")->capture_default_str();
    cp->add_option("-o,--out", cp_out, "Output directory (overrides output_dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*embed) {
            if (embed_count < 1) throw ConfigError("--instances must be >= 1");
            const embedding::ChimeraGraph graph(embed_cells);
            const auto kind = embedding::parse_coupling(embed_coupling);
            json all = json::array();
            for (int i = 0; i < embed_count; ++i) {
                // A single chain uses the seed as given; batches split it per instance.
                const auto seed = embed_count == 1 ? embed_seed : derive_seed(embed_seed, {static_cast<std::uint64_t>(i)});
                const auto chain = embedding::saw_chain(graph, embed_length, seed, embed_retries, kind);
                const auto& inst = chain.instance;
                all.push_back({{"length", inst.length()},
                               {"couplings", std::vector<int>(inst.couplings().begin(), inst.couplings().end())},
                               {"embedding", inst.embedding()},
                               {"chimera_cells", inst.chimera_cells()},
                               {"seed", chain.seed},
                               {"attempts", chain.attempts}});
            }
            write_output(embed_out, (embed_count == 1 ? all.front() : all).dump(2) + "\n");
            return kOk;
        }

        if (*sv) {
            std::shared_ptr<const ChainInstance> instance;
            if (!sv_instance.empty()) {
                instance = load_instance(sv_instance);
            } else {
                if (sv_length < 2) throw ConfigError("give --length or --instance");
                const auto kind = embedding::parse_coupling(sv_coupling);
                if (kind == embedding::CouplingKind::gauge) throw ConfigError("use --instance for gauged chains");
                instance = std::make_shared<const ChainInstance>(
                    ChainInstance::uniform(sv_length, kind == embedding::CouplingKind::ferro ? -1 : 1));
            }
            svmc::SvmcParams params;
            params.schedule = campaign::resolve_schedule(sv_schedule);
            params.temperature_kelvin = sv_temp_mk * 1e-3;
            params.n0 = sv_n0;
            params.samples = sv_samples;
            std::vector<SampleSet> sets;
            for (std::size_t i = 0; i < sv_ta.size(); ++i) {
                params.ta_prime = sv_ta[i];
                params.seed = sv_ta.size() == 1 ? sv_seed : derive_seed(sv_seed, {i});
                sets.push_back(svmc::SvmcAnnealer(params).run(instance, sv_id));
            }
            std::ostringstream out;
            io::write_samples_csv(out, sets);
            write_output(sv_out, out.str());
            return kOk;
        }

        if (*th) {
            json points = json::array();
            std::optional<AnnealSchedule> schedule;
            if (th_exact) schedule = campaign::resolve_schedule(th_schedule);
            for (double tau : th_tau) {
                const theory::QuenchParams q{th_length, tau};
                const auto dist = theory::kink_distribution(q);
                const auto& c = dist.cumulants();
                json p{{"tau", tau},
                       {"k1", c.k1},
                       {"k2", c.k2},
                       {"k3", c.k3},
                       {"ratio21", c.k2 / c.k1},
                       {"ratio31", c.k3 / c.k1},
                       {"asymptotic_k1", theory::asymptotic_kink_mean(q)}};
                if (th_pmf) p["pmf"] = dist.pmf();
                if (schedule) {
                    const auto dyn = theory::exact_mode_dynamics(q, *schedule);
                    p["exact"] = {{"momenta", dyn.momenta},
                                  {"probabilities", dyn.probabilities},
                                  {"landau_zener", theory::mode_probabilities(q)},
                                  {"anneal_time_us", dyn.anneal_time},
                                  {"steps", dyn.steps}};
                }
                points.push_back(std::move(p));
            }
            if (fs::path(th_out).extension() == ".csv") {
                std::ostringstream csv;
                csv.precision(17);
                csv << "tau,k1,k2,k3,ratio21,ratio31,asymptotic_k1" << (th_pmf ? ",pmf" : "") << "\n";
                for (const auto& p : points) {
                    csv << p["tau"].get<double>() << ',' << p["k1"].get<double>() << ',' << p["k2"].get<double>() << ','
                        << p["k3"].get<double>() << ',' << p["ratio21"].get<double>() << ','
                        << p["ratio31"].get<double>() << ',' << p["asymptotic_k1"].get<double>();
                    if (th_pmf) {
                        csv << ",\"";
                        const auto pmf = p["pmf"].get<std::vector<double>>();
                        for (std::size_t n = 0; n < pmf.size(); ++n) csv << (n ? " " : "") << pmf[n];
                        csv << '"';
                    }
                    csv << "\n";
                }
                write_output(th_out, csv.str());
            } else {
                json j{{"length", th_length}, {"points", std::move(points)}};
                write_output(th_out, j.dump(2) + "\n");
            }
            return kOk;
        }

        if (*an) {
            std::ostringstream canonical;
            canonical << "mode = ingest\ninput = " << an_in << "\ncoupling = " << an_coupling
                      << "\nfit_range = " << an_range << "\ndevice = " << an_device << "\nbootstrap = " << an_bootstrap
                      << "\nseed = " << an_seed << "\n";
            if (!an_instances.empty()) canonical << "instances = " << an_instances << "\n";
            auto config = campaign::parse_config(canonical.str(), {}, fs::path(an_in).stem().string());
            const auto r = campaign::run_campaign(config);
            const fs::path out(an_out);
            if (out.extension() == ".json") {
                io::write_text(out, report::to_json(r));
                std::cerr << "wrote " << out.string() << '\n';
            } else if (out.extension() == ".md") {
                io::write_text(out, report::to_markdown(r));
                std::cerr << "wrote " << out.string() << '\n';
            } else {
                for (const auto& f : report::emit_report(r, report::parse_format(an_format), out))
                    std::cerr << "wrote " << f.string() << '\n';
            }
            return finish(r);
        }

        if (*bf) {
            const auto device = units::parse_device(bf_device);
            const auto sets = campaign::ingest_samples(bf_in, embedding::parse_coupling(bf_coupling));
            json rows = json::array();
            for (const auto& set : sets) {
                const int length = set.instance().length();
                if (bf_length > 0 && length != bf_length)
                    throw ConfigError("samples have L = " + std::to_string(length) + ", expected " +
                                      std::to_string(bf_length));
                const auto kd = kink_density(set.instance(), set.configs());
                const auto fit = boltzmann::fit_beta(stats::histogram(kd.counts), length);
                json row{{"instance_id", set.instance_id()},
                         {"anneal_time", set.anneal_time()},
                         {"samples", set.configs().size()},
                         {"density", kd.mean},
                         {"beta_density", fit.beta_density},
                         {"beta_kl", fit.beta_kl},
                         {"beta_tn", fit.beta_tn},
                         {"kl", fit.kl_at_optimum},
                         {"tn", fit.tn_at_optimum}};
                if (fit.beta_tn > 0.0)
                    row["effective_temperature_kelvin"] = boltzmann::effective_temperature_kelvin(fit.beta_tn, device);
                rows.push_back(std::move(row));
            }
            json j{{"device", device.name},
                   {"half_b1_ghz", device.half_b1_ghz},
                   {"temperature_kelvin", device.temperature_kelvin},
                   {"physical_beta", boltzmann::physical_beta(device)},
                   {"fits", std::move(rows)}};
            write_output(bf_out, j.dump(2) + "\n");
            return kOk;
        }

        if (*rp) {
            const auto r = report::from_json(io::read_text(rp_in));
            for (const auto& f : report::emit_report(r, report::parse_format(rp_format), rp_out))
                std::cerr << "wrote " << f.string() << '\n';
            return kOk;
        }

        if (*cp) {
            auto config = campaign::load_config(cp_config);
            if (!cp_out.empty()) config.output_dir = cp_out;
            std::vector<report::Format> formats;
            for (const auto& f : cp_formats) formats.push_back(report::parse_format(f));
            const auto r = campaign::run_campaign(config);
            for (auto format : formats)
                for (const auto& f : report::emit_report(r, format, config.output_dir))
                    std::cerr << "wrote " << f.string() << '\n';
            if (const auto it = r.fits.find("density"); it != r.fits.end())
                std::cerr << "density exponent alpha = "
                          << report::format_with_error(it->second.value("alpha"), it->second.error("alpha")) << " over ["
                          << it->second.t_min << ", " << it->second.t_max << "]\n";
            for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
            return finish(r);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}
