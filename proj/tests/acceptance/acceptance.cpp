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

// Acceptance runner: one line per criterion, nonzero exit when any fails.
// Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "kzsim/boltzmann.hpp"
#include "kzsim/campaign.hpp"
#include "kzsim/embedding.hpp"
#include "kzsim/model.hpp"
#include "kzsim/rng.hpp"
#include "kzsim/stats.hpp"
#include "kzsim/svmc.hpp"
#include "kzsim/theory.hpp"
#include "kzsim/units.hpp"

using namespace kzsim;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ------------------------------------------------------------------ theory

Outcome cumulant_ratios() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = theory::kink_cumulants({2000, 100.0});
    const double dt = seconds_since(t0);
    const double r21 = c.k2 / c.k1, r31 = c.k3 / c.k1;
    const bool ok = std::fabs(r21 / 0.586 - 1) <= 0.01 && std::fabs(r31 / 0.134 - 1) <= 0.02 && dt < 1.0;
    return {ok, fmt("k2/k1 = %.5f (0.586 +-1%%), k3/k1 = %.5f (0.134 +-2%%), %.3f s", r21, r31, dt)};
}

Outcome kzm_scaling() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> x, y;
    for (double tau = 10.0; tau <= 1000.0 * (1 + 1e-12); tau *= std::pow(10.0, 0.25)) {
        x.push_back(std::log(tau));
        y.push_back(std::log(theory::kink_cumulants({2000, tau}).k1));
    }
    const double dt = seconds_since(t0);
    const double s = slope(x, y);
    return {std::fabs(s + 0.5) <= 0.005 && dt < 5.0, fmt("slope = %.5f over tau in [10, 1000] (%zu points), %.3f s", s, x.size(), dt)};
}

Outcome asymptotic_mean() {
    double worst = 0.0;
    for (double tau : {50.0, 100.0, 200.0, 500.0, 1000.0}) {
        const double k1 = theory::kink_cumulants({2000, tau}).k1;
        const double asym = 2000.0 / (2 * std::numbers::pi) * std::sqrt(1.0 / (2 * tau));
        worst = std::max(worst, std::fabs(k1 / asym - 1));
    }
    return {worst <= 0.01, fmt("max relative deviation %.2e for tau in {50..1000}", worst)};
}

Outcome poisson_binomial() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> len(1, 12);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> p(len(gen));
        for (auto& x : p) x = u(gen);
        const auto exact = testing::enumerate_poisson_binomial(p);
        const auto d = theory::pair_distribution(p);
        if (d.size() != exact.size()) return {false, "pmf length mismatch"};
        for (std::size_t n = 0; n < exact.size(); ++n) worst = std::max(worst, std::fabs(d[n] - exact[n]));
    }
    const double dt = seconds_since(t0);
    return {worst <= 1e-12 && dt < 10.0, fmt("max |diff| = %.2e over 100 trials, %.3f s", worst, dt)};
}

Outcome landau_zener() {
    const theory::QuenchParams q{200, 50.0};
    const auto run = theory::exact_mode_dynamics(q, linear_schedule());
    const auto lz = theory::mode_probabilities(q);
    double worst = 0.0;
    std::string ratios;
    for (int m = 0; m < 3; ++m) {
        const double r = run.probabilities[m] / lz[m];
        worst = std::max(worst, std::fabs(r - 1));
        ratios += fmt("%s%.5f", m ? ", " : "", r);
    }
    return {worst <= 0.05 && run.max_norm_drift < 1e-9,
            fmt("L = 200, tau = 50: p/p_LZ = [%s], norm drift %.1e", ratios.c_str(), run.max_norm_drift)};
}

Outcome gaussian_approximation() {
    double worst = 0.0, smallest_mean = 1e300;
    for (double tau : {5.0, 10.0, 20.0}) {
        const auto exact = theory::kink_distribution({2000, tau});
        smallest_mean = std::min(smallest_mean, exact.mean());
        const auto gauss = theory::fold_to_even(theory::gaussian_pmf(exact.mean()));
        worst = std::max(worst, stats::tv_distance(gauss, exact));
    }
    return {worst < 0.02 && smallest_mean >= 50.0,
            fmt("max TV = %.4f for kappa_1 >= %.1f (L = 2000, tau in {5, 10, 20})", worst, smallest_mean)};
}

// -------------------------------------------------------------------- svmc

std::optional<report::Report> g_desk_first;

report::Report desk_run() {
    const auto config = campaign::load_config(std::filesystem::path(KZSIM_SOURCE_DIR) / "configs/desk-svmc-L200.toml");
    auto r = campaign::run_campaign(config);
    r.provenance.timestamp.clear();
    return r;
}

Outcome svmc_exponent() {
    const auto t0 = std::chrono::steady_clock::now();
    if (!g_desk_first) g_desk_first = desk_run();
    const double dt = seconds_since(t0);
    const auto& fit = g_desk_first->fits.at("density");
    const double a = fit.value("alpha");
    return {a >= 0.50 && a <= 0.66, fmt("alpha = %.3f +- %.3f over t'_a in [%g, %g] (want [0.50, 0.66]), %.0f s", a,
                                        fit.error("alpha"), fit.t_min, fit.t_max, dt)};
}

Outcome svmc_detailed_balance() {
    const int length = 16;
    const auto gauged = apply_random_gauge(ChainInstance::uniform(length, 1), 161);
    const auto& chain = gauged.instance;
    const double s = 0.6;
    const auto half = linear_schedule().half_at(s);
    const double beta = units::beta_per_ghz(100e-3);
    const auto exact = testing::projected_kink_pmf(chain.couplings(), half.a, half.b, beta);

    Rng rng(derive_seed(8, {0}));
    svmc::RotorChain rotor(chain);
    for (int m = 0; m < 5000; ++m) rotor.sweep(half, beta, rng);
    const int sweeps = 200000;
    std::vector<double> hist(length, 0.0);
    for (int m = 0; m < sweeps; ++m) {
        rotor.sweep(half, beta, rng);
        hist[count_kinks(chain, rotor.project())] += 1.0;
    }
    for (auto& h : hist) h /= sweeps;
    const double tn = stats::tv_distance(hist, exact);
    return {tn < 0.05, fmt("L = 16, s = %.1f, T = 100 mK, %d sweeps: trace norm = %.4f", s, sweeps, tn)};
}

// Equilibrium <cos cos> decay of a ferromagnetic rotor chain with coupling J
// (= B/2) and field Gamma (= A/2), fitted over separations 1..4 in the chain interior.
double measured_correlation_length(double gamma, double beta, std::uint64_t seed) {
    const int length = 256, margin = 32, rmax = 4;
    const auto chain = ChainInstance::uniform(length, -1);
    svmc::RotorChain rotor(chain);
    Rng rng(seed);
    const ScheduleValue half{gamma, 1.0};
    for (int m = 0; m < 5000; ++m) rotor.sweep(half, beta, rng);
    std::vector<double> g(rmax + 1, 0.0);
    for (int m = 0; m < 100000; ++m) {
        rotor.sweep(half, beta, rng);
        for (int i = margin; i + rmax < length - margin; ++i)
            for (int r = 1; r <= rmax; ++r) g[r] += rotor.cosine(i) * rotor.cosine(i + r);
    }
    std::vector<double> x, y;
    for (int r = 1; r <= rmax; ++r) {
        x.push_back(r);
        y.push_back(std::log(g[r]));
    }
    return -1.0 / slope(x, y);
}

Outcome correlation_length() {
    std::vector<double> x, y;
    for (double d : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
        x.push_back(std::log(d));
        y.push_back(std::log(svmc::svmc_correlation_length(1.0, 2.0 + d)));
    }
    const double s = slope(x, y);
    bool ok = std::fabs(s + 0.5) < 1e-12;
    std::string detail = fmt("analytic slope = %.12f;", s);
    const double beta = 100.0;  // beta J
    for (double gamma : {2.3, 2.5}) {
        const double formula = svmc::svmc_correlation_length(1.0, gamma);
        const double tm = testing::transfer_correlation_length(1.0, gamma, beta, 400);
        const double measured = measured_correlation_length(gamma, beta, derive_seed(9, {static_cast<std::uint64_t>(gamma * 10)}));
        ok = ok && std::fabs(measured / formula - 1) <= 0.15;
        detail += fmt(" Gamma/J = %.1f: xi_svmc = %.3f, formula %.3f (ratio %.3f), transfer matrix %.3f;", gamma,
                      measured, formula, measured / formula, tm);
    }
    detail += " beta J = 100, L = 256";
    return {ok, detail};
}

// --------------------------------------------------------------- boltzmann

Outcome boltzmann_identity() {
    std::mt19937_64 gen(1010);
    std::uniform_int_distribution<int> length_dist(20, 400);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_fit = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int length = length_dist(gen);
        // random window of support, random weights, then a finite sample of it
        const int lo = static_cast<int>(u(gen) * length * 0.3);
        const int width = 1 + static_cast<int>(u(gen) * length * 0.4);
        std::vector<double> w(std::min(length, lo + width), 0.0);
        for (int n = lo; n < static_cast<int>(w.size()); ++n) w[n] = u(gen);
        std::discrete_distribution<int> d(w.begin(), w.end());
        std::vector<int> counts(500);
        for (auto& c : counts) c = d(gen);
        const auto pmf = stats::histogram(counts);
        const auto fit = boltzmann::fit_beta(pmf, length);
        worst_fit = std::max(worst_fit, std::fabs(fit.beta_kl - boltzmann::beta_from_density(length, pmf.mean() / length)));
    }
    double worst_trip = 0.0;
    for (int length : {3, 50, 200, 800})
        for (double beta = -3.0; beta <= 6.0; beta += 0.25)
            worst_trip = std::max(worst_trip,
                                  std::fabs(boltzmann::beta_from_density(length, boltzmann::boltzmann_density(length, beta)) - beta));
    return {worst_fit <= 1e-6 && worst_trip <= 1e-12,
            fmt("max |beta_KL - beta_density| = %.2e over 50 pmfs; round trip max error %.2e", worst_fit, worst_trip)};
}

Outcome decay_discrimination() {
    std::mt19937_64 gen(1111);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> grid;
    for (int i = 0; i < 10; ++i) grid.push_back(std::pow(100.0, i / 9.0));
    int exp_right = 0, pow_right = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const double amp = 0.1 + 0.9 * u(gen);
        const double gamma = 0.01 + 0.04 * u(gen);
        const double tau = 0.3 + 0.7 * u(gen);
        std::vector<std::pair<double, double>> e, p;
        for (double t : grid) {
            e.emplace_back(t, amp * std::exp(-gamma * t) * (1 + noise(gen)));
            p.emplace_back(t, amp * std::pow(t, -tau) * (1 + noise(gen)));
        }
        exp_right += stats::fit_decay_shape(e).preferred == stats::DecayShape::exponential;
        pow_right += stats::fit_decay_shape(p).preferred == stats::DecayShape::power;
    }
    return {exp_right >= 95 && pow_right >= 95,
            fmt("exponential series: %d/100 correct, power-law series: %d/100 correct (5%% noise)", exp_right, pow_right)};
}

// ---------------------------------------------------------------- model

Outcome gauge_covariance() {
    Rng rng(1212);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int length = 2 + static_cast<int>(rng.below(300));
        std::vector<std::int8_t> j(length - 1);
        for (auto& x : j) x = rng.below(2) ? 1 : -1;
        const ChainInstance chain(length, j);
        std::vector<int> spins(length);
        for (auto& s : spins) s = rng.below(2) ? 1 : -1;
        const auto config = SpinConfig::from_values(spins);
        GaugeMask mask(length);
        for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = rng.below(2) == 1;
        const int before = count_kinks(chain, config);
        const int after = count_kinks(apply_gauge(chain, mask), flip_spins(config, mask));
        if (before != after || before != testing::kinks_by_definition(j, spins)) ++failures;
    }
    return {failures == 0, fmt("%d failures in 1000 random (instance, config, mask) triples", failures)};
}

Outcome embedding_validity() {
    const embedding::ChimeraGraph graph(16);
    int invalid = 0;
    long long attempts = 0;
    for (int k = 0; k < 200; ++k) {
        const auto chain = embedding::saw_chain(graph, 800, derive_seed(1313, {static_cast<std::uint64_t>(k)}), 100000);
        attempts += chain.attempts;
        const auto& path = chain.instance.embedding();
        const bool ok = path.size() == 800 && testing::rule_valid_path(path, graph.vertex_count(), [&](int v) {
                            const auto c = graph.coord(v);
                            return testing::CellCoord{c.row, c.col, c.side, c.index};
                        });
        invalid += !ok;
    }
    int mismatches = 0;
    for (int l = 1; l <= 3; ++l) {
        const embedding::ChimeraGraph g(l);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w = 0; w < g.vertex_count(); ++w) {
                const auto a = g.coord(v), b = g.coord(w);
                const bool rule = v != w && testing::chimera_rule_adjacent({a.row, a.col, a.side, a.index},
                                                                           {b.row, b.col, b.side, b.index});
                mismatches += (v != w && g.adjacent(v, w) != rule);
            }
    }
    return {invalid == 0 && mismatches == 0,
            fmt("%d invalid of 200 walks (l = 16, L = 800, %lld walk attempts); %d adjacency mismatches for l <= 3",
                invalid, attempts, mismatches)};
}

Outcome determinism() {
    const auto t0 = std::chrono::steady_clock::now();
    if (!g_desk_first) g_desk_first = desk_run();
    const auto second = desk_run();
    const double dt = seconds_since(t0);
    const auto a = report::to_json(*g_desk_first), b = report::to_json(second);
    return {a == b, fmt("report JSON %s (%zu bytes), %.0f s", a == b ? "identical" : "DIFFERS", a.size(), dt)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"cumulant ratios", cumulant_ratios},
        {"KZM scaling", kzm_scaling},
        {"asymptotic mean", asymptotic_mean},
        {"Poisson-binomial oracle", poisson_binomial},
        {"Landau-Zener limit", landau_zener},
        {"Gaussian approximation", gaussian_approximation},
        {"SVMC desk-scale exponent", svmc_exponent},
        {"SVMC equilibrium", svmc_detailed_balance},
        {"classical correlation length", correlation_length},
        {"Boltzmann identity", boltzmann_identity},
        {"decay-shape discrimination", decay_discrimination},
        {"gauge covariance", gauge_covariance},
        {"embedding validity", embedding_validity},
        {"determinism", determinism},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failed = 0, run = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        ++run;
        failed += !out.pass;
        std::printf("%s %2d %-30s %s\n", out.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", run - failed, run);
    return failed == 0 ? 0 : 1;
}
