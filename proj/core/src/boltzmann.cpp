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

#include "kzsim/boltzmann.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "kzsim/errors.hpp"
#include "kzsim/stats.hpp"

namespace kzsim::boltzmann {

namespace {

// log(e^b + e^-b) without overflow.
double log_two_cosh(double b) {
    const double a = std::fabs(b);
    return a + std::log1p(std::exp(-2.0 * a));
}

void check_length(int length) {
    if (length < 2) throw DomainError("Boltzmann model needs L >= 2");
}

struct Bracketed {
    double lo, mid, hi;
};

constexpr double kGolden = 0.3819660112501051;  // 2 - phi

// Walk downhill from x0 with doubling steps until the objective rises.
Bracketed expand_bracket(const std::function<double(double)>& f, double x0, double step, int& evals) {
    double a = x0, b = x0 + step;
    double fa = f(a), fb = f(b);
    evals += 2;
    if (fb > fa) {
        std::swap(a, b);
        std::swap(fa, fb);
        step = -step;
    }
    for (int i = 0; i < 80; ++i) {
        step *= 2.0;
        const double c = b + step;
        const double fc = f(c);
        ++evals;
        if (fc > fb) return a < c ? Bracketed{a, b, c} : Bracketed{c, b, a};
        a = b;
        fa = fb;
        b = c;
        fb = fc;
    }
    throw OptimizationError("beta' bracket expansion exhausted (last beta' = " + std::to_string(b) +
                            ", objective = " + std::to_string(fb) + ")");
}

double golden_section(const std::function<double(double)>& f, Bracketed br, double tol, int& evals) {
    double a = br.lo, b = br.hi;
    double x1 = a + kGolden * (b - a);
    double x2 = b - kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    evals += 2;
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - kGolden * (b - a);
            f2 = f(x2);
        }
        ++evals;
        if (evals > 100000) throw OptimizationError("golden-section search did not converge");
    }
    return f1 <= f2 ? x1 : x2;
}

}  // namespace

namespace {

std::vector<double> log_boltzmann_pmf(int length, double beta_prime) {
    const int bonds = length - 1;
    const double log_z = bonds * log_two_cosh(beta_prime);
    std::vector<double> out(static_cast<std::size_t>(length));
    for (int n = 0; n < length; ++n) {
        const double log_g = std::lgamma(bonds + 1.0) - std::lgamma(n + 1.0) - std::lgamma(bonds - n + 1.0);
        out[n] = log_g - beta_prime * (2.0 * n + 1.0 - length) - log_z;
    }
    return out;
}

// D_KL(P || Q(beta')) with log Q taken from the closed form, so tails that
// underflow in Q itself still contribute.
double kl_to_boltzmann(const KinkDistribution& p, int length, double beta_prime) {
    const auto log_q = log_boltzmann_pmf(length, beta_prime);
    double sum = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n)
        if (p[n] > 0.0) sum += p[n] * (std::log(p[n]) - log_q[n]);
    return std::max(0.0, sum);
}

// D_KL(P || Q(beta')) - D_KL(P || Q(beta0)). Only the log partition function and
// the energy term depend on beta', and with delta = beta' - beta0
//   log cosh(beta0 + delta) - log cosh(beta0) = log1p(2 sinh^2(delta/2) + tanh(beta0) sinh(delta)),
// which keeps the difference accurate down to delta near machine epsilon where
// the full divergence would lose it to cancellation.
double kl_shift(double mean, int length, double beta0, double beta) {
    const double delta = beta - beta0;
    const double energy = (2.0 * mean + 1.0 - length) * delta;
    double log_ratio;
    if (std::fabs(delta) < 20.0) {
        const double h = std::sinh(0.5 * delta);
        log_ratio = std::log1p(2.0 * h * h + std::tanh(beta0) * std::sinh(delta));
    } else {
        log_ratio = log_two_cosh(beta) - log_two_cosh(beta0);
    }
    return energy + (length - 1) * log_ratio;
}

}  // namespace

KinkDistribution boltzmann_pmf(int length, double beta_prime) {
    check_length(length);
    if (!std::isfinite(beta_prime)) throw DomainError("beta' must be finite");
    auto pmf = log_boltzmann_pmf(length, beta_prime);
    for (double& v : pmf) v = std::exp(v);
    // Analytic normalization holds to rounding; renormalize the residue away.
    long double total = 0.0L;
    for (double v : pmf) total += v;
    for (double& v : pmf) v = static_cast<double>(v / total);
    return KinkDistribution::from_pmf(std::move(pmf));
}

double boltzmann_density(int length, double beta_prime) {
    check_length(length);
    return (1.0 - 1.0 / length) / (1.0 + std::exp(2.0 * beta_prime));
}

double beta_from_density(int length, double density) {
    check_length(length);
    const double top = 1.0 - 1.0 / length;
    if (!(density > 0.0 && density < top))
        throw DomainError("kink density " + std::to_string(density) + " outside (0, " + std::to_string(top) + ")");
    return 0.5 * std::log(top / density - 1.0);
}

double physical_beta(const units::DeviceConstants& device) {
    return device.half_b1_ghz * units::beta_per_ghz(device.temperature_kelvin);
}

double effective_temperature_kelvin(double beta_prime, const units::DeviceConstants& device) {
    if (!(beta_prime > 0.0)) throw DomainError("effective temperature needs beta' > 0");
    return units::ghz_to_kelvin(device.half_b1_ghz) / beta_prime;
}

KinkDistribution BoltzmannModel::pmf() const { return boltzmann_pmf(length, beta_prime); }

double BoltzmannModel::effective_temperature_kelvin() const {
    return boltzmann::effective_temperature_kelvin(beta_prime, device);
}

BetaFit fit_beta(const KinkDistribution& empirical, int length) {
    check_length(length);
    if (empirical.size() == 0) throw DomainError("empirical pmf is empty");
    for (std::size_t n = static_cast<std::size_t>(length); n < empirical.size(); ++n)
        if (empirical[n] > 0.0)
            throw DomainError("empirical pmf has mass at n = " + std::to_string(n) + " beyond L - 1 = " +
                              std::to_string(length - 1));

    BetaFit fit;
    const double top = 1.0 - 1.0 / length;
    const double density = empirical.mean() / length;
    if (!(density > 0.0 && density < top))
        throw OptimizationError("no finite beta' optimum: empirical density " + std::to_string(density) +
                                " is at the edge of (0, " + std::to_string(top) + ")");
    fit.beta_density = beta_from_density(length, density);

    const double mean = empirical.mean();
    auto kl = [&](double b) { return kl_shift(mean, length, fit.beta_density, b); };
    auto tn = [&](double b) { return stats::tv_distance(empirical, boltzmann_pmf(length, b)); };

    const double step = 0.05 * std::max(1.0, std::fabs(fit.beta_density));
    const auto kl_bracket = expand_bracket(kl, fit.beta_density, step, fit.evaluations);
    fit.beta_kl = golden_section(kl, kl_bracket, 1e-10, fit.evaluations);
    fit.kl_at_optimum = kl_to_boltzmann(empirical, length, fit.beta_kl);

    const auto tn_bracket = expand_bracket(tn, fit.beta_kl, step, fit.evaluations);
    fit.beta_tn = golden_section(tn, tn_bracket, 1e-10, fit.evaluations);
    fit.tn_at_optimum = tn(fit.beta_tn);
    return fit;
}

std::vector<std::pair<double, double>> tn_decay_series(
    const std::vector<std::pair<double, KinkDistribution>>& empirical, int length, double beta_fixed) {
    const auto q = boltzmann_pmf(length, beta_fixed);
    std::vector<std::pair<double, double>> out;
    out.reserve(empirical.size());
    for (const auto& [t, p] : empirical) out.emplace_back(t, stats::tv_distance(p, q));
    return out;
}

}  // namespace kzsim::boltzmann
