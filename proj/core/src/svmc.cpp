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

#include "kzsim/svmc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kzsim/errors.hpp"
#include "kzsim/units.hpp"

namespace kzsim::svmc {

AngleState::AngleState(std::vector<double> angles) : angles_(std::move(angles)) {
    for (double a : angles_)
        if (!(a >= 0.0 && a <= std::numbers::pi)) throw DomainError("rotor angle outside [0, pi]");
}

AngleState AngleState::uniform(int length, double angle) {
    return AngleState(std::vector<double>(static_cast<std::size_t>(length), angle));
}

double svmc_energy(const ChainInstance& instance, const AngleState& state, ScheduleValue half) {
    if (state.size() != static_cast<std::size_t>(instance.length()))
        throw DomainError("angle state length does not match chain length");
    const auto& th = state.angles();
    const auto j = instance.couplings();
    double ising = 0.0;
    for (std::size_t i = 0; i < j.size(); ++i) ising += j[i] * std::cos(th[i]) * std::cos(th[i + 1]);
    double field = 0.0;
    for (double t : th) field += std::sin(t);
    return half.b * ising - half.a * field;
}

double svmc_energy(const ChainInstance& instance, const AngleState& state, double s, const AnnealSchedule& schedule) {
    return svmc_energy(instance, state, schedule.half_at(s));
}

long long total_sweeps(int n0, double ta_prime) {
    return std::max(1LL, std::llround(static_cast<double>(n0) * ta_prime));
}

double sweep_fraction(long long m, long long total) {
    if (total <= 1) return 1.0;
    return static_cast<double>(m) / static_cast<double>(total - 1);
}

RotorChain::RotorChain(const ChainInstance& instance, double initial_angle)
    : length_(instance.length()),
      left_(length_, 0.0),
      right_(length_, 0.0),
      theta_(length_, initial_angle),
      cos_(length_ + 2, 0.0),
      sin_(length_, std::sin(initial_angle)) {
    const auto j = instance.couplings();
    for (std::size_t i = 0; i < j.size(); ++i) {
        right_[i] = j[i];
        left_[i + 1] = j[i];
    }
    for (int i = 0; i < length_; ++i) cos_[i + 1] = std::cos(initial_angle);
}

int RotorChain::sweep(ScheduleValue half, double beta, Rng& rng) {
    int accepted = 0;
    for (int i = 0; i < length_; ++i) {
        const double proposal = std::numbers::pi * rng.uniform();
        const double c = std::cos(proposal);
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));  // sin >= 0 on [0, pi]
        const double local = left_[i] * cos_[i] + right_[i] * cos_[i + 2];
        const double delta = half.b * (c - cos_[i + 1]) * local - half.a * (s - sin_[i]);
        if (delta <= 0.0 || rng.uniform() < std::exp(-beta * delta)) {
            theta_[i] = proposal;
            cos_[i + 1] = c;
            sin_[i] = s;
            ++accepted;
        }
    }
    return accepted;
}

double RotorChain::energy(ScheduleValue half) const {
    double ising = 0.0;
    for (int i = 0; i < length_; ++i) ising += right_[i] * cos_[i + 1] * cos_[i + 2];
    double field = 0.0;
    for (double s : sin_) field += s;
    return half.b * ising - half.a * field;
}

SpinConfig RotorChain::project() const {
    SpinConfig out(static_cast<std::size_t>(length_));
    for (int i = 0; i < length_; ++i)
        if (theta_[i] > std::numbers::pi / 2) out.flip(static_cast<std::size_t>(i));
    return out;
}

AngleState RotorChain::state() const { return AngleState(theta_); }

SvmcAnnealer::SvmcAnnealer(SvmcParams params) : params_(std::move(params)), beta_(0.0), sweeps_(0) {
    if (!(params_.temperature_kelvin > 0.0)) throw ConfigError("SVMC temperature must be positive");
    if (params_.n0 < 1) throw ConfigError("SVMC n0 must be at least 1");
    if (!(params_.ta_prime >= 1.0)) throw ConfigError("SVMC t'_a must be at least 1");
    if (params_.samples < 1) throw ConfigError("SVMC needs at least one sample");
    if (params_.schedule.unit() != EnergyUnit::gigahertz)
        throw ConfigError("schedule '" + params_.schedule.name() +
                          "' is dimensionless; a temperature in kelvin needs energies in GHz");
    beta_ = units::beta_per_ghz(params_.temperature_kelvin);
    sweeps_ = total_sweeps(params_.n0, params_.ta_prime);
}

SpinConfig SvmcAnnealer::anneal_one(const ChainInstance& instance, std::uint64_t seed) const {
    Rng rng(seed);
    RotorChain chain(instance);
    for (long long m = 0; m < sweeps_; ++m) {
        const double s = sweep_fraction(m, sweeps_);
        chain.sweep(params_.schedule.half_at(s), beta_, rng);
    }
    return chain.project();
}

SampleSet SvmcAnnealer::run(std::shared_ptr<const ChainInstance> instance, std::string instance_id) const {
    if (!instance) throw DomainError("SVMC needs an instance");
    std::vector<SpinConfig> configs(static_cast<std::size_t>(params_.samples));
    const auto& chain = *instance;
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < params_.samples; ++k)
        configs[static_cast<std::size_t>(k)] =
            anneal_one(chain, derive_seed(params_.seed, {static_cast<std::uint64_t>(k)}));
    return SampleSet(std::move(instance_id), std::move(instance), params_.ta_prime, std::move(configs),
                     SampleSource::svmc);
}

SampleSet svmc_anneal(std::shared_ptr<const ChainInstance> instance, const SvmcParams& params) {
    return SvmcAnnealer(params).run(std::move(instance));
}

double svmc_correlation_length(double coupling, double gamma) {
    if (!(coupling > 0.0) || !(gamma > 2.0 * coupling))
        throw DomainError("correlation length needs Gamma > 2J > 0 (disordered phase)");
    return std::sqrt(coupling / (gamma - 2.0 * coupling));
}

}  // namespace kzsim::svmc
