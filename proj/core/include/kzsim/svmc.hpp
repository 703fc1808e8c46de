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
   Spin-vector Monte Carlo (SVMC): each qubit is replaced by a planar rotor
   theta_i in [0, pi] with sigma^z -> cos(theta), sigma^x -> sin(theta):

       H(s) = B(s)/2 sum_i J_i cos(theta_i) cos(theta_{i+1}) - A(s)/2 sum_i sin(theta_i)

   An anneal starts from theta_i = pi/2 and performs N0 * t'_a sequential
   Metropolis sweeps; sweep m (0-based) of N uses s = m / (N - 1) so the last
   sweep sees s = 1. Proposals are uniform on [0, pi]. After the last sweep a
   rotor with theta <= pi/2 is read out as +1 and otherwise as -1.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kzsim/model.hpp"
#include "kzsim/rng.hpp"

namespace kzsim::svmc {

struct SvmcParams {
    AnnealSchedule schedule = linear_schedule();
    double temperature_kelvin = 12.1e-3;
    int n0 = 1000;
    double ta_prime = 1.0;
    int samples = 1000;
    std::uint64_t seed = 0;
};

inline constexpr double kNasaTemperature = 12.1e-3;
inline constexpr double kBurnabyTemperature = 13.5e-3;
inline constexpr double kWarmTemperature = 50e-3;
inline constexpr int kNasaN0 = 1000;
inline constexpr int kBurnabyN0 = 1500;

// Rotor angles, each in [0, pi].
class AngleState {
  public:
    explicit AngleState(std::vector<double> angles);
    static AngleState uniform(int length, double angle);

    const std::vector<double>& angles() const noexcept { return angles_; }
    std::size_t size() const noexcept { return angles_.size(); }

  private:
    std::vector<double> angles_;
};

/// Energy in the schedule's units at fraction s.
double svmc_energy(const ChainInstance& instance, const AngleState& state, double s, const AnnealSchedule& schedule);

/// Energy for explicit coefficients (A/2, B/2).
double svmc_energy(const ChainInstance& instance, const AngleState& state, ScheduleValue half);

/// Total sweeps N0 * t'_a (rounded to the nearest integer, at least 1).
long long total_sweeps(int n0, double ta_prime);

/// s used by sweep m of `total` sweeps.
double sweep_fraction(long long m, long long total);

// Working state of one Metropolis trajectory. Couplings are copied in with zero
// padding at both free ends so every site uses the same update.
class RotorChain {
  public:
    explicit RotorChain(const ChainInstance& instance, double initial_angle = 1.5707963267948966);

    /// One sequential sweep i = 0..L-1 at coefficients (A/2, B/2) and inverse
    /// temperature `beta` in matching units. Returns the number of accepted moves.
    int sweep(ScheduleValue half, double beta, Rng& rng);

    double energy(ScheduleValue half) const;
    SpinConfig project() const;
    AngleState state() const;

    int length() const noexcept { return length_; }
    double angle(int i) const noexcept { return theta_[i]; }
    double cosine(int i) const noexcept { return cos_[i + 1]; }

  private:
    int length_;
    std::vector<double> left_;   // J_{i-1}, 0 at i = 0
    std::vector<double> right_;  // J_i, 0 at i = L-1
    std::vector<double> theta_;
    std::vector<double> cos_;    // padded: cos_[i + 1] = cos(theta_i), ends are 0
    std::vector<double> sin_;
};

// Validated annealing protocol. Construction fails with ConfigError when the
// schedule energies cannot be converted to the temperature's units.
class SvmcAnnealer {
  public:
    explicit SvmcAnnealer(SvmcParams params);

    const SvmcParams& params() const noexcept { return params_; }

    /// Metropolis exponent per unit schedule energy (1/GHz).
    double beta() const noexcept { return beta_; }

    /// One trajectory with its own seed.
    SpinConfig anneal_one(const ChainInstance& instance, std::uint64_t seed) const;

    /// params().samples trajectories; sample k uses derive_seed(params().seed, {k}).
    SampleSet run(std::shared_ptr<const ChainInstance> instance, std::string instance_id = "svmc-0") const;

  private:
    SvmcParams params_;
    double beta_;
    long long sweeps_;
};

SampleSet svmc_anneal(std::shared_ptr<const ChainInstance> instance, const SvmcParams& params);

/// Equilibrium correlation length sqrt(J / (Gamma - 2J)) of the quadratic rotor
/// chain in the disordered phase. Requires Gamma > 2J > 0.
double svmc_correlation_length(double coupling, double gamma);

}  // namespace kzsim::svmc
