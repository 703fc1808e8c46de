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
   Core domain types: annealing schedules, chain instances on a free-boundary
   chain, spin samples, kink counting and gauge transforms.

   Conventions
   -----------
   A schedule stores the plotted curves A(s), B(s) (E/h in GHz). The chain
   Hamiltonian uses the halves,
       H(s) = A(s)/2 sum_i sigma^x_i + B(s)/2 sum_i J_i sigma^z_i sigma^z_{i+1},
   with J_i = -1 ferromagnetic and J_i = +1 antiferromagnetic bonds.

   A bond is a kink when its coupling energy is positive, J_i s_i s_{i+1} = +1.
   Kink density is mean(kinks) / L, dividing by L and not L-1. The Boltzmann
   density (1 - 1/L) / (1 + e^{2 beta'}) uses the same normalization.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kzsim {

enum class EnergyUnit { gigahertz, dimensionless };

struct SchedulePoint {
    double s = 0.0;
    double a = 0.0;  // A(s), GHz
    double b = 0.0;  // B(s), GHz

    bool operator==(const SchedulePoint&) const = default;
};

struct ScheduleValue {
    double a = 0.0;
    double b = 0.0;
};

// Tabulated A(s), B(s) with piecewise-linear interpolation on s in [0, 1].
class AnnealSchedule {
  public:
    AnnealSchedule(std::vector<SchedulePoint> points, std::string name,
                   EnergyUnit unit = EnergyUnit::gigahertz);

    /// (A(s), B(s)); throws DomainError outside [0, 1].
    ScheduleValue at(double s) const;

    /// (A(s)/2, B(s)/2), the coefficients that enter the Hamiltonian.
    ScheduleValue half_at(double s) const;

    const std::vector<SchedulePoint>& points() const noexcept { return points_; }
    const std::string& name() const noexcept { return name_; }
    EnergyUnit unit() const noexcept { return unit_; }

    bool operator==(const AnnealSchedule&) const = default;

  private:
    std::vector<SchedulePoint> points_;
    std::string name_;
    EnergyUnit unit_;
};

ScheduleValue eval_schedule(const AnnealSchedule& schedule, double s);

/// A(s)/2 = scale (1 - s), B(s)/2 = scale s. The default scale is the NASA B(1)/2.
AnnealSchedule linear_schedule(double half_scale_ghz = 6.344);

/// Smallest s with A(s) = B(s) (the critical point of the fixed-s chain).
/// Throws DomainError when the curves never cross.
double critical_point(const AnnealSchedule& schedule);

// A free-boundary chain of L spins with L-1 couplings in {-1, +1}, optionally
// carrying the Chimera vertex path it was embedded on.
class ChainInstance {
  public:
    ChainInstance(int length, std::vector<std::int8_t> couplings);

    /// Embedded chain; validates adjacency and distinctness on an l x l Chimera graph.
    ChainInstance(int length, std::vector<std::int8_t> couplings, std::vector<int> embedding, int chimera_cells);

    static ChainInstance uniform(int length, int coupling);

    int length() const noexcept { return length_; }
    std::span<const std::int8_t> couplings() const noexcept { return couplings_; }
    const std::vector<int>& embedding() const noexcept { return embedding_; }
    int chimera_cells() const noexcept { return chimera_cells_; }
    bool embedded() const noexcept { return !embedding_.empty(); }

    bool operator==(const ChainInstance&) const = default;

  private:
    int length_;
    std::vector<std::int8_t> couplings_;
    std::vector<int> embedding_;
    int chimera_cells_ = 0;
};

// Spin configuration in {-1, +1}^L stored one bit per spin (set bit = -1).
class SpinConfig {
  public:
    SpinConfig() = default;
    explicit SpinConfig(std::size_t length);  // all +1

    static SpinConfig from_string(std::string_view text);  // '+' / '-'
    static SpinConfig from_values(std::span<const int> values);

    std::size_t size() const noexcept { return length_; }
    int operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U ? -1 : 1; }
    void set(std::size_t i, int value);
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::string to_string() const;

    bool operator==(const SpinConfig&) const = default;

  private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class SampleSource { ingested, svmc, exact_oracle };

std::string_view to_string(SampleSource source);

// A batch of final configurations of one instance at one annealing time.
// anneal_time is in microseconds for ingested data and t'_a for SVMC data.
class SampleSet {
  public:
    SampleSet(std::string instance_id, std::shared_ptr<const ChainInstance> instance, double anneal_time,
              std::vector<SpinConfig> configs, SampleSource source);

    const std::string& instance_id() const noexcept { return instance_id_; }
    const ChainInstance& instance() const noexcept { return *instance_; }
    std::shared_ptr<const ChainInstance> instance_ptr() const noexcept { return instance_; }
    double anneal_time() const noexcept { return anneal_time_; }
    const std::vector<SpinConfig>& configs() const noexcept { return configs_; }
    SampleSource source() const noexcept { return source_; }

  private:
    std::string instance_id_;
    std::shared_ptr<const ChainInstance> instance_;
    double anneal_time_;
    std::vector<SpinConfig> configs_;
    SampleSource source_;
};

/// Number of bonds i with J_i s_i s_{i+1} = +1.
int count_kinks(const ChainInstance& instance, const SpinConfig& config);

struct KinkDensity {
    double mean = 0.0;        // mean(n) / L
    std::vector<int> counts;  // per config
};

KinkDensity kink_density(const ChainInstance& instance, std::span<const SpinConfig> configs);

/// Site mask of a gauge transform; mask[i] flips spin i and both bonds touching it.
using GaugeMask = std::vector<bool>;

ChainInstance apply_gauge(const ChainInstance& instance, const GaugeMask& mask);
SpinConfig flip_spins(const SpinConfig& config, const GaugeMask& mask);

struct GaugedInstance {
    ChainInstance instance;
    GaugeMask mask;
};

/// Flip floor(L/2) distinct sites chosen uniformly at random.
GaugedInstance apply_random_gauge(const ChainInstance& instance, std::uint64_t seed);

}  // namespace kzsim
