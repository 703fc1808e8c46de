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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kzsim/distribution.hpp"

namespace kzsim::stats {

struct Interval {
    double low = 0.0;
    double high = 0.0;

    bool operator==(const Interval&) const = default;
};

// Point estimates with 68% percentile-bootstrap intervals.
struct CumulantEstimate {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    Interval ci_k1, ci_k2, ci_k3;
    double ratio21 = 0.0;  // k2 / k1, 0 when k1 = 0
    double ratio31 = 0.0;
    Interval ci_ratio21, ci_ratio31;
    std::size_t n_samples = 0;

    bool operator==(const CumulantEstimate&) const = default;
};

/// k-statistics k1, k2, k3 (unbiased cumulant estimators):
///   k1 = m,  k2 = n/(n-1) m2,  k3 = n^2/((n-1)(n-2)) m3,
/// with m_r the r-th central sample moment. Needs at least 3 values.
Cumulants k_statistics(std::span<const int> counts);

/// Bootstrap resamples draw n counts with replacement; intervals are the 16th
/// and 84th percentiles widened, if needed, to contain the point estimate.
/// Needs >= 10 counts and >= 100 resamples; deterministic for a given seed.
CumulantEstimate estimate_cumulants(std::span<const int> counts, int resamples, std::uint64_t seed);

struct FitResult {
    std::map<std::string, double> params;
    std::map<std::string, double> errors;  // standard error per param
    double t_min = 0.0;
    double t_max = 0.0;
    double residual = 0.0;  // sum of squared residuals in the fitted space (chi^2 for fit_constant)
    std::size_t n_points = 0;

    double value(const std::string& name) const { return params.at(name); }
    double error(const std::string& name) const { return errors.at(name); }

    bool operator==(const FitResult&) const = default;
};

struct DataPoint {
    double t = 0.0;
    double y = 0.0;
    double weight = 1.0;
};

struct FitRange {
    double t_min = 0.0;
    double t_max = 1e300;
};

/// Least squares line log y = intercept - alpha log t over points with t in
/// [t_min, t_max]. Unweighted unless `weighted`, in which case each point
/// contributes with its weight. Params "alpha" and "intercept".
FitResult fit_power_law(std::span<const DataPoint> points, FitRange range = {}, bool weighted = false);

struct RatioPoint {
    double t = 0.0;
    double r = 0.0;
    double sigma = 0.0;
};

/// Inverse-variance weighted mean, param "c". Points with sigma = 0 dominate:
/// they must agree with each other (ConfigError otherwise) and fix c exactly.
FitResult fit_constant(std::span<const RatioPoint> points);

/// Normalized pmf over 0..max(counts).
KinkDistribution histogram(std::span<const int> counts);

/// Half the L1 distance; the shorter pmf is padded with zeros.
double tv_distance(std::span<const double> p, std::span<const double> q);
double tv_distance(const KinkDistribution& p, const KinkDistribution& q);

/// sum P log(P / Q) in nats with 0 log 0 = 0. DomainError names the first n
/// where P(n) > 0 and Q(n) = 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);
double kl_divergence(const KinkDistribution& p, const KinkDistribution& q);

enum class DecayShape { power, exponential };

std::string to_string(DecayShape shape);

struct DecayFit {
    FitResult power;        // D ~ t^-tau: params "tau", "intercept"
    FitResult exponential;  // D ~ exp(-gamma t): params "gamma", "intercept"
    DecayShape preferred = DecayShape::power;

    bool operator==(const DecayFit&) const = default;
};

/// Fits both shapes as straight lines in log D and prefers the smaller
/// residual sum of squares. Needs >= 4 points, all D > 0 and t > 0.
DecayFit fit_decay_shape(std::span<const std::pair<double, double>> points);

}  // namespace kzsim::stats
