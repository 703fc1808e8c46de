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
   Classical Boltzmann model of the free-chain kink number.

   With E(n) = 2n + 1 - L and degeneracy C(L-1, n),

       Q(n; beta') = C(L-1, n) exp(-beta' E(n)) / (e^{beta'} + e^{-beta'})^{L-1},

   so kinks are independent Bernoulli bonds with probability 1 / (1 + e^{2 beta'})
   and the density is (1 - 1/L) / (1 + e^{2 beta'}).

   beta' = (B(1)/2) / (k_B T) is an effective, dimensionless inverse temperature.
   Fits minimize D_KL(P || Q) first and then the trace norm starting from the KL
   optimum. For this exponential family the KL optimum matches the mean.
*/

#pragma once

#include <utility>
#include <vector>

#include "kzsim/distribution.hpp"
#include "kzsim/units.hpp"

namespace kzsim::boltzmann {

struct BoltzmannModel {
    int length = 2;
    double beta_prime = 0.0;
    units::DeviceConstants device = units::nasa_device();

    KinkDistribution pmf() const;

    /// Effective temperature in kelvin, (B(1)/2) / (k_B beta').
    double effective_temperature_kelvin() const;
};

/// Q(n; beta') for n = 0..L-1, evaluated in log space.
KinkDistribution boltzmann_pmf(int length, double beta_prime);

/// (1 - 1/L) / (1 + e^{2 beta'}).
double boltzmann_density(int length, double beta_prime);

/// beta' = 1/2 ln((1 - 1/L) / rho - 1); rho must lie in (0, 1 - 1/L).
double beta_from_density(int length, double density);

/// The beta' a device's physical temperature corresponds to, (B(1)/2) / (k_B T).
double physical_beta(const units::DeviceConstants& device);

/// Effective temperature in kelvin for a fitted beta' on a device.
double effective_temperature_kelvin(double beta_prime, const units::DeviceConstants& device);

struct BetaFit {
    double beta_kl = 0.0;
    double beta_tn = 0.0;
    double kl_at_optimum = 0.0;  // D_KL(P || Q(beta_kl))
    double tn_at_optimum = 0.0;  // D_TN(P, Q(beta_tn))
    double beta_density = 0.0;   // closed-form moment match, the KL starting point
    int evaluations = 0;

    bool operator==(const BetaFit&) const = default;
};

/// Golden-section minimization (tolerance 1e-10 in beta') on brackets expanded
/// outward from the moment-matching beta'. Throws OptimizationError when no
/// bracket is found, e.g. when P has zero mean. P must vanish for n >= L.
BetaFit fit_beta(const KinkDistribution& empirical, int length);

/// D_TN between each empirical pmf and the fixed Q(.; beta_fixed), in input order.
std::vector<std::pair<double, double>> tn_decay_series(
    const std::vector<std::pair<double, KinkDistribution>>& empirical, int length, double beta_fixed);

}  // namespace kzsim::boltzmann
