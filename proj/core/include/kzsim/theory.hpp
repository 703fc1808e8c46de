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
   Closed-system kink statistics of the transverse-field Ising chain.

   After a Jordan-Wigner transformation the periodic chain decouples into
   independent two-level problems, one per momentum pair (k, -k). A linear
   quench excites mode k with the Landau-Zener probability

       p_k = exp(-2 pi tau k^2),   tau = J t_a / hbar,

   and the number of kink pairs is a sum of independent Bernoulli(p_k) draws
   (Poisson binomial). Kink cumulants follow as kappa_q = 2^q * pair cumulants.

   Momenta are k_m = pi (2m + 1) / L, m = 0 .. L/2 - 1 (the antiperiodic
   fermion sector that holds the even-parity ground state).
*/

#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "kzsim/distribution.hpp"
#include "kzsim/model.hpp"

namespace kzsim::theory {

/// kappa_2 / kappa_1 in the slow-quench limit, 2 - sqrt(2).
inline constexpr double kRatio21 = 2.0 - std::numbers::sqrt2;
/// kappa_3 / kappa_1 in the slow-quench limit, 4 - 12/sqrt(2) + 8/sqrt(3).
inline constexpr double kRatio31 = 4.0 - 6.0 * std::numbers::sqrt2 + 8.0 * std::numbers::inv_sqrt3;

struct QuenchParams {
    int length = 0;    // periodic chain size L, even, >= 4
    double tau = 0.0;  // J t_a / hbar

    void validate() const;
};

/// k_m = pi (2m + 1) / L for m = 0 .. L/2 - 1.
std::vector<double> mode_momenta(int length);

/// Landau-Zener excitation probability of every positive mode.
std::vector<double> mode_probabilities(const QuenchParams& q);

/// Exact Poisson-binomial pmf of the number of kink pairs, with the closed-form
/// pair cumulants sum p, sum p(1-p), sum p(1-p)(1-2p).
KinkDistribution pair_distribution(std::span<const double> probabilities);

/// Pair pmf mapped to kinks, n = 2 * pairs; odd kink numbers carry zero mass.
KinkDistribution kink_distribution(const QuenchParams& q);

/// (kappa_1, kappa_2, kappa_3) of the kink number.
Cumulants kink_cumulants(const QuenchParams& q);

/// Slow-quench mean kink number (L / 2 pi) sqrt(1 / (2 tau)).
double asymptotic_kink_mean(const QuenchParams& q);

/// Discretized Gaussian with variance (2 - sqrt 2) * mean on n = n_min..n_max,
/// renormalized over that range. The pmf is stored from n = 0.
KinkDistribution gaussian_pmf(double mean, int n_min, int n_max);

/// Default range: max(0, mean - 12 sigma) .. mean + 12 sigma.
KinkDistribution gaussian_pmf(double mean);

/// Fold a pmf over all integers onto even integers by sending half of each odd
/// bin to each even neighbor, for comparison with periodic-chain kink numbers.
KinkDistribution fold_to_even(const KinkDistribution& dist);

/// Kibble-Zurek density exponent d nu / (1 + z nu).
double kzm_exponent(int dimension, double nu, double z);

/// Annealing time (hbar = 1, schedule energy units) for which the schedule's
/// crossing of A = B corresponds to the dimensionless quench scale `tau`.
///
/// With g(s) = A(s) / B(s) and the crossing at s_c, the local quench time is
/// tau_Q = t_a / |g'(s_c)| at coupling J_c = B(s_c) / 2, so tau = J_c t_a / |g'(s_c)|.
double anneal_time_for_tau(const AnnealSchedule& schedule, double tau);

/// tau for a physical annealing time in microseconds on a GHz schedule.
double dimensionless_tau(const AnnealSchedule& schedule, double anneal_time_us);

struct ModeDynamics {
    std::vector<double> momenta;
    std::vector<double> probabilities;  // excitation probability per mode
    long long steps = 0;                // steps of the accepted run
    double anneal_time = 0.0;           // hbar = 1 units of the schedule energies
    double max_norm_drift = 0.0;
};

/// Integrates each Bogoliubov mode,
///     i d/dt psi_k = 2 [ J(s) sin k  tau^x + (Gamma(s) - J(s) cos k) tau^z ] psi_k,
/// with Gamma = A/2, J = B/2 and s = t / t_a, from the ground state at s = 0 and
/// returns the population of the excited state at s = 1.
///
/// Fixed-step fourth-order Magnus (two Gauss nodes, exactly unitary). The step
/// count starts at `initial_steps` and doubles until every p_k changes by less
/// than 1e-8; IntegrationError after `max_doublings` doublings.
ModeDynamics exact_mode_dynamics(const QuenchParams& q, const AnnealSchedule& schedule, long long initial_steps = 2000,
                                 int max_doublings = 14);

}  // namespace kzsim::theory
