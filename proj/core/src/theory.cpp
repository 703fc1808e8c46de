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

#include "kzsim/theory.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <cmath>
#include <numbers>
#include <string>

#include "kzsim/errors.hpp"
#include "kzsim/units.hpp"

namespace kzsim::theory {

void QuenchParams::validate() const {
    if (length < 4 || length % 2 != 0) throw DomainError("quench length must be even and at least 4");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("quench scale tau must be positive");
}

std::vector<double> mode_momenta(int length) {
    if (length < 2 || length % 2 != 0) throw DomainError("mode grid needs an even length");
    std::vector<double> k(static_cast<std::size_t>(length / 2));
    for (std::size_t m = 0; m < k.size(); ++m)
        k[m] = std::numbers::pi * static_cast<double>(2 * m + 1) / static_cast<double>(length);
    return k;
}

std::vector<double> mode_probabilities(const QuenchParams& q) {
    q.validate();
    auto p = mode_momenta(q.length);
    for (double& k : p) k = std::exp(-2.0 * std::numbers::pi * q.tau * k * k);
    return p;
}

KinkDistribution pair_distribution(std::span<const double> probabilities) {
    Cumulants closed;
    for (double p : probabilities) {
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("mode probability outside [0, 1]");
        closed.k1 += p;
        closed.k2 += p * (1.0 - p);
        closed.k3 += p * (1.0 - p) * (1.0 - 2.0 * p);
    }
    // Convolve one Bernoulli factor at a time; extended precision keeps the long
    // tails from losing mass to cancellation for hundreds of modes.
    std::vector<long double> pmf{1.0L};
    pmf.reserve(probabilities.size() + 1);
    for (double p : probabilities) {
        const long double on = p;
        const long double off = 1.0L - on;
        pmf.push_back(0.0L);
        for (std::size_t n = pmf.size() - 1; n > 0; --n) pmf[n] = pmf[n] * off + pmf[n - 1] * on;
        pmf[0] *= off;
    }
    std::vector<double> out(pmf.begin(), pmf.end());
    return KinkDistribution::with_cumulants(std::move(out), closed);
}

KinkDistribution kink_distribution(const QuenchParams& q) {
    const auto pairs = pair_distribution(mode_probabilities(q));
    std::vector<double> pmf(2 * pairs.size() - 1, 0.0);
    for (std::size_t m = 0; m < pairs.size(); ++m) pmf[2 * m] = pairs[m];
    const auto& c = pairs.cumulants();
    return KinkDistribution::with_cumulants(std::move(pmf), {2.0 * c.k1, 4.0 * c.k2, 8.0 * c.k3});
}

Cumulants kink_cumulants(const QuenchParams& q) {
    Cumulants c;
    for (double p : mode_probabilities(q)) {
        c.k1 += p;
        c.k2 += p * (1.0 - p);
        c.k3 += p * (1.0 - p) * (1.0 - 2.0 * p);
    }
    return {2.0 * c.k1, 4.0 * c.k2, 8.0 * c.k3};
}

double asymptotic_kink_mean(const QuenchParams& q) {
    q.validate();
    return q.length / (2.0 * std::numbers::pi) * std::sqrt(1.0 / (2.0 * q.tau));
}

KinkDistribution gaussian_pmf(double mean, int n_min, int n_max) {
    if (!(mean > 0.0)) throw DomainError("Gaussian kink pmf needs a positive mean");
    if (n_min < 0 || n_max < n_min) throw DomainError("invalid Gaussian pmf range");
    const double var = kRatio21 * mean;
    std::vector<double> pmf(static_cast<std::size_t>(n_max) + 1, 0.0);
    long double total = 0.0L;
    for (int n = n_min; n <= n_max; ++n) {
        const double d = n - mean;
        pmf[n] = std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
        total += pmf[n];
    }
    if (!(total > 0.0L)) throw DomainError("Gaussian pmf range carries no mass");
    for (double& v : pmf) v = static_cast<double>(v / total);
    return KinkDistribution::from_pmf(std::move(pmf));
}

KinkDistribution gaussian_pmf(double mean) {
    if (!(mean > 0.0)) throw DomainError("Gaussian kink pmf needs a positive mean");
    const double sigma = std::sqrt(kRatio21 * mean);
    const int lo = std::max(0, static_cast<int>(std::floor(mean - 12.0 * sigma)));
    const int hi = static_cast<int>(std::ceil(mean + 12.0 * sigma));
    return gaussian_pmf(mean, lo, hi);
}

KinkDistribution fold_to_even(const KinkDistribution& dist) {
    const auto& in = dist.pmf();
    std::vector<double> out(in.size() + 1, 0.0);
    for (std::size_t n = 0; n < in.size(); ++n) {
        if (n % 2 == 0) {
            out[n] += in[n];
        } else {
            out[n - 1] += 0.5 * in[n];
            out[n + 1] += 0.5 * in[n];
        }
    }
    while (out.size() > 1 && out.back() == 0.0) out.pop_back();
    return KinkDistribution::from_pmf(std::move(out));
}

double kzm_exponent(int dimension, double nu, double z) {
    if (dimension < 1 || !(nu > 0.0) || !(z > 0.0)) throw DomainError("KZM exponent needs d >= 1, nu > 0, z > 0");
    return dimension * nu / (1.0 + z * nu);
}

namespace {

struct Crossing {
    double s = 0.0;
    double coupling = 0.0;  // B(s_c) / 2
    double rate = 0.0;      // |d(A/B)/ds| at s_c
};

Crossing schedule_crossing(const AnnealSchedule& schedule) {
    const double sc = critical_point(schedule);
    const auto& pts = schedule.points();
    // Slopes of the segment that contains s_c (the one to its right at a knot).
    std::size_t hi = 1;
    while (hi + 1 < pts.size() && pts[hi].s <= sc) ++hi;
    const auto& a = pts[hi - 1];
    const auto& b = pts[hi];
    const double ds = b.s - a.s;
    const double da = (b.a - a.a) / ds;
    const double db = (b.b - a.b) / ds;
    const auto v = schedule.at(sc);
    if (!(v.b > 0.0)) throw DomainError("schedule has B = 0 at its crossing point");
    const double rate = std::fabs((da * v.b - v.a * db) / (v.b * v.b));
    if (!(rate > 0.0)) throw DomainError("schedule ratio A/B is stationary at its crossing point");
    return {sc, 0.5 * v.b, rate};
}

using Vec3 = std::array<double, 3>;

Vec3 mode_field(const AnnealSchedule& schedule, double s, double k) {
    const auto half = schedule.half_at(std::clamp(s, 0.0, 1.0));
    return {2.0 * half.b * std::sin(k), 0.0, 2.0 * (half.a - half.b * std::cos(k))};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

struct Spinor {
    std::complex<double> up;
    std::complex<double> down;
};

// State pointing along -h (ground state of h . tau).
Spinor ground_state(const Vec3& h) {
    const double r = norm(h);
    const double nx = -h[0] / r, ny = -h[1] / r, nz = -h[2] / r;
    const double theta = std::acos(std::clamp(nz, -1.0, 1.0));
    const double phi = std::atan2(ny, nx);
    return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

// exp(-i v . tau) applied to psi.
Spinor rotate(const Vec3& v, const Spinor& psi) {
    const double a = norm(v);
    if (a == 0.0) return psi;
    const double c = std::cos(a);
    const double s = std::sin(a) / a;
    const std::complex<double> i(0.0, 1.0);
    // -i s (v . tau) = -i s [[vz, vx - i vy], [vx + i vy, -vz]]
    const std::complex<double> m00 = c - i * s * v[2];
    const std::complex<double> m01 = -i * s * std::complex<double>(v[0], -v[1]);
    const std::complex<double> m10 = -i * s * std::complex<double>(v[0], v[1]);
    const std::complex<double> m11 = c + i * s * v[2];
    return {m00 * psi.up + m01 * psi.down, m10 * psi.up + m11 * psi.down};
}

// Population of the state along +h_final.
double excited_population(const Spinor& psi, const Vec3& h) {
    const double r = norm(h);
    const auto x = 2.0 * std::real(std::conj(psi.up) * psi.down);
    const auto y = 2.0 * std::imag(std::conj(psi.up) * psi.down);
    const auto z = std::norm(psi.up) - std::norm(psi.down);
    const double n2 = std::norm(psi.up) + std::norm(psi.down);
    return 0.5 * (n2 + (x * h[0] + y * h[1] + z * h[2]) / r);
}

struct ModeRun {
    double probability;
    double norm_drift;
};

ModeRun integrate_mode(const AnnealSchedule& schedule, double k, double anneal_time, long long steps) {
    constexpr double kNode1 = 0.5 - 0.28867513459481287;  // 1/2 - sqrt(3)/6
    constexpr double kNode2 = 0.5 + 0.28867513459481287;
    constexpr double kCommutator = 0.28867513459481287;   // sqrt(3)/6

    Spinor psi = ground_state(mode_field(schedule, 0.0, k));
    const double h = anneal_time / static_cast<double>(steps);
    for (long long n = 0; n < steps; ++n) {
        const double t0 = static_cast<double>(n) * h;
        const Vec3 h1 = mode_field(schedule, (t0 + kNode1 * h) / anneal_time, k);
        const Vec3 h2 = mode_field(schedule, (t0 + kNode2 * h) / anneal_time, k);
        // Omega = -i [ h/2 (H1 + H2) . tau + (sqrt3/12) h^2 * 2 (H2 x H1) . tau ]
        const Vec3 c = cross(h2, h1);
        Vec3 v;
        for (int d = 0; d < 3; ++d) v[d] = 0.5 * h * (h1[d] + h2[d]) + kCommutator * h * h * c[d];
        psi = rotate(v, psi);
    }
    const double n2 = std::norm(psi.up) + std::norm(psi.down);
    return {excited_population(psi, mode_field(schedule, 1.0, k)), std::fabs(n2 - 1.0)};
}

}  // namespace

double anneal_time_for_tau(const AnnealSchedule& schedule, double tau) {
    if (!(tau >= 0.0)) throw DomainError("tau must be non-negative");
    const auto c = schedule_crossing(schedule);
    return tau * c.rate / c.coupling;
}

double dimensionless_tau(const AnnealSchedule& schedule, double anneal_time_us) {
    if (schedule.unit() != EnergyUnit::gigahertz) throw ConfigError("physical time conversion needs a GHz schedule");
    if (!(anneal_time_us >= 0.0)) throw DomainError("annealing time must be non-negative");
    const auto c = schedule_crossing(schedule);
    return units::ghz_to_rad_per_us(c.coupling) * anneal_time_us / c.rate;
}

ModeDynamics exact_mode_dynamics(const QuenchParams& q, const AnnealSchedule& schedule, long long initial_steps,
                                 int max_doublings) {
    q.validate();
    if (initial_steps < 1) throw DomainError("initial step count must be positive");
    ModeDynamics out;
    out.momenta = mode_momenta(q.length);
    out.anneal_time = anneal_time_for_tau(schedule, q.tau);

    auto run = [&](long long steps, double& drift) {
        std::vector<double> p(out.momenta.size());
        drift = 0.0;
        for (std::size_t m = 0; m < p.size(); ++m) {
            const auto r = integrate_mode(schedule, out.momenta[m], out.anneal_time, steps);
            p[m] = r.probability;
            drift = std::max(drift, r.norm_drift);
        }
        return p;
    };

    long long steps = initial_steps;
    double drift = 0.0;
    auto coarse = run(steps, drift);
    for (int d = 0; d < max_doublings; ++d) {
        double fine_drift = 0.0;
        auto fine = run(2 * steps, fine_drift);
        double change = 0.0;
        for (std::size_t m = 0; m < fine.size(); ++m) change = std::max(change, std::fabs(fine[m] - coarse[m]));
        steps *= 2;
        if (change < 1e-8) {
            out.probabilities = std::move(fine);
            out.steps = steps;
            out.max_norm_drift = fine_drift;
            return out;
        }
        coarse = std::move(fine);
    }
    throw IntegrationError("mode dynamics did not converge after " + std::to_string(max_doublings) +
                           " step doublings (last step count " + std::to_string(steps) + ")");
}

}  // namespace kzsim::theory
