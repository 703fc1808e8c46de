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

#include "kzsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kzsim/errors.hpp"
#include "kzsim/rng.hpp"

namespace kzsim::stats {

namespace {

struct Moments {
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
};

Cumulants k_from_moments(const Moments& m, double n) {
    return {m.mean, n / (n - 1.0) * m.m2, n * n / ((n - 1.0) * (n - 2.0)) * m.m3};
}

// Linear-interpolated quantile of sorted data.
double quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return sorted[lo] + w * (sorted[hi] - sorted[lo]);
}

Interval percentile_interval(std::vector<double> values, double point) {
    std::sort(values.begin(), values.end());
    Interval ci{quantile(values, 0.16), quantile(values, 0.84)};
    ci.low = std::min(ci.low, point);
    ci.high = std::max(ci.high, point);
    return ci;
}

double safe_ratio(double num, double den) { return den != 0.0 ? num / den : 0.0; }

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_err = 0.0;
    double intercept_err = 0.0;
    double rss = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y, std::span<const double> w) {
    const std::size_t n = x.size();
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
    }
    const double xm = sx / sw, ym = sy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += w[i] * (x[i] - xm) * (x[i] - xm);
        sxy += w[i] * (x[i] - xm) * (y[i] - ym);
    }
    if (!(sxx > 0.0)) throw DomainError("fit needs at least two distinct abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = ym - f.slope * xm;
    double wrss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        f.rss += r * r;
        wrss += w[i] * r * r;
    }
    // Weights are relative: the residual variance is estimated from the data.
    const double sigma2 = n > 2 ? wrss / static_cast<double>(n - 2) / (sw / static_cast<double>(n)) : 0.0;
    const double wn = sw / static_cast<double>(n);
    f.slope_err = std::sqrt(sigma2 * wn / sxx);
    f.intercept_err = std::sqrt(sigma2 * wn * (1.0 / sw + xm * xm / sxx));
    return f;
}

}  // namespace

Cumulants k_statistics(std::span<const int> counts) {
    if (counts.size() < 3) throw DomainError("k-statistics need at least 3 values");
    const double n = static_cast<double>(counts.size());
    Moments m;
    for (int c : counts) m.mean += c;
    m.mean /= n;
    for (int c : counts) {
        const double d = c - m.mean;
        m.m2 += d * d;
        m.m3 += d * d * d;
    }
    m.m2 /= n;
    m.m3 /= n;
    return k_from_moments(m, n);
}

CumulantEstimate estimate_cumulants(std::span<const int> counts, int resamples, std::uint64_t seed) {
    if (counts.size() < 10) throw DomainError("cumulant estimation needs at least 10 counts");
    if (resamples < 100) throw DomainError("bootstrap needs at least 100 resamples");

    CumulantEstimate est;
    est.n_samples = counts.size();
    const auto point = k_statistics(counts);
    est.k1 = point.k1;
    est.k2 = point.k2;
    est.k3 = point.k3;
    est.ratio21 = safe_ratio(point.k2, point.k1);
    est.ratio31 = safe_ratio(point.k3, point.k1);

    const std::size_t n = counts.size();
    const double nd = static_cast<double>(n);
    std::vector<double> b1(resamples), b2(resamples), b3(resamples), r21(resamples), r31(resamples);
    // Resample k uses its own stream so the result does not depend on evaluation order.
#pragma omp parallel for schedule(static)
    for (int r = 0; r < resamples; ++r) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(r)}));
        double s1 = 0.0, s2 = 0.0, s3 = 0.0;
        // Shift by the full-sample mean to keep the power sums well conditioned.
        for (std::size_t i = 0; i < n; ++i) {
            const double v = counts[rng.below(n)] - point.k1;
            s1 += v;
            s2 += v * v;
            s3 += v * v * v;
        }
        const double mu = s1 / nd;
        Moments m;
        m.mean = point.k1 + mu;
        m.m2 = s2 / nd - mu * mu;
        m.m3 = s3 / nd - 3.0 * mu * s2 / nd + 2.0 * mu * mu * mu;
        const auto k = k_from_moments(m, nd);
        b1[r] = k.k1;
        b2[r] = k.k2;
        b3[r] = k.k3;
        r21[r] = safe_ratio(k.k2, k.k1);
        r31[r] = safe_ratio(k.k3, k.k1);
    }
    est.ci_k1 = percentile_interval(std::move(b1), est.k1);
    est.ci_k2 = percentile_interval(std::move(b2), est.k2);
    est.ci_k3 = percentile_interval(std::move(b3), est.k3);
    est.ci_ratio21 = percentile_interval(std::move(r21), est.ratio21);
    est.ci_ratio31 = percentile_interval(std::move(r31), est.ratio31);
    return est;
}

FitResult fit_power_law(std::span<const DataPoint> points, FitRange range, bool weighted) {
    std::vector<double> x, y, w;
    double t_lo = std::numeric_limits<double>::infinity(), t_hi = -t_lo;
    for (const auto& p : points) {
        if (p.t < range.t_min || p.t > range.t_max) continue;
        t_lo = std::min(t_lo, p.t);
        t_hi = std::max(t_hi, p.t);
        if (!(p.t > 0.0) || !(p.y > 0.0))
            throw DomainError("power-law fit needs positive t and y (t = " + std::to_string(p.t) +
                              ", y = " + std::to_string(p.y) + ")");
        if (weighted && !(p.weight > 0.0)) throw DomainError("weighted power-law fit needs positive weights");
        x.push_back(std::log(p.t));
        y.push_back(std::log(p.y));
        w.push_back(weighted ? p.weight : 1.0);
    }
    if (x.size() < 3) throw DomainError("power-law fit needs at least 3 points in range");
    const auto line = fit_line(x, y, w);
    FitResult f;
    f.params = {{"alpha", -line.slope}, {"intercept", line.intercept}};
    f.errors = {{"alpha", line.slope_err}, {"intercept", line.intercept_err}};
    f.t_min = t_lo;
    f.t_max = t_hi;
    f.residual = line.rss;
    f.n_points = x.size();
    return f;
}

FitResult fit_constant(std::span<const RatioPoint> points) {
    if (points.size() < 2) throw DomainError("constant fit needs at least 2 points");
    FitResult f;
    f.n_points = points.size();
    f.t_min = std::numeric_limits<double>::infinity();
    f.t_max = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
        f.t_min = std::min(f.t_min, p.t);
        f.t_max = std::max(f.t_max, p.t);
        if (!(p.sigma >= 0.0)) throw DomainError("constant fit needs non-negative sigma");
    }

    bool exact = false;
    double exact_value = 0.0;
    for (const auto& p : points) {
        if (p.sigma != 0.0) continue;
        if (exact && p.r != exact_value)
            throw ConfigError("constant fit: zero-uncertainty points disagree (" + std::to_string(exact_value) +
                              " vs " + std::to_string(p.r) + ")");
        exact = true;
        exact_value = p.r;
    }
    if (exact) {
        f.params = {{"c", exact_value}};
        f.errors = {{"c", 0.0}};
        for (const auto& p : points)
            if (p.sigma > 0.0) f.residual += std::pow((p.r - exact_value) / p.sigma, 2);
        return f;
    }

    double sw = 0.0, swr = 0.0;
    for (const auto& p : points) {
        const double w = 1.0 / (p.sigma * p.sigma);
        sw += w;
        swr += w * p.r;
    }
    const double c = swr / sw;
    for (const auto& p : points) f.residual += std::pow((p.r - c) / p.sigma, 2);
    f.params = {{"c", c}};
    f.errors = {{"c", 1.0 / std::sqrt(sw)}};
    return f;
}

KinkDistribution histogram(std::span<const int> counts) {
    if (counts.empty()) throw DomainError("histogram needs at least one count");
    const int top = *std::max_element(counts.begin(), counts.end());
    if (*std::min_element(counts.begin(), counts.end()) < 0) throw DomainError("counts must be non-negative");
    std::vector<double> pmf(static_cast<std::size_t>(top) + 1, 0.0);
    for (int c : counts) pmf[c] += 1.0;
    const double n = static_cast<double>(counts.size());
    for (double& v : pmf) v /= n;
    return KinkDistribution::from_pmf(std::move(pmf));
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        d += std::fabs(a - b);
    }
    return 0.5 * d;
}

double tv_distance(const KinkDistribution& p, const KinkDistribution& q) { return tv_distance(p.pmf(), q.pmf()); }

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        const double b = i < q.size() ? q[i] : 0.0;
        if (!(b > 0.0))
            throw DomainError("KL divergence undefined: P(n) > 0 but Q(n) = 0 at n = " + std::to_string(i));
        d += p[i] * std::log(p[i] / b);
    }
    return d;
}

double kl_divergence(const KinkDistribution& p, const KinkDistribution& q) { return kl_divergence(p.pmf(), q.pmf()); }

std::string to_string(DecayShape shape) { return shape == DecayShape::power ? "power" : "exponential"; }

DecayFit fit_decay_shape(std::span<const std::pair<double, double>> points) {
    if (points.size() < 4) throw DomainError("decay-shape fit needs at least 4 points");
    std::vector<double> t, logt, logd, w(points.size(), 1.0);
    for (const auto& [time, d] : points) {
        if (!(d > 0.0)) throw DomainError("decay-shape fit needs positive distances (D = " + std::to_string(d) + ")");
        if (!(time > 0.0)) throw DomainError("decay-shape fit needs positive times");
        t.push_back(time);
        logt.push_back(std::log(time));
        logd.push_back(std::log(d));
    }
    const auto pw = fit_line(logt, logd, w);
    const auto ex = fit_line(t, logd, w);
    DecayFit out;
    const double lo = *std::min_element(t.begin(), t.end());
    const double hi = *std::max_element(t.begin(), t.end());
    out.power.params = {{"tau", -pw.slope}, {"intercept", pw.intercept}};
    out.power.errors = {{"tau", pw.slope_err}, {"intercept", pw.intercept_err}};
    out.power.residual = pw.rss;
    out.exponential.params = {{"gamma", -ex.slope}, {"intercept", ex.intercept}};
    out.exponential.errors = {{"gamma", ex.slope_err}, {"intercept", ex.intercept_err}};
    out.exponential.residual = ex.rss;
    for (auto* f : {&out.power, &out.exponential}) {
        f->t_min = lo;
        f->t_max = hi;
        f->n_points = points.size();
    }
    out.preferred = ex.rss < pw.rss ? DecayShape::exponential : DecayShape::power;
    return out;
}

}  // namespace kzsim::stats
