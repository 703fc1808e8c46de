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

#include <cmath>
#include <random>

#include "doctest.h"

#include "kzsim/errors.hpp"
#include "kzsim/stats.hpp"
#include "kzsim/theory.hpp"

using namespace kzsim;
using namespace kzsim::stats;

namespace {

std::vector<int> poisson_counts(double lambda, int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::poisson_distribution<int> d(lambda);
    std::vector<int> out(n);
    for (auto& x : out) x = d(gen);
    return out;
}

bool inside(const Interval& ci, double x) { return ci.low <= x && x <= ci.high; }

}  // namespace

TEST_SUITE("stats") {
    TEST_CASE("k-statistics of a small sample") {
        const std::vector<int> v{1, 2, 4};
        const auto k = k_statistics(v);
        // mean 7/3, m2 = 14/9, m3 = 20/27
        CHECK(k.k1 == doctest::Approx(7.0 / 3));
        CHECK(k.k2 == doctest::Approx(1.5 * 14.0 / 9));
        CHECK(k.k3 == doctest::Approx(9.0 / 2.0 * 20.0 / 27));
        const std::vector<int> two{1, 2};
        CHECK_THROWS_AS(k_statistics(two), DomainError);
    }

    TEST_CASE("constant data has zero spread") {
        const std::vector<int> v(50, 7);
        const auto e = estimate_cumulants(v, 200, 1);
        CHECK(e.k1 == 7.0);
        CHECK(e.k2 == 0.0);
        CHECK(e.k3 == 0.0);
        CHECK(e.ci_k1.low == 7.0);
        CHECK(e.ci_k1.high == 7.0);
        CHECK(e.ci_k2 == Interval{0.0, 0.0});
        CHECK(e.n_samples == 50u);
    }

    TEST_CASE("estimator preconditions") {
        const std::vector<int> few(9, 1);
        CHECK_THROWS_AS(estimate_cumulants(few, 200, 1), DomainError);
        const std::vector<int> ok(10, 1);
        CHECK_THROWS_AS(estimate_cumulants(ok, 99, 1), DomainError);
    }

    TEST_CASE("Poisson cumulants all equal lambda") {
        const double lambda = 6.0;
        const auto counts = poisson_counts(lambda, 100000, 2);
        const auto e = estimate_cumulants(counts, 200, 3);
        // 68% intervals; allow three half-widths
        auto near = [](double x, const Interval& ci, double target) {
            return std::fabs(x - target) <= 3 * std::max(ci.high - x, x - ci.low);
        };
        CHECK(near(e.k1, e.ci_k1, lambda));
        CHECK(near(e.k2, e.ci_k2, lambda));
        CHECK(near(e.k3, e.ci_k3, lambda));
        CHECK(inside(e.ci_k1, e.k1));
        CHECK(e.ratio21 == doctest::Approx(e.k2 / e.k1));
    }

    TEST_CASE("samples from the exact pair distribution reproduce its cumulants") {
        const auto dist = theory::kink_distribution({400, 2.0});
        std::mt19937_64 gen(21);
        std::discrete_distribution<int> d(dist.pmf().begin(), dist.pmf().end());
        std::vector<int> counts(20000);
        for (auto& c : counts) c = d(gen);
        const auto e = estimate_cumulants(counts, 300, 4);
        const auto& c = dist.cumulants();
        auto close = [](double x, const Interval& ci, double target) {
            return std::fabs(x - target) <= 3 * std::max(ci.high - x, x - ci.low);
        };
        CHECK(close(e.k1, e.ci_k1, c.k1));
        CHECK(close(e.k2, e.ci_k2, c.k2));
        CHECK(close(e.k3, e.ci_k3, c.k3));
    }

    TEST_CASE("interval width shrinks as one over root n") {
        const auto small = estimate_cumulants(poisson_counts(5.0, 2000, 7), 400, 1);
        const auto large = estimate_cumulants(poisson_counts(5.0, 8000, 8), 400, 1);
        const double ratio = (large.ci_k1.high - large.ci_k1.low) / (small.ci_k1.high - small.ci_k1.low);
        CHECK(ratio > 0.4);
        CHECK(ratio < 0.6);
    }

    TEST_CASE("bootstrap is deterministic per seed") {
        const auto counts = poisson_counts(3.0, 500, 9);
        CHECK(estimate_cumulants(counts, 300, 5) == estimate_cumulants(counts, 300, 5));
        CHECK_FALSE(estimate_cumulants(counts, 300, 5).ci_k2 == estimate_cumulants(counts, 300, 6).ci_k2);
    }

    TEST_CASE("power law on exact data") {
        std::vector<DataPoint> pts;
        for (double t : {1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 300.0}) pts.push_back({t, 3.0 * std::pow(t, -0.5)});
        const auto f = fit_power_law(pts);
        CHECK(std::fabs(f.value("alpha") - 0.5) < 1e-12);
        CHECK(f.value("intercept") == doctest::Approx(std::log(3.0)).epsilon(1e-12));
        CHECK(f.n_points == 7u);

        const auto ranged = fit_power_law(pts, {2.0, 100.0});
        CHECK(ranged.n_points == 5u);
        CHECK(ranged.t_min == 2.0);
        CHECK(ranged.t_max == 100.0);

        CHECK_THROWS_AS(fit_power_law(pts, {200.0, 1000.0}), DomainError);
        pts[0].y = 0.0;
        CHECK_THROWS_AS(fit_power_law(pts), DomainError);
    }

    TEST_CASE("power-law exponent is invariant under rescaling") {
        std::mt19937_64 gen(12);
        std::normal_distribution<double> noise(0.0, 0.05);
        std::vector<DataPoint> pts, scaled_y, scaled_t;
        for (double t = 1.0; t < 200.0; t *= 1.7) {
            const double y = 0.1 * std::pow(t, -0.3) * std::exp(noise(gen));
            pts.push_back({t, y});
            scaled_y.push_back({t, 7.0 * y});
            scaled_t.push_back({4.0 * t, y});
        }
        const double a = fit_power_law(pts).value("alpha");
        CHECK(fit_power_law(scaled_y).value("alpha") == doctest::Approx(a).epsilon(1e-10));
        CHECK(fit_power_law(scaled_t).value("alpha") == doctest::Approx(a).epsilon(1e-10));
        CHECK(fit_power_law(pts).error("alpha") > 0.0);
    }

    TEST_CASE("constant fit") {
        const std::vector<RatioPoint> same{{1, 0.6, 0.01}, {2, 0.6, 0.02}, {3, 0.6, 0.05}};
        const auto f = fit_constant(same);
        CHECK(f.value("c") == doctest::Approx(0.6));
        CHECK(f.residual == doctest::Approx(0.0));

        const std::vector<RatioPoint> weighted{{1, 1.0, 1.0}, {2, 2.0, 0.5}};
        CHECK(fit_constant(weighted).value("c") == doctest::Approx((1.0 + 4 * 2.0) / 5));
        CHECK(fit_constant(weighted).error("c") == doctest::Approx(std::sqrt(1.0 / 5)));

        const std::vector<RatioPoint> exact{{1, 0.5, 0.0}, {2, 0.5, 0.0}, {3, 0.9, 0.1}};
        CHECK(fit_constant(exact).value("c") == 0.5);
        const std::vector<RatioPoint> clash{{1, 0.5, 0.0}, {2, 0.6, 0.0}};
        CHECK_THROWS_AS(fit_constant(clash), ConfigError);
        const std::vector<RatioPoint> one{{1, 0.5, 0.1}};
        CHECK_THROWS_AS(fit_constant(one), DomainError);
    }

    TEST_CASE("constant fit recovers a noisy ratio") {
        std::mt19937_64 gen(30);
        std::normal_distribution<double> noise(0.0, 0.02);
        std::vector<RatioPoint> pts;
        for (int i = 0; i < 12; ++i) pts.push_back({double(i + 1), 0.586 + noise(gen), 0.02});
        const auto f = fit_constant(pts);
        CHECK(std::fabs(f.value("c") - 0.586) < 2 * f.error("c"));
    }

    TEST_CASE("histogram") {
        const std::vector<int> one{4};
        const auto h = histogram(one);
        CHECK(h.size() == 5u);
        CHECK(h[4] == 1.0);
        CHECK(h[0] == 0.0);

        std::mt19937_64 gen(1);
        std::uniform_int_distribution<int> u(0, 9);
        std::vector<int> flat(100000);
        for (auto& x : flat) x = u(gen);
        const auto hf = histogram(flat);
        for (std::size_t n = 0; n < 10; ++n) CHECK(hf[n] == doctest::Approx(0.1).epsilon(0.05));

        const std::vector<int> none;
        CHECK_THROWS_AS(histogram(none), DomainError);
    }

    TEST_CASE("distances") {
        const std::vector<double> p{0.75, 0.25}, q{0.25, 0.75};
        CHECK(tv_distance(p, p) == 0.0);
        CHECK(kl_divergence(p, p) == 0.0);
        CHECK(tv_distance(p, q) == doctest::Approx(0.5));
        CHECK(kl_divergence(p, q) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
        const std::vector<double> a{1.0, 0.0}, b{0.0, 1.0};
        CHECK(tv_distance(a, b) == 1.0);
        CHECK_THROWS_WITH_AS(kl_divergence(a, b), doctest::Contains("n = 0"), DomainError);
        // zero padding of the shorter pmf
        const std::vector<double> c{1.0};
        CHECK(tv_distance(c, std::vector<double>{0.5, 0.5}) == doctest::Approx(0.5));
    }

    TEST_CASE("trace norm is a metric and KL is non-negative") {
        std::mt19937_64 gen(8);
        std::uniform_real_distribution<double> u(0.01, 1.0);
        auto random_pmf = [&](int n) {
            std::vector<double> v(n);
            double s = 0.0;
            for (auto& x : v) s += (x = u(gen));
            for (auto& x : v) x /= s;
            return v;
        };
        for (int rep = 0; rep < 200; ++rep) {
            const auto p = random_pmf(6), q = random_pmf(6), r = random_pmf(6);
            CHECK(tv_distance(p, q) == doctest::Approx(tv_distance(q, p)));
            CHECK(tv_distance(p, r) <= tv_distance(p, q) + tv_distance(q, r) + 1e-15);
            CHECK(tv_distance(p, q) <= 1.0);
            CHECK(kl_divergence(p, q) >= 0.0);
        }
    }

    TEST_CASE("decay shape selection") {
        std::vector<std::pair<double, double>> power, expo;
        for (double t : {1.0, 2.0, 4.0, 8.0, 16.0}) {
            power.emplace_back(t, 5.0 * std::pow(t, -2.0));
            expo.emplace_back(t, 2.0 * std::exp(-0.3 * t));
        }
        const auto fp = fit_decay_shape(power);
        CHECK(fp.preferred == DecayShape::power);
        CHECK(fp.power.value("tau") == doctest::Approx(2.0).epsilon(1e-12));
        const auto fe = fit_decay_shape(expo);
        CHECK(fe.preferred == DecayShape::exponential);
        CHECK(fe.exponential.value("gamma") == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(to_string(DecayShape::exponential) == "exponential");

        std::vector<std::pair<double, double>> short_series(power.begin(), power.begin() + 3);
        CHECK_THROWS_AS(fit_decay_shape(short_series), DomainError);
        power[2].second = 0.0;
        CHECK_THROWS_AS(fit_decay_shape(power), DomainError);
    }

    TEST_CASE("noisy mixed data returns both fits") {
        std::mt19937_64 gen(3);
        std::normal_distribution<double> noise(0.0, 0.1);
        std::vector<std::pair<double, double>> pts;
        for (double t = 1.0; t <= 64.0; t *= 2.0) pts.emplace_back(t, std::pow(t, -0.5) * std::exp(-0.01 * t + noise(gen)));
        const auto f = fit_decay_shape(pts);
        CHECK(f.power.n_points == pts.size());
        CHECK(f.exponential.n_points == pts.size());
        CHECK(f.power.residual >= 0.0);
        CHECK(f.exponential.residual >= 0.0);
    }
}
