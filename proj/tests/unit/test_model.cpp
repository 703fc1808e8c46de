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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "kzsim/errors.hpp"
#include "kzsim/io.hpp"
#include "kzsim/model.hpp"

using namespace kzsim;

namespace {

SpinConfig spins_of(std::initializer_list<int> v) {
    std::vector<int> values(v);
    return SpinConfig::from_values(values);
}

}  // namespace

TEST_SUITE("model") {
    TEST_CASE("schedule is exact at knots and linear in between") {
        const AnnealSchedule sched({{0.0, 10.0, 0.0}, {0.25, 6.0, 1.0}, {1.0, 0.0, 13.0}}, "three-knot");
        CHECK(eval_schedule(sched, 0.25).a == 6.0);
        CHECK(eval_schedule(sched, 0.25).b == 1.0);
        CHECK(eval_schedule(sched, 0.0).a == 10.0);
        CHECK(eval_schedule(sched, 1.0).b == 13.0);
        const auto mid = eval_schedule(sched, 0.625);
        CHECK(mid.a == doctest::Approx(3.0));
        CHECK(mid.b == doctest::Approx(7.0));
        CHECK(sched.half_at(1.0).b == 6.5);
        CHECK_THROWS_AS(eval_schedule(sched, -1e-9), DomainError);
        CHECK_THROWS_AS(eval_schedule(sched, 1.0 + 1e-9), DomainError);
    }

    TEST_CASE("interpolation never leaves the knot envelope") {
        const AnnealSchedule sched({{0.0, 10.0, 0.0}, {0.3, 4.0, 2.0}, {0.7, 1.0, 9.0}, {1.0, 0.0, 12.0}}, "env");
        for (int i = 0; i <= 1000; ++i) {
            const double s = i / 1000.0;
            const auto& pts = sched.points();
            const auto hi = std::lower_bound(pts.begin(), pts.end(), s,
                                             [](const SchedulePoint& p, double v) { return p.s < v; });
            const auto lo = hi == pts.begin() ? hi : hi - 1;
            const auto v = sched.at(s);
            CHECK(v.a <= std::max(lo->a, hi->a) + 1e-12);
            CHECK(v.a >= std::min(lo->a, hi->a) - 1e-12);
            CHECK(v.b <= std::max(lo->b, hi->b) + 1e-12);
            CHECK(v.b >= std::min(lo->b, hi->b) - 1e-12);
        }
    }

    TEST_CASE("schedule invariants are enforced") {
        CHECK_THROWS_AS(AnnealSchedule({{0.0, 1.0, 0.0}}, "one"), ConfigError);
        CHECK_THROWS_AS(AnnealSchedule({{0.1, 1.0, 0.0}, {1.0, 0.0, 1.0}}, "late"), ConfigError);
        CHECK_THROWS_AS(AnnealSchedule({{0.0, 1.0, 0.0}, {0.5, 0.5, 0.5}, {0.5, 0.4, 0.6}, {1.0, 0.0, 1.0}}, "dup"),
                        ConfigError);
        CHECK_THROWS_AS(AnnealSchedule({{0.0, 1.0, 1.0}, {0.5, 0.5, 0.5}, {1.0, 0.0, 1.0}}, "b-down"), ConfigError);
        CHECK_THROWS_AS(AnnealSchedule({{0.0, 1.0, 0.0}, {1.0, 0.01, 1.0}}, "a-left"), ConfigError);
        CHECK_NOTHROW(AnnealSchedule({{0.0, 1.0, 0.0}, {1.0, 1e-7, 1.0}}, "a-tolerance"));
    }

    TEST_CASE("linear schedule and its crossing") {
        const auto lin = linear_schedule();
        CHECK(lin.half_at(0.0).a == doctest::Approx(6.344));
        CHECK(lin.half_at(1.0).b == doctest::Approx(6.344));
        CHECK(lin.half_at(0.3).a == doctest::Approx(6.344 * 0.7));
        CHECK(critical_point(lin) == doctest::Approx(0.5));
    }

    TEST_CASE("shipped device-like schedules end at the published B(1)/2") {
        const auto nasa = io::read_schedule_csv(std::filesystem::path(KZSIM_SOURCE_DIR) / "data/schedules/nasa_approx.csv");
        const auto burnaby =
            io::read_schedule_csv(std::filesystem::path(KZSIM_SOURCE_DIR) / "data/schedules/burnaby_approx.csv");
        CHECK(nasa.half_at(1.0).b == doctest::Approx(6.344).epsilon(1e-9));
        CHECK(nasa.half_at(1.0).a == 0.0);
        CHECK(burnaby.half_at(1.0).b == doctest::Approx(5.930).epsilon(1e-9));
        const auto lin = io::read_schedule_csv(std::filesystem::path(KZSIM_SOURCE_DIR) / "data/schedules/linear_nasa.csv");
        CHECK(lin.points() == linear_schedule().points());
    }

    TEST_CASE("chain instance invariants") {
        CHECK_NOTHROW(ChainInstance(3, {1, -1}));
        CHECK_THROWS_AS(ChainInstance(3, {1}), DomainError);
        CHECK_THROWS_AS(ChainInstance(3, {1, 2}), DomainError);
        CHECK_THROWS_AS(ChainInstance(0, {}), DomainError);
        CHECK_NOTHROW(ChainInstance(1, {}));
        const auto u = ChainInstance::uniform(5, -1);
        CHECK(std::all_of(u.couplings().begin(), u.couplings().end(), [](auto j) { return j == -1; }));
        CHECK_FALSE(u.embedded());
    }

    TEST_CASE("spin configs round-trip through text") {
        const auto c = SpinConfig::from_string("+-+--++-");
        CHECK(c.size() == 8);
        CHECK(c[0] == 1);
        CHECK(c[1] == -1);
        CHECK(c.to_string() == "+-+--++-");
        CHECK_THROWS_AS(SpinConfig::from_string("+-x"), DomainError);
        std::string longer(200, '+');
        longer[130] = '-';
        const auto big = SpinConfig::from_string(longer);
        CHECK(big[130] == -1);
        CHECK(big[129] == 1);
        CHECK(big.to_string() == longer);
    }

    TEST_CASE("count_kinks examples") {
        CHECK(count_kinks(ChainInstance::uniform(6, -1), SpinConfig(6)) == 0);
        CHECK(count_kinks(ChainInstance::uniform(6, 1), SpinConfig::from_string("+-+-+-")) == 0);
        CHECK(count_kinks(ChainInstance::uniform(4, -1), spins_of({1, 1, -1, -1})) == 1);
        CHECK(count_kinks(ChainInstance::uniform(4, 1), spins_of({1, 1, -1, -1})) == 2);
        CHECK_THROWS(count_kinks(ChainInstance::uniform(4, 1), SpinConfig(5)));
    }

    TEST_CASE("count_kinks agrees with the bond definition and stays in range") {
        std::mt19937_64 gen(11);
        for (int trial = 0; trial < 200; ++trial) {
            const int L = 2 + static_cast<int>(gen() % 150);
            std::vector<std::int8_t> j(L - 1);
            std::vector<int> s(L);
            for (auto& x : j) x = gen() & 1 ? 1 : -1;
            for (auto& x : s) x = gen() & 1 ? 1 : -1;
            const ChainInstance inst(L, j);
            const int n = count_kinks(inst, SpinConfig::from_values(s));
            CHECK(n == testing::kinks_by_definition(j, s));
            CHECK(n >= 0);
            CHECK(n <= L - 1);
        }
    }

    TEST_CASE("kink density divides by L") {
        const auto inst = ChainInstance::uniform(5, 1);
        const std::vector<SpinConfig> all_up{SpinConfig(5)};
        CHECK(kink_density(inst, all_up).mean == doctest::Approx(4.0 / 5.0));

        const auto ferro = ChainInstance::uniform(800, -1);
        SpinConfig two(800);
        two.flip(10);
        const std::vector<SpinConfig> configs{SpinConfig(800), two};
        const auto kd = kink_density(ferro, configs);
        CHECK(kd.counts == std::vector<int>{0, 2});
        CHECK(kd.mean == doctest::Approx(1.0 / 800.0));
    }

    TEST_CASE("Boltzmann-sampled chains reach the analytic density") {
        // Independent bonds: each is a kink with probability 1 / (1 + e^{2 beta}).
        const int L = 100;
        const double beta = 0.8;
        const double p = 1.0 / (1.0 + std::exp(2.0 * beta));
        std::mt19937_64 gen(5);
        std::bernoulli_distribution kink(p);
        const auto inst = ChainInstance::uniform(L, -1);
        std::vector<SpinConfig> configs;
        for (int k = 0; k < 20000; ++k) {
            std::vector<int> s(L, 1);
            for (int i = 1; i < L; ++i) s[i] = kink(gen) ? -s[i - 1] : s[i - 1];
            configs.push_back(SpinConfig::from_values(s));
        }
        const double expected = (1.0 - 1.0 / L) / (1.0 + std::exp(2.0 * beta));
        CHECK(kink_density(inst, configs).mean == doctest::Approx(expected).epsilon(0.01));
    }

    TEST_CASE("gauge examples") {
        const auto ferro = ChainInstance::uniform(6, -1);
        CHECK(apply_gauge(ferro, GaugeMask(6, false)) == ferro);
        CHECK(apply_gauge(ferro, GaugeMask(6, true)) == ferro);
        GaugeMask alternate{false, true, false, true, false, true};
        CHECK(apply_gauge(ferro, alternate) == ChainInstance::uniform(6, 1));
        const auto twice = apply_gauge(apply_gauge(ferro, alternate), alternate);
        CHECK(twice == ferro);
    }

    TEST_CASE("random gauge flips floor(L/2) sites and is deterministic") {
        for (int L : {2, 7, 10, 801}) {
            const auto inst = ChainInstance::uniform(L, 1);
            const auto g = apply_random_gauge(inst, 17);
            CHECK(std::count(g.mask.begin(), g.mask.end(), true) == L / 2);
            CHECK(apply_random_gauge(inst, 17).mask == g.mask);
            CHECK(apply_gauge(g.instance, g.mask) == inst);
        }
    }

    TEST_CASE("gauge covariance of the kink count") {
        std::mt19937_64 gen(23);
        for (int trial = 0; trial < 300; ++trial) {
            const int L = 2 + static_cast<int>(gen() % 100);
            std::vector<std::int8_t> j(L - 1);
            for (auto& x : j) x = gen() & 1 ? 1 : -1;
            std::vector<int> s(L);
            for (auto& x : s) x = gen() & 1 ? 1 : -1;
            GaugeMask m(L);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = gen() & 1;
            const ChainInstance inst(L, j);
            const auto config = SpinConfig::from_values(s);
            CHECK(count_kinks(apply_gauge(inst, m), flip_spins(config, m)) == count_kinks(inst, config));
        }
    }

    TEST_CASE("sample sets validate their contents") {
        auto inst = std::make_shared<const ChainInstance>(ChainInstance::uniform(4, 1));
        CHECK_THROWS(SampleSet("a", inst, 1.0, {}, SampleSource::ingested));
        CHECK_THROWS(SampleSet("a", inst, 1.0, {SpinConfig(5)}, SampleSource::ingested));
        const SampleSet ok("a", inst, 1.0, {SpinConfig(4)}, SampleSource::exact_oracle);
        CHECK(ok.configs().size() == 1);
        CHECK(to_string(ok.source()) == "exact-oracle");
    }
}
