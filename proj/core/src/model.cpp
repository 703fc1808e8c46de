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

#include "kzsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kzsim/embedding.hpp"
#include "kzsim/errors.hpp"
#include "kzsim/rng.hpp"

namespace kzsim {

AnnealSchedule::AnnealSchedule(std::vector<SchedulePoint> points, std::string name, EnergyUnit unit)
    : points_(std::move(points)), name_(std::move(name)), unit_(unit) {
    if (points_.size() < 2) throw ConfigError("schedule '" + name_ + "' needs at least two points");
    if (points_.front().s != 0.0 || points_.back().s != 1.0)
        throw ConfigError("schedule '" + name_ + "' must start at s = 0 and end at s = 1");
    double max_a = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!std::isfinite(p.s) || !std::isfinite(p.a) || !std::isfinite(p.b))
            throw ConfigError("schedule '" + name_ + "' has a non-finite entry");
        if (i > 0 && !(p.s > points_[i - 1].s))
            throw ConfigError("schedule '" + name_ + "': s values must be strictly increasing");
        if (i > 0 && p.b < points_[i - 1].b)
            throw ConfigError("schedule '" + name_ + "': B(s) must be non-decreasing");
        max_a = std::max(max_a, std::fabs(p.a));
    }
    if (std::fabs(points_.back().a) > 1e-6 * max_a)
        throw ConfigError("schedule '" + name_ + "': A(1) must vanish");
}

ScheduleValue AnnealSchedule::at(double s) const {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("schedule evaluated outside [0, 1]: s = " + std::to_string(s));
    auto hi = std::lower_bound(points_.begin(), points_.end(), s,
                               [](const SchedulePoint& p, double v) { return p.s < v; });
    if (hi->s == s) return {hi->a, hi->b};
    auto lo = hi - 1;
    const double w = (s - lo->s) / (hi->s - lo->s);
    return {lo->a + w * (hi->a - lo->a), lo->b + w * (hi->b - lo->b)};
}

ScheduleValue AnnealSchedule::half_at(double s) const {
    auto v = at(s);
    return {0.5 * v.a, 0.5 * v.b};
}

ScheduleValue eval_schedule(const AnnealSchedule& schedule, double s) { return schedule.at(s); }

AnnealSchedule linear_schedule(double half_scale_ghz) {
    if (!(half_scale_ghz > 0.0)) throw DomainError("linear schedule scale must be positive");
    return AnnealSchedule({{0.0, 2.0 * half_scale_ghz, 0.0}, {1.0, 0.0, 2.0 * half_scale_ghz}}, "linear");
}

double critical_point(const AnnealSchedule& schedule) {
    const auto& pts = schedule.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = pts[i].a - pts[i].b;
        if (d == 0.0) return pts[i].s;
        if (i + 1 < pts.size()) {
            const double dn = pts[i + 1].a - pts[i + 1].b;
            if ((d > 0.0) != (dn > 0.0) && dn != 0.0) {
                // A - B is linear on the segment.
                return pts[i].s + (pts[i + 1].s - pts[i].s) * d / (d - dn);
            }
        }
    }
    throw DomainError("schedule '" + schedule.name() + "' has no point with A(s) = B(s)");
}

namespace {

void check_couplings(int length, const std::vector<std::int8_t>& couplings) {
    if (length < 1) throw DomainError("chain length must be positive");
    if (couplings.size() != static_cast<std::size_t>(length - 1))
        throw DomainError("chain of length " + std::to_string(length) + " needs " + std::to_string(length - 1) +
                          " couplings, got " + std::to_string(couplings.size()));
    for (auto j : couplings)
        if (j != 1 && j != -1) throw DomainError("couplings must be +1 or -1");
}

}  // namespace

ChainInstance::ChainInstance(int length, std::vector<std::int8_t> couplings)
    : length_(length), couplings_(std::move(couplings)) {
    check_couplings(length_, couplings_);
}

ChainInstance::ChainInstance(int length, std::vector<std::int8_t> couplings, std::vector<int> embedding,
                             int chimera_cells)
    : length_(length), couplings_(std::move(couplings)), embedding_(std::move(embedding)), chimera_cells_(chimera_cells) {
    check_couplings(length_, couplings_);
    if (embedding_.size() != static_cast<std::size_t>(length_))
        throw DomainError("embedding must list one vertex per spin");
    if (!embedding::is_valid_path(embedding::ChimeraGraph(chimera_cells_), embedding_))
        throw DomainError("embedding is not a self-avoiding path in the Chimera graph");
}

ChainInstance ChainInstance::uniform(int length, int coupling) {
    if (coupling != 1 && coupling != -1) throw DomainError("uniform coupling must be +1 or -1");
    return ChainInstance(length, std::vector<std::int8_t>(std::max(length - 1, 0), static_cast<std::int8_t>(coupling)));
}

SpinConfig::SpinConfig(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

SpinConfig SpinConfig::from_string(std::string_view text) {
    SpinConfig c(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-')
            c.flip(i);
        else if (text[i] != '+')
            throw DomainError("spin string has invalid character '" + std::string(1, text[i]) + "' at position " +
                              std::to_string(i));
    }
    return c;
}

SpinConfig SpinConfig::from_values(std::span<const int> values) {
    SpinConfig c(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) c.set(i, values[i]);
    return c;
}

void SpinConfig::set(std::size_t i, int value) {
    if (value != 1 && value != -1) throw DomainError("spin values must be +1 or -1");
    if ((*this)[i] != value) flip(i);
}

std::string SpinConfig::to_string() const {
    std::string out(length_, '+');
    for (std::size_t i = 0; i < length_; ++i)
        if ((*this)[i] < 0) out[i] = '-';
    return out;
}

std::string_view to_string(SampleSource source) {
    switch (source) {
        case SampleSource::ingested: return "ingested";
        case SampleSource::svmc: return "svmc";
        case SampleSource::exact_oracle: return "exact-oracle";
    }
    return "unknown";
}

SampleSet::SampleSet(std::string instance_id, std::shared_ptr<const ChainInstance> instance, double anneal_time,
                     std::vector<SpinConfig> configs, SampleSource source)
    : instance_id_(std::move(instance_id)),
      instance_(std::move(instance)),
      anneal_time_(anneal_time),
      configs_(std::move(configs)),
      source_(source) {
    if (!instance_) throw DomainError("sample set needs an instance");
    if (configs_.empty()) throw DomainError("sample set must not be empty");
    for (const auto& c : configs_)
        if (c.size() != static_cast<std::size_t>(instance_->length()))
            throw DomainError("sample set '" + instance_id_ + "': config length " + std::to_string(c.size()) +
                              " does not match chain length " + std::to_string(instance_->length()));
}

int count_kinks(const ChainInstance& instance, const SpinConfig& config) {
    if (config.size() != static_cast<std::size_t>(instance.length()))
        throw DomainError("config length " + std::to_string(config.size()) + " does not match chain length " +
                          std::to_string(instance.length()));
    const auto j = instance.couplings();
    int kinks = 0;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (j[i] * config[i] * config[i + 1] > 0) ++kinks;
    return kinks;
}

KinkDensity kink_density(const ChainInstance& instance, std::span<const SpinConfig> configs) {
    if (configs.empty()) throw DomainError("kink density needs at least one config");
    KinkDensity out;
    out.counts.reserve(configs.size());
    for (const auto& c : configs) out.counts.push_back(count_kinks(instance, c));
    const double total = std::accumulate(out.counts.begin(), out.counts.end(), 0.0);
    out.mean = total / static_cast<double>(configs.size()) / instance.length();
    return out;
}

ChainInstance apply_gauge(const ChainInstance& instance, const GaugeMask& mask) {
    if (mask.size() != static_cast<std::size_t>(instance.length()))
        throw DomainError("gauge mask length does not match chain length");
    std::vector<std::int8_t> j(instance.couplings().begin(), instance.couplings().end());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask[i]) continue;
        if (i > 0) j[i - 1] = static_cast<std::int8_t>(-j[i - 1]);
        if (i < j.size()) j[i] = static_cast<std::int8_t>(-j[i]);
    }
    if (instance.embedded())
        return ChainInstance(instance.length(), std::move(j), instance.embedding(), instance.chimera_cells());
    return ChainInstance(instance.length(), std::move(j));
}

SpinConfig flip_spins(const SpinConfig& config, const GaugeMask& mask) {
    if (mask.size() != config.size()) throw DomainError("gauge mask length does not match config length");
    SpinConfig out = config;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.flip(i);
    return out;
}

GaugedInstance apply_random_gauge(const ChainInstance& instance, std::uint64_t seed) {
    const auto length = static_cast<std::size_t>(instance.length());
    std::vector<std::size_t> sites(length);
    std::iota(sites.begin(), sites.end(), std::size_t{0});
    Rng rng(seed);
    const std::size_t picks = length / 2;
    for (std::size_t k = 0; k < picks; ++k) {
        auto r = k + rng.below(length - k);
        std::swap(sites[k], sites[r]);
    }
    GaugeMask mask(length, false);
    for (std::size_t k = 0; k < picks; ++k) mask[sites[k]] = true;
    return {apply_gauge(instance, mask), std::move(mask)};
}

}  // namespace kzsim
