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

#include "kzsim/units.hpp"

#include <numbers>
#include <string>

#include "kzsim/errors.hpp"

namespace kzsim::units {

double ghz_to_kelvin(double energy_ghz) { return energy_ghz * 1e9 * kPlanck / kBoltzmann; }

double beta_per_ghz(double temperature_kelvin) {
    if (!(temperature_kelvin > 0.0)) throw DomainError("temperature must be positive");
    return ghz_to_kelvin(1.0) / temperature_kelvin;
}

double ghz_to_rad_per_us(double energy_ghz) { return 2.0 * std::numbers::pi * energy_ghz * 1e3; }

DeviceConstants nasa_device() { return {"nasa", 6.344, 12.1e-3}; }

DeviceConstants burnaby_device() { return {"burnaby", 5.930, 13.5e-3}; }

namespace {

double parse_double(std::string_view text, std::string_view what) {
    std::string copy(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(copy, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != copy.size()) throw ConfigError("cannot parse " + std::string(what) + ": '" + copy + "'");
    return value;
}

}  // namespace

DeviceConstants parse_device(std::string_view spec) {
    if (spec == "nasa") return nasa_device();
    if (spec == "burnaby") return burnaby_device();
    constexpr std::string_view prefix = "custom:";
    if (spec.substr(0, prefix.size()) == prefix) {
        auto body = spec.substr(prefix.size());
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ConfigError("custom device needs 'custom:B1,T'");
        DeviceConstants dev{"custom", parse_double(body.substr(0, comma), "B(1)/2"),
                            parse_double(body.substr(comma + 1), "temperature")};
        if (!(dev.half_b1_ghz > 0.0) || !(dev.temperature_kelvin > 0.0))
            throw ConfigError("custom device constants must be positive");
        return dev;
    }
    throw ConfigError("unknown device '" + std::string(spec) + "'");
}

}  // namespace kzsim::units
