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

#include <string>
#include <string_view>

namespace kzsim::units {

inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K

/// Convert an energy quoted as E/h in GHz into the equivalent temperature E/k_B in kelvin.
double ghz_to_kelvin(double energy_ghz);

/// Inverse temperature in units of 1/GHz for a physical temperature in kelvin.
/// Multiplying a schedule energy (GHz) by this gives the Metropolis exponent.
double beta_per_ghz(double temperature_kelvin);

/// Angular frequency (rad/us) of an energy quoted as E/h in GHz.
double ghz_to_rad_per_us(double energy_ghz);

// Device constants. B1 is B(1)/2 as quoted for each device, T the fridge temperature.
struct DeviceConstants {
    std::string name;
    double half_b1_ghz;
    double temperature_kelvin;
};

DeviceConstants nasa_device();
DeviceConstants burnaby_device();

/// Parse "nasa", "burnaby" or "custom:<B(1)/2 in GHz>,<T in kelvin>".
DeviceConstants parse_device(std::string_view spec);

}  // namespace kzsim::units
