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
#include <initializer_list>
#include <random>

namespace kzsim {

/// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Derive an independent stream seed from a master seed and a path of task indices.
///
/// The split folds each index into the running state with a SplitMix64 round:
///   state_0 = splitmix64(master)
///   state_{j+1} = splitmix64(state_j ^ (index_j + 0x9E3779B97F4A7C15))
/// so derive_seed(m, {t, i}) names sample i of time point t regardless of the
/// order in which tasks execute.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

// Thin wrapper over mt19937_64 whose real and integer draws do not depend on the
// standard library's distribution implementations, so streams are portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, n). Requires n > 0.
    std::uint64_t below(std::uint64_t n) noexcept;

    std::uint64_t next() noexcept { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace kzsim
