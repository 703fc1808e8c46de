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

#include "kzsim/rng.hpp"

namespace kzsim {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t state = splitmix64(master);
    for (auto index : path) state = splitmix64(state ^ (index + 0x9E3779B97F4A7C15ULL));
    return state;
}

std::uint64_t Rng::below(std::uint64_t n) noexcept {
    // Reject the low 2^64 mod n words so every residue is equally likely.
    const std::uint64_t limit = (~std::uint64_t{0} - n + 1) % n;
    for (;;) {
        std::uint64_t r = engine_();
        if (r >= limit) return r % n;
    }
}

}  // namespace kzsim
