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

#include <cstddef>
#include <span>
#include <vector>

namespace kzsim {

struct Cumulants {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;

    bool operator==(const Cumulants&) const = default;
};

/// Probability mass function over a count n = 0..size()-1 (kinks or kink pairs)
/// together with its first three cumulants.
///
/// The cumulants are either moment sums of the pmf (from_pmf) or supplied by the
/// producer when a closed form exists; both agree to rounding.
class KinkDistribution {
  public:
    KinkDistribution() = default;

    /// Validates non-negativity and normalization (1e-12) and computes moment cumulants.
    static KinkDistribution from_pmf(std::vector<double> pmf);

    /// Same validation, cumulants taken from the caller.
    static KinkDistribution with_cumulants(std::vector<double> pmf, Cumulants cumulants);

    const std::vector<double>& pmf() const noexcept { return pmf_; }
    const Cumulants& cumulants() const noexcept { return cumulants_; }
    std::size_t size() const noexcept { return pmf_.size(); }

    /// P(n), zero outside the stored support.
    double operator[](std::size_t n) const noexcept { return n < pmf_.size() ? pmf_[n] : 0.0; }

    double mean() const noexcept { return cumulants_.k1; }

    bool operator==(const KinkDistribution&) const = default;

  private:
    std::vector<double> pmf_;
    Cumulants cumulants_;
};

/// First three cumulants of a pmf over 0..n-1 by central moment sums.
Cumulants moment_cumulants(std::span<const double> pmf);

}  // namespace kzsim
