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

#include "kzsim/distribution.hpp"

#include <cmath>
#include <string>

#include "kzsim/errors.hpp"

namespace kzsim {

namespace {

void validate_pmf(const std::vector<double>& pmf) {
    if (pmf.empty()) throw DomainError("pmf must not be empty");
    long double total = 0.0L;
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        if (!(pmf[n] >= 0.0) || !std::isfinite(pmf[n]))
            throw DomainError("pmf entry at n=" + std::to_string(n) + " is negative or not finite");
        total += pmf[n];
    }
    if (std::fabs(static_cast<double>(total) - 1.0) > 1e-12)
        throw DomainError("pmf does not sum to 1 (sum - 1 = " + std::to_string(static_cast<double>(total) - 1.0) + ")");
}

}  // namespace

Cumulants moment_cumulants(std::span<const double> pmf) {
    long double mean = 0.0L;
    for (std::size_t n = 0; n < pmf.size(); ++n) mean += static_cast<long double>(n) * pmf[n];
    long double m2 = 0.0L, m3 = 0.0L;
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        const long double d = static_cast<long double>(n) - mean;
        m2 += d * d * pmf[n];
        m3 += d * d * d * pmf[n];
    }
    return {static_cast<double>(mean), static_cast<double>(m2), static_cast<double>(m3)};
}

KinkDistribution KinkDistribution::from_pmf(std::vector<double> pmf) {
    validate_pmf(pmf);
    KinkDistribution d;
    d.cumulants_ = moment_cumulants(pmf);
    d.pmf_ = std::move(pmf);
    return d;
}

KinkDistribution KinkDistribution::with_cumulants(std::vector<double> pmf, Cumulants cumulants) {
    validate_pmf(pmf);
    KinkDistribution d;
    d.pmf_ = std::move(pmf);
    d.cumulants_ = cumulants;
    return d;
}

}  // namespace kzsim
