// SPDX-License-Identifier: Apache-2.0
//
// midband: upper mid-band UMi channel statistics toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MIDBAND_PATHLOSS_HPP
#define MIDBAND_PATHLOSS_HPP

#include "midband/types.hpp"

#include <random>
#include <span>

namespace midband
{
    struct DistanceLoss
    {
        double d_m;
        double pl_db;
    };

    // Free-space path loss at the 1 m reference distance: 32.4 + 20 log10(f / 1 GHz), unrounded
    double fspl_1m(const FrequencyBand &band);

    // Deterministic part of the close-in model: FSPL(f, 1 m) + 10 n log10(d / 1 m).
    // Throws std::domain_error for d < 1 m.
    double ci_predict(const CiFit &fit, double d_m);

    // Builds a CiFit from published parameters (fspl_1m_db derived from the band)
    CiFit make_ci_fit(const FrequencyBand &band, double ple, double sigma_db, std::size_t n_points = 1);

    /*
     * Minimum mean square error fit of the close-in model.
     *
     * With A = PL - FSPL(f, 1 m) and B = 10 log10(d), the exponent is n = sum(A B) / sum(B^2).
     * The shadow-fading deviation uses the population denominator: sqrt(sum((A - n B)^2) / N).
     *
     * Throws std::invalid_argument for empty input or when every point sits at d = 1 m,
     * std::domain_error for any d < 1 m.
     */
    CiFit ci_fit(std::span<const DistanceLoss> points, const FrequencyBand &band);

    // Ordinary least squares of PL on 10 log10(d). Needs two distinct distances.
    FiFit fi_fit(std::span<const DistanceLoss> points);

    // Lowest path loss (strongest direction) across pointing directions
    double best_direction_pl(std::span<const double> directional_pls);

    // Close-in prediction plus a zero-mean Gaussian shadow-fading draw
    template <class Rng>
    double shadow_fading_sample(const CiFit &fit, double d_m, Rng &rng)
    {
        const double mean = ci_predict(fit, d_m);
        if (fit.sigma_db == 0.0)
            return mean;
        std::normal_distribution<double> gauss(0.0, fit.sigma_db);
        return mean + gauss(rng);
    }
}

#endif
