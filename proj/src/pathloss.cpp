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

#include "midband/pathloss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace midband
{
    double fspl_1m(const FrequencyBand &band)
    {
        return 32.4 + 20.0 * std::log10(band.carrier_ghz());
    }

    static void check_distance(double d_m)
    {
        if (!(d_m >= 1.0) || !std::isfinite(d_m))
            throw std::domain_error("distance " + std::to_string(d_m) + " m is inside the 1 m reference distance");
    }

    double ci_predict(const CiFit &fit, double d_m)
    {
        check_distance(d_m);
        return fit.fspl_1m_db + 10.0 * fit.ple * std::log10(d_m);
    }

    CiFit make_ci_fit(const FrequencyBand &band, double ple, double sigma_db, std::size_t n_points)
    {
        if (!(sigma_db >= 0.0))
            throw std::invalid_argument("shadow-fading sigma must be non-negative");
        if (n_points == 0)
            throw std::invalid_argument("n_points must be at least 1");
        return {band, ple, sigma_db, n_points, fspl_1m(band)};
    }

    CiFit ci_fit(std::span<const DistanceLoss> points, const FrequencyBand &band)
    {
        if (points.empty())
            throw std::invalid_argument("close-in fit needs at least one point");
        const double anchor = fspl_1m(band);

        double ab = 0.0, bb = 0.0;
        for (const auto &p : points)
        {
            check_distance(p.d_m);
            const double a = p.pl_db - anchor;
            const double b = 10.0 * std::log10(p.d_m);
            ab += a * b;
            bb += b * b;
        }
        if (bb == 0.0)
            throw std::invalid_argument("close-in fit is undefined when every point is at the 1 m reference distance");

        const double n = ab / bb;
        double sse = 0.0;
        for (const auto &p : points)
        {
            const double r = p.pl_db - anchor - n * 10.0 * std::log10(p.d_m);
            sse += r * r;
        }
        return {band, n, std::sqrt(sse / static_cast<double>(points.size())), points.size(), anchor};
    }

    FiFit fi_fit(std::span<const DistanceLoss> points)
    {
        if (points.size() < 2)
            throw std::invalid_argument("floating-intercept fit needs at least two points");

        // Centered sums keep the normal equations well conditioned
        const double count = static_cast<double>(points.size());
        double mean_x = 0.0, mean_y = 0.0;
        for (const auto &p : points)
        {
            if (!(p.d_m > 0.0))
                throw std::domain_error("distances must be positive");
            mean_x += 10.0 * std::log10(p.d_m);
            mean_y += p.pl_db;
        }
        mean_x /= count;
        mean_y /= count;

        double sxx = 0.0, sxy = 0.0;
        for (const auto &p : points)
        {
            const double dx = 10.0 * std::log10(p.d_m) - mean_x;
            sxx += dx * dx;
            sxy += dx * (p.pl_db - mean_y);
        }
        const auto [min_d, max_d] = std::minmax_element(points.begin(), points.end(),
                                                        [](const DistanceLoss &a, const DistanceLoss &b)
                                                        { return a.d_m < b.d_m; });
        if (min_d->d_m == max_d->d_m || sxx == 0.0)
            throw std::invalid_argument("floating-intercept fit needs at least two distinct distances");

        FiFit fit;
        fit.beta = sxy / sxx;
        fit.alpha_db = mean_y - fit.beta * mean_x;
        double sse = 0.0;
        for (const auto &p : points)
        {
            const double r = p.pl_db - fit.alpha_db - fit.beta * 10.0 * std::log10(p.d_m);
            sse += r * r;
        }
        fit.sigma_db = std::sqrt(sse / count);
        fit.n_points = points.size();
        return fit;
    }

    double best_direction_pl(std::span<const double> directional_pls)
    {
        if (directional_pls.empty())
            throw std::invalid_argument("best direction needs at least one directional path loss");
        return *std::min_element(directional_pls.begin(), directional_pls.end());
    }
}
