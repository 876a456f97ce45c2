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

#include "midband/lognormal_stats.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace midband
{
    LogNormalStat fit_lognormal(std::span<const double> samples)
    {
        if (samples.empty())
            throw std::invalid_argument("log-normal fit needs at least one sample");
        const double n = static_cast<double>(samples.size());
        double mu = 0.0;
        for (double x : samples)
        {
            if (!(x > 0.0) || !std::isfinite(x))
                throw std::invalid_argument("log-normal samples must be positive and finite (got " + std::to_string(x) + ")");
            mu += std::log10(x);
        }
        mu /= n;
        double ss = 0.0;
        for (double x : samples)
        {
            const double d = std::log10(x) - mu;
            ss += d * d;
        }
        const double sigma = samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        return LogNormalStat::from_params(mu, sigma, samples.size());
    }

    double expectation_published(double mu_lg, double sigma_lg)
    {
        if (!(sigma_lg >= 0.0))
            throw std::invalid_argument("sigma_lg must be non-negative");
        return std::pow(10.0, mu_lg + sigma_lg * sigma_lg / 2.0);
    }

    double expectation_strict(double mu_lg, double sigma_lg)
    {
        if (!(sigma_lg >= 0.0))
            throw std::invalid_argument("sigma_lg must be non-negative");
        const double s = sigma_lg * std::numbers::ln10;
        return std::pow(10.0, mu_lg) * std::exp(s * s / 2.0);
    }

    double round_to(double value, int decimals)
    {
        const double scale = std::pow(10.0, decimals);
        return std::round(value * scale) / scale;
    }

    double expectation_rounded(const LogNormalStat &stat)
    {
        return expectation_published(round_to(stat.mu_lg, 2), round_to(stat.sigma_lg, 2));
    }

    std::string_view to_string(RefSource s) noexcept
    {
        return s == RefSource::nyu ? "NYU" : "3GPP";
    }

    std::string_view to_string(RefMetric m) noexcept
    {
        switch (m)
        {
        case RefMetric::omni_ple:
            return "omni_ple";
        case RefMetric::omni_pl_sigma_db:
            return "omni_pl_sigma_db";
        case RefMetric::dir_ple:
            return "dir_ple";
        case RefMetric::dir_pl_sigma_db:
            return "dir_pl_sigma_db";
        case RefMetric::omni_ds_expectation_ns:
            return "omni_ds_expectation_ns";
        case RefMetric::dir_ds_expectation_ns:
            return "dir_ds_expectation_ns";
        case RefMetric::asa_mu_lg:
            return "asa_mu_lg";
        case RefMetric::asa_sigma_lg:
            return "asa_sigma_lg";
        case RefMetric::asa_expectation_deg:
            return "asa_expectation_deg";
        case RefMetric::asd_mu_lg:
            return "asd_mu_lg";
        case RefMetric::asd_sigma_lg:
            return "asd_sigma_lg";
        case RefMetric::asd_expectation_deg:
            break;
        }
        return "asd_expectation_deg";
    }

    namespace
    {
        using S = DirectionalLinkState;
        using M = RefMetric;
        constexpr auto NYU = RefSource::nyu;
        constexpr auto GPP = RefSource::gpp;

        constexpr std::array reference_entries{
            // Close-in path loss, omnidirectional and directional
            ReferenceEntry{6.75, S::los, M::omni_ple, NYU, 1.79, {}},
            ReferenceEntry{6.75, S::los, M::omni_pl_sigma_db, NYU, 2.57, {}},
            ReferenceEntry{6.75, S::nlos, M::omni_ple, NYU, 2.56, {}},
            ReferenceEntry{6.75, S::nlos, M::omni_pl_sigma_db, NYU, 6.53, {}},
            ReferenceEntry{6.75, S::los, M::omni_ple, GPP, 2.1, {}},
            ReferenceEntry{6.75, S::los, M::omni_pl_sigma_db, GPP, 4.0, {}},
            ReferenceEntry{6.75, S::nlos, M::omni_ple, GPP, 3.19, {}},
            ReferenceEntry{6.75, S::nlos, M::omni_pl_sigma_db, GPP, 8.2, {}},
            ReferenceEntry{6.75, S::los, M::dir_ple, NYU, 1.89, {}},
            ReferenceEntry{6.75, S::los, M::dir_pl_sigma_db, NYU, 2.05, {}},
            ReferenceEntry{6.75, S::nlos_best, M::dir_ple, NYU, 2.68, {}},
            ReferenceEntry{6.75, S::nlos_best, M::dir_pl_sigma_db, NYU, 6.5, {}},
            ReferenceEntry{6.75, S::nlos, M::dir_ple, NYU, 3.25, {}},
            ReferenceEntry{6.75, S::nlos, M::dir_pl_sigma_db, NYU, 12.25, {}},
            ReferenceEntry{16.95, S::los, M::omni_ple, NYU, 1.85, {}},
            ReferenceEntry{16.95, S::los, M::omni_pl_sigma_db, NYU, 4.05, {}},
            ReferenceEntry{16.95, S::nlos, M::omni_ple, NYU, 2.59, {}},
            ReferenceEntry{16.95, S::nlos, M::omni_pl_sigma_db, NYU, 8.78, {}},
            ReferenceEntry{16.95, S::los, M::omni_ple, GPP, 2.1, {}},
            ReferenceEntry{16.95, S::los, M::omni_pl_sigma_db, GPP, 4.0, {}},
            ReferenceEntry{16.95, S::nlos, M::omni_ple, GPP, 3.19, {}},
            ReferenceEntry{16.95, S::nlos, M::omni_pl_sigma_db, GPP, 8.2, {}},
            ReferenceEntry{16.95, S::los, M::dir_ple, NYU, 1.97, {}},
            ReferenceEntry{16.95, S::los, M::dir_pl_sigma_db, NYU, 3.41, {}},
            ReferenceEntry{16.95, S::nlos_best, M::dir_ple, NYU, 2.74, {}},
            ReferenceEntry{16.95, S::nlos_best, M::dir_pl_sigma_db, NYU, 10.29, {}},
            ReferenceEntry{16.95, S::nlos, M::dir_ple, NYU, 3.51, {}},
            ReferenceEntry{16.95, S::nlos, M::dir_pl_sigma_db, NYU, 14.02, {}},

            // RMS delay spread expectations (ns)
            ReferenceEntry{6.75, S::los, M::dir_ds_expectation_ns, NYU, 29.1, "also quoted as 27 ns"},
            ReferenceEntry{6.75, S::nlos, M::dir_ds_expectation_ns, NYU, 35.6, "also quoted as 35.9 ns"},
            ReferenceEntry{6.75, S::los, M::omni_ds_expectation_ns, NYU, 62.8, "also quoted as 63.5 ns"},
            ReferenceEntry{6.75, S::nlos, M::omni_ds_expectation_ns, NYU, 75.6, "also quoted as 74.1 ns"},
            ReferenceEntry{6.75, S::los, M::omni_ds_expectation_ns, GPP, 52.7, {}},
            ReferenceEntry{6.75, S::nlos, M::omni_ds_expectation_ns, GPP, 111.1, {}},
            ReferenceEntry{16.95, S::los, M::dir_ds_expectation_ns, NYU, 28.1, {}},
            ReferenceEntry{16.95, S::nlos, M::dir_ds_expectation_ns, NYU, 31.7, {}},
            ReferenceEntry{16.95, S::los, M::omni_ds_expectation_ns, NYU, 46.5, {}},
            ReferenceEntry{16.95, S::nlos, M::omni_ds_expectation_ns, NYU, 65.8, {}},
            ReferenceEntry{16.95, S::los, M::omni_ds_expectation_ns, GPP, 42.9, {}},
            ReferenceEntry{16.95, S::nlos, M::omni_ds_expectation_ns, GPP, 96.65, {}},

            // Omnidirectional azimuth spreads, lg = log10(AS / 1 deg), T-R separation up to 180 m
            ReferenceEntry{6.75, S::los, M::asa_mu_lg, NYU, 1.28, {}},
            ReferenceEntry{6.75, S::los, M::asa_sigma_lg, NYU, 0.32, {}},
            ReferenceEntry{6.75, S::los, M::asa_expectation_deg, NYU, 21.44, {}},
            ReferenceEntry{6.75, S::los, M::asa_mu_lg, GPP, 1.66, {}},
            ReferenceEntry{6.75, S::los, M::asa_sigma_lg, GPP, 0.29, {}},
            ReferenceEntry{6.75, S::los, M::asa_expectation_deg, GPP, 50.36, {}},
            ReferenceEntry{6.75, S::nlos, M::asa_mu_lg, NYU, 1.50, {}},
            ReferenceEntry{6.75, S::nlos, M::asa_sigma_lg, NYU, 0.23, {}},
            ReferenceEntry{6.75, S::nlos, M::asa_expectation_deg, NYU, 33.61, {}},
            ReferenceEntry{6.75, S::nlos, M::asa_mu_lg, GPP, 1.74, {}},
            ReferenceEntry{6.75, S::nlos, M::asa_sigma_lg, GPP, 0.34, {}},
            ReferenceEntry{6.75, S::nlos, M::asa_expectation_deg, GPP, 62.78, {}},
            ReferenceEntry{6.75, S::los, M::asd_mu_lg, NYU, 1.31, {}},
            ReferenceEntry{6.75, S::los, M::asd_sigma_lg, NYU, 0.11, {}},
            ReferenceEntry{6.75, S::los, M::asd_expectation_deg, NYU, 20.70, {}},
            ReferenceEntry{6.75, S::los, M::asd_mu_lg, GPP, 1.16, {}},
            ReferenceEntry{6.75, S::los, M::asd_sigma_lg, GPP, 0.41, {}},
            ReferenceEntry{6.75, S::los, M::asd_expectation_deg, GPP, 17.54, {}},
            ReferenceEntry{6.75, S::nlos, M::asd_mu_lg, NYU, 1.67, {}},
            ReferenceEntry{6.75, S::nlos, M::asd_sigma_lg, NYU, 0.15, {}},
            ReferenceEntry{6.75, S::nlos, M::asd_expectation_deg, NYU, 48.00, {}},
            ReferenceEntry{6.75, S::nlos, M::asd_mu_lg, GPP, 1.32, {}},
            ReferenceEntry{6.75, S::nlos, M::asd_sigma_lg, GPP, 0.43, {}},
            ReferenceEntry{6.75, S::nlos, M::asd_expectation_deg, GPP, 25.85, {}},
            ReferenceEntry{16.95, S::los, M::asa_mu_lg, NYU, 1.12, {}},
            ReferenceEntry{16.95, S::los, M::asa_sigma_lg, NYU, 0.36, {}},
            ReferenceEntry{16.95, S::los, M::asa_expectation_deg, NYU, 15.30, {}},
            ReferenceEntry{16.95, S::los, M::asa_mu_lg, GPP, 1.63, {}},
            ReferenceEntry{16.95, S::los, M::asa_sigma_lg, GPP, 0.30, {}},
            ReferenceEntry{16.95, S::los, M::asa_expectation_deg, GPP, 47.31, {}},
            ReferenceEntry{16.95, S::nlos, M::asa_mu_lg, NYU, 1.36, {}},
            ReferenceEntry{16.95, S::nlos, M::asa_sigma_lg, NYU, 0.20, {}},
            ReferenceEntry{16.95, S::nlos, M::asa_expectation_deg, NYU, 23.99, {}},
            ReferenceEntry{16.95, S::nlos, M::asa_mu_lg, GPP, 1.71, {}},
            ReferenceEntry{16.95, S::nlos, M::asa_sigma_lg, GPP, 0.36, {}},
            ReferenceEntry{16.95, S::nlos, M::asa_expectation_deg, GPP, 59.54, {}},
            ReferenceEntry{16.95, S::los, M::asd_mu_lg, NYU, 1.18, {}},
            ReferenceEntry{16.95, S::los, M::asd_sigma_lg, NYU, 0.13, {}},
            ReferenceEntry{16.95, S::los, M::asd_expectation_deg, NYU, 15.43, {}},
            ReferenceEntry{16.95, S::los, M::asd_mu_lg, GPP, 1.15, {}},
            ReferenceEntry{16.95, S::los, M::asd_sigma_lg, GPP, 0.41, {}},
            ReferenceEntry{16.95, S::los, M::asd_expectation_deg, GPP, 17.14, {}},
            ReferenceEntry{16.95, S::nlos, M::asd_mu_lg, NYU, 1.49, {}},
            ReferenceEntry{16.95, S::nlos, M::asd_sigma_lg, NYU, 0.21, {}},
            ReferenceEntry{16.95, S::nlos, M::asd_expectation_deg, NYU, 32.51, {}},
            ReferenceEntry{16.95, S::nlos, M::asd_mu_lg, GPP, 1.24, {}},
            ReferenceEntry{16.95, S::nlos, M::asd_sigma_lg, GPP, 0.47, {}},
            ReferenceEntry{16.95, S::nlos, M::asd_expectation_deg, GPP, 22.41, {}},
        };
    }

    std::span<const ReferenceEntry> reference_table() noexcept
    {
        return reference_entries;
    }

    std::optional<double> reference_value(const FrequencyBand &band, DirectionalLinkState state,
                                          RefMetric metric, RefSource source) noexcept
    {
        for (const auto &e : reference_entries)
            if (e.state == state && e.metric == metric && e.source == source && FrequencyBand(e.band_ghz) == band)
                return e.value;
        return std::nullopt;
    }

    std::string_view to_string(CompareMetric m) noexcept
    {
        switch (m)
        {
        case CompareMetric::omni_pl:
            return "omni_pl";
        case CompareMetric::omni_ds:
            return "omni_ds";
        case CompareMetric::dir_ds:
            return "dir_ds";
        case CompareMetric::omni_asa:
            return "omni_asa";
        case CompareMetric::omni_asd:
            break;
        }
        return "omni_asd";
    }

    CompareMetric parse_compare_metric(std::string_view text)
    {
        for (auto m : {CompareMetric::omni_pl, CompareMetric::omni_ds, CompareMetric::dir_ds,
                       CompareMetric::omni_asa, CompareMetric::omni_asd})
            if (text == to_string(m))
                return m;
        throw std::invalid_argument("unknown comparison metric '" + std::string(text) + "'");
    }

    namespace
    {
        ComparisonRow make_row(std::string quantity, double computed, const FrequencyBand &band,
                               LinkState state, std::optional<RefMetric> metric)
        {
            ComparisonRow row{std::move(quantity), computed, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
            if (!metric)
                return row;
            const auto s = to_directional(state);
            row.nyu = reference_value(band, s, *metric, RefSource::nyu);
            row.gpp = reference_value(band, s, *metric, RefSource::gpp);
            if (row.nyu)
                row.delta_nyu = std::abs(computed - *row.nyu);
            if (row.gpp)
                row.delta_gpp = std::abs(computed - *row.gpp);
            return row;
        }

        void require_key(const Comparison &c)
        {
            for (const auto &r : c.rows)
                if (r.nyu || r.gpp)
                    return;
            throw std::out_of_range("no published reference for " + std::to_string(c.band.carrier_ghz()) + " GHz " +
                                    std::string(to_string(c.state)) + " " + std::string(to_string(c.metric)));
        }
    }

    Comparison compare(const LogNormalStat &stat, const FrequencyBand &band, LinkState state, CompareMetric metric)
    {
        std::optional<RefMetric> mu, sigma, expectation;
        switch (metric)
        {
        case CompareMetric::omni_ds:
            expectation = RefMetric::omni_ds_expectation_ns;
            break;
        case CompareMetric::dir_ds:
            expectation = RefMetric::dir_ds_expectation_ns;
            break;
        case CompareMetric::omni_asa:
            mu = RefMetric::asa_mu_lg;
            sigma = RefMetric::asa_sigma_lg;
            expectation = RefMetric::asa_expectation_deg;
            break;
        case CompareMetric::omni_asd:
            mu = RefMetric::asd_mu_lg;
            sigma = RefMetric::asd_sigma_lg;
            expectation = RefMetric::asd_expectation_deg;
            break;
        case CompareMetric::omni_pl:
            throw std::invalid_argument("path-loss comparisons take a CiFit");
        }
        Comparison c{band, state, metric, {}};
        c.rows.push_back(make_row("mu_lg", stat.mu_lg, band, state, mu));
        c.rows.push_back(make_row("sigma_lg", stat.sigma_lg, band, state, sigma));
        c.rows.push_back(make_row("expectation", stat.expectation, band, state, expectation));
        c.rows.push_back(make_row("expectation_rounded", expectation_rounded(stat), band, state, expectation));
        require_key(c);
        return c;
    }

    Comparison compare(const CiFit &fit, LinkState state)
    {
        Comparison c{fit.band, state, CompareMetric::omni_pl, {}};
        c.rows.push_back(make_row("ple", fit.ple, fit.band, state, RefMetric::omni_ple));
        c.rows.push_back(make_row("sigma_db", fit.sigma_db, fit.band, state, RefMetric::omni_pl_sigma_db));
        require_key(c);
        return c;
    }
}
