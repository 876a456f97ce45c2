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

#ifndef MIDBAND_LOGNORMAL_STATS_HPP
#define MIDBAND_LOGNORMAL_STATS_HPP

#include "midband/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace midband
{
    // mu = mean(log10 x), sigma = sample standard deviation (n - 1) of log10 x, 0 for one sample.
    // Throws std::invalid_argument for empty input or any sample <= 0.
    LogNormalStat fit_lognormal(std::span<const double> samples);

    // 10^(mu + sigma^2 / 2): the expectation convention used by the published tables
    double expectation_published(double mu_lg, double sigma_lg);

    // Mean of a base-10 log-normal variable: 10^mu exp((sigma ln 10)^2 / 2)
    double expectation_strict(double mu_lg, double sigma_lg);

    // expectation_published evaluated on mu and sigma rounded to two decimals, the way the
    // published expectations were derived
    double expectation_rounded(const LogNormalStat &stat);

    double round_to(double value, int decimals);

    enum class RefSource
    {
        nyu,
        gpp // 3GPP TR 38.901 values as quoted in the published comparison
    };

    enum class RefMetric
    {
        omni_ple,
        omni_pl_sigma_db,
        dir_ple,
        dir_pl_sigma_db,
        omni_ds_expectation_ns,
        dir_ds_expectation_ns,
        asa_mu_lg,
        asa_sigma_lg,
        asa_expectation_deg,
        asd_mu_lg,
        asd_sigma_lg,
        asd_expectation_deg
    };

    std::string_view to_string(RefSource s) noexcept;
    std::string_view to_string(RefMetric m) noexcept;

    struct ReferenceEntry
    {
        double band_ghz;
        DirectionalLinkState state;
        RefMetric metric;
        RefSource source;
        double value;
        std::string_view note; // differing values quoted elsewhere in the same publication, if any
    };

    // Every published constant, in table order
    std::span<const ReferenceEntry> reference_table() noexcept;

    std::optional<double> reference_value(const FrequencyBand &band, DirectionalLinkState state,
                                          RefMetric metric, RefSource source) noexcept;

    enum class CompareMetric
    {
        omni_pl,
        omni_ds,
        dir_ds,
        omni_asa,
        omni_asd
    };

    std::string_view to_string(CompareMetric m) noexcept;
    CompareMetric parse_compare_metric(std::string_view text);

    struct ComparisonRow
    {
        std::string quantity;
        double computed;
        std::optional<double> nyu;
        std::optional<double> gpp;
        std::optional<double> delta_nyu; // |computed - nyu|
        std::optional<double> delta_gpp; // |computed - gpp|
    };

    struct Comparison
    {
        FrequencyBand band;
        LinkState state;
        CompareMetric metric;
        std::vector<ComparisonRow> rows;
    };

    // Compares a spread fit against the published values for (band, state, metric).
    // Rows: mu_lg, sigma_lg, expectation (full precision) and expectation_rounded.
    // Throws std::out_of_range when no published value exists for the key.
    Comparison compare(const LogNormalStat &stat, const FrequencyBand &band, LinkState state, CompareMetric metric);

    // Compares an omnidirectional close-in fit. Rows: ple, sigma_db.
    Comparison compare(const CiFit &fit, LinkState state);
}

#endif
