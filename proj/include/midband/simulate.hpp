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

#ifndef MIDBAND_SIMULATE_HPP
#define MIDBAND_SIMULATE_HPP

#include "midband/dataset.hpp"
#include "midband/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace midband
{
    enum class ModelSource
    {
        fitted,    // estimated from a campaign
        published, // published NYU parameters
        gpp        // 3GPP parameters quoted alongside the published ones
    };

    std::string_view to_string(ModelSource s) noexcept;
    ModelSource parse_model_source(std::string_view text);

    // Link-level statistics model: close-in path loss plus distance-independent log-normal spreads
    struct ChannelStatModel
    {
        FrequencyBand band;
        LinkState state;
        CiFit pl;
        LogNormalStat ds;  // ns
        LogNormalStat asa; // degrees
        LogNormalStat asd; // degrees
        ModelSource source;
    };

    // Default distance cap for angular-spread fits (m)
    inline constexpr double as_max_dist_m = 180.0;

    // Path loss from the V-V omni close-in fit, DS from omni DS without single-MPC rows and without
    // a distance cap, ASA/ASD from omni spreads with T-R separation <= 180 m.
    ChannelStatModel fitted_model(const Campaign &campaign, const FrequencyBand &band, LinkState state);

    // Published PL and AS parameters; DS log-normal fitted from the bundled point data.
    // Throws std::out_of_range for bands without published values.
    ChannelStatModel published_model(const FrequencyBand &band, LinkState state);

    // 3GPP parameters as quoted. DS is degenerate (sigma 0) at the quoted expectation.
    ChannelStatModel gpp_model(const FrequencyBand &band, LinkState state);

    ChannelStatModel make_model(ModelSource source, const FrequencyBand &band, LinkState state,
                                const Campaign &campaign_for_fit);

    struct SimulationOptions
    {
        double as_clamp_deg = 104.0; // azimuth spreads above this are clamped and counted
    };

    struct LinkSample
    {
        double d_m;
        double pl_db;
        double ds_ns;
        double asa_deg;
        double asd_deg;
        unsigned clamp_events = 0; // 0..2, how many of ASA/ASD were clamped

        bool operator==(const LinkSample &) const = default;
    };

    using Rng = std::mt19937_64;

    // One link: PL = close-in mean + N(0, sigma), each spread = 10^N(mu, sigma). Draws are independent
    // and taken in the order PL, DS, ASA, ASD; a zero sigma consumes no randomness.
    LinkSample sample_link(const ChannelStatModel &model, double d_m, Rng &rng, const SimulationOptions &opts = {});

    struct CampaignSamples
    {
        std::vector<LinkSample> samples;
        std::size_t clamp_events = 0;
    };

    /*
     * One sample per distance, in input order.
     *
     * Each sample draws from its own generator seeded from (seed, distance, k), where k counts earlier
     * occurrences of the same distance in the input. Results therefore do not depend on evaluation
     * order, and permuting distinct distances permutes the outputs the same way.
     */
    CampaignSamples sample_campaign(const ChannelStatModel &model, std::span<const double> distances,
                                    std::uint64_t seed, const SimulationOptions &opts = {});

    void write_samples_csv(std::span<const LinkSample> samples, std::ostream &out);
    void write_samples_json(std::span<const LinkSample> samples, std::ostream &out);
}

#endif
