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

#include "midband/simulate.hpp"
#include "midband/io_util.hpp"
#include "midband/lognormal_stats.hpp"
#include "midband/pathloss.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace midband
{
    std::string_view to_string(ModelSource s) noexcept
    {
        switch (s)
        {
        case ModelSource::fitted:
            return "fitted";
        case ModelSource::published:
            return "published";
        case ModelSource::gpp:
            break;
        }
        return "3gpp";
    }

    ModelSource parse_model_source(std::string_view text)
    {
        if (text == "fitted")
            return ModelSource::fitted;
        if (text == "published" || text == "paper")
            return ModelSource::published;
        if (text == "3gpp")
            return ModelSource::gpp;
        throw std::invalid_argument("unknown model source '" + std::string(text) + "' (expected published, fitted or 3gpp)");
    }

    namespace
    {
        SelectQuery query(const FrequencyBand &band, LinkState state, Statistic stat)
        {
            SelectQuery q{band};
            q.state = state;
            q.statistic = stat;
            if (is_angular(stat))
                q.max_dist_m = as_max_dist_m;
            if (is_delay_spread(stat))
                q.exclude_single_mpc = true;
            return q;
        }

        LogNormalStat fit_statistic(const Campaign &campaign, const FrequencyBand &band, LinkState state, Statistic stat)
        {
            const auto values = values_of(select(campaign, query(band, state, stat)));
            if (values.empty())
                throw std::invalid_argument("no matching records for " + std::string(column_name(stat)));
            return fit_lognormal(values);
        }

        std::size_t count_of(const Campaign &campaign, const FrequencyBand &band, LinkState state, Statistic stat)
        {
            return std::max<std::size_t>(select(campaign, query(band, state, stat)).size(), 2);
        }

        double published(const FrequencyBand &band, LinkState state, RefMetric metric, RefSource source)
        {
            const auto v = reference_value(band, to_directional(state), metric, source);
            if (!v)
                throw std::out_of_range("no published " + std::string(to_string(source)) + " " +
                                        std::string(to_string(metric)) + " for " + io::shortest(band.carrier_ghz()) +
                                        " GHz " + std::string(to_string(state)));
            return *v;
        }
    }

    ChannelStatModel fitted_model(const Campaign &campaign, const FrequencyBand &band, LinkState state)
    {
        std::vector<DistanceLoss> points;
        for (const auto &p : select(campaign, query(band, state, Statistic::omni_pl_vv)))
            points.push_back({p.tr_sep_m, *p.value});
        if (points.empty())
            throw std::invalid_argument("no matching records for omni_pl_vv_db");
        return {band, state, ci_fit(points, band),
                fit_statistic(campaign, band, state, Statistic::omni_ds),
                fit_statistic(campaign, band, state, Statistic::omni_asa),
                fit_statistic(campaign, band, state, Statistic::omni_asd),
                ModelSource::fitted};
    }

    ChannelStatModel published_model(const FrequencyBand &band, LinkState state)
    {
        constexpr auto NYU = RefSource::nyu;
        const auto bundled = load_bundled();
        const auto pl_points = select(bundled, query(band, state, Statistic::omni_pl_vv)).size();
        const auto pl = make_ci_fit(band, published(band, state, RefMetric::omni_ple, NYU),
                                    published(band, state, RefMetric::omni_pl_sigma_db, NYU), std::max<std::size_t>(pl_points, 1));
        auto as_stat = [&](RefMetric mu, RefMetric sigma, Statistic stat)
        {
            return LogNormalStat::from_params(published(band, state, mu, NYU), published(band, state, sigma, NYU),
                                              count_of(bundled, band, state, stat));
        };
        return {band, state, pl,
                fit_statistic(bundled, band, state, Statistic::omni_ds),
                as_stat(RefMetric::asa_mu_lg, RefMetric::asa_sigma_lg, Statistic::omni_asa),
                as_stat(RefMetric::asd_mu_lg, RefMetric::asd_sigma_lg, Statistic::omni_asd),
                ModelSource::published};
    }

    ChannelStatModel gpp_model(const FrequencyBand &band, LinkState state)
    {
        constexpr auto GPP = RefSource::gpp;
        const auto bundled = load_bundled();
        const auto pl = make_ci_fit(band, published(band, state, RefMetric::omni_ple, GPP),
                                    published(band, state, RefMetric::omni_pl_sigma_db, GPP));
        const double ds_mean = published(band, state, RefMetric::omni_ds_expectation_ns, GPP);
        auto as_stat = [&](RefMetric mu, RefMetric sigma, Statistic stat)
        {
            return LogNormalStat::from_params(published(band, state, mu, GPP), published(band, state, sigma, GPP),
                                              count_of(bundled, band, state, stat));
        };
        return {band, state, pl,
                LogNormalStat::from_params(std::log10(ds_mean), 0.0, 1),
                as_stat(RefMetric::asa_mu_lg, RefMetric::asa_sigma_lg, Statistic::omni_asa),
                as_stat(RefMetric::asd_mu_lg, RefMetric::asd_sigma_lg, Statistic::omni_asd),
                ModelSource::gpp};
    }

    ChannelStatModel make_model(ModelSource source, const FrequencyBand &band, LinkState state,
                                const Campaign &campaign_for_fit)
    {
        switch (source)
        {
        case ModelSource::fitted:
            return fitted_model(campaign_for_fit, band, state);
        case ModelSource::published:
            return published_model(band, state);
        case ModelSource::gpp:
            break;
        }
        return gpp_model(band, state);
    }

    namespace
    {
        double draw_lognormal(const LogNormalStat &stat, Rng &rng)
        {
            if (stat.sigma_lg == 0.0)
                return std::pow(10.0, stat.mu_lg);
            std::normal_distribution<double> gauss(stat.mu_lg, stat.sigma_lg);
            return std::pow(10.0, gauss(rng));
        }
    }

    LinkSample sample_link(const ChannelStatModel &model, double d_m, Rng &rng, const SimulationOptions &opts)
    {
        if (!(opts.as_clamp_deg > 0.0))
            throw std::invalid_argument("angular-spread clamp must be positive");
        LinkSample s{};
        s.d_m = d_m;
        s.pl_db = shadow_fading_sample(model.pl, d_m, rng);
        s.ds_ns = draw_lognormal(model.ds, rng);
        s.asa_deg = draw_lognormal(model.asa, rng);
        s.asd_deg = draw_lognormal(model.asd, rng);
        for (double *as : {&s.asa_deg, &s.asd_deg})
        {
            if (*as > opts.as_clamp_deg)
            {
                *as = opts.as_clamp_deg;
                ++s.clamp_events;
            }
        }
        return s;
    }

    CampaignSamples sample_campaign(const ChannelStatModel &model, std::span<const double> distances,
                                    std::uint64_t seed, const SimulationOptions &opts)
    {
        CampaignSamples out;
        out.samples.reserve(distances.size());
        std::unordered_map<std::uint64_t, std::uint64_t> occurrences;
        for (double d : distances)
        {
            const auto bits = std::bit_cast<std::uint64_t>(d);
            const auto ordinal = occurrences[bits]++;
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(bits), static_cast<std::uint32_t>(bits >> 32),
                              static_cast<std::uint32_t>(ordinal), static_cast<std::uint32_t>(ordinal >> 32)};
            Rng rng(seq);
            out.samples.push_back(sample_link(model, d, rng, opts));
            out.clamp_events += out.samples.back().clamp_events;
        }
        return out;
    }

    void write_samples_csv(std::span<const LinkSample> samples, std::ostream &out)
    {
        out << "d_m,pl_db,ds_ns,asa_deg,asd_deg\n";
        for (const auto &s : samples)
            out << io::shortest(s.d_m) << ',' << io::shortest(s.pl_db) << ',' << io::shortest(s.ds_ns) << ','
                << io::shortest(s.asa_deg) << ',' << io::shortest(s.asd_deg) << '\n';
    }

    void write_samples_json(std::span<const LinkSample> samples, std::ostream &out)
    {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &s : samples)
            arr.push_back({{"d_m", s.d_m}, {"pl_db", s.pl_db}, {"ds_ns", s.ds_ns}, {"asa_deg", s.asa_deg}, {"asd_deg", s.asd_deg}});
        out << arr.dump(2) << '\n';
    }
}
