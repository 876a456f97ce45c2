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

#include "midband/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

namespace midband
{
    FrequencyBand::FrequencyBand(double carrier_ghz) : carrier_ghz_(carrier_ghz)
    {
        if (!(carrier_ghz > 0.0) || !std::isfinite(carrier_ghz))
            throw std::invalid_argument("carrier frequency must be a positive number of GHz");
    }

    bool FrequencyBand::operator==(const FrequencyBand &other) const noexcept
    {
        return std::abs(carrier_ghz_ - other.carrier_ghz_) < 1e-9;
    }

    DirectionalLinkState to_directional(LinkState s) noexcept
    {
        return s == LinkState::los ? DirectionalLinkState::los : DirectionalLinkState::nlos;
    }

    std::string_view to_string(LinkState s) noexcept
    {
        return s == LinkState::los ? "LOS" : "NLOS";
    }

    std::string_view to_string(DirectionalLinkState s) noexcept
    {
        switch (s)
        {
        case DirectionalLinkState::los:
            return "LOS";
        case DirectionalLinkState::nlos_best:
            return "NLOS_BEST";
        case DirectionalLinkState::nlos:
            break;
        }
        return "NLOS";
    }

    static std::string upper(std::string_view text)
    {
        std::string out(text);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c)
                       { return static_cast<char>(std::toupper(c)); });
        return out;
    }

    LinkState parse_link_state(std::string_view text)
    {
        const auto u = upper(text);
        if (u == "LOS")
            return LinkState::los;
        if (u == "NLOS")
            return LinkState::nlos;
        throw std::invalid_argument("unknown link state '" + std::string(text) + "' (expected LOS or NLOS)");
    }

    namespace
    {
        struct StatisticInfo
        {
            Statistic stat;
            std::string_view column;
            std::string_view short_name;
        };

        constexpr std::array<StatisticInfo, statistic_count> statistic_table{{
            {Statistic::omni_pl_vv, "omni_pl_vv_db", "omni_pl_vv"},
            {Statistic::omni_pl_vh, "omni_pl_vh_db", "omni_pl_vh"},
            {Statistic::mean_dir_ds, "mean_dir_ds_ns", "mean_dir_ds"},
            {Statistic::omni_ds, "omni_ds_ns", "omni_ds"},
            {Statistic::mean_lobe_asa, "mean_lobe_asa_deg", "mean_lobe_asa"},
            {Statistic::omni_asa, "omni_asa_deg", "omni_asa"},
            {Statistic::mean_lobe_asd, "mean_lobe_asd_deg", "mean_lobe_asd"},
            {Statistic::omni_asd, "omni_asd_deg", "omni_asd"},
            {Statistic::mean_lobe_zsa, "mean_lobe_zsa_deg", "mean_lobe_zsa"},
            {Statistic::omni_zsa, "omni_zsa_deg", "omni_zsa"},
            {Statistic::mean_lobe_zsd, "mean_lobe_zsd_deg", "mean_lobe_zsd"},
            {Statistic::omni_zsd, "omni_zsd_deg", "omni_zsd"},
        }};
    }

    std::string_view column_name(Statistic s) noexcept
    {
        return statistic_table[static_cast<std::size_t>(s)].column;
    }

    Statistic parse_statistic(std::string_view name)
    {
        for (const auto &info : statistic_table)
            if (name == info.column || name == info.short_name)
                return info.stat;
        throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
    }

    bool is_delay_spread(Statistic s) noexcept
    {
        return s == Statistic::mean_dir_ds || s == Statistic::omni_ds;
    }

    bool is_path_loss(Statistic s) noexcept
    {
        return s == Statistic::omni_pl_vv || s == Statistic::omni_pl_vh;
    }

    bool is_angular(Statistic s) noexcept
    {
        return !is_delay_spread(s) && !is_path_loss(s);
    }

    const std::optional<double> &field(const LocationRecord &r, Statistic s) noexcept
    {
        switch (s)
        {
        case Statistic::omni_pl_vv:
            return r.omni_pl_vv_db;
        case Statistic::omni_pl_vh:
            return r.omni_pl_vh_db;
        case Statistic::mean_dir_ds:
            return r.mean_dir_ds_ns;
        case Statistic::omni_ds:
            return r.omni_ds_ns;
        case Statistic::mean_lobe_asa:
            return r.mean_lobe_asa_deg;
        case Statistic::omni_asa:
            return r.omni_asa_deg;
        case Statistic::mean_lobe_asd:
            return r.mean_lobe_asd_deg;
        case Statistic::omni_asd:
            return r.omni_asd_deg;
        case Statistic::mean_lobe_zsa:
            return r.mean_lobe_zsa_deg;
        case Statistic::omni_zsa:
            return r.omni_zsa_deg;
        case Statistic::mean_lobe_zsd:
            return r.mean_lobe_zsd_deg;
        case Statistic::omni_zsd:
            break;
        }
        return r.omni_zsd_deg;
    }

    std::optional<double> &field(LocationRecord &r, Statistic s) noexcept
    {
        return const_cast<std::optional<double> &>(field(static_cast<const LocationRecord &>(r), s));
    }

    bool has_any_statistic(const LocationRecord &r) noexcept
    {
        for (const auto &info : statistic_table)
            if (field(r, info.stat).has_value())
                return true;
        return false;
    }

    std::vector<std::string> validate_record(const LocationRecord &r)
    {
        std::vector<std::string> issues;
        if (!(r.tr_sep_m > 0.0))
            issues.emplace_back("tr_sep_m must be positive");
        if (r.outage)
        {
            if (has_any_statistic(r))
                issues.emplace_back("outage row has statistics");
            if (r.single_mpc)
                issues.emplace_back("outage row is marked single_mpc");
            return issues;
        }
        if (!r.omni_pl_vv_db)
            issues.emplace_back("non-outage row lacks omni_pl_vv_db");
        if (r.single_mpc && (r.omni_ds_ns.value_or(-1.0) != 0.0 || r.mean_dir_ds_ns.value_or(-1.0) != 0.0))
            issues.emplace_back("single_mpc row must have omni_ds_ns = 0 and mean_dir_ds_ns = 0");
        for (const auto &info : statistic_table)
        {
            const auto &v = field(r, info.stat);
            if (!v)
                continue;
            if (!std::isfinite(*v))
                issues.emplace_back(std::string(info.column) + " is not finite");
            else if (is_delay_spread(info.stat) && *v < 0.0)
                issues.emplace_back(std::string(info.column) + " is negative");
            else if (is_angular(info.stat) && (*v < 0.0 || *v >= 360.0))
                issues.emplace_back(std::string(info.column) + " outside [0, 360)");
        }
        return issues;
    }

    LogNormalStat LogNormalStat::from_params(double mu_lg, double sigma_lg, std::size_t n_points)
    {
        if (!(sigma_lg >= 0.0))
            throw std::invalid_argument("sigma_lg must be non-negative");
        if (n_points == 0)
            throw std::invalid_argument("n_points must be at least 1");
        return {mu_lg, sigma_lg, n_points, std::pow(10.0, mu_lg + sigma_lg * sigma_lg / 2.0)};
    }

    Pdp::Pdp(std::vector<Tap> taps, double noise_floor_db) : taps_(std::move(taps)), noise_floor_db_(noise_floor_db)
    {
        if (taps_.empty())
            throw std::invalid_argument("PDP needs at least one tap");
        for (std::size_t i = 0; i < taps_.size(); ++i)
        {
            const auto &t = taps_[i];
            if (!(t.delay_ns >= 0.0) || !std::isfinite(t.delay_ns))
                throw std::invalid_argument("PDP delays must be finite and non-negative");
            if (!(t.power_linear > 0.0) || !std::isfinite(t.power_linear))
                throw std::invalid_argument("PDP tap powers must be finite and positive");
            if (i > 0 && !(t.delay_ns > taps_[i - 1].delay_ns))
                throw std::invalid_argument("PDP delays must be strictly increasing");
        }
    }

    std::string_view to_string(AngularPlane p) noexcept
    {
        return p == AngularPlane::azimuth ? "azimuth" : "zenith";
    }

    AngularPlane parse_plane(std::string_view text)
    {
        if (text == "azimuth")
            return AngularPlane::azimuth;
        if (text == "zenith")
            return AngularPlane::zenith;
        throw std::invalid_argument("unknown angular plane '" + std::string(text) + "'");
    }

    PowerAngularProfile::PowerAngularProfile(std::vector<AngularSample> samples, AngularPlane plane)
        : samples_(std::move(samples)), plane_(plane)
    {
        if (samples_.empty())
            throw std::invalid_argument("angular profile needs at least one sample");
        const double upper_bound = plane_ == AngularPlane::azimuth ? 360.0 : 180.0;
        for (const auto &s : samples_)
        {
            const bool in_range = plane_ == AngularPlane::azimuth ? (s.angle_deg >= 0.0 && s.angle_deg < upper_bound)
                                                                 : (s.angle_deg >= 0.0 && s.angle_deg <= upper_bound);
            if (!in_range)
                throw std::invalid_argument("angle " + std::to_string(s.angle_deg) + " outside the " +
                                            std::string(to_string(plane_)) + " domain");
            if (!(s.power_linear > 0.0) || !std::isfinite(s.power_linear))
                throw std::invalid_argument("angular sample powers must be finite and positive");
        }
        std::sort(samples_.begin(), samples_.end(),
                  [](const AngularSample &a, const AngularSample &b)
                  { return a.angle_deg < b.angle_deg; });
        for (std::size_t i = 1; i < samples_.size(); ++i)
            if (samples_[i].angle_deg == samples_[i - 1].angle_deg)
                throw std::invalid_argument("duplicate angle in angular profile");
    }

    double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

    double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }
}
