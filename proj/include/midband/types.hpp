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

#ifndef MIDBAND_TYPES_HPP
#define MIDBAND_TYPES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace midband
{
    // Carrier frequency in GHz. Always positive.
    class FrequencyBand
    {
    public:
        explicit FrequencyBand(double carrier_ghz);

        double carrier_ghz() const noexcept { return carrier_ghz_; }

        // equal within 1e-9 GHz
        bool operator==(const FrequencyBand &other) const noexcept;

    private:
        double carrier_ghz_;
    };

    // The two campaign bands
    inline const FrequencyBand band_6_75{6.75};
    inline const FrequencyBand band_16_95{16.95};

    enum class LinkState
    {
        los,
        nlos
    };

    // Directional path-loss contexts add the best-pointing NLOS case
    enum class DirectionalLinkState
    {
        los,
        nlos_best,
        nlos
    };

    DirectionalLinkState to_directional(LinkState s) noexcept;

    std::string_view to_string(LinkState s) noexcept;
    std::string_view to_string(DirectionalLinkState s) noexcept;

    // Accepts "LOS"/"NLOS" in any case. Throws std::invalid_argument otherwise.
    LinkState parse_link_state(std::string_view text);

    // One TX-RX link of a measurement campaign. Absent statistics are std::nullopt, never 0.
    // Invariants are not enforced on construction; use validate_record() or the dataset validator.
    struct LocationRecord
    {
        FrequencyBand band{6.75};
        std::string tx_id;
        std::string rx_id;
        LinkState link_state = LinkState::los;
        double tr_sep_m = 0.0;

        std::optional<double> omni_pl_vv_db;
        std::optional<double> omni_pl_vh_db;
        std::optional<double> mean_dir_ds_ns;
        std::optional<double> omni_ds_ns;
        std::optional<double> mean_lobe_asa_deg;
        std::optional<double> omni_asa_deg;
        std::optional<double> mean_lobe_asd_deg;
        std::optional<double> omni_asd_deg;
        std::optional<double> mean_lobe_zsa_deg;
        std::optional<double> omni_zsa_deg;
        std::optional<double> mean_lobe_zsd_deg;
        std::optional<double> omni_zsd_deg;

        bool outage = false;
        bool single_mpc = false; // only one MPC from a single direction was observed

        bool operator==(const LocationRecord &) const = default;
    };

    // Statistic columns of a LocationRecord
    enum class Statistic
    {
        omni_pl_vv,
        omni_pl_vh,
        mean_dir_ds,
        omni_ds,
        mean_lobe_asa,
        omni_asa,
        mean_lobe_asd,
        omni_asd,
        mean_lobe_zsa,
        omni_zsa,
        mean_lobe_zsd,
        omni_zsd
    };

    inline constexpr std::size_t statistic_count = 12;

    // Column name including unit suffix, e.g. "omni_asa_deg"
    std::string_view column_name(Statistic s) noexcept;

    // Accepts the column name with or without its unit suffix ("omni_asa_deg" or "omni_asa").
    // Throws std::invalid_argument for unknown names.
    Statistic parse_statistic(std::string_view name);

    bool is_delay_spread(Statistic s) noexcept;
    bool is_angular(Statistic s) noexcept;
    bool is_path_loss(Statistic s) noexcept;

    const std::optional<double> &field(const LocationRecord &r, Statistic s) noexcept;
    std::optional<double> &field(LocationRecord &r, Statistic s) noexcept;

    bool has_any_statistic(const LocationRecord &r) noexcept;

    // Returns one message per violated record invariant; empty when the record is consistent.
    std::vector<std::string> validate_record(const LocationRecord &r);

    // Close-in (1 m free-space reference) path-loss fit
    struct CiFit
    {
        FrequencyBand band{6.75};
        double ple = 2.0;
        double sigma_db = 0.0;
        std::size_t n_points = 1;
        double fspl_1m_db = 0.0;
    };

    // Floating-intercept (alpha-beta) fit: PL = alpha + 10 beta log10(d)
    struct FiFit
    {
        double alpha_db = 0.0;
        double beta = 0.0;
        double sigma_db = 0.0;
        std::size_t n_points = 2;
    };

    // Gaussian statistics of log10(value / unit) with the published-table expectation convention
    // 10^(mu + sigma^2/2) cached alongside.
    struct LogNormalStat
    {
        double mu_lg = 0.0;
        double sigma_lg = 0.0;
        std::size_t n_points = 1;
        double expectation = 1.0;

        // Builds a stat from parameters, computing the expectation. Throws on sigma < 0 or n == 0.
        static LogNormalStat from_params(double mu_lg, double sigma_lg, std::size_t n_points);
    };

    struct Tap
    {
        double delay_ns;
        double power_linear;

        bool operator==(const Tap &) const = default;
    };

    // Power-delay profile. Taps are strictly increasing in delay with positive linear power.
    class Pdp
    {
    public:
        // Throws std::invalid_argument if taps are empty, unsorted, duplicated or non-positive.
        Pdp(std::vector<Tap> taps, double noise_floor_db);

        const std::vector<Tap> &taps() const noexcept { return taps_; }
        double noise_floor_db() const noexcept { return noise_floor_db_; }

        bool operator==(const Pdp &) const = default;

    private:
        std::vector<Tap> taps_;
        double noise_floor_db_;
    };

    enum class AngularPlane
    {
        azimuth,
        zenith
    };

    std::string_view to_string(AngularPlane p) noexcept;
    AngularPlane parse_plane(std::string_view text);

    struct AngularSample
    {
        double angle_deg;
        double power_linear;
    };

    // Power angular profile. Samples are kept sorted by angle.
    // Azimuth angles lie in [0, 360), zenith angles in [0, 180].
    class PowerAngularProfile
    {
    public:
        PowerAngularProfile(std::vector<AngularSample> samples, AngularPlane plane);

        const std::vector<AngularSample> &samples() const noexcept { return samples_; }
        AngularPlane plane() const noexcept { return plane_; }

    private:
        std::vector<AngularSample> samples_;
        AngularPlane plane_;
    };

    double db_to_linear(double db) noexcept;
    double linear_to_db(double linear) noexcept;
}

#endif
