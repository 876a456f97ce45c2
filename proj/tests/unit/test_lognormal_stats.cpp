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

#include "midband/dataset.hpp"
#include "midband/lognormal_stats.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace midband;

namespace
{
    LogNormalStat fit_bundled(const FrequencyBand &band, LinkState state, Statistic stat)
    {
        SelectQuery q{band};
        q.state = state;
        q.statistic = stat;
        q.exclude_single_mpc = is_delay_spread(stat);
        if (is_angular(stat))
            q.max_dist_m = 180.0;
        return fit_lognormal(values_of(select(load_bundled(), q)));
    }

    struct AsRow
    {
        double band;
        LinkState state;
        Statistic stat;
        double mu, sigma, rounded_e;
    };

    // Frozen values computed from the bundled point data (mu, sigma to 4 decimals)
    const AsRow as_rows[] = {
        {6.75, LinkState::los, Statistic::omni_asa, 1.2773, 0.3240, 21.44},
        {6.75, LinkState::nlos, Statistic::omni_asa, 1.5017, 0.2308, 33.61},
        {16.95, LinkState::los, Statistic::omni_asa, 1.1166, 0.3575, 15.30},
        {16.95, LinkState::nlos, Statistic::omni_asa, 1.3565, 0.2043, 23.99},
        {6.75, LinkState::los, Statistic::omni_asd, 1.3055, 0.1086, 20.70},
        {6.75, LinkState::nlos, Statistic::omni_asd, 1.6773, 0.1501, 49.12},
        {16.95, LinkState::los, Statistic::omni_asd, 1.1825, 0.1277, 15.43},
        {16.95, LinkState::nlos, Statistic::omni_asd, 1.4852, 0.2117, 32.51},
    };
}

TEST_CASE("fit_lognormal: published ASA sample set")
{
    const std::vector<double> asa{23.5, 14.5, 63.0, 10.5, 10.8};
    const auto s = fit_lognormal(asa);
    CHECK(std::fabs(s.mu_lg - 1.28) <= 0.005);
    CHECK(std::fabs(s.sigma_lg - 0.32) <= 0.005);
    CHECK(s.n_points == 5);
    CHECK(s.expectation == doctest::Approx(expectation_published(s.mu_lg, s.sigma_lg)));
}

TEST_CASE("fit_lognormal: sample deviation uses n - 1")
{
    const std::vector<double> x{10.0, 100.0};
    const auto s = fit_lognormal(x);
    CHECK(s.mu_lg == doctest::Approx(1.5));
    CHECK(s.sigma_lg == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("fit_lognormal: degenerate and invalid input")
{
    const auto s = fit_lognormal(std::vector<double>{10, 10, 10, 10});
    CHECK(s.mu_lg == doctest::Approx(1.0));
    CHECK(s.sigma_lg == doctest::Approx(0.0).scale(1));
    CHECK(s.expectation == doctest::Approx(10.0));
    CHECK(fit_lognormal(std::vector<double>{42.0}).sigma_lg == 0.0);
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{10, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{10, -3}), std::invalid_argument);
}

TEST_CASE("fit_lognormal is permutation invariant")
{
    std::vector<double> x{29.3, 121.3, 184.6, 17.2, 44.0, 63.5, 90.1};
    const auto ref = fit_lognormal(x);
    std::mt19937 rng(2);
    for (int k = 0; k < 10; ++k)
    {
        std::shuffle(x.begin(), x.end(), rng);
        const auto s = fit_lognormal(x);
        CHECK(s.mu_lg == doctest::Approx(ref.mu_lg).epsilon(1e-14));
        CHECK(s.sigma_lg == doctest::Approx(ref.sigma_lg).epsilon(1e-12));
    }
}

TEST_CASE("expectation conventions")
{
    CHECK(expectation_published(1.28, 0.32) == doctest::Approx(21.44).epsilon(0.0003));
    CHECK(std::round(expectation_published(1.28, 0.32) * 100) / 100 == 21.44);
    CHECK(std::round(expectation_published(1.74, 0.34) * 100) / 100 == 62.78);
    CHECK(expectation_strict(1.28, 0.32) == doctest::Approx(24.9973).epsilon(1e-5));
    for (double x : {-1.0, 0.0, 1.3, 2.5})
    {
        CHECK(expectation_published(x, 0.0) == doctest::Approx(std::pow(10.0, x)));
        CHECK(expectation_strict(x, 0.0) == doctest::Approx(std::pow(10.0, x)));
    }
    CHECK_THROWS_AS(expectation_published(1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(expectation_strict(1.0, -0.1), std::invalid_argument);
    CHECK(expectation_strict(1.28, 0.32) > expectation_published(1.28, 0.32));
}

TEST_CASE("rounded expectation uses two-decimal parameters")
{
    const auto s = LogNormalStat::from_params(1.2773, 0.3240, 5);
    CHECK(s.expectation == doctest::Approx(21.36).epsilon(0.001));
    CHECK(expectation_rounded(s) == doctest::Approx(expectation_published(1.28, 0.32)));
    CHECK(round_to(1.2749, 2) == doctest::Approx(1.27));
    CHECK(round_to(0.3251, 2) == doctest::Approx(0.33));
}

TEST_CASE("bundled delay-spread expectations")
{
    CHECK(fit_bundled(band_6_75, LinkState::los, Statistic::omni_ds).expectation == doctest::Approx(62.84).epsilon(0.0005));
    CHECK(fit_bundled(band_6_75, LinkState::nlos, Statistic::omni_ds).expectation == doctest::Approx(75.65).epsilon(0.0005));
    CHECK(fit_bundled(band_16_95, LinkState::los, Statistic::omni_ds).expectation == doctest::Approx(46.54).epsilon(0.0005));
    CHECK(fit_bundled(band_16_95, LinkState::nlos, Statistic::omni_ds).expectation == doctest::Approx(65.85).epsilon(0.0005));
}

TEST_CASE("bundled angular-spread fits match frozen values")
{
    for (const auto &row : as_rows)
    {
        CAPTURE(row.band);
        CAPTURE(column_name(row.stat));
        const auto s = fit_bundled(FrequencyBand(row.band), row.state, row.stat);
        CHECK(std::fabs(s.mu_lg - row.mu) <= 5e-5);
        CHECK(std::fabs(s.sigma_lg - row.sigma) <= 5e-5);
        CHECK(std::fabs(expectation_rounded(s) - row.rounded_e) <= 0.005);
    }
}

TEST_CASE("reference table")
{
    const auto table = reference_table();
    CHECK(table.size() >= 32);
    std::set<std::tuple<double, int, int, int>> keys;
    for (const auto &e : table)
        CHECK(keys.emplace(e.band_ghz, int(e.state), int(e.metric), int(e.source)).second);

    auto nyu = [](double band, DirectionalLinkState s, RefMetric m)
    { return reference_value(FrequencyBand(band), s, m, RefSource::nyu); };
    auto gpp = [](double band, DirectionalLinkState s, RefMetric m)
    { return reference_value(FrequencyBand(band), s, m, RefSource::gpp); };
    using S = DirectionalLinkState;
    using M = RefMetric;
    CHECK(nyu(6.75, S::los, M::omni_ple) == 1.79);
    CHECK(nyu(16.95, S::nlos, M::omni_pl_sigma_db) == 8.78);
    CHECK(gpp(6.75, S::los, M::omni_ple) == 2.1);
    CHECK(gpp(16.95, S::nlos, M::omni_pl_sigma_db) == 8.2);
    CHECK(nyu(6.75, S::los, M::omni_ds_expectation_ns) == 62.8);
    CHECK(nyu(6.75, S::nlos, M::asd_expectation_deg) == 48.00);
    CHECK(gpp(6.75, S::nlos, M::asa_mu_lg) == 1.74);
    CHECK(nyu(16.95, S::nlos_best, M::dir_ple) == 2.74);
    CHECK_FALSE(nyu(28.0, S::los, M::omni_ple).has_value());
    CHECK_FALSE(gpp(6.75, S::los, M::dir_ple).has_value());
    CHECK(to_string(RefSource::gpp) == "3GPP");
}

TEST_CASE("compare: angular fit against both references")
{
    const auto s = LogNormalStat::from_params(1.50, 0.23, 8);
    const auto c = compare(s, band_6_75, LinkState::nlos, CompareMetric::omni_asa);
    REQUIRE(c.rows.size() == 4);
    CHECK(c.rows[0].quantity == "mu_lg");
    CHECK(*c.rows[0].delta_nyu == doctest::Approx(0.0).scale(1));
    CHECK(*c.rows[0].delta_gpp == doctest::Approx(0.24));
    CHECK(c.rows[3].quantity == "expectation_rounded");
    CHECK(*c.rows[3].delta_nyu <= 0.05);
}

TEST_CASE("compare: path-loss fit and missing keys")
{
    const auto c = compare(CiFit{band_16_95, 1.85, 4.05, 7, 0.0}, LinkState::los);
    REQUIRE(c.rows.size() == 2);
    CHECK(c.rows[0].computed == 1.85);
    CHECK(c.rows[0].gpp == 2.1);
    CHECK(*c.rows[0].delta_gpp == doctest::Approx(0.25));
    CHECK(*c.rows[0].delta_nyu == doctest::Approx(0.0).scale(1));

    const auto ds = compare(LogNormalStat::from_params(1.8, 0.2, 7), band_6_75, LinkState::los, CompareMetric::omni_ds);
    CHECK_FALSE(ds.rows[0].nyu.has_value());
    CHECK(ds.rows[2].nyu == 62.8);

    CHECK_THROWS_AS(compare(LogNormalStat::from_params(1, 0.1, 3), FrequencyBand(28.0), LinkState::los, CompareMetric::omni_asa),
                    std::out_of_range);
    CHECK_THROWS_AS(compare(CiFit{FrequencyBand(28.0), 2.0, 1.0, 3, 0.0}, LinkState::los), std::out_of_range);
    CHECK_THROWS_AS(compare(LogNormalStat{}, band_6_75, LinkState::los, CompareMetric::omni_pl), std::invalid_argument);
    CHECK(parse_compare_metric("omni_asd") == CompareMetric::omni_asd);
    CHECK_THROWS_AS(parse_compare_metric("omni_zsd"), std::invalid_argument);
}
