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

#include "midband/pdp_metrics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

using namespace midband;

namespace
{
    Pdp from_db(std::vector<std::pair<double, double>> delay_db, double floor_db)
    {
        std::vector<Tap> taps;
        for (auto [d, p] : delay_db)
            taps.push_back({d, db_to_linear(p)});
        return Pdp(std::move(taps), floor_db);
    }

    // Direct evaluation of the weighted second central moment
    double ds_oracle(const Pdp &pdp)
    {
        double p = 0, m1 = 0, m2 = 0;
        for (const auto &t : pdp.taps())
        {
            p += t.power_linear;
            m1 += t.power_linear * t.delay_ns;
            m2 += t.power_linear * t.delay_ns * t.delay_ns;
        }
        return std::sqrt(std::max(0.0, m2 / p - (m1 / p) * (m1 / p)));
    }

    Pdp random_pdp(std::mt19937_64 &rng, double grid_ns = 2.5)
    {
        std::uniform_int_distribution<int> count(1, 25), bin(0, 400);
        std::uniform_real_distribution<double> power(-45.0, 0.0);
        std::map<double, double> taps;
        const int n = count(rng);
        for (int i = 0; i < n; ++i)
            taps[bin(rng) * grid_ns] = db_to_linear(power(rng));
        std::vector<Tap> v;
        for (auto [d, p] : taps)
            v.push_back({d, p});
        return Pdp(std::move(v), -60.0);
    }
}

TEST_CASE("threshold_pdp: peak rule dominates")
{
    const auto pdp = from_db({{0, 0}, {10, -10}, {20, -30}}, -40);
    CHECK(threshold_level_db(pdp) == doctest::Approx(-25.0));
    const auto kept = threshold_pdp(pdp);
    REQUIRE(kept.taps().size() == 2);
    CHECK(kept.taps()[1].delay_ns == 10);
}

TEST_CASE("threshold_pdp: noise-margin rule dominates")
{
    const auto pdp = from_db({{0, 0}, {10, -10}, {20, -16}}, -20);
    CHECK(threshold_level_db(pdp) == doctest::Approx(-15.0));
    const auto kept = threshold_pdp(pdp);
    REQUIRE(kept.taps().size() == 2);
    CHECK(kept.taps()[0].delay_ns == 0);
    CHECK(kept.taps()[1].delay_ns == 10);
}

TEST_CASE("threshold_pdp: single tap and peak below floor survive")
{
    const auto single = from_db({{5, -3}}, -40);
    CHECK(threshold_pdp(single) == single);
    const auto buried = from_db({{0, -50}, {10, -55}}, -40);
    const auto kept = threshold_pdp(buried);
    REQUIRE(kept.taps().size() == 1);
    CHECK(kept.taps()[0].delay_ns == 0);
}

TEST_CASE("DsOptions must be positive")
{
    const auto pdp = from_db({{0, 0}}, -40);
    CHECK_THROWS_AS(threshold_pdp(pdp, {0.0, 5.0}), std::invalid_argument);
    CHECK_THROWS_AS(rms_delay_spread(pdp, {25.0, -1.0}), std::invalid_argument);
}

TEST_CASE("rms_delay_spread hand-computed examples")
{
    CHECK(rms_delay_spread(from_db({{12, -7}}, -40)) == 0.0);
    CHECK(rms_delay_spread(Pdp({{0, 1.0}, {100, 1.0}}, -100)) == doctest::Approx(50.0));
    const Pdp three({{0, 1.0}, {50, 0.1}, {200, 0.001}}, -40);
    CHECK(rms_delay_spread(three) == doctest::Approx(14.3740).epsilon(1e-4));
    CHECK(std::round(rms_delay_spread(three) * 100) / 100 == 14.37);
}

TEST_CASE("rms_delay_spread matches the moment oracle on thresholded taps")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i)
    {
        const auto pdp = random_pdp(rng);
        CHECK(rms_delay_spread(pdp) == doctest::Approx(ds_oracle(threshold_pdp(pdp))).epsilon(1e-9).scale(1));
    }
}

TEST_CASE("rms_delay_spread invariances: delay shift and common power scaling")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> shift(0.0, 5000.0), gain(-40.0, 40.0);
    for (int i = 0; i < 200; ++i)
    {
        const auto pdp = random_pdp(rng);
        const double ds = rms_delay_spread(pdp);

        const double s = std::round(shift(rng));
        std::vector<Tap> shifted;
        for (auto t : pdp.taps())
            shifted.push_back({t.delay_ns + s, t.power_linear});
        CHECK(rms_delay_spread(Pdp(shifted, pdp.noise_floor_db())) == doctest::Approx(ds).epsilon(1e-9).scale(1));

        const double g = gain(rng);
        std::vector<Tap> scaled;
        for (auto t : pdp.taps())
            scaled.push_back({t.delay_ns, t.power_linear * db_to_linear(g)});
        CHECK(rms_delay_spread(Pdp(scaled, pdp.noise_floor_db() + g)) == doctest::Approx(ds).epsilon(1e-9).scale(1));
    }
}

TEST_CASE("synthesize_omni")
{
    const auto a = from_db({{0, 0}, {10, -3}}, -40);
    CHECK(synthesize_omni(std::vector<Pdp>{a}) == a);

    const auto b = from_db({{5, -1}, {20, -6}}, -35);
    const auto u = synthesize_omni(std::vector<Pdp>{a, b});
    CHECK(u.taps().size() == 4);
    CHECK(u.noise_floor_db() == -35);
    double in = 0, out = 0;
    for (const auto *p : {&a, &b})
        for (const auto &t : p->taps())
            in += t.power_linear;
    for (const auto &t : u.taps())
        out += t.power_linear;
    CHECK(out == doctest::Approx(in));

    CHECK_THROWS_AS(synthesize_omni(std::vector<Pdp>{}), std::invalid_argument);
}

TEST_CASE("synthesize_omni matches an accumulation-map oracle")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial)
    {
        std::vector<Pdp> dirs;
        for (int k = 0; k < 5; ++k)
            dirs.push_back(random_pdp(rng));
        std::map<double, double> acc;
        for (const auto &p : dirs)
            for (const auto &t : p.taps())
                acc[t.delay_ns] += t.power_linear;
        const auto omni = synthesize_omni(dirs);
        REQUIRE(omni.taps().size() == acc.size());
        auto it = acc.begin();
        for (const auto &t : omni.taps())
        {
            CHECK(t.delay_ns == it->first);
            CHECK(t.power_linear == doctest::Approx(it->second).epsilon(1e-12));
            ++it;
        }
    }
}

TEST_CASE("PDP file round trip and errors")
{
    const auto pdp = from_db({{0, 0}, {2.5, -13.25}, {40, -21}}, -42.5);
    std::ostringstream out;
    write_pdp(pdp, out);
    std::istringstream in(out.str());
    const auto back = read_pdp(in);
    REQUIRE(back.taps().size() == 3);
    CHECK(back.noise_floor_db() == -42.5);
    for (std::size_t i = 0; i < 3; ++i)
    {
        CHECK(back.taps()[i].delay_ns == pdp.taps()[i].delay_ns);
        CHECK(back.taps()[i].power_linear == doctest::Approx(pdp.taps()[i].power_linear).epsilon(1e-12));
    }

    std::istringstream unsorted("# noise_floor_db=-40\ndelay_ns,power_db\n100,0\n0,0\n");
    CHECK(rms_delay_spread(read_pdp(unsorted)) == doctest::Approx(50.0));

    auto fails = [](const std::string &text)
    {
        std::istringstream s(text);
        CHECK_THROWS_AS(read_pdp(s), std::runtime_error);
    };
    fails("delay_ns,power_db\n0,0\n");
    fails("# noise_floor_db=-40\n0,0\n");
    fails("# noise_floor_db=-40\ndelay_ns,power_db\n0,abc\n");
    fails("# noise_floor_db=-40\ndelay_ns,power_db\n0,1,2\n");
    fails("# noise_floor_db=-40\ndelay_ns,power_db\n");
    fails("# noise_floor_db=-40\ndelay_ns,power_db\n5,0\n5,-3\n");
    fails("# noise_floor_db=x\ndelay_ns,power_db\n0,0\n");
    CHECK_THROWS_AS(read_pdp_file("/nonexistent.pdp"), std::runtime_error);
}
