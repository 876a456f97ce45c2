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
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace midband;

namespace
{
    const LocationRecord &find(const Campaign &c, const FrequencyBand &band, const std::string &tx, const std::string &rx)
    {
        const auto it = std::find_if(c.records.begin(), c.records.end(), [&](const LocationRecord &r)
                                     { return r.band == band && r.tx_id == tx && r.rx_id == rx; });
        REQUIRE(it != c.records.end());
        return *it;
    }

    std::string header()
    {
        std::string h;
        for (const auto &c : campaign_csv_columns)
            h += (h.empty() ? "" : ",") + c;
        return h + "\n";
    }

    const std::string los_row = "6.75,TX1,RX1,LOS,40,74.63,,,29.3,,23.5,,,,,,,0,0\n";

    std::vector<double> values(const Campaign &c, SelectQuery q)
    {
        return values_of(select(c, q));
    }
}

TEST_CASE("bundled campaign: spot records")
{
    const auto c = load_bundled();
    const auto &r = find(c, band_6_75, "TX1", "RX1");
    CHECK(r.tr_sep_m == 40);
    CHECK(r.omni_pl_vv_db == 74.63);
    CHECK(r.omni_ds_ns == 29.3);
    CHECK(r.omni_asa_deg == 23.5);

    const auto &single = find(c, band_16_95, "TX1", "RX5");
    CHECK(single.single_mpc);
    CHECK(single.omni_ds_ns == 0.0);

    const auto &outage = find(c, band_6_75, "TX1", "RX6");
    CHECK(outage.outage);
    CHECK_FALSE(has_any_statistic(outage));
}

TEST_CASE("bundled campaign: counts per band")
{
    const auto c = load_bundled();
    CHECK(c.records.size() == 40);
    for (const auto &band : {band_6_75, band_16_95})
    {
        int total = 0, los = 0, nlos = 0, outages = 0;
        double max_pl = 0;
        for (const auto &r : c.records)
        {
            if (!(r.band == band))
                continue;
            ++total;
            (r.link_state == LinkState::los ? los : nlos)++;
            outages += r.outage;
            if (r.omni_pl_vv_db)
                max_pl = std::max(max_pl, *r.omni_pl_vv_db);
        }
        CHECK(total == 20);
        CHECK(los == 7);
        CHECK(nlos == 13);
        CHECK(outages == 2);
        CHECK(max_pl < *max_measurable_path_loss_db(band));
    }
}

TEST_CASE("bundled campaign validates clean")
{
    CHECK(validate(load_bundled()).empty());
}

TEST_CASE("ingest_csv: minimal valid row")
{
    std::istringstream in(header() + los_row);
    const auto c = ingest_csv(in);
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].omni_pl_vv_db == 74.63);
    CHECK_FALSE(c.records[0].omni_pl_vh_db.has_value());
    CHECK(c.records[0].omni_asa_deg == 23.5);
}

TEST_CASE("ingest_csv: columns map by name, CRLF and BOM tolerated")
{
    std::istringstream in("\xEF\xBB\xBF" "outage,single_mpc,freq_ghz,tx_id,rx_id,link_state,tr_sep_m,omni_pl_vv_db,omni_pl_vh_db,"
                          "mean_dir_ds_ns,omni_ds_ns,mean_lobe_asa_deg,omni_asa_deg,mean_lobe_asd_deg,omni_asd_deg,"
                          "mean_lobe_zsa_deg,omni_zsa_deg,mean_lobe_zsd_deg,omni_zsd_deg\r\n"
                          "0,0,16.95,TX2,RX3,nlos,95.5,110.1,,,40,,,,,,,,\r\n");
    const auto c = ingest_csv(in);
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].band == band_16_95);
    CHECK(c.records[0].link_state == LinkState::nlos);
    CHECK(c.records[0].omni_ds_ns == 40.0);
}

TEST_CASE("ingest_csv: schema errors name the column")
{
    SUBCASE("unknown column")
    {
        std::istringstream in("freq_ghz,bogus\n");
        try
        {
            ingest_csv(in);
            FAIL("expected SchemaError");
        }
        catch (const SchemaError &e)
        {
            CHECK(e.column() == "bogus");
        }
    }
    SUBCASE("missing column")
    {
        auto h = header();
        h.replace(h.find(",single_mpc"), std::string(",single_mpc").size(), "");
        std::istringstream in(h);
        try
        {
            ingest_csv(in);
            FAIL("expected SchemaError");
        }
        catch (const SchemaError &e)
        {
            CHECK(e.column() == "single_mpc");
        }
    }
    SUBCASE("duplicate column")
    {
        std::istringstream in("freq_ghz,freq_ghz\n");
        CHECK_THROWS_AS(ingest_csv(in), SchemaError);
    }
    SUBCASE("empty input")
    {
        std::istringstream in("");
        CHECK_THROWS_AS(ingest_csv(in), SchemaError);
    }
}

TEST_CASE("ingest_csv: parse errors carry row and column")
{
    std::string row = los_row;
    row.replace(row.find("74.63"), 5, "74.6x");
    std::istringstream in(header() + row);
    try
    {
        ingest_csv(in);
        FAIL("expected ParseError");
    }
    catch (const ParseError &e)
    {
        CHECK(e.row() == 2);
        CHECK(e.column() == "omni_pl_vv_db");
    }

    std::istringstream short_row(header() + "6.75,TX1,RX1,LOS\n");
    CHECK_THROWS_AS(ingest_csv(short_row), ParseError);
    std::istringstream bad_flag(header() + "6.75,TX1,RX1,LOS,40,74.63,,,,,,,,,,,,2,0\n");
    CHECK_THROWS_AS(ingest_csv(bad_flag), ParseError);
    std::istringstream bad_state(header() + "6.75,TX1,RX1,OLOS,40,74.63,,,,,,,,,,,,0,0\n");
    CHECK_THROWS_AS(ingest_csv(bad_state), ParseError);
    std::istringstream bad_freq(header() + "0,TX1,RX1,LOS,40,74.63,,,,,,,,,,,,0,0\n");
    CHECK_THROWS_AS(ingest_csv(bad_freq), ParseError);
}

TEST_CASE("ingest_csv: strict mode rejects invariant violations, lenient keeps them")
{
    const std::string outage_row = "6.75,TX1,RX6,NLOS,1000,160,,,,,,,,,,,,1,0\n";
    std::istringstream strict_in(header() + outage_row);
    try
    {
        ingest_csv(strict_in);
        FAIL("expected ValidationError");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.row() == 2);
        CHECK(e.rules() == std::vector<std::string>{"outage row has statistics"});
        CHECK(std::string(e.what()).find("outage row has statistics") != std::string::npos);
    }

    std::istringstream lenient_in(header() + outage_row);
    const auto c = ingest_csv(lenient_in, IngestMode::lenient);
    const auto findings = validate(c);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].key == "6.75/TX1/RX6");
    CHECK(findings[0].message == "outage row has statistics");
}

TEST_CASE("ingest_csv_file reports unreadable paths")
{
    CHECK_THROWS_AS(ingest_csv_file("/nonexistent/campaign.csv"), std::runtime_error);
    midband::test::TempFile f("campaign", header() + los_row);
    const auto c = ingest_csv_file(f.str());
    CHECK(c.records.size() == 1);
    CHECK(c.provenance == f.str());
}

TEST_CASE("emit_csv round-trips the bundled campaign")
{
    const auto bundled = load_bundled();
    std::ostringstream out;
    emit_csv(bundled, out);
    std::istringstream in(out.str());
    auto again = ingest_csv(in);
    again.provenance = bundled.provenance;
    CHECK(again == bundled);

    std::ostringstream out2;
    emit_csv(again, out2);
    CHECK(out2.str() == out.str());
}

TEST_CASE("validate: link budget and duplicate keys")
{
    auto c = load_bundled();
    auto r = midband::test::los_record(40, 160.0);
    r.tx_id = "TX9";
    c.records.push_back(r);
    auto findings = validate(c);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].message.find("exceeds max measurable path loss 155.6 dB") != std::string::npos);

    c = load_bundled();
    c.records.push_back(c.records.front());
    findings = validate(c);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].message == "duplicate key");
    CHECK(findings[0].key == "6.75/TX1/RX1");
}

TEST_CASE("max measurable path loss is known for the campaign bands only")
{
    CHECK(max_measurable_path_loss_db(band_6_75) == 155.6);
    CHECK(max_measurable_path_loss_db(band_16_95) == 159.2);
    CHECK_FALSE(max_measurable_path_loss_db(FrequencyBand(28.0)).has_value());
}

TEST_CASE("select: LOS path loss at 6.75 GHz")
{
    SelectQuery q{band_6_75};
    q.state = LinkState::los;
    const auto pts = select(load_bundled(), q);
    CHECK(pts.size() == 7);
    auto has = [&](double d, double pl)
    {
        return std::any_of(pts.begin(), pts.end(), [&](const SelectedPoint &p)
                           { return p.tr_sep_m == d && p.value == pl; });
    };
    CHECK(has(40, 74.63));
    CHECK(has(424, 100.2));
}

TEST_CASE("select: angular cap is inclusive and drops the 185 m row")
{
    SelectQuery q{band_6_75};
    q.state = LinkState::nlos;
    q.statistic = Statistic::omni_asa;
    q.max_dist_m = 180;
    CHECK(values(load_bundled(), q) == std::vector<double>{68.7, 18.4, 34.0, 23.8, 55.7, 16.1, 24.2, 46.5});
}

TEST_CASE("select: single-MPC exclusion for delay spread")
{
    SelectQuery q{band_6_75};
    q.state = LinkState::nlos;
    q.statistic = Statistic::omni_ds;
    CHECK(values(load_bundled(), q).size() == 11);
    q.exclude_single_mpc = true;
    CHECK(values(load_bundled(), q).size() == 10);
}

TEST_CASE("select: missing values and outages")
{
    const auto c = load_bundled();
    SelectQuery q{band_6_75};
    q.statistic = Statistic::omni_pl_vh;
    q.exclude_missing = false;
    const auto all = select(c, q);
    CHECK(all.size() == 18);
    CHECK(std::any_of(all.begin(), all.end(), [](const SelectedPoint &p)
                      { return !p.value; }));
    CHECK_THROWS_AS(values_of(all), std::invalid_argument);
    q.exclude_missing = true;
    CHECK(select(c, q).size() < all.size());
}

TEST_CASE("select is a pure function of its inputs")
{
    const auto c = load_bundled();
    SelectQuery q{band_16_95};
    q.statistic = Statistic::omni_asd;
    q.max_dist_m = 180;
    const auto a = values(c, q);
    const auto b = values(c, q);
    CHECK(a == b);
}
