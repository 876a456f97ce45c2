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
#include "midband/io_util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

namespace midband
{
    const std::vector<std::string> campaign_csv_columns{
        "freq_ghz", "tx_id", "rx_id", "link_state", "tr_sep_m",
        "omni_pl_vv_db", "omni_pl_vh_db", "mean_dir_ds_ns", "omni_ds_ns",
        "mean_lobe_asa_deg", "omni_asa_deg", "mean_lobe_asd_deg", "omni_asd_deg",
        "mean_lobe_zsa_deg", "omni_zsa_deg", "mean_lobe_zsd_deg", "omni_zsd_deg",
        "outage", "single_mpc"};

    static std::string join_rules(const std::vector<std::string> &rules)
    {
        std::string out;
        for (const auto &r : rules)
        {
            if (!out.empty())
                out += "; ";
            out += r;
        }
        return out;
    }

    ValidationError::ValidationError(std::size_t row, std::vector<std::string> rules)
        : std::runtime_error("row " + std::to_string(row) + ": " + join_rules(rules)), row_(row), rules_(std::move(rules))
    {
    }

    namespace
    {
        using opt = std::optional<double>;
        constexpr std::nullopt_t na = std::nullopt;

        // Column order: V-V PL, V-H PL, mean dir DS, omni DS, mean lobe ASA, omni ASA,
        // mean lobe ASD, omni ASD, mean lobe ZSA, omni ZSA, mean lobe ZSD, omni ZSD
        LocationRecord row(double f, const char *tx, const char *rx, LinkState s, double d,
                           opt vv, opt vh, opt dir_ds, opt omni_ds,
                           opt lobe_asa, opt asa, opt lobe_asd, opt asd,
                           opt lobe_zsa, opt zsa, opt lobe_zsd, opt zsd, bool single_mpc = false)
        {
            LocationRecord r;
            r.band = FrequencyBand(f);
            r.tx_id = tx;
            r.rx_id = rx;
            r.link_state = s;
            r.tr_sep_m = d;
            r.omni_pl_vv_db = vv;
            r.omni_pl_vh_db = vh;
            r.mean_dir_ds_ns = dir_ds;
            r.omni_ds_ns = omni_ds;
            r.mean_lobe_asa_deg = lobe_asa;
            r.omni_asa_deg = asa;
            r.mean_lobe_asd_deg = lobe_asd;
            r.omni_asd_deg = asd;
            r.mean_lobe_zsa_deg = lobe_zsa;
            r.omni_zsa_deg = zsa;
            r.mean_lobe_zsd_deg = lobe_zsd;
            r.omni_zsd_deg = zsd;
            r.single_mpc = single_mpc;
            return r;
        }

        LocationRecord outage(double f, const char *tx, const char *rx, LinkState s, double d)
        {
            LocationRecord r;
            r.band = FrequencyBand(f);
            r.tx_id = tx;
            r.rx_id = rx;
            r.link_state = s;
            r.tr_sep_m = d;
            r.outage = true;
            return r;
        }

        constexpr auto LOS = LinkState::los;
        constexpr auto NLOS = LinkState::nlos;
    }

    Campaign load_bundled()
    {
        Campaign c;
        c.provenance = "bundled transcription";
        c.records = {
            // 6.75 GHz
            row(6.75, "TX1", "RX1", LOS, 40, 74.63, 84.77, 41.1, 29.3, 23.5, 23.5, 19.3, 24.6, 9.0, 12.2, 2.8, 8.6),
            row(6.75, "TX1", "RX2", LOS, 100, 82.85, 106.7, 46.5, 60.5, 14.5, 14.5, 13.9, 22.3, 18.2, 18.2, 1.7, 8.5),
            row(6.75, "TX1", "RX3", LOS, 193, 86.89, 104.6, 23.5, 121.3, 6.4, 6.4, 6.3, 65.1, 6.4, 19.8, 2.7, 12.9),
            row(6.75, "TX1", "RX4", NLOS, 560, 110, 136.6, 2.2, 66.4, 10.7, 10.7, 12.9, 22.0, 4.4, 15.4, 2.3, 9.5),
            row(6.75, "TX1", "RX5", NLOS, 880, 124.8, na, 0.0, 0.0, 5.8, 5.8, 5.8, 5.8, 5.8, 13.1, 5.8, 5.8, true),
            outage(6.75, "TX1", "RX6", NLOS, 1000),
            row(6.75, "TX1", "RX7", LOS, 424, 100.2, 121.8, 37.5, 184.6, 10.4, 10.4, 10.5, 81.6, 4.1, 15.4, 7.4, 13.3),
            row(6.75, "TX2", "RX1", LOS, 58, 80.74, 95.28, 25.2, 60.9, 18.8, 63.0, 21.9, 24.0, 21.5, 20.8, 3.3, 9.8),
            row(6.75, "TX2", "RX2", NLOS, 51.5, 88.93, 107.3, 34.6, 117.7, 13.6, 68.7, 18.9, 35.5, 17.4, 16.5, 3.3, 9.8),
            row(6.75, "TX2", "RX3", NLOS, 100.9, 101.2, 125.5, 71.4, 105.5, 18.4, 18.4, 18.1, 65.9, 2.6, 14.3, 5.6, 13.9),
            row(6.75, "TX3", "RX1", NLOS, 71, 101, 117.7, 60.4, 171.4, 34.0, 34.0, 34.4, 36.4, 11.7, 11.7, 7.8, 7.8),
            row(6.75, "TX3", "RX2", NLOS, 45, 88.92, 109.2, 47.5, 55.7, 23.8, 23.8, 39.8, 47.8, 9.7, 12.9, 8.8, 8.6),
            row(6.75, "TX3", "RX3", NLOS, 125, 100.6, 125.3, 24.6, 66.5, 18.3, 55.7, 33.4, 37.1, 9.9, 15.9, 10.0, 9.8),
            row(6.75, "TX4", "RX1", NLOS, 88.7, 97.7, 117.1, 35.4, 49.5, 16.1, 16.1, 69.2, 70.2, 2.3, 13.8, 7.8, 8.1),
            row(6.75, "TX4", "RX2", LOS, 120, 87.25, 110.2, 70.3, 22.8, 10.5, 10.5, 10.6, 13.4, 4.3, 14.8, 4.4, 11.4),
            outage(6.75, "TX4", "RX3", NLOS, 216),
            row(6.75, "TX4", "RX4", NLOS, 185, 124.5, na, 31.0, 34.0, 12.6, 12.6, 16.5, 16.5, 4.5, 4.5, 3.2, 3.2),
            row(6.75, "TX5", "RX1", LOS, 52, 81.98, 102.8, 35.1, 26.8, 10.8, 10.8, 11.2, 19.1, 4.3, 15.5, 4.4, 10.5),
            row(6.75, "TX5", "RX2", NLOS, 170, 101.5, 125.1, 31.5, 46.2, 24.2, 24.2, 10.5, 32.6, 3.8, 12.6, 4.2, 12.1),
            row(6.75, "TX5", "RX3", NLOS, 141, 106.3, 129.9, 40.0, 89.4, 46.5, 46.5, 22.0, 75.8, 2.3, 10.1, 7.1, 10.7),

            // 16.95 GHz; TX1-RX7 at 410 m here, 424 m at 6.75 GHz
            row(16.95, "TX1", "RX1", LOS, 40, 82.14, 113.4, 35.9, 34.0, 11.8, 11.8, 10.9, 15.2, 5.2, 7.3, 0.9, 4.0),
            row(16.95, "TX1", "RX2", LOS, 100, 91.39, 121.4, 28.7, 56.2, 7.2, 7.2, 8.2, 18.7, 9.6, 9.6, 2.4, 5.6),
            row(16.95, "TX1", "RX3", LOS, 193, 96.04, 124.1, 26.5, 118.5, 6.6, 67.0, 7.3, 57.1, 7.6, 12.4, 1.8, 5.6),
            row(16.95, "TX1", "RX4", NLOS, 560, 112.8, 138.9, 14.7, 168.6, 10.1, 10.1, 6.9, 78.0, 2.7, 8.0, 4.2, 7.7),
            row(16.95, "TX1", "RX5", NLOS, 880, 130.1, na, 0.0, 0.0, 5.8, 5.8, 5.8, 5.8, 5.4, 5.4, 5.4, 5.4, true),
            outage(16.95, "TX1", "RX6", NLOS, 1000),
            row(16.95, "TX1", "RX7", LOS, 410, 113.1, 138.4, 65.9, 97.9, 5.8, 5.8, 10.4, 47.8, 5.4, 11.5, 7.3, 9.0),
            row(16.95, "TX2", "RX1", LOS, 58, 86.3, 106.8, 46.2, 16.9, 16.6, 16.6, 6.7, 22.0, 3.2, 8.3, 4.1, 8.9),
            row(16.95, "TX2", "RX2", NLOS, 51.5, 89.61, 118.8, 94.5, 37.3, 8.0, 8.0, 7.5, 25.1, 7.0, 9.6, 4.0, 7.3),
            row(16.95, "TX2", "RX3", NLOS, 100.9, 115.2, 138.1, 104.9, 146.2, 19.5, 19.5, 9.3, 20.4, 6.3, 7.6, 6.1, 9.7),
            row(16.95, "TX3", "RX1", NLOS, 71, 114.4, 141.1, 83.7, 180.8, 20.9, 28.0, 10.4, 28.4, 2.9, 8.1, 4.7, 8.4),
            row(16.95, "TX3", "RX2", NLOS, 45, 103.9, 128.6, 9.7, 34.3, 5.6, 19.8, 10.5, 31.4, 8.8, 12.1, 7.1, 9.8),
            row(16.95, "TX3", "RX3", NLOS, 125, 111.4, 123.8, 25.6, 64.5, 14.4, 33.5, 15.0, 23.5, 11.4, 13.6, 11.9, 11.5),
            row(16.95, "TX4", "RX1", NLOS, 88.7, 102.9, 126.2, 19.2, 31.9, 7.7, 33.9, 7.3, 80.4, 4.1, 9.9, 6.3, 8.1),
            row(16.95, "TX4", "RX2", LOS, 120, 95.46, 123.8, 34.7, 22.1, 4.8, 46.8, 6.3, 10.9, 8.0, 9.8, 3.6, 7.6),
            outage(16.95, "TX4", "RX3", NLOS, 216),
            row(16.95, "TX4", "RX4", NLOS, 185, 129.5, na, 18.0, 18.0, 11.9, 11.9, 9.9, 24.2, 4.8, 4.8, 5.6, 5.2),
            row(16.95, "TX5", "RX1", LOS, 52, 91.11, 115.9, 86.4, 23.6, 5.8, 5.8, 5.8, 12.0, 5.4, 11.6, 5.4, 8.9),
            row(16.95, "TX5", "RX2", NLOS, 170, 111.7, na, 17.5, 28.1, 25.6, 25.6, 9.1, 18.5, 9.3, 9.3, 4.2, 7.2),
            row(16.95, "TX5", "RX3", NLOS, 141, 122.5, na, 28.9, 60.5, 28.3, 28.3, 9.5, 47.7, 5.5, 7.3, 3.5, 4.2),
        };
        return c;
    }

    namespace
    {
        bool parse_flag(const std::string &cell, std::size_t row, const std::string &column)
        {
            if (cell == "0")
                return false;
            if (cell == "1")
                return true;
            throw ParseError(row, column, "row " + std::to_string(row) + ", column " + column +
                                              ": expected 0 or 1, got '" + cell + "'");
        }

        std::optional<double> parse_optional(const std::string &cell, std::size_t row, const std::string &column)
        {
            if (cell.empty())
                return std::nullopt;
            auto v = io::parse_double(cell);
            if (!v)
                throw ParseError(row, column, "row " + std::to_string(row) + ", column " + column +
                                                  ": not a number: '" + cell + "'");
            return v;
        }

        double parse_required(const std::string &cell, std::size_t row, const std::string &column)
        {
            auto v = parse_optional(cell, row, column);
            if (!v)
                throw ParseError(row, column, "row " + std::to_string(row) + ", column " + column + ": value required");
            return *v;
        }
    }

    Campaign ingest_csv(std::istream &source, IngestMode mode, std::string provenance)
    {
        std::string line;
        bool first = true;
        std::vector<std::size_t> column_of; // column_of[schema index] = position in file
        std::size_t row = 0;
        Campaign campaign;
        campaign.provenance = std::move(provenance);

        while (std::getline(source, line))
        {
            ++row;
            const auto text = io::strip_line(line, first);
            if (first)
            {
                first = false;
                const auto header = io::split_csv(text);
                std::map<std::string, std::size_t> position;
                for (std::size_t i = 0; i < header.size(); ++i)
                {
                    const auto &name = header[i];
                    if (std::find(campaign_csv_columns.begin(), campaign_csv_columns.end(), name) == campaign_csv_columns.end())
                        throw SchemaError(name, "unknown column '" + name + "' in header");
                    if (!position.emplace(name, i).second)
                        throw SchemaError(name, "duplicate column '" + name + "' in header");
                }
                for (const auto &name : campaign_csv_columns)
                {
                    const auto it = position.find(name);
                    if (it == position.end())
                        throw SchemaError(name, "missing column '" + name + "' in header");
                    column_of.push_back(it->second);
                }
                continue;
            }
            if (io::trim(text).empty())
                continue;

            const auto cells = io::split_csv(text);
            if (cells.size() != column_of.size())
                throw ParseError(row, "", "row " + std::to_string(row) + ": expected " + std::to_string(column_of.size()) +
                                              " cells, got " + std::to_string(cells.size()));
            auto cell = [&](std::size_t schema_index) -> const std::string &
            { return cells[column_of[schema_index]]; };
            auto name = [](std::size_t schema_index) -> const std::string &
            { return campaign_csv_columns[schema_index]; };

            LocationRecord r;
            const double f = parse_required(cell(0), row, name(0));
            if (!(f > 0.0))
                throw ParseError(row, name(0), "row " + std::to_string(row) + ", column freq_ghz: frequency must be positive");
            r.band = FrequencyBand(f);
            r.tx_id = cell(1);
            r.rx_id = cell(2);
            if (r.tx_id.empty() || r.rx_id.empty())
                throw ParseError(row, r.tx_id.empty() ? name(1) : name(2), "row " + std::to_string(row) + ": empty site label");
            try
            {
                r.link_state = parse_link_state(cell(3));
            }
            catch (const std::invalid_argument &e)
            {
                throw ParseError(row, name(3), "row " + std::to_string(row) + ", column link_state: " + e.what());
            }
            r.tr_sep_m = parse_required(cell(4), row, name(4));
            for (std::size_t k = 0; k < statistic_count; ++k)
                field(r, static_cast<Statistic>(k)) = parse_optional(cell(5 + k), row, name(5 + k));
            r.outage = parse_flag(cell(17), row, name(17));
            r.single_mpc = parse_flag(cell(18), row, name(18));

            if (mode == IngestMode::strict)
            {
                auto issues = validate_record(r);
                if (!issues.empty())
                    throw ValidationError(row, std::move(issues));
            }
            campaign.records.push_back(std::move(r));
        }
        if (first)
            throw SchemaError("freq_ghz", "empty input: header row required");
        return campaign;
    }

    Campaign ingest_csv_file(const std::string &path, IngestMode mode)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        return ingest_csv(in, mode, path);
    }

    void emit_csv(const Campaign &campaign, std::ostream &out)
    {
        for (std::size_t i = 0; i < campaign_csv_columns.size(); ++i)
            out << (i ? "," : "") << campaign_csv_columns[i];
        out << '\n';
        for (const auto &r : campaign.records)
        {
            out << io::shortest(r.band.carrier_ghz()) << ',' << r.tx_id << ',' << r.rx_id << ','
                << to_string(r.link_state) << ',' << io::shortest(r.tr_sep_m);
            for (std::size_t k = 0; k < statistic_count; ++k)
            {
                out << ',';
                if (const auto &v = field(r, static_cast<Statistic>(k)))
                    out << io::shortest(*v);
            }
            out << ',' << (r.outage ? 1 : 0) << ',' << (r.single_mpc ? 1 : 0) << '\n';
        }
    }

    std::optional<double> max_measurable_path_loss_db(const FrequencyBand &band) noexcept
    {
        if (band == band_6_75)
            return 155.6;
        if (band == band_16_95)
            return 159.2;
        return std::nullopt;
    }

    static std::string record_key(const LocationRecord &r)
    {
        return io::shortest(r.band.carrier_ghz()) + "/" + r.tx_id + "/" + r.rx_id;
    }

    std::vector<Finding> validate(const Campaign &campaign)
    {
        std::vector<Finding> findings;
        std::set<std::tuple<double, std::string, std::string>> seen;
        for (const auto &r : campaign.records)
        {
            const auto key = record_key(r);
            for (auto &issue : validate_record(r))
                findings.push_back({key, std::move(issue)});

            if (!r.outage)
            {
                if (const auto limit = max_measurable_path_loss_db(r.band))
                {
                    for (const auto stat : {Statistic::omni_pl_vv, Statistic::omni_pl_vh})
                    {
                        const auto &pl = field(r, stat);
                        if (pl && *pl > *limit)
                            findings.push_back({key, std::string(column_name(stat)) + " " + io::shortest(*pl) +
                                                         " dB exceeds max measurable path loss " + io::shortest(*limit) + " dB"});
                    }
                }
            }
            // band keys on a 1e-9 GHz grid
            const double band_key = std::round(r.band.carrier_ghz() * 1e9) / 1e9;
            if (!seen.emplace(band_key, r.tx_id, r.rx_id).second)
                findings.push_back({key, "duplicate key"});
        }
        return findings;
    }

    std::vector<SelectedPoint> select(const Campaign &campaign, const SelectQuery &query)
    {
        std::vector<SelectedPoint> points;
        for (const auto &r : campaign.records)
        {
            if (r.outage || !(r.band == query.band))
                continue;
            if (query.state && r.link_state != *query.state)
                continue;
            if (query.max_dist_m && r.tr_sep_m > *query.max_dist_m)
                continue;
            if (query.exclude_single_mpc && r.single_mpc)
                continue;
            const auto &value = field(r, query.statistic);
            if (query.exclude_missing && !value)
                continue;
            points.push_back({r.tr_sep_m, value});
        }
        return points;
    }

    std::vector<double> values_of(const std::vector<SelectedPoint> &points)
    {
        std::vector<double> values;
        values.reserve(points.size());
        for (const auto &p : points)
        {
            if (!p.value)
                throw std::invalid_argument("selection contains absent values");
            values.push_back(*p.value);
        }
        return values;
    }
}
