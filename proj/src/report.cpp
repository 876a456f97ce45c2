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

#include "midband/report.hpp"
#include "midband/pathloss.hpp"
#include "midband/simulate.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#ifndef MIDBAND_VERSION
#define MIDBAND_VERSION "0.0.0"
#endif

namespace midband
{
    std::string_view version() noexcept { return MIDBAND_VERSION; }

    namespace
    {
        using json = nlohmann::ordered_json;

        std::vector<FrequencyBand> bands_in(const Campaign &campaign)
        {
            std::vector<FrequencyBand> bands;
            for (const auto &r : campaign.records)
                if (std::find(bands.begin(), bands.end(), r.band) == bands.end())
                    bands.push_back(r.band);
            std::sort(bands.begin(), bands.end(), [](const FrequencyBand &a, const FrequencyBand &b)
                      { return a.carrier_ghz() < b.carrier_ghz(); });
            return bands;
        }

        json opt(const std::optional<double> &v)
        {
            return v ? json(*v) : json(nullptr);
        }
    }

    ReportDocument build_report(const Campaign &campaign)
    {
        ReportDocument doc;
        doc.tool_version = std::string(version());
        doc.provenance = campaign.provenance;
        doc.findings = validate(campaign);

        for (const auto &band : bands_in(campaign))
        {
            for (const auto state : {LinkState::los, LinkState::nlos})
            {
                SelectQuery q{band};
                q.state = state;
                q.statistic = Statistic::omni_pl_vv;
                std::vector<DistanceLoss> points;
                for (const auto &p : select(campaign, q))
                    points.push_back({p.tr_sep_m, *p.value});
                if (!points.empty())
                {
                    PathLossEntry entry{band, state, ci_fit(points, band), std::nullopt};
                    try
                    {
                        entry.fi = fi_fit(points);
                    }
                    catch (const std::invalid_argument &)
                    {
                    }
                    try
                    {
                        doc.comparisons.push_back(compare(entry.ci, state));
                    }
                    catch (const std::out_of_range &)
                    {
                    }
                    doc.path_loss.push_back(std::move(entry));
                }

                for (const auto stat : {Statistic::omni_ds, Statistic::omni_asa, Statistic::omni_asd})
                {
                    SelectQuery sq{band};
                    sq.state = state;
                    sq.statistic = stat;
                    sq.exclude_single_mpc = is_delay_spread(stat);
                    if (is_angular(stat))
                        sq.max_dist_m = as_max_dist_m;
                    const auto values = values_of(select(campaign, sq));
                    if (values.empty() || std::any_of(values.begin(), values.end(), [](double v)
                                                      { return !(v > 0.0); }))
                        continue;
                    const auto fit = fit_lognormal(values);
                    doc.spreads.push_back({band, state, stat, sq.max_dist_m, fit, expectation_rounded(fit),
                                           expectation_strict(fit.mu_lg, fit.sigma_lg)});
                    const auto metric = stat == Statistic::omni_ds    ? CompareMetric::omni_ds
                                        : stat == Statistic::omni_asa ? CompareMetric::omni_asa
                                                                      : CompareMetric::omni_asd;
                    try
                    {
                        doc.comparisons.push_back(compare(fit, band, state, metric));
                    }
                    catch (const std::out_of_range &)
                    {
                    }
                }
            }
        }
        return doc;
    }

    std::string report_to_json(const ReportDocument &report)
    {
        json root;
        root["tool_version"] = report.tool_version;
        root["provenance"] = report.provenance;

        auto pl = json::array();
        for (const auto &e : report.path_loss)
        {
            json item{{"band_ghz", e.band.carrier_ghz()},
                      {"state", to_string(e.state)},
                      {"ci", {{"ple", e.ci.ple}, {"sigma_db", e.ci.sigma_db}, {"n_points", e.ci.n_points}, {"fspl_1m_db", e.ci.fspl_1m_db}}}};
            if (e.fi)
                item["fi"] = {{"alpha_db", e.fi->alpha_db}, {"beta", e.fi->beta}, {"sigma_db", e.fi->sigma_db}, {"n_points", e.fi->n_points}};
            else
                item["fi"] = nullptr;
            pl.push_back(std::move(item));
        }
        root["path_loss"] = std::move(pl);

        auto spreads = json::array();
        for (const auto &s : report.spreads)
            spreads.push_back({{"band_ghz", s.band.carrier_ghz()},
                               {"state", to_string(s.state)},
                               {"metric", column_name(s.metric)},
                               {"max_dist_m", opt(s.max_dist_m)},
                               {"mu_lg", s.stat.mu_lg},
                               {"sigma_lg", s.stat.sigma_lg},
                               {"n_points", s.stat.n_points},
                               {"expectation", s.stat.expectation},
                               {"expectation_rounded", s.expectation_rounded},
                               {"expectation_strict", s.expectation_strict}});
        root["spreads"] = std::move(spreads);

        auto comparisons = json::array();
        for (const auto &c : report.comparisons)
        {
            auto rows = json::array();
            for (const auto &r : c.rows)
                rows.push_back({{"quantity", r.quantity},
                                {"computed", r.computed},
                                {"nyu", opt(r.nyu)},
                                {"3gpp", opt(r.gpp)},
                                {"delta_nyu", opt(r.delta_nyu)},
                                {"delta_3gpp", opt(r.delta_gpp)}});
            comparisons.push_back({{"band_ghz", c.band.carrier_ghz()},
                                   {"state", to_string(c.state)},
                                   {"metric", to_string(c.metric)},
                                   {"rows", std::move(rows)}});
        }
        root["comparisons"] = std::move(comparisons);

        auto findings = json::array();
        for (const auto &f : report.findings)
            findings.push_back({{"key", f.key}, {"message", f.message}});
        root["findings"] = std::move(findings);

        return root.dump(2) + "\n";
    }
}
